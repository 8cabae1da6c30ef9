"""Bindings for the dcycles packing finders, oracles and certificates."""

from ._dcycles import *  # noqa: F401,F403
from ._dcycles import Digraph, Error, Graph  # noqa: F401

__version__ = "0.1.0"
