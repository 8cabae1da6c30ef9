#pragma once

#include <doctest.h>

#include "dcycles/error.hpp"

// Kind of the dcycles::Error thrown by fn; fails the test when nothing is thrown.
template <typename Fn>
dcycles::ErrorKind kind_of(Fn&& fn) {
  try {
    fn();
  } catch (const dcycles::Error& e) {
    return e.kind();
  }
  FAIL("expected a dcycles::Error");
  return dcycles::ErrorKind::BadParameters;
}
