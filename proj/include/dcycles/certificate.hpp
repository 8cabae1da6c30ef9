#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dcycles/cycle_basic.hpp"
#include "dcycles/edge_list.hpp"
#include "dcycles/packing.hpp"
#include "dcycles/partition.hpp"

namespace dcycles {

/// Machine-checkable answer tied to one graph by its content hash.
///
///   packing    k disjoint cycles of distinct lengths obeying `profile`
///              (optionally also a coloring: classes + demands)
///   family     k cycles of distinct lengths, all through `hub`
///   partition  classes meeting `demands` under `degree_kind`
///   absent     the oracle's negative answer; not re-derivable
struct Certificate {
  std::string graph_hash;
  bool directed = false;
  std::string kind = "packing";
  std::string profile = "plain";
  int k = 0;
  std::vector<std::vector<Vertex>> cycles;
  std::string finder;
  std::uint64_t explored_nodes = 0;
  bool exhaustive = false;
  std::optional<Vertex> hub;
  std::optional<int> min_length;  // every cycle at least this long
  std::vector<std::vector<Vertex>> classes;
  std::vector<int> demands;
  std::string degree_kind = "induced";  // induced | cross | induced-out
  bool allow_uncovered = false;
};

std::string to_json(const Certificate& c, int indent = 2);
/// InvalidInput on malformed documents.
Certificate parse_certificate(const std::string& text);

Certificate packing_certificate(const AnyGraph& g, const CyclePacking& p, int k);
Certificate absent_certificate(const AnyGraph& g, const Profile& profile, int k,
                               std::uint64_t explored, bool exhaustive);
Certificate family_certificate(const AnyGraph& g, const CycleFamily& f, int k);
Certificate partition_certificate(const AnyGraph& g, const VertexPartition& p);

/// Independent checker: re-reads every claim of the certificate against the
/// graph using adjacency queries only. Empty when the certificate is valid;
/// otherwise one "invariant: detail" line per violation.
std::vector<std::string> certificate_violations(const Certificate& c, const AnyGraph& g);

}  // namespace dcycles
