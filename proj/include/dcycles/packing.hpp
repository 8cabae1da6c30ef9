#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dcycles/cycle_basic.hpp"
#include "dcycles/graph.hpp"

namespace dcycles {

enum class ProfileKind { Plain, EvenOnly, DivisibleBy, ResidueSystem };

/// Constraint on the lengths of a packing.
struct Profile {
  ProfileKind kind = ProfileKind::Plain;
  int r = 0;  // modulus for DivisibleBy / ResidueSystem

  static Profile plain() { return {}; }
  static Profile even() { return {ProfileKind::EvenOnly, 0}; }
  static Profile divisible(int r) { return {ProfileKind::DivisibleBy, r}; }
  static Profile residues(int r) { return {ProfileKind::ResidueSystem, r}; }

  /// "plain", "even", "div:R", "residues:R".
  std::string to_string() const;
  /// Inverse of to_string; BadParameters on anything else.
  static Profile parse(const std::string& text);

  bool operator==(const Profile&) const = default;
};

enum class Finder { Constructive, Oracle, Search };

std::string to_string(Finder finder);

struct CyclePacking {
  std::vector<Cycle> cycles;  // by increasing length; by residue for ResidueSystem
  Profile profile;
  Finder finder = Finder::Constructive;

  std::vector<int> lengths() const;
};

/// Closed-form degree thresholds.
int f_bound(int k);                  // (k^2 + 5k - 2) / 2
int g_bound(int k);                  // k(k + 3) / 2
int h_bound(int k);                  // k^2 + 3k - 1
int divisible_packing_bound(int k, int r);
int residue_system_bound(int r);     // 2r^2 - 1

struct OracleOptions {
  std::uint64_t budget = 200'000'000;  // search nodes
};

struct OracleResult {
  bool found = false;
  std::optional<CyclePacking> packing;
  std::uint64_t explored = 0;
  bool exhaustive = false;
};

/// Largest order the exact searches accept.
inline constexpr int kOracleMaxOrder = 64;

/// Exact decision by branch-and-bound over cycles chosen in increasing
/// length. Found packings are the canonically smallest: lexicographically
/// smallest sorted length vector, then smallest cycle encodings.
/// ResourceBudgetExceeded when the node budget runs out or the graph has
/// more than kOracleMaxOrder vertices (unless counting alone decides).
OracleResult exact_packing_oracle(const Graph& g, int k, const Profile& profile,
                                  const OracleOptions& options = {});
OracleResult exact_packing_oracle(const Digraph& d, int k, const Profile& profile,
                                  const OracleOptions& options = {});

struct FinderOptions {
  std::uint64_t seed = 0;
  OracleOptions oracle;
  std::uint64_t residue_budget = kDefaultResidueBudget;
};

/// The finders below build their packing constructively when the minimum
/// degree reaches the closed-form threshold and otherwise hand small graphs
/// (n <= kOracleMaxOrder) to the oracle. A proved absence is NotFound
/// (carrying the explored count); larger graphs below threshold get
/// DegreeTooLow.
CyclePacking find_disjoint_distinct(const Graph& g, int k, const FinderOptions& options = {});
CyclePacking find_disjoint_distinct_trianglefree(const Graph& g, int k,
                                                 const FinderOptions& options = {});
CyclePacking find_disjoint_even_distinct(const Graph& g, int k,
                                         const FinderOptions& options = {});
CyclePacking find_disjoint_divisible(const Graph& g, int k, int r,
                                     const FinderOptions& options = {});
/// r odd, r >= 3: cycle i has length i mod r.
CyclePacking find_residue_system(const Graph& g, int r, const FinderOptions& options = {});

/// Two disjoint cycles of distinct lengths: shortest cycles first, each
/// tried against a longer partner in the rest of the graph, then the exact
/// oracle. NotFound carries the exhaustive flag.
CyclePacking find_two_distinct(const Graph& g, const FinderOptions& options = {});

enum class StructureKind { Acyclic, AllTriangles, AllC4, OtherOrMixed };

std::string to_string(StructureKind kind);

struct StructureClassification {
  StructureKind kind = StructureKind::Acyclic;
  int n2 = 0;           // vertices of degree 2
  double bound = 0.0;   // n/3 + 2 or n/5 + 2; 0 otherwise
  bool applies = false; // min degree >= 2 and kind is AllTriangles or AllC4
  bool holds = true;    // n2 >= bound whenever it applies
};

/// Classification through the blocks: AllTriangles iff every block is K2 or
/// K3 (and one is K3), AllC4 iff every block is K2 or K(2,s), s >= 2.
StructureClassification uniform_cycle_structure(const Graph& g);

}  // namespace dcycles
