// Exact decision procedure for distinct-length cycle packings.
//
// Cycles are chosen in increasing length. Every level shrinks the available
// set to its cycle core, skips lengths ruled out by the component filter, and
// stops as soon as the smallest admissible completion no longer fits.

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "cycle_search.hpp"
#include "dcycles/error.hpp"
#include "dcycles/packing.hpp"

namespace dcycles {

namespace {

using detail::Mask;
using detail::MaskGraph;

constexpr int kNoFit = std::numeric_limits<int>::max() / 4;

class LengthRules {
public:
  LengthRules(const Profile& p, int min_length) : p_(p), min_length_(min_length) {}

  int min_length() const { return min_length_; }

  Mask residue_bit(int len) const {
    return p_.kind == ProfileKind::ResidueSystem ? Mask{1} << (len % p_.r) : 0;
  }

  bool allowed(int len, Mask used) const {
    if (len < min_length_) return false;
    switch (p_.kind) {
      case ProfileKind::Plain: return true;
      case ProfileKind::EvenOnly: return len % 2 == 0;
      case ProfileKind::DivisibleBy: return len % p_.r == 0;
      case ProfileKind::ResidueSystem: return (used & residue_bit(len)) == 0;
    }
    return false;
  }

  // Sum of the m smallest lengths above `prev` that can still be added.
  int min_completion(int prev, int m, Mask used) const {
    int sum = 0;
    for (int len = prev + 1, count = 0; count < m; ++len) {
      if (len > 4 * detail::kMaxMaskVertices) return kNoFit;
      if (!allowed(len, used)) continue;
      sum += len;
      used |= residue_bit(len);
      ++count;
    }
    return sum;
  }

private:
  Profile p_;
  int min_length_;
};

class PackingSearch {
public:
  PackingSearch(const MaskGraph& g, int k, const LengthRules& rules, detail::NodeCounter& counter)
      : g_(g), k_(k), rules_(rules), counter_(counter) {}

  /// Searches for a packing whose first fixed.size() lengths are `fixed`.
  /// On success chosen() holds the first packing found.
  bool run(const std::vector<int>& fixed) {
    fixed_ = fixed;
    chosen_.clear();
    return level(0, g_.all(), 0, 0);
  }

  const std::vector<std::vector<Vertex>>& chosen() const { return chosen_; }

private:
  bool level(int i, Mask avail, int prev, Mask used) {
    if (i == k_) return true;
    counter_.tick();
    avail = detail::cycle_core(g_, avail);
    const int size = detail::popcount(avail);
    const int rest = k_ - i - 1;
    const detail::LengthFilter filter(g_, avail);

    auto fits = [&](int len) {
      return rules_.allowed(len, used) &&
             len + rules_.min_completion(len, rest, used | rules_.residue_bit(len)) <= size &&
             filter.may_contain(len);
    };
    auto try_length = [&](int len) {
      return detail::for_each_cycle_of_length(
          g_, avail, len, counter_, [&](std::span<const Vertex> c) {
            chosen_.emplace_back(c.begin(), c.end());
            if (level(i + 1, avail & ~detail::mask_of(c), len, used | rules_.residue_bit(len))) {
              return true;
            }
            chosen_.pop_back();
            return false;
          });
    };

    if (i < static_cast<int>(fixed_.size())) {
      const int len = fixed_[i];
      return len > prev && fits(len) && try_length(len);
    }
    for (int len = std::max(prev + 1, rules_.min_length());; ++len) {
      // no profile can complete below the unconstrained minimum
      if (len + rest * len + rest * (rest + 1) / 2 > size) break;
      if (fits(len) && try_length(len)) return true;
    }
    return false;
  }

  const MaskGraph& g_;
  int k_;
  const LengthRules& rules_;
  detail::NodeCounter& counter_;
  std::vector<int> fixed_;
  std::vector<std::vector<Vertex>> chosen_;
};

void check_profile(int k, const Profile& p) {
  if (k < 1) fail(ErrorKind::BadParameters, "k must be positive");
  switch (p.kind) {
    case ProfileKind::Plain:
    case ProfileKind::EvenOnly: break;
    case ProfileKind::DivisibleBy:
      if (p.r < 2) fail(ErrorKind::BadParameters, "divisibility modulus must be at least 2");
      break;
    case ProfileKind::ResidueSystem:
      if (p.r < 3 || p.r % 2 == 0) {
        fail(ErrorKind::BadParameters, "residue systems need an odd modulus r >= 3");
      }
      if (k != p.r) fail(ErrorKind::BadParameters, "a residue system has exactly r cycles");
      break;
  }
}

OracleResult decide(const MaskGraph* g, int n, bool directed, int k, const Profile& profile,
                    const OracleOptions& options) {
  check_profile(k, profile);
  OracleResult result;
  const LengthRules rules(profile, directed ? 2 : 3);
  if (profile.kind == ProfileKind::ResidueSystem && profile.r >= detail::kMaxMaskVertices) {
    // r cycles of length >= 3 cannot fit in 64 vertices
    if (n <= detail::kMaxMaskVertices) {
      result.exhaustive = true;
      return result;
    }
  } else if (rules.min_completion(rules.min_length() - 1, k, 0) > n) {
    result.exhaustive = true;
    return result;
  }
  if (g == nullptr) {
    throw Error(ErrorKind::ResourceBudgetExceeded,
                "ResourceBudgetExceeded: the exact oracle handles at most " +
                    std::to_string(kOracleMaxOrder) + " vertices, graph has " +
                    std::to_string(n));
  }

  detail::NodeCounter counter;
  counter.budget = options.budget;
  PackingSearch search(*g, k, rules, counter);
  try {
    if (!search.run({})) {
      result.explored = counter.nodes;
      result.exhaustive = true;
      return result;
    }
    // The first packing found has the smallest possible first length; every
    // later length is pinned by trying candidates in increasing order.
    std::vector<int> lengths{static_cast<int>(search.chosen().front().size())};
    while (static_cast<int>(lengths.size()) < k) {
      auto trial = lengths;
      trial.push_back(lengths.back());
      do {
        ++trial.back();
        if (trial.back() > n) throw std::logic_error("oracle lost its witness");
      } while (!search.run(trial));
      lengths = std::move(trial);
    }
    search.run(lengths);
  } catch (const detail::BudgetHit&) {
    throw Error(ErrorKind::ResourceBudgetExceeded,
                "ResourceBudgetExceeded: search budget of " + std::to_string(options.budget) +
                    " nodes exhausted")
        .with_search(counter.nodes, false);
  }

  CyclePacking packing;
  packing.profile = profile;
  packing.finder = Finder::Oracle;
  for (const auto& vs : search.chosen()) {
    packing.cycles.push_back(directed ? Cycle::directed(vs) : Cycle::undirected(vs));
  }
  if (profile.kind == ProfileKind::ResidueSystem) {
    std::stable_sort(packing.cycles.begin(), packing.cycles.end(),
                     [r = profile.r](const Cycle& a, const Cycle& b) {
                       return a.length() % r < b.length() % r;
                     });
  }
  result.found = true;
  result.packing = std::move(packing);
  result.explored = counter.nodes;
  result.exhaustive = true;
  return result;
}

}  // namespace

OracleResult exact_packing_oracle(const Graph& g, int k, const Profile& profile,
                                  const OracleOptions& options) {
  if (g.order() > detail::kMaxMaskVertices) {
    return decide(nullptr, g.order(), false, k, profile, options);
  }
  const auto mg = MaskGraph::from(g);
  return decide(&mg, g.order(), false, k, profile, options);
}

OracleResult exact_packing_oracle(const Digraph& d, int k, const Profile& profile,
                                  const OracleOptions& options) {
  if (d.order() > detail::kMaxMaskVertices) {
    return decide(nullptr, d.order(), true, k, profile, options);
  }
  const auto mg = MaskGraph::from(d);
  return decide(&mg, d.order(), true, k, profile, options);
}

}  // namespace dcycles
