#pragma once

#include <optional>
#include <string>
#include <vector>

namespace dcycles {

/// Parameters of the two probabilistic digraph arguments. Unset r defaults
/// to ceil(regular_degree_threshold(k)); c and d to 2 and 1/2.
struct ProbabilisticBudget {
  int k = 2;
  std::optional<double> r;
  std::optional<double> n;
  double c = 2.0;
  double d = 0.5;
};

/// One inequality: holds when lhs <relation> rhs, evaluated with a relative
/// slack of 1e-12.
struct Verdict {
  std::string name;
  double lhs = 0.0;
  std::string relation;  // "<", "<=", ">=", ">"
  double rhs = 0.0;
  bool holds = false;
};

struct BoundsReport {
  int k = 0;
  double r = 0.0;
  // regular digraphs
  double threshold = 0.0;  // (k^2/2)(1 + 7 (ln k / k)^(1/3))
  int q = 0;               // floor(k^(2/3) (ln k)^(1/3))
  int k_prime = 0;
  double s = 0.0;
  std::vector<double> p;   // p_1 .. p_k
  double p_sum = 0.0;
  std::vector<double> chernoff_tail;  // per class: exp(-16 L^2 r p_j / 3), L = (ln k / k)^(1/3)
  std::vector<Verdict> regular;
  // small digraphs (r taken from the budget, else ceil(required_r))
  double small_r = 0.0;
  double c0 = 0.0;          // max{2, (24 ln c)^(1/(1-d))}
  double required_r = 0.0;  // c0 * max{k^(1/(1-d)), k^2}
  std::vector<Verdict> small;

  bool regular_all_hold() const;
  bool small_all_hold() const;
};

/// BadParameters unless k >= 2, r > 0, n > 0, c > 1 and 0 < d < 1.
BoundsReport probabilistic_bounds_report(const ProbabilisticBudget& budget);

/// Smallest K such that every regular-digraph verdict holds, with
/// r = ceil(threshold), for all k in [K, k_max]; nullopt if k_max fails.
std::optional<int> smallest_k_all_regular_verdicts(int k_max);

}  // namespace dcycles
