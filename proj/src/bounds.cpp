#include "dcycles/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "dcycles/dicycles.hpp"
#include "dcycles/error.hpp"

namespace dcycles {

namespace {

constexpr double kSlack = 1e-12;

Verdict verdict(std::string name, double lhs, std::string relation, double rhs) {
  const double tol = kSlack * std::max({std::abs(lhs), std::abs(rhs), 1e-300});
  bool holds = false;
  if (relation == "<") holds = lhs < rhs + tol;
  if (relation == "<=") holds = lhs <= rhs + tol;
  if (relation == ">=") holds = lhs >= rhs - tol;
  if (relation == ">") holds = lhs > rhs - tol;
  return {std::move(name), lhs, std::move(relation), rhs, holds};
}

bool all_hold(const std::vector<Verdict>& vs) {
  return std::all_of(vs.begin(), vs.end(), [](const Verdict& v) { return v.holds; });
}

}  // namespace

bool BoundsReport::regular_all_hold() const { return all_hold(regular); }
bool BoundsReport::small_all_hold() const { return all_hold(small); }

namespace {

// The regular-digraph part of the report. Both probability sums have terms
// decreasing in j, so they stop once a term no longer changes the sum;
// per-class vectors are only filled when `rep` asks for them.
std::vector<Verdict> regular_verdicts(int kint, double r, BoundsReport* rep) {
  const double k = kint;
  const double lnk = std::log(k);
  const double L = std::cbrt(lnk / k);
  const double threshold = regular_degree_threshold(kint);
  const double qx = std::cbrt(k * k) * std::cbrt(lnk);  // k^(2/3) (ln k)^(1/3)
  const int q = static_cast<int>(std::floor(qx));
  const double s = (kint + q) * (kint + q + 1.0) / 2.0;
  // sum_j (j + q) / s in closed form
  const double p_sum = (k * (k + 1.0) / 2.0 + k * q) / s;

  double pr_b = 0.0;
  double pr_a = 0.0;
  bool b_done = false;
  bool a_done = false;
  for (int j = 1; j <= kint && !(b_done && a_done && rep == nullptr); ++j) {
    const double pj = (j + q) / s;
    const double tail = std::exp(-16.0 * L * L * r * pj / 3.0);
    if (rep != nullptr) {
      rep->p.push_back(pj);
      rep->chernoff_tail.push_back(tail);
    }
    if (!b_done) {
      const double term = std::pow(1.0 - pj, r);
      b_done = term <= pr_b * 1e-17;
      pr_b += term;
    }
    if (!a_done) {
      const double term = pj * tail;
      a_done = term <= pr_a * 1e-17;
      pr_a += term;
    }
  }
  // (j + q) / j is decreasing, so j = k gives the smallest margin
  const double margin = (1.0 - 4.0 * L) * r * (k + q) / (s * k);

  if (rep != nullptr) {
    rep->threshold = threshold;
    rep->q = q;
    rep->k_prime = kint + q;
    rep->s = s;
    rep->p_sum = p_sum;
  }
  const double r_est = k * k / 2.0 + 3.5 * std::pow(k, 5.0 / 3.0) * std::cbrt(lnk);
  return {
      verdict("class probabilities sum below 1", p_sum, "<", 1.0),
      verdict("r reaches the degree threshold", r, ">=", threshold),
      verdict("4r^2 Pr(B), displayed estimate", 4.0 * r_est * r_est * k * std::exp(-qx), "<=", 1.0),
      verdict("4r^2 Pr(B), actual r", 4.0 * r * r * pr_b, "<=", 1.0),
      verdict("s estimate", s, "<=", k * k / 2.0 * (1.0 + L) * (1.0 + L) * (1.0 + 2.0 / k)),
      verdict("Chernoff margin min_j (1-4L) r p_j / j", margin, ">=", 1.0),
      verdict("4r^2 Pr(A_v)", 4.0 * r * r * pr_a, "<=", 1.0),
      verdict("k^(16/3) vs 2 k^(11/3) (ln k)^(1/3)", std::pow(k, 16.0 / 3.0), ">=",
              2.0 * std::pow(k, 11.0 / 3.0) * std::cbrt(lnk)),
  };
}

}  // namespace

BoundsReport probabilistic_bounds_report(const ProbabilisticBudget& b) {
  if (b.k < 2) fail(ErrorKind::BadParameters, "k must be at least 2");
  if (b.r && !(*b.r > 0)) fail(ErrorKind::BadParameters, "r must be positive");
  if (b.n && !(*b.n > 0)) fail(ErrorKind::BadParameters, "n must be positive");
  if (!(b.c > 1)) fail(ErrorKind::BadParameters, "c must exceed 1");
  if (!(b.d > 0 && b.d < 1)) fail(ErrorKind::BadParameters, "d must lie in (0, 1)");

  BoundsReport rep;
  const double k = b.k;
  rep.k = b.k;
  rep.r = b.r ? *b.r : std::ceil(regular_degree_threshold(b.k));
  rep.regular = regular_verdicts(b.k, rep.r, &rep);

  const double e = 1.0 / (1.0 - b.d);
  rep.c0 = std::max(2.0, std::pow(24.0 * std::log(b.c), e));
  rep.required_r = rep.c0 * std::max(std::pow(k, e), k * k);
  rep.small_r = b.r ? *b.r : std::ceil(rep.required_r);
  const double rs = rep.small_r;
  rep.small = {
      verdict("r reaches c0 max{k^(1/(1-d)), k^2}", rs, ">=", rep.required_r),
      verdict("r >= 2k^2", rs, ">=", 2.0 * k * k),
      verdict("r >= (24 k ln c)^(1/(1-d))", rs, ">=", std::pow(24.0 * k * std::log(b.c), e)),
      verdict("r > k ln(2k)", rs, ">", k * std::log(2.0 * k)),
  };
  if (b.n) {
    const double n = *b.n;
    rep.small.push_back(verdict("n <= c^(r^d)", std::log(n), "<=", std::pow(rs, b.d) * std::log(b.c)));
    rep.small.push_back(verdict("n e^(-r/12k) + k e^(-r/k)",
                                n * std::exp(-rs / (12.0 * k)) + k * std::exp(-rs / k), "<", 1.0));
  }
  return rep;
}

std::optional<int> smallest_k_all_regular_verdicts(int k_max) {
  std::optional<int> smallest;
  for (int k = k_max; k >= 2; --k) {
    if (!all_hold(regular_verdicts(k, std::ceil(regular_degree_threshold(k)), nullptr))) break;
    smallest = k;
  }
  return smallest;
}

}  // namespace dcycles
