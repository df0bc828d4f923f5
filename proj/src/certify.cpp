#include "hecke/certify.hpp"

#include <cmath>

#include "hecke/dimension.hpp"
#include "hecke/errors.hpp"
#include "hecke/specfun.hpp"

namespace hecke::certify {

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;

double zeta(double x) { return specfun::riemann_zeta({x, 0}).real(); }

double binom2(double r) { return r * (r - 1.0) / 2.0; }  // (r choose 2)

double denominator_bracket(double delta, double w) {
  return 1.0 -
         2.0 * std::pow(w, -(4.0 + 2.0 * delta)) * binom2(2.0 * delta + 3.0) *
             zeta(4.0 + 2.0 * delta);
}

}  // namespace

double F_value(double delta, double w) {
  if (!(delta > 0.5)) throw DomainError("F_value: delta must exceed 1/2");
  if (!(w >= 3.0)) throw DomainError("F_value: valid for w >= 3");
  const double denom = denominator_bracket(delta, w);
  if (!(denom > 0)) throw DomainError("F_value: denominator bracket <= 0");
  const double z2d = zeta(2.0 * delta);
  const double z2 = zeta(2.0 + 2.0 * delta);
  return 1.0 - 2.0 * z2d * std::pow(w, -2.0 * delta) -
         4.0 * binom2(2.0 * delta + 1.0) * z2 * z2 *
             std::pow(w, -(4.0 + 4.0 * delta)) / denom;
}

namespace detail {

double error_term_e1(double w, double delta) {
  const double x = 3.0 / (2.0 * w * w);
  const double x2 = x * x;
  return 729.0 * zeta(3.0) * zeta(4.0 + 2.0 * delta) * (5.0 - 3.0 * x2) /
         (16.0 * std::pow(w, 9.0 + 2.0 * delta) * kSqrtPi *
          (1.0 - x2) * (1.0 - x2));
}

double error_term_e2(double w, double delta) {
  return 3521.0 * std::pow(w, -(11.0 + 2.0 * delta));
}

}  // namespace detail

double error_bound(double w, double delta_prior) {
  if (!(w >= 3.0)) throw DomainError("error_bound: valid for w >= 3");
  if (!(delta_prior > 0.5) || !(delta_prior < 1.0))
    throw DomainError("error_bound: delta_prior must lie in (1/2, 1)");
  const double denom = denominator_bracket(delta_prior, w);
  if (!(denom > 0)) throw DomainError("error_bound: denominator bracket <= 0");
  const double second = 7042.0 * zeta(2.0 + 2.0 * delta_prior) /
                        (std::pow(w, 13.0 + 4.0 * delta_prior) * denom);
  return (detail::error_term_e1(w, delta_prior) + second) / 0.31;
}

namespace {

double solve_f_equals(double target, double w) {
  // F is strictly increasing; bracket then bisect to 1e-10
  double lo = 0.5 + 1e-6, hi = 1.2;
  double flo = F_value(lo, w) - target;
  double fhi = F_value(hi, w) - target;
  if (!(flo < 0) || !(fhi > 0))
    throw ConvergenceError("certify: could not bracket F = target");
  while (hi - lo > 1e-10) {
    const double mid = 0.5 * (lo + hi);
    const double fm = F_value(mid, w) - target;
    if (fm < 0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

IntervalBound certify_interval(double w, std::optional<double> delta_prior) {
  if (!(w >= 3.0)) throw DomainError("certify_interval: valid for w >= 3");

  const int k = dimension::default_k(w);
  const auto ladder = dimension::dimension_ladder(w, std::max(2, k - 4), k);
  const double delta_ladder = ladder.back().s_k;

  double prior =
      delta_prior.value_or(std::max(0.51, delta_ladder - 0.05));
  IntervalBound out;
  bool stable = false;
  for (int pass = 0; pass < 6; ++pass) {
    const double eps = error_bound(w, prior);
    out.w = w;
    out.delta_prior = prior;
    out.epsilon_used = eps;
    out.lower = solve_f_equals(-eps, w);
    out.upper = solve_f_equals(+eps, w);
    if (out.lower >= prior) {
      if (stable) break;       // one self-consistency re-run done
      stable = true;
      prior = out.lower;       // tighten and confirm
      continue;
    }
    if (stable)
      throw PriorError("certify_interval: prior inconsistent after re-run");
    prior = out.lower;  // retry from the certified lower bound
  }
  if (!stable)
    throw PriorError("certify_interval: no self-consistent prior found");
  if (!(delta_ladder > out.lower && delta_ladder < out.upper))
    throw PriorError("certify_interval: ladder estimate outside interval");
  return out;
}

}  // namespace hecke::certify
