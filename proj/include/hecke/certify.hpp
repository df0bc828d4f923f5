#pragma once

#include <optional>

namespace hecke::certify {

struct IntervalBound {
  double w = 0;
  double lower = 0, upper = 0;
  double epsilon_used = 0;
  double delta_prior = 0;
};

/// Two-term fixed-point function whose sign brackets delta(w):
///   F(d) = 1 - 2 zeta(2d)/w^{2d}
///          - [4 binom(2d+1,2) zeta(2+2d)^2 / w^{4+4d}]
///            / [1 - 2 binom(2d+3,2) zeta(4+2d) / w^{4+2d}].
/// Strictly increasing in d on the range of interest; F(delta) = O(E(w)).
double F_value(double delta, double w);

/// Rigorous bound for |E(w)| evaluated at the a-priori lower bound
/// delta_prior (the bound is decreasing in delta, so a lower bound for
/// delta gives an upper bound for the error).
double error_bound(double w, double delta_prior);

/// Solves F(d-) = -eps and F(d+) = +eps with eps = error_bound(w, prior),
/// bootstrapping the prior from the matrix ladder when none is supplied and
/// re-running once with the certified lower bound for self-consistency.
IntervalBound certify_interval(double w,
                               std::optional<double> delta_prior = {});

namespace detail {

double error_term_e1(double w, double delta);  // the E_1 envelope
double error_term_e2(double w, double delta);  // the 3521 / w^{11+2d} envelope

}  // namespace detail

}  // namespace hecke::certify
