#pragma once

#include <array>
#include <vector>

namespace hecke::asymptotics {

inline constexpr int kUMax = 5;  // powers of u = 1/w
inline constexpr int kTMax = 5;  // powers of t = log w

/// Polynomial in (u, t) truncated at u^kUMax, t^kTMax; products drop the
/// higher terms.
struct TruncatedBivariatePoly {
  double c[kUMax + 1][kTMax + 1] = {};  // coefficient of u^a t^b

  TruncatedBivariatePoly operator+(const TruncatedBivariatePoly& rhs) const;
  TruncatedBivariatePoly operator-(const TruncatedBivariatePoly& rhs) const;
  TruncatedBivariatePoly operator*(const TruncatedBivariatePoly& rhs) const;
  TruncatedBivariatePoly& operator+=(const TruncatedBivariatePoly& rhs);

  double max_abs_diff(const TruncatedBivariatePoly& rhs) const;
  double evaluate(double u, double t) const;
};

/// Q_m(t), m = 1..order (order <= 5): coefficient of x^{m-1} in
/// zeta(1+x) e^{-xt} with the pole term removed. Coefficients are stored
/// ascending in the power of t; deg Q_m <= m.
using Polynomial = std::vector<double>;  // p[i] multiplies t^i

std::array<Polynomial, 6> q_polynomials(int order);  // index 1..order used

/// P_j(t), j = 1..order (order <= 4), from the truncated fixed point
///   x = 2u + sum_m Q_m(t) 2u x^m,
/// with x = 2u + sum_j 2 P_j(t) u^{j+1}. P_1(t) = -2t + 2 gamma_0.
std::vector<Polynomial> p_polynomials(int order);

double evaluate_polynomial(const Polynomial& p, double t);

/// delta(w) ~ 1/2 + 1/w + sum_{j=1..4} P_j(log w) / w^{j+1}; valid w >= 10.
double delta_expansion(double w);

}  // namespace hecke::asymptotics
