#include "hecke/asymptotics.hpp"

#include <cmath>

#include "hecke/errors.hpp"
#include "hecke/specfun.hpp"

namespace hecke::asymptotics {

TruncatedBivariatePoly TruncatedBivariatePoly::operator+(
    const TruncatedBivariatePoly& rhs) const {
  TruncatedBivariatePoly out = *this;
  out += rhs;
  return out;
}

TruncatedBivariatePoly& TruncatedBivariatePoly::operator+=(
    const TruncatedBivariatePoly& rhs) {
  for (int a = 0; a <= kUMax; ++a)
    for (int b = 0; b <= kTMax; ++b) c[a][b] += rhs.c[a][b];
  return *this;
}

TruncatedBivariatePoly TruncatedBivariatePoly::operator-(
    const TruncatedBivariatePoly& rhs) const {
  TruncatedBivariatePoly out = *this;
  for (int a = 0; a <= kUMax; ++a)
    for (int b = 0; b <= kTMax; ++b) out.c[a][b] -= rhs.c[a][b];
  return out;
}

TruncatedBivariatePoly TruncatedBivariatePoly::operator*(
    const TruncatedBivariatePoly& rhs) const {
  // extended-precision accumulation keeps the product commutative to well
  // below one double ulp per coefficient
  TruncatedBivariatePoly out;
  for (int a = 0; a <= kUMax; ++a)
    for (int b = 0; b <= kTMax; ++b) {
      long double acc = 0;
      for (int a1 = 0; a1 <= a; ++a1)
        for (int b1 = 0; b1 <= b; ++b1)
          acc += (long double)c[a1][b1] * rhs.c[a - a1][b - b1];
      out.c[a][b] = double(acc);
    }
  return out;
}

double TruncatedBivariatePoly::max_abs_diff(
    const TruncatedBivariatePoly& rhs) const {
  double m = 0;
  for (int a = 0; a <= kUMax; ++a)
    for (int b = 0; b <= kTMax; ++b)
      m = std::max(m, std::abs(c[a][b] - rhs.c[a][b]));
  return m;
}

double TruncatedBivariatePoly::evaluate(double u, double t) const {
  double sum = 0;
  for (int a = kUMax; a >= 0; --a) {
    double row = 0;
    for (int b = kTMax; b >= 0; --b) row = row * t + c[a][b];
    sum = sum * u + row;
  }
  return sum;
}

std::array<Polynomial, 6> q_polynomials(int order) {
  if (order < 1 || order > 5) throw DomainError("q_polynomials: order in 1..5");
  const auto& gamma = specfun::stieltjes_constants().gamma;

  // Q_{n+1}(t) = (-t)^{n+1}/(n+1)! + sum_{a=0..n} [(-1)^a gamma_a / a!]
  //                                   * (-t)^{n-a}/(n-a)!
  std::array<Polynomial, 6> q;
  double factorial[7] = {1, 1, 2, 6, 24, 120, 720};
  for (int n = 0; n < order; ++n) {
    Polynomial poly(std::size_t(n) + 2, 0.0);
    const double lead = ((n + 1) % 2 == 0 ? 1.0 : -1.0) / factorial[n + 1];
    poly[std::size_t(n) + 1] = lead;  // (-t)^{n+1}/(n+1)!
    for (int a = 0; a <= n; ++a) {
      const double coeff = ((a % 2 == 0) ? 1.0 : -1.0) * gamma[a] /
                           factorial[a] / factorial[n - a] *
                           (((n - a) % 2 == 0) ? 1.0 : -1.0);
      poly[std::size_t(n - a)] += coeff;
    }
    q[std::size_t(n) + 1] = std::move(poly);
  }
  return q;
}

std::vector<Polynomial> p_polynomials(int order) {
  if (order < 1 || order > 4) throw DomainError("p_polynomials: order in 1..4");
  const auto q = q_polynomials(5);

  // terms Q_m(t) * 2u as truncated bivariate polynomials
  std::array<TruncatedBivariatePoly, 6> factor;
  for (int m = 1; m <= 5; ++m) {
    for (std::size_t b = 0; b < q[std::size_t(m)].size(); ++b)
      factor[std::size_t(m)].c[1][b] = 2.0 * q[std::size_t(m)][b];
  }
  TruncatedBivariatePoly two_u;
  two_u.c[1][0] = 2.0;

  // fixed point x <- 2u + sum_m Q_m(t) 2u x^m; nilpotent in u, so it is
  // exactly stationary after kUMax iterations
  TruncatedBivariatePoly x = two_u;
  TruncatedBivariatePoly prev;
  for (int iter = 0; iter < kUMax + 3; ++iter) {
    prev = x;
    TruncatedBivariatePoly next = two_u;
    TruncatedBivariatePoly x_power = x;
    for (int m = 1; m <= 5; ++m) {
      next += factor[std::size_t(m)] * x_power;
      x_power = x_power * x;
    }
    x = next;
  }
  if (x.max_abs_diff(prev) > 1e-12)
    throw ConvergenceError("p_polynomials: substitution did not stabilize");

  // x = 2u + sum_j 2 P_j(t) u^{j+1}
  std::vector<Polynomial> p;
  for (int j = 1; j <= order; ++j) {
    Polynomial poly(std::size_t(j) + 1, 0.0);
    for (int b = 0; b <= kTMax; ++b) {
      const double coeff = x.c[j + 1][b] / 2.0;
      if (b <= j)
        poly[std::size_t(b)] = coeff;
      else if (coeff != 0.0)
        throw ConvergenceError("p_polynomials: degree bound violated");
    }
    p.push_back(std::move(poly));
  }
  return p;
}

double evaluate_polynomial(const Polynomial& p, double t) {
  double v = 0;
  for (std::size_t i = p.size(); i-- > 0;) v = v * t + p[i];
  return v;
}

double delta_expansion(double w) {
  if (!(w >= 10.0)) throw DomainError("delta_expansion: valid for w >= 10");
  static const std::vector<Polynomial> p = p_polynomials(4);
  const double t = std::log(w);
  double sum = 0.5 + 1.0 / w;
  double wpow = w * w;
  for (int j = 1; j <= 4; ++j) {
    sum += evaluate_polynomial(p[std::size_t(j) - 1], t) / wpow;
    wpow *= w;
  }
  return sum;
}

}  // namespace hecke::asymptotics
