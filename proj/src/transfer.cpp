#include "hecke/transfer.hpp"

#include <cmath>

#include "hecke/errors.hpp"
#include "hecke/specfun.hpp"

namespace hecke::transfer {

namespace {

Complex w_power(double w, Complex exponent) {
  // w^{-exponent} with the real logarithm; w > 2 > 0 so no branch choice
  const double lw = std::log(w);
  const double mag = std::exp(-exponent.real() * lw);
  const double ph = -exponent.imag() * lw;
  return {mag * std::cos(ph), mag * std::sin(ph)};
}

void check_params(Complex s, double w, double theta) {
  if (!(w > 2.0)) throw DomainError("transfer: w must exceed 2");
  if (theta < 0.0 || theta >= 1.0)
    throw DomainError("transfer: theta must lie in [0,1)");
  (void)s;
}

// zeta-like factor for the given total degree m = i+j and parity of i+j:
//   theta = 0:  ((-1)^m + 1) zeta(2s+m)
//   else:       (-1)^m Li_{2s+m}(e^{2 pi i theta}) + Li_{2s+m}(e^{-2 pi i theta})
Complex twist_sum(Complex arg, double theta, bool odd) {
  if (theta == 0.0) {
    if (odd) return {0.0, 0.0};
    return 2.0 * specfun::riemann_zeta(arg);
  }
  const Complex plus = specfun::periodic_zeta(arg, theta);
  const Complex minus = specfun::periodic_zeta(arg, 1.0 - theta);
  return odd ? (minus - plus) : (minus + plus);
}

}  // namespace

Complex entry(int i, int j, Complex s, double w, double theta) {
  check_params(s, w, theta);
  const int m = i + j;
  const bool odd = (m % 2) != 0;
  if (theta == 0.0 && odd) return {0.0, 0.0};  // parity factor kills it
  if (i == 0 && j == 0 && theta == 0.0 && !(2.0 * s.real() > 1.0))
    throw DomainError("transfer entry: Re(2s) must exceed 1");
  const Complex arg = 2.0 * s + double(m);
  const Complex zs = twist_sum(arg, theta, odd);
  return zs * w_power(w, arg) * specfun::complex_binomial(arg - 1.0, i);
}

TransferMatrix build_matrix(int k, Complex s, double w, double theta) {
  check_params(s, w, theta);
  if (k < 1) throw DomainError("build_matrix: k must be positive");
  TransferMatrix out;
  out.k = k;
  out.s = s;
  out.w = w;
  out.theta = theta;
  out.entries.assign(std::size_t(k) * k, Complex(0, 0));

  // zeta and the power of w depend on m = i+j only; cache them per m
  std::vector<Complex> zs(2 * k - 1), wp(2 * k - 1);
  for (int m = 0; m < 2 * k - 1; ++m) {
    const bool odd = (m % 2) != 0;
    const Complex arg = 2.0 * s + double(m);
    if (theta == 0.0 && odd) {
      zs[m] = Complex(0, 0);
      wp[m] = Complex(0, 0);
      continue;
    }
    if (m == 0 && !(2.0 * s.real() > 1.0))
      throw DomainError("build_matrix: Re(2s) must exceed 1");
    zs[m] = twist_sum(arg, theta, odd);
    wp[m] = w_power(w, arg);
  }

  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      const int m = i + j;
      if (theta == 0.0 && (m % 2) != 0) continue;
      out.at(i, j) = zs[m] * wp[m] *
                     specfun::complex_binomial(2.0 * s + double(m) - 1.0, i);
    }
  }
  return out;
}

DeterminantValue determinant(const TransferMatrix& m, int sign) {
  const int k = m.k;
  std::vector<Complex> b(std::size_t(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      b[std::size_t(i) * k + j] =
          (i == j ? Complex(1, 0) : Complex(0, 0)) -
          double(sign) * m.at(i, j);

  Complex det(1, 0);
  for (int col = 0; col < k; ++col) {
    int pivot = col;
    double best = std::abs(b[std::size_t(col) * k + col]);
    for (int r = col + 1; r < k; ++r) {
      const double cand = std::abs(b[std::size_t(r) * k + col]);
      if (cand > best) {
        best = cand;
        pivot = r;
      }
    }
    if (best == 0.0) {
      det = Complex(0, 0);  // singular 1 - A: legitimate zero
      break;
    }
    if (pivot != col) {
      for (int j = 0; j < k; ++j)
        std::swap(b[std::size_t(pivot) * k + j], b[std::size_t(col) * k + j]);
      det = -det;
    }
    const Complex diag = b[std::size_t(col) * k + col];
    det *= diag;
    for (int r = col + 1; r < k; ++r) {
      const Complex factor = b[std::size_t(r) * k + col] / diag;
      if (factor == Complex(0, 0)) continue;
      for (int j = col; j < k; ++j)
        b[std::size_t(r) * k + j] -= factor * b[std::size_t(col) * k + j];
    }
  }

  DeterminantValue out;
  out.value = det;
  out.k = k;
  out.s = m.s;
  out.w = m.w;
  out.theta = m.theta;
  out.sign = sign;
  return out;
}

}  // namespace hecke::transfer
