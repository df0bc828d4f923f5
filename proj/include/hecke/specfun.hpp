#pragma once

#include <array>

#include "hecke/types.hpp"

namespace hecke::specfun {

/// zeta(s) for Re(s) > 1. Truncated Dirichlet sum plus Euler-Maclaurin
/// tail with Bernoulli corrections through B10; the truncation point is
/// raised until the first omitted correction is below machine epsilon.
Complex riemann_zeta(Complex s);

/// Hurwitz zeta sum_{n>=0} (n+a)^{-s} for Re(s) > 1 and 0 < a <= 1.
Complex hurwitz_zeta(Complex s, double a);

/// Li_s(e^{2 pi i theta}) = sum_{n>=1} e^{2 pi i theta n} n^{-s} for
/// Re(s) > 1 and theta in [0,1). theta = 0 reduces to riemann_zeta.
Complex periodic_zeta(Complex s, double theta);

/// (r choose k) = r(r-1)...(r-k+1)/k! for complex r, integer k >= 0.
Complex complex_binomial(Complex r, int k);

struct StieltjesTable {
  std::array<double, 5> gamma;  // gamma_0 .. gamma_4
};

/// Laurent coefficients of zeta(s) at s = 1:
///   zeta(1+x) = 1/x + sum_n (-1)^n gamma_n x^n / n!.
/// Shipped as literals; on first call the table is checked against a
/// stencil fit of zeta(1+x) - 1/x computed in extended precision.
const StieltjesTable& stieltjes_constants();

namespace detail {

/// The stencil-fit extraction used by the startup check and the tests.
StieltjesTable fit_stieltjes_from_zeta();

}  // namespace detail

}  // namespace hecke::specfun
