#pragma once

#include <optional>
#include <vector>

#include "hecke/types.hpp"

namespace hecke::dimension {

struct DimensionResult {
  double w = 0;
  int k = 0;
  double s_k = 0;
  double bracket_lo = 0, bracket_hi = 0;
  double residual = 0;  // |D_k(s_k)|
  int iterations = 0;
};

struct ZeroScan {
  std::optional<double> root;  // largest root when several brackets appear
  int sign_changes = 0;
};

/// Scans det(1 - sign*A_k(s,w,theta)) for real s on [lo, hi] with grid step
/// 1e-2 (refined x10 once if no sign change) and refines each bracket by a
/// bisection-secant hybrid to width <= 1e-13.
ZeroScan find_zero(int k, double w, double theta, int sign, double lo,
                   double hi);

/// All refined roots on the interval, ascending. Used by the cover scan.
std::vector<double> scan_zeros(int k, double w, double theta, int sign,
                               double lo, double hi);

/// Zero s_k(w) of D_k for k = k_min..k_max on the real axis; the final
/// entry is the delta(w) estimate.
std::vector<DimensionResult> dimension_ladder(double w, int k_min, int k_max);

/// Error estimate attached to the last ladder rung:
/// |s_kmax - s_{kmax-1}| * (w/2) / ((w/2) - 1).
double ladder_error_estimate(const std::vector<DimensionResult>& ladder,
                             double w);

/// Throws LadderError semantics: true when |s_{k+1}-s_k| increased twice in
/// a row somewhere in the sequence.
bool ladder_diverged(const std::vector<double>& roots);

/// Matrix size heuristic: max(15, ceil(30 / log2(w/2))).
int default_k(double w);

struct CoverFactorReport {
  int sign = +1;  // +: det(1 - L^(a/n)), -: det(1 + L^(a/n))
  int a = 0;
  std::vector<double> zeros;
};

struct CoverZeroReport {
  double w = 0;
  int n = 1;
  double epsilon = 0;
  int k = 0;
  double delta_estimate = 0;
  std::vector<CoverFactorReport> factors;
  int count_in_window = 0;  // zeros in (delta - epsilon, delta]
};

/// Scans every factor det(1 -+ L^(a/n)), a = 0..n-1, over
/// (1/2 + 1e-3, 1.1) and counts the zeros landing in (delta - eps, delta].
CoverZeroReport cover_zero_scan(double w, int n, double epsilon, int k);

}  // namespace hecke::dimension
