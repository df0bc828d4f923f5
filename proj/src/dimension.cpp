#include "hecke/dimension.hpp"

#include <algorithm>
#include <cmath>

#include "hecke/errors.hpp"
#include "hecke/transfer.hpp"

namespace hecke::dimension {

namespace {

double det_on_axis(int k, double w, double theta, int sign, double s) {
  const auto dv = transfer::determinant(
      transfer::build_matrix(k, Complex(s, 0), w, theta), sign);
  const double im = std::abs(dv.value.imag());
  if (im > 1e-10 * (1.0 + std::abs(dv.value)))
    throw ConvergenceError("determinant not real on the real axis");
  return dv.value.real();
}

struct Refined {
  double root;
  double lo, hi;
  double residual;
  int iterations;
};

template <typename F>
Refined refine_bracket(F&& f, double lo, double hi, double flo, double fhi) {
  int iterations = 0;
  double best = lo, fbest = flo;
  if (std::abs(fhi) < std::abs(flo)) best = hi, fbest = fhi;
  while (hi - lo > 1e-13 && iterations < 200) {
    ++iterations;
    // secant proposal, falling back to the midpoint when it leaves the
    // bracket or stops making progress
    double x = hi - fhi * (hi - lo) / (fhi - flo);
    const double margin = 0.01 * (hi - lo);
    if (!(x > lo + margin) || !(x < hi - margin)) x = 0.5 * (lo + hi);
    const double fx = f(x);
    if (std::abs(fx) < std::abs(fbest)) best = x, fbest = fx;
    if (fx == 0.0) {
      lo = hi = x;
      flo = fhi = fx;
      break;
    }
    if ((fx < 0) == (flo < 0))
      lo = x, flo = fx;
    else
      hi = x, fhi = fx;
  }
  // a few polishing secant steps to push the residual down
  double x0 = lo, f0 = flo, x1 = hi, f1 = fhi;
  for (int i = 0; i < 12 && std::abs(fbest) > 1e-13; ++i) {
    if (f1 == f0) break;
    const double x = x1 - f1 * (x1 - x0) / (f1 - f0);
    if (!std::isfinite(x)) break;
    const double fx = f(x);
    ++iterations;
    if (std::abs(fx) >= std::abs(fbest)) break;
    best = x, fbest = fx;
    x0 = x1, f0 = f1, x1 = x, f1 = fx;
  }
  return {best, lo, hi, std::abs(fbest), iterations};
}

template <typename F>
std::vector<Refined> scan_impl(F&& f, double lo, double hi) {
  std::vector<Refined> out;
  for (double step : {1e-2, 1e-3}) {
    std::vector<double> xs;
    for (double x = lo; x < hi; x += step) xs.push_back(x);
    xs.push_back(hi);
    double fprev = f(xs[0]);
    double xprev = xs[0];
    for (std::size_t i = 1; i < xs.size(); ++i) {
      const double fx = f(xs[i]);
      if ((fx < 0) != (fprev < 0))
        out.push_back(refine_bracket(f, xprev, xs[i], fprev, fx));
      xprev = xs[i];
      fprev = fx;
    }
    if (!out.empty()) break;  // refine x10 only when nothing was found
  }
  return out;
}

}  // namespace

std::vector<double> scan_zeros(int k, double w, double theta, int sign,
                               double lo, double hi) {
  if (!(lo > 0.5)) throw DomainError("scan_zeros: lo must exceed 1/2");
  if (!(hi > lo)) throw DomainError("scan_zeros: empty interval");
  const auto f = [&](double s) { return det_on_axis(k, w, theta, sign, s); };
  std::vector<double> roots;
  for (const auto& r : scan_impl(f, lo, hi)) roots.push_back(r.root);
  std::sort(roots.begin(), roots.end());
  return roots;
}

ZeroScan find_zero(int k, double w, double theta, int sign, double lo,
                   double hi) {
  const auto roots = scan_zeros(k, w, theta, sign, lo, hi);
  ZeroScan out;
  out.sign_changes = int(roots.size());
  if (!roots.empty()) out.root = roots.back();  // delta is the largest zero
  return out;
}

std::vector<DimensionResult> dimension_ladder(double w, int k_min, int k_max) {
  if (!(w > 2.0)) throw DomainError("dimension_ladder: w must exceed 2");
  if (k_min < 2) throw DomainError("dimension_ladder: k_min must be >= 2");
  if (k_max < k_min) throw DomainError("dimension_ladder: k_max < k_min");

  constexpr double kLo = 0.5005, kHi = 1.1;
  std::vector<DimensionResult> out;
  std::vector<double> roots;
  for (int k = k_min; k <= k_max; ++k) {
    const auto f = [&](double s) { return det_on_axis(k, w, 0.0, +1, s); };
    const auto refined = scan_impl(f, kLo, kHi);
    if (refined.empty())
      throw LadderError("dimension_ladder: no zero found on (0.5005, 1.1)");
    const auto& r = refined.back();
    DimensionResult res;
    res.w = w;
    res.k = k;
    res.s_k = r.root;
    res.bracket_lo = r.lo;
    res.bracket_hi = r.hi;
    res.residual = r.residual;
    res.iterations = r.iterations;
    out.push_back(res);
    roots.push_back(r.root);
  }
  if (ladder_diverged(roots))
    throw LadderError("dimension_ladder: successive zeros not convergent");
  return out;
}

double ladder_error_estimate(const std::vector<DimensionResult>& ladder,
                             double w) {
  if (ladder.size() < 2) return 0.0;
  const double d =
      std::abs(ladder.back().s_k - ladder[ladder.size() - 2].s_k);
  const double r = w / 2.0;
  return d * r / (r - 1.0);
}

bool ladder_diverged(const std::vector<double>& roots) {
  if (roots.size() < 4) return false;
  int rises = 0;
  double prev_diff = std::abs(roots[1] - roots[0]);
  for (std::size_t i = 2; i < roots.size(); ++i) {
    const double diff = std::abs(roots[i] - roots[i - 1]);
    rises = diff > prev_diff ? rises + 1 : 0;
    if (rises >= 2) return true;
    prev_diff = diff;
  }
  return false;
}

int default_k(double w) {
  const double r = std::log2(w / 2.0);
  return std::max(15, int(std::ceil(30.0 / r)));
}

CoverZeroReport cover_zero_scan(double w, int n, double epsilon, int k) {
  if (!(w > 2.0)) throw DomainError("cover_zero_scan: w must exceed 2");
  if (n < 1) throw DomainError("cover_zero_scan: n must be positive");

  constexpr double kLo = 0.5 + 1e-3, kHi = 1.1;
  CoverZeroReport report;
  report.w = w;
  report.n = n;
  report.epsilon = epsilon;
  report.k = k;

  const auto ladder = dimension_ladder(w, std::max(2, k - 4), k);
  report.delta_estimate = ladder.back().s_k;

  for (int sign : {+1, -1}) {
    for (int a = 0; a < n; ++a) {
      CoverFactorReport factor;
      factor.sign = sign;
      factor.a = a;
      factor.zeros = scan_zeros(k, w, double(a) / double(n), sign, kLo, kHi);
      report.factors.push_back(std::move(factor));
    }
  }

  const double window_lo = report.delta_estimate - epsilon;
  const double window_hi = report.delta_estimate + 1e-9;
  for (const auto& factor : report.factors)
    for (const double z : factor.zeros)
      if (z > window_lo && z <= window_hi) ++report.count_in_window;
  return report;
}

}  // namespace hecke::dimension
