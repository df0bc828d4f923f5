#include "hecke/specfun.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <mutex>
#include <optional>

#include "hecke/errors.hpp"

namespace hecke::specfun {

namespace {

// B_{2r}/(2r)! for r = 1..5, plus |B_12/12!| for the omitted-term estimate.
constexpr double kBernoulliOverFactorial[5] = {
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30240.0,
    -1.0 / 1209600.0,
    1.0 / 47900160.0,
};
constexpr double kB12Over12Factorial = 691.0 / 2730.0 / 479001600.0;

template <typename T>
std::complex<T> pow_real_base(T x, std::complex<T> s) {
  // x^s for real x > 0
  const T lx = std::log(x);
  const T mag = std::exp(s.real() * lx);
  const T ph = s.imag() * lx;
  return {mag * std::cos(ph), mag * std::sin(ph)};
}

// The Euler-Maclaurin form stays a convergent representation slightly left
// of Re(s) = 1; the public entry points enforce Re(s) > 1, the Stieltjes
// stencil fit evaluates marginally below it.
template <typename T>
std::complex<T> hurwitz_zeta_em(std::complex<T> s, T a) {
  const T sigma = s.real();
  const T eps = std::numeric_limits<T>::epsilon();

  T pochhammer_abs = 1;  // |s (s+1) ... (s+10)|
  for (int j = 0; j <= 10; ++j) pochhammer_abs *= std::abs(s + T(j));

  std::size_t n_base = 16;
  while (n_base < (1u << 15)) {
    const T x = a + T(n_base);
    const T omitted =
        T(kB12Over12Factorial) * pochhammer_abs * std::pow(x, -(sigma + 11));
    if (omitted < eps) break;
    n_base *= 2;
  }

  std::complex<T> sum(0, 0);
  for (std::size_t m = 0; m < n_base; ++m) sum += pow_real_base(a + T(m), -s);

  const T x = a + T(n_base);
  const std::complex<T> x_minus_s = pow_real_base(x, -s);
  sum += x_minus_s * x / (s - T(1));  // x^{1-s}/(s-1)
  sum += x_minus_s * T(0.5);

  std::complex<T> pochhammer = s;          // s (s+1) ... (s+2r-2)
  std::complex<T> power = x_minus_s / x;   // x^{-s-2r+1}
  for (int r = 1; r <= 5; ++r) {
    sum += T(kBernoulliOverFactorial[r - 1]) * pochhammer * power;
    pochhammer *= (s + T(2 * r - 1)) * (s + T(2 * r));
    power /= x * x;
  }
  return sum;
}


std::complex<double> hurwitz_zeta_checked(Complex s, double a) {
  if (!(s.real() > 1.0)) throw DomainError("hurwitz_zeta: Re(s) must exceed 1");
  if (!(a > 0.0) || a > 1.0) throw DomainError("hurwitz_zeta: need 0 < a <= 1");
  return hurwitz_zeta_em<double>(s, a);
}

// Best rational approximation p/q with q <= q_max and |x - p/q| <= tol,
// by continued fractions. Returns nothing when x is not that close to a
// small-denominator rational.
std::optional<std::pair<std::int64_t, std::int64_t>> rational_approx(
    double x, std::int64_t q_max, double tol) {
  double value = x;
  std::int64_t p_prev = 1, q_prev = 0;
  std::int64_t p_cur = static_cast<std::int64_t>(std::floor(value));
  std::int64_t q_cur = 1;
  double frac = value - std::floor(value);
  for (int iter = 0; iter < 64; ++iter) {
    if (std::abs(x - double(p_cur) / double(q_cur)) <= tol)
      return std::make_pair(p_cur, q_cur);
    if (frac < 1e-18) break;
    value = 1.0 / frac;
    const double fl = std::floor(value);
    if (fl > 9e17) break;
    const std::int64_t digit = static_cast<std::int64_t>(fl);
    frac = value - fl;
    const std::int64_t p_next = digit * p_cur + p_prev;
    const std::int64_t q_next = digit * q_cur + q_prev;
    if (q_next > q_max) break;
    p_prev = p_cur;
    q_prev = q_cur;
    p_cur = p_next;
    q_cur = q_next;
  }
  return std::nullopt;
}

constexpr double kTwoPi = 6.283185307179586476925286766559;

Complex periodic_zeta_direct(Complex s, double theta) {
  // Kahan-compensated partial sum with a first-order Abel tail correction;
  // used only when theta is not (close to) a small-denominator rational.
  const double sigma = s.real();
  const Complex z = std::polar(1.0, kTwoPi * theta);
  const Complex one_minus_z = Complex(1, 0) - z;

  Complex sum(0, 0), comp(0, 0);
  Complex zn(1, 0);
  std::size_t n = 0;
  const std::size_t n_cap = 1u << 24;
  double bound = std::numeric_limits<double>::infinity();
  while (n < n_cap) {
    ++n;
    zn *= z;
    const Complex term = zn * pow_real_base(double(n), -s);
    const Complex y = term - comp;
    const Complex t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    if ((n & (n - 1)) == 0 && n >= 1024) {
      const double a_next = std::pow(double(n + 1), -sigma);
      // residual after the Abel correction below
      bound = 2.0 * (sigma + std::abs(s.imag()) + 1.0) *
              std::pow(double(n), -sigma - 1.0) / std::norm(one_minus_z);
      if (bound <= 1e-11 * std::abs(sum) + 1e-300) {
        sum += zn * z * a_next / one_minus_z;
        return sum;
      }
    }
  }
  throw ConvergenceError("periodic_zeta: series too slow for this theta");
}

}  // namespace

Complex riemann_zeta(Complex s) { return hurwitz_zeta_checked(s, 1.0); }

Complex hurwitz_zeta(Complex s, double a) {
  return hurwitz_zeta_checked(s, a);
}

Complex periodic_zeta(Complex s, double theta) {
  if (!(s.real() > 1.0)) throw DomainError("periodic_zeta: Re(s) must exceed 1");
  theta -= std::floor(theta);
  if (theta < 1e-13 || theta > 1.0 - 1e-13) return riemann_zeta(s);

  if (auto pq = rational_approx(theta, 1024, 1e-11)) {
    const auto [p, q] = *pq;
    // Li_s(e^{2 pi i p/q}) = q^{-s} sum_{j=1..q} e^{2 pi i p j/q} zeta(s, j/q)
    Complex sum(0, 0);
    for (std::int64_t j = 1; j <= q; ++j) {
      const std::int64_t r = (p % q * j) % q;
      const Complex phase = std::polar(1.0, kTwoPi * double(r) / double(q));
      sum += phase * hurwitz_zeta_checked(s, double(j) / double(q));
    }
    return sum * pow_real_base(double(q), -s);
  }
  return periodic_zeta_direct(s, theta);
}

Complex complex_binomial(Complex r, int k) {
  if (k < 0) throw DomainError("complex_binomial: k must be nonnegative");
  Complex result(1, 0);
  for (int j = 0; j < k; ++j) result *= (r - Complex(j, 0)) / double(j + 1);
  return result;
}

namespace detail {

namespace {

long double zeta_near_one(long double x) {
  // zeta(1+x) - 1/x without pole cancellation: the Euler-Maclaurin tail
  // term (N^{-x} - 1)/x is an expm1, so every summand stays O(1)
  constexpr int kTerms = 64;
  const long double s = 1.0L + x;
  long double sum = 0;
  for (int n = kTerms; n >= 1; --n)
    sum += std::exp(-s * std::log((long double)n));
  const long double endpoint = (long double)(kTerms + 1);
  const long double le = std::log(endpoint);
  sum += std::expm1(-x * le) / x;            // (N^{1-s} - 1)/(s - 1)
  const long double e_minus_s = std::exp(-s * le);
  sum += e_minus_s * 0.5L;
  long double pochhammer = s;
  long double power = e_minus_s / endpoint;  // endpoint^{-s-2r+1}
  for (int r = 1; r <= 5; ++r) {
    sum += (long double)kBernoulliOverFactorial[r - 1] * pochhammer * power;
    pochhammer *= (s + (long double)(2 * r - 1)) * (s + (long double)(2 * r));
    power /= endpoint * endpoint;
  }
  return sum;
}

// extended-precision Laurent coefficients used only to peel lower stages
// off the stencil before extracting the next one
constexpr long double kGamma0 = 0.57721566490153286060651209008240243104L;
constexpr long double kGamma1 = -0.07281584548367672486058637587490131914L;
constexpr long double kGamma2 = -0.00969036319287231848453038603521252936L;

// One Richardson pass in h^2 over values sampled at h, h/2, h/4, ...
long double richardson(const long double* v, int levels) {
  long double table[8][8];
  for (int i = 0; i < levels; ++i) table[i][0] = v[i];
  for (int j = 1; j < levels; ++j) {
    const long double f = std::pow(4.0L, j);
    for (int i = j; i < levels; ++i)
      table[i][j] = (f * table[i][j - 1] - table[i - 1][j - 1]) / (f - 1.0L);
  }
  return table[levels - 1][levels - 1];
}

}  // namespace

StieltjesTable fit_stieltjes_from_zeta() {
  // Stencil x in {+-1e-2 * 2^-m}. Even/odd parts of zeta(1+x) - 1/x give
  //   even(h) = g0 + (g2/2) h^2 + (g4/24) h^4 + ...
  //   odd(h)  = g1 + (g3/6) h^2 + (g5/120) h^4 + ...
  // and successive coefficients are peeled off with Richardson tables.
  constexpr int kLevels = 5;
  long double h[kLevels], even[kLevels], odd[kLevels];
  for (int m = 0; m < kLevels; ++m) {
    h[m] = 0.01L / (1 << m);
    const long double gp = zeta_near_one(h[m]);
    const long double gm = zeta_near_one(-h[m]);
    even[m] = (gp + gm) / 2.0L;
    odd[m] = -(gp - gm) / (2.0L * h[m]);
  }

  const long double g0 = richardson(even, kLevels);
  const long double g1 = richardson(odd, kLevels);

  // peel with the extended-precision literals: dividing by h^2 or h^4
  // amplifies any error in the subtracted stage, so the fitted values
  // (good to ~1e-14) would contaminate the higher coefficients
  long double v2[4], v3[3], v4[2];
  for (int m = 0; m < 4; ++m) v2[m] = (even[m] - kGamma0) / (h[m] * h[m]);
  const long double g2 = 2.0L * richardson(v2, 4);
  for (int m = 0; m < 3; ++m) v3[m] = (odd[m] - kGamma1) / (h[m] * h[m]);
  const long double g3 = 6.0L * richardson(v3, 3);
  for (int m = 0; m < 2; ++m)
    v4[m] = (even[m] - kGamma0 - 0.5L * kGamma2 * h[m] * h[m]) /
            (h[m] * h[m] * h[m] * h[m]);
  const long double g4 = 24.0L * richardson(v4, 2);

  return StieltjesTable{{double(g0), double(g1), double(g2), double(g3),
                         double(g4)}};
}

}  // namespace detail

const StieltjesTable& stieltjes_constants() {
  static const StieltjesTable table{{
      0.57721566490153286061,
      -0.072815845483676724861,
      -0.0096903631928723184845,
      0.0020538344203033458662,
      0.0023253700654673000574,
  }};
  static std::once_flag checked;
  std::call_once(checked, [] {
    const StieltjesTable fit = detail::fit_stieltjes_from_zeta();
    constexpr double tol[5] = {1e-11, 1e-9, 1e-8, 1e-7, 1e-6};
    for (int n = 0; n < 5; ++n) {
      if (!(std::abs(fit.gamma[n] - table.gamma[n]) <= tol[n]))
        throw std::logic_error("stieltjes_constants: table failed stencil fit");
    }
  });
  return table;
}

}  // namespace hecke::specfun
