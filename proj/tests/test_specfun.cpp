#include <cmath>
#include <complex>
#include <random>

#include "doctest.h"
#include "hecke/errors.hpp"
#include "hecke/specfun.hpp"

using hecke::Complex;
namespace sf = hecke::specfun;

namespace {

constexpr double kPi = 3.14159265358979323846;

// raw partial sum of sum n^{-s} with an integral tail bracket; the oracle
// the zeta implementation is checked against
Complex zeta_partial_sum(Complex s, long terms, double* tail_bound) {
  Complex sum(0, 0);
  double comp_re = 0, comp_im = 0;  // Kahan
  for (long n = 1; n <= terms; ++n) {
    const double l = std::log(double(n));
    const double mag = std::exp(-s.real() * l);
    const Complex term(mag * std::cos(-s.imag() * l),
                       mag * std::sin(-s.imag() * l));
    double y = term.real() - comp_re;
    double t = sum.real() + y;
    comp_re = (t - sum.real()) - y;
    double y2 = term.imag() - comp_im;
    double t2 = sum.imag() + y2;
    comp_im = (t2 - sum.imag()) - y2;
    sum = {t, t2};
  }
  *tail_bound = std::pow(double(terms), 1.0 - s.real()) / (s.real() - 1.0);
  return sum;
}

Complex periodic_partial_sum(Complex s, double theta, long terms,
                             double* tail_bound) {
  Complex sum(0, 0);
  for (long n = 1; n <= terms; ++n) {
    const double l = std::log(double(n));
    const double mag = std::exp(-s.real() * l);
    const double ph = 2.0 * kPi * theta * double(n) - s.imag() * l;
    sum += Complex(mag * std::cos(ph), mag * std::sin(ph));
  }
  *tail_bound = std::pow(double(terms), 1.0 - s.real()) / (s.real() - 1.0);
  return sum;
}

}  // namespace

TEST_CASE("riemann zeta at classical closed forms") {
  CHECK(sf::riemann_zeta({2, 0}).real() ==
        doctest::Approx(kPi * kPi / 6.0).epsilon(1e-12));
  CHECK(sf::riemann_zeta({4, 0}).real() ==
        doctest::Approx(std::pow(kPi, 4) / 90.0).epsilon(1e-12));
  CHECK(sf::riemann_zeta({6, 0}).real() ==
        doctest::Approx(std::pow(kPi, 6) / 945.0).epsilon(1e-12));
  CHECK(std::abs(sf::riemann_zeta({2, 0}).imag()) < 1e-15);
}

TEST_CASE("riemann zeta at s=3 against direct summation") {
  // sum to a 1e-14 tail bound: N^{-2}/2 <= 1e-14
  double tail = 0;
  const Complex oracle = zeta_partial_sum({3, 0}, 7100000, &tail);
  REQUIRE(tail / 2.0 < 1.2e-14);
  CHECK(sf::riemann_zeta({3, 0}).real() ==
        doctest::Approx(oracle.real() + tail / 2.0).epsilon(2e-14));
  CHECK(sf::riemann_zeta({3, 0}).real() ==
        doctest::Approx(1.2020569031595943).epsilon(1e-13));
}

TEST_CASE("riemann zeta at complex argument against partial-sum bracket") {
  const Complex s(2.5, 1.0);
  double tail = 0;
  const Complex oracle = zeta_partial_sum(s, 1000000, &tail);
  const Complex value = sf::riemann_zeta(s);
  CHECK(std::abs(value - oracle) <= 1.5 * tail);
  CHECK(tail < 1e-8);
}

TEST_CASE("riemann zeta domain guard") {
  CHECK_THROWS_AS((void)sf::riemann_zeta({1.0, 0.5}), hecke::DomainError);
  CHECK_THROWS_AS((void)sf::riemann_zeta({0.3, 0}), hecke::DomainError);
}

TEST_CASE("riemann zeta real, > 1, strictly decreasing on a grid") {
  double prev = sf::riemann_zeta({1.05, 0}).real();
  for (double s = 1.15; s <= 8.0; s += 0.1) {
    const Complex z = sf::riemann_zeta({s, 0});
    CHECK(std::abs(z.imag()) < 1e-15);
    CHECK(z.real() > 1.0);
    CHECK(z.real() < prev);
    prev = z.real();
  }
}

TEST_CASE("hurwitz zeta against direct summation") {
  // zeta(2, 1/3) = psi'(1/3)
  double sum = 0;
  for (long n = 2000000; n >= 0; --n) sum += std::pow(double(n) + 1.0 / 3.0, -2.0);
  const double tail = 1.0 / 2000000.0;  // integral bracket
  const double value = sf::hurwitz_zeta({2, 0}, 1.0 / 3.0).real();
  CHECK(std::abs(value - sum) <= 1.01 * tail);
  CHECK(value == doctest::Approx(10.095597125427094).epsilon(1e-12));
}

TEST_CASE("periodic zeta reductions") {
  CHECK(sf::periodic_zeta({2, 0}, 0.0).real() ==
        doctest::Approx(kPi * kPi / 6.0).epsilon(1e-12));
  // theta = 1/2: alternating series -eta(2) = -pi^2/12
  const Complex v = sf::periodic_zeta({2, 0}, 0.5);
  CHECK(v.real() == doctest::Approx(-kPi * kPi / 12.0).epsilon(1e-10));
  CHECK(std::abs(v.imag()) < 1e-12);
}

TEST_CASE("periodic zeta theta=1/3 against partial sum") {
  double tail = 0;
  const Complex oracle = periodic_partial_sum({3, 0}, 1.0 / 3.0, 1000000, &tail);
  const Complex value = sf::periodic_zeta({3, 0}, 1.0 / 3.0);
  CHECK(std::abs(value - oracle) <= tail + 1e-12);
  CHECK(tail < 1e-12);
}

TEST_CASE("periodic zeta conjugate symmetry for real s") {
  for (const double theta : {0.1, 0.25, 0.4}) {
    for (const double s : {1.7, 2.5, 4.0}) {
      const Complex a = sf::periodic_zeta({s, 0}, theta);
      const Complex b = sf::periodic_zeta({s, 0}, 1.0 - theta);
      CHECK(std::abs(a - std::conj(b)) < 1e-10 * (1.0 + std::abs(a)));
    }
  }
}

TEST_CASE("periodic zeta domain guard") {
  CHECK_THROWS_AS((void)sf::periodic_zeta({0.9, 0}, 0.25), hecke::DomainError);
}

TEST_CASE("periodic zeta at an irrational twist") {
  // not within snapping distance of any small-denominator rational, so the
  // direct-summation path runs
  const double theta = 0.41421356237309515;  // sqrt(2) - 1
  double tail = 0;
  const Complex oracle = periodic_partial_sum({3, 0}, theta, 1000000, &tail);
  const Complex value = sf::periodic_zeta({3, 0}, theta);
  CHECK(std::abs(value - oracle) <= tail + 1e-10 * std::abs(value));
}

TEST_CASE("complex binomial basics") {
  CHECK(sf::complex_binomial({12.34, -5.2}, 0) == Complex(1, 0));
  CHECK(sf::complex_binomial({3, 0}, 2).real() == doctest::Approx(3.0));
  // (1+i choose 2) = (1+i) i / 2 = (-1+i)/2
  const Complex v = sf::complex_binomial({1, 1}, 2);
  CHECK(v.real() == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(v.imag() == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("complex binomial Pascal identity on random complex r") {
  std::mt19937 rng(20240817);
  std::uniform_real_distribution<double> dist(-4.0, 4.0);
  for (int trial = 0; trial < 50; ++trial) {
    const Complex r(dist(rng), dist(rng));
    for (int k = 1; k <= 10; ++k) {
      const Complex lhs = sf::complex_binomial(r, k);
      const Complex rhs = sf::complex_binomial(r - 1.0, k) +
                          sf::complex_binomial(r - 1.0, k - 1);
      CHECK(std::abs(lhs - rhs) <= 1e-12 * (1.0 + std::abs(lhs)));
    }
  }
}

TEST_CASE("stieltjes constants: table and stencil fit") {
  const auto& table = sf::stieltjes_constants();
  // gamma_0 to all ten printed digits
  CHECK(std::abs(table.gamma[0] - 0.5772156649) < 0.5e-10);

  const auto fit = sf::detail::fit_stieltjes_from_zeta();
  const double factorial[5] = {1, 1, 2, 6, 24};
  for (int n = 0; n < 5; ++n) {
    // the fit recovers each gamma_n / n! to 8 digits (absolute)
    CHECK(std::abs(fit.gamma[n] / factorial[n] -
                   table.gamma[n] / factorial[n]) < 1e-8);
  }
  for (int n = 0; n < 2; ++n)
    CHECK(std::abs(fit.gamma[n] - table.gamma[n]) <
          1e-8 * std::abs(table.gamma[n]));
}

TEST_CASE("stieltjes truncation order at x = 0.05") {
  const auto& table = sf::stieltjes_constants();
  const double x = 0.05;
  double series = 1.0 / x;
  double factorial = 1;
  for (int n = 0; n < 5; ++n) {
    if (n > 0) factorial *= n;
    series += ((n % 2 == 0) ? 1.0 : -1.0) * table.gamma[n] / factorial *
              std::pow(x, n);
  }
  const double exact = sf::riemann_zeta({1.0 + x, 0}).real();
  CHECK(std::abs(exact - series) <= std::pow(x, 5) * 10.0);
}
