#include "hecke/geodesic_oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "hecke/errors.hpp"

namespace hecke::geodesic_oracle {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// e^{-s ell}/(1 - e^{-ell}) for a matrix with |trace| = t > 2
Complex trace_term(Complex s, double t) {
  if (!(t > 2.0)) throw NotHyperbolicError("operator trace: word not hyperbolic");
  const double ell = 2.0 * std::acosh(t / 2.0);
  return std::exp(-s * ell) / (1.0 - std::exp(-ell));
}

double trace_term_real(double sigma, double t) {
  const double ell = 2.0 * std::acosh(t / 2.0);
  return std::exp(-sigma * ell) / (1.0 - std::exp(-ell));
}

// 32-point Gauss-Legendre nodes/weights on (0,1), computed once by Newton
// iteration on P_32.
struct GaussLegendre {
  std::array<double, 32> node, weight;
  GaussLegendre() {
    constexpr int n = 32;
    for (int i = 0; i < n; ++i) {
      double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
      double dp = 0;
      for (int iter = 0; iter < 100; ++iter) {
        double p0 = 1, p1 = x;
        for (int k = 2; k <= n; ++k) {
          const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1);
        const double dx = p1 / dp;
        x -= dx;
        if (std::abs(dx) < 1e-15) break;
      }
      node[i] = 0.5 * (1.0 + x);
      weight[i] = 1.0 / ((1.0 - x * x) * dp * dp);  // *2 /2 for the map
    }
  }
};

const GaussLegendre& gl32() {
  static const GaussLegendre g;
  return g;
}

// crude reported bound: per-word floor contribution times slot counts
double crude_tail_bound(int N, std::int64_t M, double sigma, double w) {
  const double ell_min = 2.0 * std::acosh(double(M) * w / 2.0);
  const double per_word =
      std::exp(-sigma * ell_min) * 2.0 / (1.0 - std::exp(-ell_min));
  return double(N) * std::pow(2.0 * double(M), N - 1) * per_word;
}

struct PrefixData {
  double bc = 0;  // b - c of the prefix matrix
  double d = 1;   // lower-right entry
};

// trace of (prefix * gamma_n) is linear in the appended letter:
//   tr = (b - c) + d w n
double appended_trace(const PrefixData& p, double w, double n) {
  return p.bc + p.d * w * n;
}

}  // namespace

Complex composition_trace(const hyperbolic::GroupWord& word, Complex s,
                          Complex chi_phase) {
  const double t = hyperbolic::word_matrix(word).trace_abs();
  return chi_phase * trace_term(s, t);
}

TraceResult operator_trace(int N, std::int64_t M, Complex s, double w,
                           double theta) {
  if (!(s.real() > 0.5))
    throw DomainError("operator_trace: Re(s) must exceed 1/2");
  if (!(w > 2.0)) throw DomainError("operator_trace: w must exceed 2");

  Complex sum(0, 0);
  if (theta == 0.0) {
    hyperbolic::for_each_word(N, M, w, [&](const hyperbolic::GroupWord& word) {
      sum += trace_term(s, hyperbolic::word_matrix(word).trace_abs());
    });
  } else {
    hyperbolic::for_each_word(N, M, w, [&](const hyperbolic::GroupWord& word) {
      std::int64_t total = 0;
      for (const auto n : word.letters) total += n;
      const Complex chi = std::polar(1.0, kTwoPi * theta * double(total));
      sum += chi * trace_term(s, hyperbolic::word_matrix(word).trace_abs());
    });
  }
  return {sum, crude_tail_bound(N, M, s.real(), w)};
}

TraceResult operator_trace_completed(int N, std::int64_t M, Complex s,
                                     double w, double theta) {
  TraceResult base = operator_trace(N, M, s, w, theta);
  if (theta != 0.0 || s.imag() != 0.0) return base;
  const double sigma = s.real();

  const auto single = [&](double nu) {
    return trace_term_real(sigma, nu * w);
  };

  double completion = 0;
  if (N == 1) {
    completion = 2.0 * detail::tail_sum(single, double(M) + 1.0);
  } else {
    // one oversized slot; by cyclic invariance of the trace the N slot
    // positions contribute equally, so enumerate prefixes of length N-1
    // and close over the final letter only
    double one_slot = 0;
    hyperbolic::for_each_word(
        N - 1, M, w, [&](const hyperbolic::GroupWord& prefix_word) {
          const auto m = hyperbolic::word_matrix(prefix_word);
          const PrefixData p{m.b - m.c, m.d};
          const auto plus = [&](double nu) {
            return trace_term_real(sigma, std::abs(appended_trace(p, w, nu)));
          };
          const auto minus = [&](double nu) {
            return trace_term_real(sigma, std::abs(appended_trace(p, w, -nu)));
          };
          one_slot += detail::tail_sum(plus, double(M) + 1.0);
          one_slot += detail::tail_sum(minus, double(M) + 1.0);
        });
    completion = double(N) * one_slot;
    if (N == 2) {
      // both slots oversized: the word trace factorizes to leading order
      const double t = 2.0 * detail::tail_sum(single, double(M) + 1.0);
      completion += t * t;
    }
  }
  base.value += completion;
  // what remains unaccounted: two or more oversized slots (N >= 3)
  if (N >= 3) {
    const double ell_min = 2.0 * std::acosh(double(M) * w / 2.0);
    const double per_word =
        std::exp(-sigma * ell_min) * 2.0 / (1.0 - std::exp(-ell_min));
    base.tail_bound = 0.5 * double(N) * double(N - 1) *
                      std::pow(2.0 * double(M), N - 2) * per_word * per_word;
  } else {
    base.tail_bound = 1e-12 * std::abs(completion) + 1e-15;
  }
  return base;
}

Complex reconstruct_from_traces(std::span<const Complex> traces) {
  Complex log_sum(0, 0);
  for (std::size_t i = 0; i < traces.size(); ++i)
    log_sum += traces[i] / double(i + 1);
  return std::exp(-log_sum);
}

LogDetResult log_det_reconstruction(Complex s, double w, double theta,
                                    int N_max, std::int64_t M) {
  if (!(s.real() > 0.5))
    throw DomainError("log_det_reconstruction: Re(s) must exceed 1/2");
  if (N_max < 1) throw DomainError("log_det_reconstruction: N_max >= 1");

  constexpr double kWordBudget = 4e6;
  std::vector<Complex> traces;
  double ratio = 0;
  for (int N = 1; N <= N_max; ++N) {
    const auto cap = static_cast<std::int64_t>(
        std::floor(std::pow(kWordBudget, 1.0 / N) / 2.0));
    const std::int64_t M_N = std::min<std::int64_t>(M, std::max<std::int64_t>(3, cap));
    const TraceResult tr = operator_trace_completed(N, M_N, s, w, theta);
    traces.push_back(tr.value);
    if (N >= 2) {
      const double prev = std::abs(traces[N - 2]);
      ratio = prev > 0 ? std::abs(tr.value) / prev : 0.0;
      if (ratio >= 1.0)
        throw ConvergenceError("log_det_reconstruction: traces not decaying");
    }
  }
  LogDetResult out;
  out.value = reconstruct_from_traces(traces);
  const double last = std::abs(traces.back());
  out.remainder_estimate =
      ratio < 1.0 ? last / (double(N_max) * (1.0 - ratio)) : last;
  return out;
}

Complex euler_factor(Complex s, double ell, Complex chi_value, int K) {
  Complex prod(1, 0);
  for (int k = 0; k <= K; ++k)
    prod *= 1.0 - chi_value * std::exp(-(s + double(k)) * ell);
  return prod;
}

EulerProductResult euler_product(Complex s, double w, CharacterSpec chi,
                                 int N_max, std::int64_t M, double L_max) {
  if (!(w > 2.0)) throw DomainError("euler_product: w must exceed 2");
  const double sigma = s.real();

  const auto classes = hyperbolic::conjugacy_classes(N_max, M, w);
  Complex log_sum(0, 0);
  for (const auto& rec : classes) {
    if (!rec.primitive || rec.length > L_max) continue;
    std::int64_t total = 0;
    for (const auto n : rec.canonical) total += n;
    Complex chi_value = std::polar(1.0, kTwoPi * chi.theta * double(total));
    if (chi.s_sign < 0 && (rec.word_length % 2) != 0) chi_value = -chi_value;
    // K so that omitted k-factors move the log by < 1e-12
    const double ell = rec.length;
    int K = 0;
    while (std::exp(-(sigma + K + 1) * ell) / (1.0 - std::exp(-ell)) > 1e-12 &&
           K < 200)
      ++K;
    for (int k = 0; k <= K; ++k)
      log_sum += std::log(1.0 - chi_value * std::exp(-(s + double(k)) * ell));
  }

  // restore the single-letter classes with |n| > M (k = 0 factor; the
  // k >= 1 factors of oversized letters are below 1e-11 at desk scale)
  double restored = 0;
  if (chi.theta == 0.0 && s.imag() == 0.0 && std::isinf(L_max)) {
    const double sign = chi.s_sign < 0 ? -1.0 : 1.0;
    const auto g = [&](double nu) {
      const double ell = 2.0 * std::acosh(nu * w / 2.0);
      const double x = sign * std::exp(-sigma * ell);
      return -std::log1p(-x);  // -log(1 - sign e^{-s ell})
    };
    if (chi.s_sign > 0) {
      restored = -2.0 * detail::tail_sum(g, double(M) + 1.0);
    } else {
      const auto gneg = [&](double nu) { return -g(nu); };
      restored = 2.0 * detail::tail_sum(gneg, double(M) + 1.0);
    }
    log_sum += restored;
  }

  EulerProductResult out;
  out.value = std::exp(log_sum);
  out.truncation_report = std::abs(restored);
  return out;
}

namespace detail {

double tail_sum(const std::function<double(double)>& g, double n0) {
  double head = 0;
  constexpr int kLead = 64;
  for (int i = 0; i < kLead; ++i) head += g(n0 + i);

  const double a = n0 + kLead - 0.5;
  const double ga = g(a);
  if (!(ga > 0) || !std::isfinite(ga)) return head;  // tail underflowed

  const double g4a = g(4.0 * a);
  double p = 50.0;
  if (g4a > 0) p = std::log(ga / g4a) / std::log(4.0);
  if (!(p > 1.0001))
    throw ConvergenceError("tail_sum: summand does not decay like n^{-p}, p>1");
  if (p > 300.0) return head;  // decays too fast to matter

  const double beta = p - 1.0;
  const auto& gl = gl32();
  double integral = 0;
  for (int i = 0; i < 32; ++i) {
    const double u = gl.node[i];
    const double x = a * std::pow(u, -1.0 / beta);
    integral += gl.weight[i] * g(x) * std::pow(u, -1.0 / beta - 1.0);
  }
  integral *= a / beta;

  const double deriv = g(a + 0.5) - g(a - 0.5);  // g'(a) per unit step
  return head + integral + deriv / 24.0;
}

}  // namespace detail

}  // namespace hecke::geodesic_oracle
