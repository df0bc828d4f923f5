#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <vector>

#include "hecke/hyperbolic.hpp"
#include "hecke/types.hpp"

namespace hecke::geodesic_oracle {

/// One-dimensional characters of the family used here:
///   chi(word) = s_sign^{#letters} * e^{2 pi i theta sum(n_i)}.
/// s_sign = -1 twists by the sign of the involution generator.
struct CharacterSpec {
  int s_sign = +1;
  double theta = 0.0;
};

/// chi_phase * e^{-s ell} / (1 - e^{-ell}) for the word's matrix.
Complex composition_trace(const hyperbolic::GroupWord& word, Complex s,
                          Complex chi_phase);

struct TraceResult {
  Complex value;
  double tail_bound = 0;  // crude bound for the omitted |n_i| > M words
};

/// Sum of composition_trace over all words of length N with letters
/// |n_i| <= M, with chi(word) = e^{2 pi i theta sum(n_i)}. The value is the
/// truncated sum; tail_bound is the reported (not added) truncation bound.
TraceResult operator_trace(int N, std::int64_t M, Complex s, double w,
                           double theta);

/// Same sum with the omitted-letter contribution restored by smooth tail
/// summation (one oversized slot per word; both-oversized product term at
/// N = 2). Only available for real s and theta = 0; other parameters fall
/// back to the plain truncated sum.
TraceResult operator_trace_completed(int N, std::int64_t M, Complex s,
                                     double w, double theta);

/// exp(-sum_N traces[N-1]/(N)) -- the determinant from traces of powers.
Complex reconstruct_from_traces(std::span<const Complex> traces);

struct LogDetResult {
  Complex value;
  double remainder_estimate = 0;  // crude estimate for the omitted N > N_max
};

/// det(1 - L) rebuilt from operator traces of orders 1..N_max. The letter
/// bound for order N is min(M, budget^{1/N}) so deep orders stay tractable;
/// the tail completion makes up the difference.
LogDetResult log_det_reconstruction(Complex s, double w, double theta,
                                    int N_max, std::int64_t M);

/// Inner k-product over one conjugacy class:
///   prod_{k=0..K} (1 - chi_value e^{-(s+k) ell}).
Complex euler_factor(Complex s, double ell, Complex chi_value, int K);

struct EulerProductResult {
  Complex value;
  double truncation_report = 0;  // size of the restored single-letter tail
};

/// Truncated Euler product over primitive classes built from words of
/// length <= N_max with letters bounded by M, keeping classes with
/// ell <= L_max. K per class is chosen so omitted k-factors perturb the
/// log by < 1e-12.
EulerProductResult euler_product(
    Complex s, double w, CharacterSpec chi, int N_max, std::int64_t M,
    double L_max = std::numeric_limits<double>::infinity());

namespace detail {

/// sum_{n = n0, n0+1, ...} g(n) for smooth positive g decaying like a power
/// n^{-p}, p > 1: explicit head, then midpoint Euler-Maclaurin with a
/// power-law substitution for the integral.
double tail_sum(const std::function<double(double)>& g, double n0);

}  // namespace detail

}  // namespace hecke::geodesic_oracle
