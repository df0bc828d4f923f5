#pragma once

#include <vector>

#include "hecke/types.hpp"

namespace hecke::transfer {

/// k x k matrix of the truncated transfer operator in the monomial basis;
/// row index = output Taylor degree, column index = input Taylor degree.
struct TransferMatrix {
  int k = 0;
  Complex s;
  double w = 0;
  double theta = 0;
  std::vector<Complex> entries;  // row-major, k*k

  Complex& at(int i, int j) { return entries[std::size_t(i) * k + j]; }
  const Complex& at(int i, int j) const {
    return entries[std::size_t(i) * k + j];
  }
};

/// Matrix entry
///   [ (-1)^{i+j} Li_{2s+i+j}(e^{2 pi i theta}) + Li_{2s+i+j}(e^{-2 pi i theta}) ]
///     * w^{-(2s+i+j)} * binom(2s+i+j-1, i),
/// which at theta = 0 reduces to ((-1)^{i+j}+1) zeta(2s+i+j) w^{-(2s+i+j)}
/// binom(2s+i+j-1, i). Entries with i+j odd vanish identically at theta = 0.
Complex entry(int i, int j, Complex s, double w, double theta);

TransferMatrix build_matrix(int k, Complex s, double w, double theta);

struct DeterminantValue {
  Complex value;
  int k = 0;
  Complex s;
  double w = 0;
  double theta = 0;
  int sign = +1;
};

/// det(1 - sign*A) by dense LU with partial pivoting, in complex arithmetic.
DeterminantValue determinant(const TransferMatrix& m, int sign);

}  // namespace hecke::transfer
