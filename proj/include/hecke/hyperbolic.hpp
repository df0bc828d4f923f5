#pragma once

#include <cstdint>
#include <vector>

#include "hecke/errors.hpp"

namespace hecke::hyperbolic {

/// Element of PSL_2(R), stored up to overall sign with ad - bc = 1.
struct MoebiusElement {
  double a = 1, b = 0, c = 0, d = 1;

  double det() const { return a * d - b * c; }
  double trace_abs() const;  // |a + d|, well-defined modulo sign

  MoebiusElement operator*(const MoebiusElement& rhs) const;
};

/// gamma_n = S T_w^n = [[0,-1],[1,n w]].
MoebiusElement generator(std::int64_t n, double w);

/// Word (n_1,...,n_N) with nonzero letters, standing for
/// gamma_{n_1} ... gamma_{n_N} at width w.
struct GroupWord {
  std::vector<std::int64_t> letters;
  double w = 0;
};

MoebiusElement word_matrix(const GroupWord& word);

/// ell = 2 arccosh(|tr|/2); throws NotHyperbolicError when |tr| <= 2.
double displacement_length(const MoebiusElement& g);

/// All (2M)^N words of length N with letters in {-M..-1, 1..M}, each once,
/// in a fixed deterministic order.
std::vector<GroupWord> enumerate_words(int length, std::int64_t letter_bound,
                                       double w);

/// Visitor form of the enumeration, for loops too large to materialize.
/// f is called with (const GroupWord&).
template <typename F>
void for_each_word(int length, std::int64_t letter_bound, double w, F&& f) {
  GroupWord word;
  word.w = w;
  word.letters.assign(length, -letter_bound);
  for (;;) {
    f(static_cast<const GroupWord&>(word));
    int pos = length - 1;
    while (pos >= 0) {
      std::int64_t& n = word.letters[pos];
      n = (n == -1) ? 1 : n + 1;
      if (n <= letter_bound) break;
      n = -letter_bound;
      --pos;
    }
    if (pos < 0) return;
  }
}

/// Lexicographically minimal cyclic rotation (letters ordered by value).
std::vector<std::int64_t> canonical_rotation(
    const std::vector<std::int64_t>& letters);

struct ConjugacyClassRecord {
  std::vector<std::int64_t> canonical;  // minimal rotation of the letters
  double length = 0;                    // displacement length
  int word_length = 0;                  // N
  bool primitive = false;
  int multiplicity = 1;                 // m, with word = v^m for primitive v
  int representative_count = 0;         // distinct rotations seen, = N/m
};

/// Groups the words of length <= N_max (letters bounded by M) by cyclic
/// equivalence. Deterministic order: by length, then by canonical word.
std::vector<ConjugacyClassRecord> conjugacy_classes(int N_max,
                                                    std::int64_t letter_bound,
                                                    double w);

}  // namespace hecke::hyperbolic
