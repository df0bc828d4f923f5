#include "hecke/hyperbolic.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace hecke::hyperbolic {

namespace {

constexpr double kEntryLimit = 1e300;

void check_range(const MoebiusElement& g) {
  if (std::abs(g.a) > kEntryLimit || std::abs(g.b) > kEntryLimit ||
      std::abs(g.c) > kEntryLimit || std::abs(g.d) > kEntryLimit)
    throw OverflowError("moebius composition: entry exceeded 1e300");
}

}  // namespace

double MoebiusElement::trace_abs() const { return std::abs(a + d); }

MoebiusElement MoebiusElement::operator*(const MoebiusElement& rhs) const {
  MoebiusElement out{a * rhs.a + b * rhs.c, a * rhs.b + b * rhs.d,
                     c * rhs.a + d * rhs.c, c * rhs.b + d * rhs.d};
  check_range(out);
  return out;
}

MoebiusElement generator(std::int64_t n, double w) {
  return MoebiusElement{0.0, -1.0, 1.0, double(n) * w};
}

MoebiusElement word_matrix(const GroupWord& word) {
  if (word.letters.empty())
    throw DomainError("word_matrix: word must be nonempty");
  MoebiusElement g = generator(word.letters.front(), word.w);
  for (std::size_t i = 1; i < word.letters.size(); ++i) {
    if (word.letters[i] == 0)
      throw DomainError("word_matrix: zero letter");
    g = g * generator(word.letters[i], word.w);
  }
  if (word.letters.front() == 0) throw DomainError("word_matrix: zero letter");
  return g;
}

double displacement_length(const MoebiusElement& g) {
  const double t = g.trace_abs();
  if (!(t > 2.0))
    throw NotHyperbolicError("displacement_length: |tr| must exceed 2");
  return 2.0 * std::acosh(t / 2.0);
}

std::vector<GroupWord> enumerate_words(int length, std::int64_t letter_bound,
                                       double w) {
  std::vector<GroupWord> out;
  for_each_word(length, letter_bound, w,
                [&](const GroupWord& word) { out.push_back(word); });
  return out;
}

std::vector<std::int64_t> canonical_rotation(
    const std::vector<std::int64_t>& letters) {
  const std::size_t n = letters.size();
  std::vector<std::int64_t> best = letters;
  std::vector<std::int64_t> rot = letters;
  for (std::size_t r = 1; r < n; ++r) {
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    if (rot < best) best = rot;
  }
  return best;
}

std::vector<ConjugacyClassRecord> conjugacy_classes(int N_max,
                                                    std::int64_t letter_bound,
                                                    double w) {
  if (!(w > 2.0)) throw DomainError("conjugacy_classes: w must exceed 2");
  std::vector<ConjugacyClassRecord> out;
  for (int length = 1; length <= N_max; ++length) {
    std::map<std::vector<std::int64_t>, int> seen;  // canonical -> count
    for_each_word(length, letter_bound, w, [&](const GroupWord& word) {
      ++seen[canonical_rotation(word.letters)];
    });
    for (const auto& [canonical, count] : seen) {
      ConjugacyClassRecord rec;
      rec.canonical = canonical;
      rec.word_length = length;
      rec.representative_count = count;
      // minimal period p with rotate-by-p invariance; divides the length
      int period = length;
      for (int p = 1; p < length; ++p) {
        if (length % p != 0) continue;
        bool invariant = true;
        for (int i = 0; i < length && invariant; ++i)
          invariant = canonical[i] == canonical[(i + p) % length];
        if (invariant) {
          period = p;
          break;
        }
      }
      rec.multiplicity = length / period;
      rec.primitive = rec.multiplicity == 1;
      rec.length = displacement_length(word_matrix({canonical, w}));
      out.push_back(std::move(rec));
    }
  }
  return out;
}

}  // namespace hecke::hyperbolic
