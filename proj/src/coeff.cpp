#include "schubert/coeff.hpp"

namespace schubert {

namespace {

Transposition require_cover(const Permutation& w, const Permutation& w_prime) {
  auto t = covering_transposition(w, w_prime);
  if (!t) throw DomainError(w.str() + " does not cover " + w_prime.str());
  return *t;
}

void require_cover(const Permutation& w, const Permutation& w_prime, int i, int j) {
  auto t = require_cover(w, w_prime);
  if (t.first != i || t.second != j)
    throw DomainError("cover of " + w_prime.str() + " by " + w.str() + " is not via (" + std::to_string(i) + "," +
                      std::to_string(j) + ")");
}

int index_from_codes(const LehmerCode& a, const LehmerCode& ap, int i) {
  int s = 0;
  for (int k = 1; k <= i; ++k) s += a[k];
  return s - ap[i];
}

int sign_from_codes(const LehmerCode& a, const LehmerCode& ap, int i, int j) {
  std::int64_t s = 0;
  for (int l = i; l <= j - 1; ++l) s += ap[l];
  const std::int64_t e = static_cast<std::int64_t>(a[i] - ap[i] - 1) * s;
  return (e % 2 == 0) ? 1 : -1;
}

}  // namespace

int removal_index(const Permutation& w, const Permutation& w_prime, int i, int j) {
  require_cover(w, w_prime, i, j);
  return index_from_codes(code(w), code(w_prime), i);
}

int degree_sign(const Permutation& w, const Permutation& w_prime, int i, int j) {
  require_cover(w, w_prime, i, j);
  return sign_from_codes(code(w), code(w_prime), i, j);
}

BoundaryCoefficient boundary_coefficient(const LehmerCode& a, const LehmerCode& a_prime, int i, int j) {
  BoundaryCoefficient c;
  c.removal_index = index_from_codes(a, a_prime, i);
  c.degree_sign = sign_from_codes(a, a_prime, i, j);
  c.parity_factor = (j - i) % 2 == 0 ? 2 : 0;
  c.value = (c.removal_index % 2 == 0 ? 1 : -1) * c.degree_sign * c.parity_factor;
  return c;
}

BoundaryCoefficient boundary_coefficient(const Permutation& w, const Permutation& w_prime) {
  auto t = covering_transposition(w, w_prime);
  if (!t) return {};
  return boundary_coefficient(code(w), code(w_prime), t->first, t->second);
}

MoveCount move_counts(const Permutation& w, const Permutation& w_prime) {
  const auto [i, j] = require_cover(w, w_prime);
  const LehmerCode a = code(w), ap = code(w_prime);
  const std::int64_t excess = a[i] - ap[i] - 1;
  const std::int64_t span = j - i - 1 + a[j] - ap[i];
  std::int64_t s = 0;
  for (int k = i; k <= j - 1; ++k) s += ap[k];
  return {excess * span, excess * (s - 2 * span)};
}

ReducedWord deleted_word(const Permutation& w, int index) {
  ReducedWord r = row_reading(w);
  if (index < 1 || index > static_cast<int>(r.letters.size())) throw DomainError("letter index out of range");
  r.letters.erase(r.letters.begin() + (index - 1));
  return r;
}

}  // namespace schubert
