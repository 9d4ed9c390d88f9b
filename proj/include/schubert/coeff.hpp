#pragma once

#include <cstdint>

#include "schubert/bruhat.hpp"
#include "schubert/perm.hpp"

namespace schubert {

struct BoundaryCoefficient {
  int value = 0;           // (-1)^I * degree_sign * parity_factor
  int removal_index = 0;   // 0 when w does not cover w'
  int degree_sign = 1;
  int parity_factor = 0;   // 1 + (-1)^(j-i)
};

struct MoveCount {
  std::int64_t braids = 0;
  std::int64_t commutations = 0;
};

// I = alpha_1 + ... + alpha_i - alpha'_i. Throws DomainError unless w covers w' via (i, j).
int removal_index(const Permutation& w, const Permutation& w_prime, int i, int j);
// (-1)^((alpha_i - alpha'_i - 1) * (alpha'_i + ... + alpha'_{j-1})).
int degree_sign(const Permutation& w, const Permutation& w_prime, int i, int j);

BoundaryCoefficient boundary_coefficient(const Permutation& w, const Permutation& w_prime);
// Same result when the covering transposition and both codes are already known.
BoundaryCoefficient boundary_coefficient(const LehmerCode& a, const LehmerCode& a_prime, int i, int j);

MoveCount move_counts(const Permutation& w, const Permutation& w_prime);

// Row-reading of w with its I-th letter (1-based) removed.
ReducedWord deleted_word(const Permutation& w, int index);

}  // namespace schubert
