#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "schubert/perm.hpp"

namespace schubert {

// w covers w_prime; w is w_prime with positions i < j swapped.
struct CoveringPair {
  Permutation w;
  Permutation w_prime;
  int i = 0;
  int j = 0;
};

using Transposition = std::pair<int, int>;

// #{k : i < k < j, w(k) < w(i)} for 1 <= i < j <= n+1.
int ext_matrix(const Permutation& w, int i, int j);
// Same quantity from the code alone, by the recursion on j.
int ext_matrix_rec(const LehmerCode& c, int i, int j);

std::optional<Transposition> covering_transposition(const Permutation& w, const Permutation& w_prime);
std::optional<Transposition> covering_by_code(const LehmerCode& a, const LehmerCode& a_prime);

// Ordered by (i, j).
std::vector<CoveringPair> covered_list(const Permutation& w);

}  // namespace schubert
