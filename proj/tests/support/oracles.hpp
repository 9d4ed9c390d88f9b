#pragma once

// Brute-force reference implementations. None of these call into the
// library's combinatorics beyond the Permutation value type.

#include <cstdint>
#include <utility>
#include <vector>

#include "schubert/perm.hpp"

namespace oracle {

using schubert::Permutation;

std::vector<Permutation> all_permutations(int n);
int inversions(const Permutation& w);
std::vector<int> inversion_code(const Permutation& w);
// Number of permutations of S_n with each length.
std::vector<std::int64_t> mahonian(int n);
bool descents_within(const Permutation& w, const std::vector<int>& k_set);

// Tableau criterion for u <= w in Bruhat order.
bool bruhat_leq(const Permutation& u, const Permutation& w);
// Count of pairs u < w with l(w) = l(u) + 1.
std::int64_t bruhat_cover_count(int n);

// Invariant factors through gcds of k x k minors (small matrices only).
std::vector<std::int64_t> determinantal_factors(const std::vector<std::vector<std::int64_t>>& m);

// Rank over the prime field F_p.
int rank_mod_p(std::vector<std::vector<std::int64_t>> m, std::int64_t p);

struct MoveSearch {
  bool reachable = false;
  int commutations = 0;  // along one shortest path
  int braids = 0;
  // Every path between the two words has the same commutation parity and the
  // same braid parity.
  bool parity_well_defined = true;
  std::size_t words = 0;  // size of the explored component
};

// Breadth-first search over reduced words joined by one commutation or one braid move.
MoveSearch move_search(const std::vector<int>& from, const std::vector<int>& to);

}  // namespace oracle
