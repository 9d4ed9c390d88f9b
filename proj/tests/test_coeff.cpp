#include "doctest.h"
#include "schubert/coeff.hpp"
#include "support/oracles.hpp"

using namespace schubert;

namespace {

Permutation P(std::vector<int> w) { return Permutation(std::move(w)); }

std::vector<CoveringPair> all_covers(int n) {
  std::vector<CoveringPair> out;
  for (const auto& w : oracle::all_permutations(n))
    for (const auto& cp : covered_list(w)) out.push_back(cp);
  return out;
}

}  // namespace

TEST_CASE("Gr(1,3) top pair") {
  const Permutation w = P({3, 1, 2}), wp = P({2, 1, 3});
  CHECK(removal_index(w, wp, 1, 3) == 1);
  CHECK(degree_sign(w, wp, 1, 3) == 1);
  const BoundaryCoefficient c = boundary_coefficient(w, wp);
  CHECK(c.value == -2);
  CHECK(c.removal_index == 1);
  CHECK(c.degree_sign == 1);
  CHECK(c.parity_factor == 2);
  CHECK(evaluate_word(deleted_word(w, 1), 3) == wp);
}

TEST_CASE("odd span and non-covers give zero") {
  CHECK(boundary_coefficient(P({2, 1}), P({1, 2})).value == 0);
  CHECK(boundary_coefficient(P({2, 1}), P({1, 2})).parity_factor == 0);
  CHECK(boundary_coefficient(P({3, 2, 1}), P({1, 2, 3})).value == 0);
  CHECK(boundary_coefficient(P({1, 2, 3}), P({1, 2, 3})).value == 0);
  CHECK_THROWS_AS(removal_index(P({3, 2, 1}), P({1, 2, 3}), 1, 3), DomainError);
  CHECK_THROWS_AS(degree_sign(P({3, 1, 2}), P({2, 1, 3}), 1, 2), DomainError);
  CHECK_THROWS_AS(move_counts(P({1, 2, 3}), P({1, 2, 3})), DomainError);
}

TEST_CASE("removal index deletes the right letter") {
  for (int n = 2; n <= 6; ++n)
    for (const auto& cp : all_covers(n)) {
      const LehmerCode a = code(cp.w), ap = code(cp.w_prime);
      int sum = 0;
      for (int k = 1; k <= cp.i; ++k) sum += a[k];
      const int idx = removal_index(cp.w, cp.w_prime, cp.i, cp.j);
      CHECK(idx == sum - ap[cp.i]);
      const ReducedWord del = deleted_word(cp.w, idx);
      CHECK(static_cast<int>(del.letters.size()) == cp.w_prime.length());
      CHECK(evaluate_word(del, n) == cp.w_prime);
      if (a[cp.i] == ap[cp.i] + 1) {
        int before = 0;
        for (int k = 1; k < cp.i; ++k) before += a[k];
        CHECK(idx == before + 1);
        CHECK(degree_sign(cp.w, cp.w_prime, cp.i, cp.j) == 1);
        const MoveCount mc = move_counts(cp.w, cp.w_prime);
        CHECK(mc.braids == 0);
        CHECK(mc.commutations == 0);
      }
    }
}

TEST_CASE("coefficient structure") {
  for (int n = 2; n <= 6; ++n) {
    const auto perms = oracle::all_permutations(n);
    for (const auto& cp : all_covers(n)) {
      const BoundaryCoefficient c = boundary_coefficient(cp.w, cp.w_prime);
      const int parity = (cp.j - cp.i) % 2 == 0 ? 2 : 0;
      CHECK(c.parity_factor == parity);
      const int sign = (c.removal_index % 2 ? -1 : 1) * c.degree_sign;
      CHECK(c.value == sign * parity);
      const MoveCount mc = move_counts(cp.w, cp.w_prime);
      CHECK(mc.braids >= 0);
      CHECK(mc.commutations >= 0);
      CHECK(c.degree_sign == (mc.commutations % 2 ? -1 : 1));
      const BoundaryCoefficient viacode = boundary_coefficient(code(cp.w), code(cp.w_prime), cp.i, cp.j);
      CHECK(viacode.value == c.value);
    }
    if (n <= 4)
      for (const auto& w : perms)
        for (const auto& u : perms) {
          const int v = boundary_coefficient(w, u).value;
          CHECK((v == 0 || v == 2 || v == -2));
          if (v) CHECK(w.length() == u.length() + 1);
        }
  }
}

TEST_CASE("move counts against the move graph") {
  for (int n = 3; n <= 4; ++n)
    for (const auto& cp : all_covers(n)) {
      const int idx = removal_index(cp.w, cp.w_prime, cp.i, cp.j);
      const auto res = oracle::move_search(deleted_word(cp.w, idx).letters, row_reading(cp.w_prime).letters);
      const MoveCount mc = move_counts(cp.w, cp.w_prime);
      REQUIRE(res.reachable);
      CHECK(res.parity_well_defined);
      CHECK((res.commutations - mc.commutations) % 2 == 0);
      CHECK((res.braids - mc.braids) % 2 == 0);
    }
}
