#include "schubert/bruhat.hpp"

#include <cassert>

namespace schubert {

namespace {

void check_indices(int n, int i, int j) {
  if (i < 1 || j <= i || j > n + 1)
    throw DomainError("M_{" + std::to_string(i) + "," + std::to_string(j) + "} outside 1 <= i < j <= n+1");
}

bool conditions_hold(const LehmerCode& a, const LehmerCode& ap, int i, int j) {
  const int n = a.n();
  if (!(ap[i] <= a[i] - 1)) return false;
  if (ap[j] != a[j] + a[i] - ap[i] - 1) return false;
  for (int k = 1; k < n; ++k)
    if (k != i && k != j && ap[k] != a[k]) return false;
  const int target = ap[i] - a[j];
  return ext_matrix_rec(a, i, j) == target && ext_matrix_rec(ap, i, j) == target;
}

}  // namespace

int ext_matrix(const Permutation& w, int i, int j) {
  const int n = w.size();
  check_indices(n, i, j);
  int m = 0;
  for (int k = i + 1; k < j && k <= n; ++k)
    if (w(k) < w(i)) ++m;
  return m;
}

int ext_matrix_rec(const LehmerCode& c, int i, int j) {
  check_indices(c.n(), i, j);
  int m = 0;
  for (int jj = i + 2; jj <= j; ++jj)
    if (c[jj - 1] < c[i] - m) ++m;
  return m;
}

std::optional<Transposition> covering_transposition(const Permutation& w, const Permutation& w_prime) {
  const int n = w.size();
  if (w_prime.size() != n) return std::nullopt;
  int i = 0, j = 0, diff = 0;
  for (int p = 1; p <= n; ++p) {
    if (w(p) != w_prime(p)) {
      if (++diff > 2) return std::nullopt;
      (i ? j : i) = p;
    }
  }
  if (diff != 2) return std::nullopt;
  if (!(w_prime(i) < w_prime(j))) return std::nullopt;
  for (int k = i + 1; k < j; ++k)
    if (w_prime(i) < w_prime(k) && w_prime(k) < w_prime(j)) return std::nullopt;
  return Transposition{i, j};
}

std::optional<Transposition> covering_by_code(const LehmerCode& a, const LehmerCode& a_prime) {
  const int n = a.n();
  if (a_prime.n() != n) return std::nullopt;
  std::vector<int> diff;
  for (int k = 1; k < n; ++k)
    if (a[k] != a_prime[k]) diff.push_back(k);
  if (diff.empty() || diff.size() > 2) return std::nullopt;
  const int i = diff[0];
  std::optional<Transposition> found;
  const int lo = diff.size() == 2 ? diff[1] : i + 1;
  const int hi = diff.size() == 2 ? diff[1] : n;
  for (int j = lo; j <= hi; ++j) {
    if (conditions_hold(a, a_prime, i, j)) {
#ifdef NDEBUG
      return Transposition{i, j};
#else
      assert(!found && "covering transposition must be unique");
      found = Transposition{i, j};
#endif
    }
  }
  return found;
}

std::vector<CoveringPair> covered_list(const Permutation& w) {
  const int n = w.size();
  std::vector<CoveringPair> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (w(i) < w(j)) continue;
      bool blocked = false;
      for (int k = i + 1; k < j && !blocked; ++k) blocked = w(j) < w(k) && w(k) < w(i);
      if (blocked) continue;
      std::vector<int> wp = w.word();
      std::swap(wp[i - 1], wp[j - 1]);
      out.push_back({w, Permutation(std::move(wp)), i, j});
    }
  }
  return out;
}

}  // namespace schubert
