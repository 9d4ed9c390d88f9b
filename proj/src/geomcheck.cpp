#include "schubert/geomcheck.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "schubert/errors.hpp"

namespace schubert {

RealMatrix RealMatrix::identity(int n) {
  RealMatrix m(n);
  for (int k = 0; k < n; ++k) m(k, k) = 1.0;
  return m;
}

RealMatrix RealMatrix::transpose() const {
  RealMatrix t(n_);
  for (int r = 0; r < n_; ++r)
    for (int c = 0; c < n_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

double RealMatrix::determinant() const {
  RealMatrix m = *this;
  double det = 1.0;
  for (int c = 0; c < n_; ++c) {
    int p = c;
    for (int r = c + 1; r < n_; ++r)
      if (std::abs(m(r, c)) > std::abs(m(p, c))) p = r;
    if (m(p, c) == 0.0) return 0.0;
    if (p != c) {
      for (int k = 0; k < n_; ++k) std::swap(m(p, k), m(c, k));
      det = -det;
    }
    det *= m(c, c);
    for (int r = c + 1; r < n_; ++r) {
      const double f = m(r, c) / m(c, c);
      for (int k = c; k < n_; ++k) m(r, k) -= f * m(c, k);
    }
  }
  return det;
}

RealMatrix operator*(const RealMatrix& x, const RealMatrix& y) {
  const int n = x.size();
  RealMatrix z(n);
  for (int r = 0; r < n; ++r)
    for (int k = 0; k < n; ++k) {
      const double v = x(r, k);
      if (v == 0.0) continue;
      for (int c = 0; c < n; ++c) z(r, c) += v * y(k, c);
    }
  return z;
}

double max_deviation(const RealMatrix& x, const RealMatrix& y) {
  double m = 0.0;
  for (std::size_t k = 0; k < x.a_.size(); ++k) m = std::max(m, std::abs(x.a_[k] - y.a_[k]));
  return m;
}

RealMatrix rot(int n, int i, double t) {
  if (i < 1 || i > n - 1) throw DomainError("rotation index outside [1,n-1]");
  RealMatrix m = RealMatrix::identity(n);
  const double c = std::cos(t), s = std::sin(t);
  m(i - 1, i - 1) = c;
  m(i - 1, i) = s;
  m(i, i - 1) = -s;
  m(i, i) = c;
  return m;
}

double BraidIdentityReport::max() const { return std::max({slide_out, slide_in, sandwich_mid, sandwich_next, diagonal}); }

BraidIdentityReport check_braid_identities(int n, int i, int samples) {
  if (i < 1 || i > n - 2) throw DomainError("braid identities need 1 <= i <= n-2");
  if (samples < 1) throw DomainError("need at least one sample");
  const double p = std::numbers::pi / 2;
  const RealMatrix pa = rot(n, i, p), pb = rot(n, i + 1, p);
  const int a = i - 1;  // 0-based start of the 3x3 block
  BraidIdentityReport rep;
  for (int k = 1; k <= samples; ++k) {
    const double t = k * std::numbers::pi / (samples + 1);
    const double c = std::cos(t), s = std::sin(t);
    const RealMatrix ta = rot(n, i, t), tb = rot(n, i + 1, t);

    rep.slide_out = std::max(rep.slide_out, max_deviation(ta * pb * pa, pb * pa * tb));
    rep.slide_in = std::max(rep.slide_in, max_deviation(pa * pb * ta, tb * pa * pb));

    const RealMatrix lhs_mid = pa * tb * pa;
    RealMatrix rhs_mid = RealMatrix::identity(n);
    rhs_mid(a, a) = -c;
    rhs_mid(a, a + 1) = 0;
    rhs_mid(a, a + 2) = s;
    rhs_mid(a + 1, a) = 0;
    rhs_mid(a + 1, a + 1) = -1;
    rhs_mid(a + 1, a + 2) = 0;
    rhs_mid(a + 2, a) = s;
    rhs_mid(a + 2, a + 1) = 0;
    rhs_mid(a + 2, a + 2) = c;
    rep.sandwich_mid = std::max(rep.sandwich_mid, max_deviation(lhs_mid, rhs_mid));

    const RealMatrix lhs_next = pb * rot(n, i, -t) * pb;
    RealMatrix rhs_next = RealMatrix::identity(n);
    rhs_next(a, a) = c;
    rhs_next(a, a + 1) = 0;
    rhs_next(a, a + 2) = -s;
    rhs_next(a + 1, a) = 0;
    rhs_next(a + 1, a + 1) = -1;
    rhs_next(a + 1, a + 2) = 0;
    rhs_next(a + 2, a) = -s;
    rhs_next(a + 2, a + 1) = 0;
    rhs_next(a + 2, a + 2) = -c;
    rep.sandwich_next = std::max(rep.sandwich_next, max_deviation(lhs_next, rhs_next));

    // Products of rotations are orthogonal, so the inverse is the transpose.
    RealMatrix diag = RealMatrix::identity(n);
    diag(a, a) = -1;
    diag(a + 2, a + 2) = -1;
    rep.diagonal = std::max(rep.diagonal, max_deviation(lhs_next.transpose() * lhs_mid, diag));
  }
  return rep;
}

double check_commutation(int n, int samples) {
  double worst = 0.0;
  for (int i = 1; i <= n - 1; ++i)
    for (int j = 1; j <= n - 1; ++j) {
      if (std::abs(i - j) < 2) continue;
      for (int a = 1; a <= samples; ++a)
        for (int b = 1; b <= samples; ++b) {
          const double t = a * std::numbers::pi / (samples + 1), s = b * std::numbers::pi / (samples + 1);
          const RealMatrix x = rot(n, i, t), y = rot(n, j, s);
          worst = std::max(worst, max_deviation(x * y, y * x));
        }
    }
  return worst;
}

int signed_permutation_determinant(const std::vector<int>& source, const std::vector<int>& sign) {
  const int n = static_cast<int>(source.size());
  if (static_cast<int>(sign.size()) != n) throw DomainError("source and sign lengths differ");
  std::vector<bool> seen(n, false);
  int det = 1;
  for (int k = 0; k < n; ++k) {
    if (source[k] < 0 || source[k] >= n || seen[source[k]]) throw DomainError("source is not a permutation");
    seen[source[k]] = true;
    if (sign[k] != 1 && sign[k] != -1) throw DomainError("signs must be +1 or -1");
    det *= sign[k];
  }
  // Parity from the cycle decomposition.
  std::vector<bool> visited(n, false);
  for (int k = 0; k < n; ++k) {
    if (visited[k]) continue;
    int len = 0;
    for (int x = k; !visited[x]; x = source[x]) {
      visited[x] = true;
      ++len;
    }
    if (len % 2 == 0) det = -det;
  }
  return det;
}

int commutation_map_determinant(int ell, int k) {
  if (k < 1 || k + 1 > ell) throw DomainError("commutation position outside the word");
  std::vector<int> src(ell), sign(ell, 1);
  for (int x = 0; x < ell; ++x) src[x] = x;
  std::swap(src[k - 1], src[k]);
  return signed_permutation_determinant(src, sign);
}

int braid_map_determinant(int ell, int k) {
  if (k < 1 || k + 2 > ell) throw DomainError("braid position outside the word");
  std::vector<int> src(ell), sign(ell, 1);
  for (int x = 0; x < ell; ++x) src[x] = x;
  src[k - 1] = k + 1;
  src[k + 1] = k - 1;
  sign[k] = -1;
  return signed_permutation_determinant(src, sign);
}

}  // namespace schubert
