#include "schubert/snf.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <sstream>

namespace schubert {

namespace {

// Thrown by the int64 path; caught locally and retried with BigInt.
struct Overflow {};

std::int64_t c_abs(std::int64_t v) {
  if (v == INT64_MIN) throw Overflow{};
  return v < 0 ? -v : v;
}
BigInt c_abs(const BigInt& v) { return abs(v); }

std::int64_t c_div(std::int64_t a, std::int64_t b) {
  if (b == -1 && a == INT64_MIN) throw Overflow{};
  return a / b;
}
BigInt c_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// a - q*b
std::int64_t c_submul(std::int64_t a, std::int64_t q, std::int64_t b) {
  std::int64_t p, r;
  if (__builtin_mul_overflow(q, b, &p) || __builtin_sub_overflow(a, p, &r)) throw Overflow{};
  return r;
}
BigInt c_submul(const BigInt& a, const BigInt& q, const BigInt& b) { return a - q * b; }

bool nonzero(std::int64_t v) { return v != 0; }
bool nonzero(const BigInt& v) { return sgn(v) != 0; }

BigInt to_bigint(std::int64_t v) {
  BigInt b;
  mpz_set_si(b.get_mpz_t(), v);
  return b;
}
BigInt to_bigint(const BigInt& v) { return v; }

template <class T>
using SRow = std::vector<std::pair<int, T>>;

template <class T>
const T* find_entry(const SRow<T>& row, int c) {
  auto it = std::lower_bound(row.begin(), row.end(), c, [](const auto& e, int col) { return e.first < col; });
  return (it != row.end() && it->first == c) ? &it->second : nullptr;
}

// Unimodular row and column operations down to a diagonal; returns the
// nonzero diagonal entries (absolute values) in the order found.
template <class T>
std::vector<T> diagonalize(std::vector<SRow<T>> rows, int ncols) {
  const int nrows = static_cast<int>(rows.size());
  std::vector<std::vector<int>> col_rows(ncols);
  for (int r = 0; r < nrows; ++r)
    for (const auto& e : rows[r]) col_rows[e.first].push_back(r);
  std::vector<char> alive(nrows, 1);
  std::vector<T> pivots;

  // rows[r] -= q * rows[p]
  auto row_sub = [&](int r, const T& q, int p) {
    const SRow<T>& a = rows[r];
    const SRow<T>& b = rows[p];
    SRow<T> out;
    out.reserve(a.size() + b.size());
    std::size_t x = 0, y = 0;
    while (x < a.size() || y < b.size()) {
      if (y == b.size() || (x < a.size() && a[x].first < b[y].first)) {
        out.push_back(a[x++]);
      } else if (x == a.size() || b[y].first < a[x].first) {
        T v = c_submul(T(0), q, b[y].second);
        if (nonzero(v)) {
          col_rows[b[y].first].push_back(r);
          out.emplace_back(b[y].first, std::move(v));
        }
        ++y;
      } else {
        T v = c_submul(a[x].second, q, b[y].second);
        if (nonzero(v)) out.emplace_back(a[x].first, std::move(v));
        ++x;
        ++y;
      }
    }
    rows[r] = std::move(out);
  };

  while (true) {
    int pr = -1, pc = -1;
    T best{};
    std::size_t best_len = 0;
    for (int r = 0; r < nrows; ++r) {
      if (!alive[r]) continue;
      for (const auto& [c, v] : rows[r]) {
        T a = c_abs(v);
        if (pr < 0 || a < best || (a == best && rows[r].size() < best_len)) {
          pr = r;
          pc = c;
          best = a;
          best_len = rows[r].size();
        }
      }
    }
    if (pr < 0) break;
    T pv = *find_entry(rows[pr], pc);

    while (true) {
      std::vector<int> cand = col_rows[pc];
      std::sort(cand.begin(), cand.end());
      cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
      bool remainder = false;
      for (int r : cand) {
        if (r == pr || !alive[r]) continue;
        const T* e = find_entry(rows[r], pc);
        if (!e) continue;
        T q = c_div(*e, pv);
        if (nonzero(q)) row_sub(r, q, pr);
        if (find_entry(rows[r], pc)) remainder = true;
      }
      if (remainder) {
        int nr = -1;
        T nb{};
        for (int r : cand) {
          if (!alive[r]) continue;
          const T* e = find_entry(rows[r], pc);
          if (!e) continue;
          T a = c_abs(*e);
          if (nr < 0 || a < nb) {
            nr = r;
            nb = a;
          }
        }
        pr = nr;
        pv = *find_entry(rows[pr], pc);
        continue;
      }
      col_rows[pc].assign(1, pr);

      // Column operations touch only row pr because column pc is clear elsewhere.
      SRow<T> reduced;
      bool leftover = false;
      for (const auto& [c, v] : rows[pr]) {
        if (c == pc) {
          reduced.emplace_back(c, v);
          continue;
        }
        T rem = c_submul(v, c_div(v, pv), pv);
        if (nonzero(rem)) {
          reduced.emplace_back(c, std::move(rem));
          leftover = true;
        }
      }
      rows[pr] = std::move(reduced);
      if (!leftover) {
        pivots.push_back(c_abs(pv));
        alive[pr] = 0;
        break;
      }
      int nc = -1;
      T nb{};
      for (const auto& [c, v] : rows[pr]) {
        if (c == pc) continue;
        T a = c_abs(v);
        if (nc < 0 || a < nb) {
          nc = c;
          nb = a;
        }
      }
      pc = nc;
      pv = *find_entry(rows[pr], pc);
    }
  }
  return pivots;
}

SmithDecomposition normalize(std::vector<BigInt> d, int rows, int cols) {
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      BigInt g = gcd(d[i], d[j]);
      if (g == d[i]) continue;
      BigInt l = lcm(d[i], d[j]);
      d[i] = g;
      d[j] = l;
    }
  }
  SmithDecomposition out;
  out.rank = static_cast<int>(d.size());
  out.diagonal = std::move(d);
  out.diagonal.resize(std::min(rows, cols), BigInt(0));
  return out;
}

template <class T>
SmithDecomposition smith_from_rows(std::vector<SRow<T>> rows, int nrows, int ncols) {
  std::vector<BigInt> d;
  for (auto& v : diagonalize(std::move(rows), ncols)) d.push_back(to_bigint(v));
  return normalize(std::move(d), nrows, ncols);
}

template <class T>
std::vector<SRow<BigInt>> widen(const std::vector<SRow<T>>& rows) {
  std::vector<SRow<BigInt>> out(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [c, v] : rows[r]) out[r].emplace_back(c, to_bigint(v));
  return out;
}

SmithDecomposition smith_int64_rows(std::vector<SRow<std::int64_t>> rows, int nrows, int ncols) {
  try {
    return smith_from_rows(rows, nrows, ncols);
  } catch (const Overflow&) {
    return smith_from_rows(widen(rows), nrows, ncols);
  }
}

// Column-style reduction of a (column-major) with the transform tracked in v.
template <class T>
std::vector<std::vector<T>> kernel_columns(std::vector<std::vector<T>> m, int nrows) {
  const int ncols = static_cast<int>(m.size());
  std::vector<std::vector<T>> v(ncols, std::vector<T>(ncols, T(0)));
  for (int c = 0; c < ncols; ++c) v[c][c] = T(1);
  int piv = 0;
  for (int r = 0; r < nrows && piv < ncols; ++r) {
    while (true) {
      int best = -1;
      T bv{};
      for (int c = piv; c < ncols; ++c) {
        if (!nonzero(m[c][r])) continue;
        T a = c_abs(m[c][r]);
        if (best < 0 || a < bv) {
          best = c;
          bv = a;
        }
      }
      if (best < 0) break;
      std::swap(m[piv], m[best]);
      std::swap(v[piv], v[best]);
      bool clean = true;
      for (int c = piv + 1; c < ncols; ++c) {
        if (!nonzero(m[c][r])) continue;
        T q = c_div(m[c][r], m[piv][r]);
        if (nonzero(q)) {
          for (int k = r; k < nrows; ++k) m[c][k] = c_submul(m[c][k], q, m[piv][k]);
          for (int k = 0; k < ncols; ++k) v[c][k] = c_submul(v[c][k], q, v[piv][k]);
        }
        if (nonzero(m[c][r])) clean = false;
      }
      if (clean) {
        ++piv;
        break;
      }
    }
  }
  return {v.begin() + piv, v.end()};
}

}  // namespace

BigMatrix to_big(const SparseIntMatrix& m) {
  BigMatrix b(m.rows(), m.cols());
  for (int c = 0; c < m.cols(); ++c)
    for (const auto& [r, v] : m.column(c)) b(r, c) = to_bigint(v);
  return b;
}

SmithDecomposition smith_normal_form(const IntMatrix& m) {
  std::vector<SRow<std::int64_t>> rows(m.rows());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (m(r, c) != 0) rows[r].emplace_back(c, m(r, c));
  return smith_int64_rows(std::move(rows), m.rows(), m.cols());
}

SmithDecomposition smith_normal_form(const BigMatrix& m) {
  std::vector<SRow<BigInt>> rows(m.rows());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (sgn(m(r, c)) != 0) rows[r].emplace_back(c, m(r, c));
  return smith_from_rows(std::move(rows), m.rows(), m.cols());
}

SmithDecomposition smith_normal_form(const SparseIntMatrix& m) {
  std::vector<SRow<std::int64_t>> rows(m.rows());
  for (int c = 0; c < m.cols(); ++c)
    for (const auto& [r, v] : m.column(c)) rows[r].emplace_back(c, v);
  return smith_int64_rows(std::move(rows), m.rows(), m.cols());
}

std::string HomologyGroup::str() const {
  std::vector<std::string> parts;
  if (betti == 1)
    parts.push_back("Z");
  else if (betti > 1)
    parts.push_back("Z^" + std::to_string(betti));
  std::map<BigInt, int> counts;
  for (const auto& f : torsion_factors) ++counts[f];
  for (const auto& [f, k] : counts) {
    std::string s = "Z" + f.get_str();
    if (k > 1) s += "^" + std::to_string(k);
    parts.push_back(s);
  }
  if (parts.empty()) return "0";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
  return out;
}

std::vector<HomologyGroup> homology(const ChainComplex& cx) {
  if (!verify_dd_zero(cx)) throw IntegrityError("boundary of a boundary is nonzero for Theta=" + cx.theta().str());
  const int dim = cx.dimension();
  std::vector<SmithDecomposition> snf(dim + 2);
  for (int d = 1; d <= dim; ++d) snf[d] = smith_normal_form(cx.boundary(d));
  std::vector<HomologyGroup> out;
  for (int d = 0; d <= dim; ++d) {
    HomologyGroup g;
    g.degree = d;
    g.betti = static_cast<std::int64_t>(cx.cells(d).size()) - snf[d].rank - snf[d + 1].rank;
    for (const auto& f : snf[d + 1].diagonal)
      if (f > 1) g.torsion_factors.push_back(f);
    out.push_back(std::move(g));
  }
  return out;
}

BigMatrix kernel_basis(const BigMatrix& a) {
  const int nrows = a.rows(), ncols = a.cols();
  std::vector<std::vector<std::int64_t>> small(ncols, std::vector<std::int64_t>(nrows));
  bool fits = true;
  for (int c = 0; c < ncols && fits; ++c)
    for (int r = 0; r < nrows && fits; ++r) {
      if (!a(r, c).fits_slong_p()) fits = false;
      else small[c][r] = a(r, c).get_si();
    }
  std::vector<std::vector<BigInt>> basis;
  bool done = false;
  if (fits) {
    try {
      for (auto& col : kernel_columns(std::move(small), nrows)) {
        std::vector<BigInt> b;
        for (auto x : col) b.push_back(to_bigint(x));
        basis.push_back(std::move(b));
      }
      done = true;
    } catch (const Overflow&) {
      basis.clear();
    }
  }
  if (!done) {
    std::vector<std::vector<BigInt>> big(ncols, std::vector<BigInt>(nrows));
    for (int c = 0; c < ncols; ++c)
      for (int r = 0; r < nrows; ++r) big[c][r] = a(r, c);
    basis = kernel_columns(std::move(big), nrows);
  }
  BigMatrix out(ncols, static_cast<int>(basis.size()));
  for (std::size_t k = 0; k < basis.size(); ++k)
    for (int r = 0; r < ncols; ++r) out(r, static_cast<int>(k)) = basis[k][r];
  return out;
}

BigMatrix hconcat(const BigMatrix& a, const BigMatrix& b) {
  if (a.rows() != b.rows()) throw DomainError("row counts differ in hconcat");
  BigMatrix out(a.rows(), a.cols() + b.cols());
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
    for (int c = 0; c < b.cols(); ++c) out(r, a.cols() + c) = b(r, c);
  }
  return out;
}

namespace {

BigInt nonzero_product(const SmithDecomposition& s) {
  BigInt p = 1;
  for (const auto& d : s.diagonal)
    if (sgn(d) != 0) p *= d;
  return p;
}

bool saturated(const SmithDecomposition& s) {
  return std::all_of(s.diagonal.begin(), s.diagonal.end(), [](const BigInt& d) { return sgn(d) == 0 || d == 1; });
}

BigMatrix columns_of(const std::vector<Chain>& chains, const ChainComplex& cx, int degree) {
  BigMatrix m(static_cast<int>(cx.cells(degree).size()), static_cast<int>(chains.size()));
  for (std::size_t k = 0; k < chains.size(); ++k) {
    Chain c = chains[k];
    c.degree = degree;
    auto v = chain_vector(c, cx);
    for (std::size_t r = 0; r < v.size(); ++r) m(static_cast<int>(r), static_cast<int>(k)) = to_bigint(v[r]);
  }
  return m;
}

BigMatrix identity_matrix(int n) {
  BigMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

BigMatrix product(const BigMatrix& a, const BigMatrix& b) {
  BigMatrix out(a.rows(), b.cols());
  for (int r = 0; r < a.rows(); ++r)
    for (int k = 0; k < a.cols(); ++k) {
      if (sgn(a(r, k)) == 0) continue;
      for (int c = 0; c < b.cols(); ++c) out(r, c) += a(r, k) * b(k, c);
    }
  return out;
}

}  // namespace

bool in_lattice(const BigMatrix& gens, const std::vector<BigInt>& v) {
  if (static_cast<int>(v.size()) != gens.rows()) throw DomainError("vector length differs from lattice ambient rank");
  BigMatrix col(gens.rows(), 1);
  for (int r = 0; r < gens.rows(); ++r) col(r, 0) = v[r];
  const SmithDecomposition base = smith_normal_form(gens);
  const SmithDecomposition ext = smith_normal_form(hconcat(gens, col));
  return base.rank == ext.rank && nonzero_product(base) == nonzero_product(ext);
}

ClassReport analyze_classes(const ChainComplex& cx, int degree, const std::vector<Chain>& free_candidates,
                            const std::vector<Chain>& torsion_candidates) {
  ClassReport rep;
  const int ncells = static_cast<int>(cx.cells(degree).size());
  for (const auto* set : {&free_candidates, &torsion_candidates})
    for (const auto& c : *set) {
      Chain cc = c;
      cc.degree = degree;
      if (degree >= 1 && degree <= cx.dimension() && !boundary_of(cc, cx).is_zero()) rep.all_cycles = false;
    }

  const BigMatrix b = (degree + 1 <= cx.dimension()) ? to_big(cx.boundary(degree + 1)) : BigMatrix(ncells, 0);
  const int rank_out = (degree >= 1 && degree <= cx.dimension()) ? smith_normal_form(cx.boundary(degree)).rank : 0;
  const SmithDecomposition sb = smith_normal_form(b);
  const int betti = ncells - rank_out - sb.rank;

  const BigMatrix f = columns_of(free_candidates, cx, degree);
  const BigMatrix t = columns_of(torsion_candidates, cx, degree);
  rep.free_rank = smith_normal_form(hconcat(b, f)).rank - sb.rank;

  // Rows of y span the integer left kernel of b, so y maps the cycles onto a
  // copy of H_d / torsion. The candidates generate it iff y f and y z span the
  // same lattice, z being a basis of the cycles.
  if (static_cast<int>(free_candidates.size()) == betti) {
    if (betti == 0) {
      rep.generates_free_part = true;
    } else {
      const BigMatrix y = kernel_basis(b.transpose()).transpose();
      const BigMatrix z = (degree >= 1 && degree <= cx.dimension()) ? kernel_basis(to_big(cx.boundary(degree)))
                                                                    : identity_matrix(ncells);
      const SmithDecomposition sf = smith_normal_form(product(y, f));
      const SmithDecomposition sz = smith_normal_form(product(y, z));
      rep.generates_free_part =
          rep.all_cycles && sf.rank == betti && sz.rank == betti && nonzero_product(sf) == nonzero_product(sz);
    }
  }

  // Torsion candidates are read modulo the free candidates: a class of order
  // two in H_d / <free classes>.
  const BigMatrix bf = hconcat(b, f);
  for (int k = 0; k < t.cols(); ++k) {
    std::vector<BigInt> v(ncells), v2(ncells);
    for (int r = 0; r < ncells; ++r) {
      v[r] = t(r, k);
      v2[r] = 2 * t(r, k);
    }
    if (in_lattice(bf, v) || !in_lattice(bf, v2)) rep.torsion_of_order_two = false;
  }

  const SmithDecomposition all = smith_normal_form(hconcat(hconcat(b, f), t));
  rep.generates_homology = rep.all_cycles && all.rank == ncells - rank_out && saturated(all);
  return rep;
}

}  // namespace schubert
