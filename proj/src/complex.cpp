#include "schubert/complex.hpp"

#include <algorithm>
#include <sstream>

#include "schubert/bruhat.hpp"
#include "schubert/coeff.hpp"

namespace schubert {

std::int64_t SparseIntMatrix::at(int r, int c) const {
  const auto& col = columns_[c];
  auto it = std::lower_bound(col.begin(), col.end(), Entry{r, 0},
                             [](const Entry& a, const Entry& b) { return a.first < b.first; });
  return (it != col.end() && it->first == r) ? it->second : 0;
}

std::size_t SparseIntMatrix::nonzeros() const {
  std::size_t s = 0;
  for (const auto& c : columns_) s += c.size();
  return s;
}

void SparseIntMatrix::add(int r, int c, std::int64_t v) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw DomainError("matrix index out of range");
  if (v == 0) return;
  auto& col = columns_[c];
  auto it = std::lower_bound(col.begin(), col.end(), Entry{r, 0},
                             [](const Entry& a, const Entry& b) { return a.first < b.first; });
  if (it != col.end() && it->first == r) {
    it->second += v;
    if (it->second == 0) col.erase(it);
  } else {
    col.insert(it, {r, v});
  }
}

SparseIntMatrix SparseIntMatrix::multiply(const SparseIntMatrix& other) const {
  if (cols_ != other.rows_) throw DomainError("matrix shapes do not compose");
  SparseIntMatrix out(rows_, other.cols_);
  std::map<int, std::int64_t> acc;
  for (int c = 0; c < other.cols_; ++c) {
    acc.clear();
    for (const auto& [k, v] : other.column(c)) {
      for (const auto& [r, u] : columns_[k]) {
        std::int64_t p;
        if (__builtin_mul_overflow(u, v, &p) || __builtin_add_overflow(acc[r], p, &acc[r]))
          throw IntegrityError("overflow in sparse product");
      }
    }
    for (const auto& [r, v] : acc)
      if (v != 0) out.columns_[c].push_back({r, v});
  }
  return out;
}

bool SparseIntMatrix::is_zero() const {
  return std::all_of(columns_.begin(), columns_.end(), [](const auto& c) { return c.empty(); });
}

void Chain::add(const Permutation& w, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = coefficients.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coefficients.erase(it);
  }
}

std::string Chain::str() const {
  if (coefficients.empty()) return "0";
  std::vector<std::pair<Permutation, std::int64_t>> terms(coefficients.begin(), coefficients.end());
  std::stable_sort(terms.begin(), terms.end(),
                   [](const auto& a, const auto& b) { return a.first.length() < b.first.length(); });
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms) {
    std::int64_t mag = c < 0 ? -c : c;
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    if (mag != 1) os << mag;
    os << spectrum(code(w)).str();
    first = false;
  }
  return os.str();
}

const std::vector<Permutation>& ChainComplex::cells(int degree) const {
  static const std::vector<Permutation> none;
  if (degree < 0 || degree > dimension()) return none;
  return cells_[degree];
}

std::size_t ChainComplex::cell_count() const {
  std::size_t s = 0;
  for (const auto& c : cells_) s += c.size();
  return s;
}

std::optional<int> ChainComplex::index_of(const Permutation& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const SparseIntMatrix& ChainComplex::boundary(int degree) const {
  if (degree < 1 || degree > dimension()) throw DomainError("no boundary map in degree " + std::to_string(degree));
  return boundaries_[degree];
}

ChainComplex build_complex(const ThetaSet& theta) {
  if (theta.n() < 1) throw DomainError("n must be positive");
  ChainComplex cx;
  cx.theta_ = theta;
  const int dim = theta.dimension();
  cx.cells_.assign(dim + 1, {});
  for (auto& w : enumerate_min_reps(theta)) {
    const int d = w.length();
    cx.index_.emplace(w, static_cast<int>(cx.cells_[d].size()));
    cx.cells_[d].push_back(std::move(w));
  }
  cx.boundaries_.assign(dim + 1, {});
  for (int d = 1; d <= dim; ++d) {
    SparseIntMatrix m(static_cast<int>(cx.cells_[d - 1].size()), static_cast<int>(cx.cells_[d].size()));
    for (int col = 0; col < m.cols(); ++col) {
      const Permutation& w = cx.cells_[d][col];
      const LehmerCode a = code(w);
      for (const auto& cp : covered_list(w)) {
        if ((cp.j - cp.i) % 2 != 0) continue;
        auto row = cx.index_of(cp.w_prime);
        if (!row) continue;
        const int v = boundary_coefficient(a, code(cp.w_prime), cp.i, cp.j).value;
        m.add(*row, col, v);
      }
    }
    cx.boundaries_[d] = std::move(m);
  }
  return cx;
}

Chain cell_boundary(const Permutation& w, const ThetaSet& theta) {
  Chain out;
  out.degree = w.length() - 1;
  if (w.length() == 0) {
    out.degree = 0;
    return out;
  }
  const LehmerCode a = code(w);
  for (const auto& cp : covered_list(w)) {
    if ((cp.j - cp.i) % 2 != 0) continue;
    if (!is_minimal_representative(cp.w_prime, theta)) continue;
    out.add(cp.w_prime, boundary_coefficient(a, code(cp.w_prime), cp.i, cp.j).value);
  }
  return out;
}

Chain boundary_of(const Chain& chain, const ChainComplex& cx) {
  Chain out;
  out.degree = chain.degree > 0 ? chain.degree - 1 : 0;
  if (chain.degree <= 0) return out;
  const SparseIntMatrix& m = cx.boundary(chain.degree);
  const auto& targets = cx.cells(chain.degree - 1);
  for (const auto& [w, c] : chain.coefficients) {
    auto col = cx.index_of(w);
    if (!col || w.length() != chain.degree) throw DomainError("cell " + w.str() + " is not in the complex");
    for (const auto& [r, v] : m.column(*col)) out.add(targets[r], c * v);
  }
  return out;
}

Chain boundary_of(const Chain& chain, const ThetaSet& theta) {
  Chain out;
  out.degree = chain.degree > 0 ? chain.degree - 1 : 0;
  if (chain.degree <= 0) return out;
  for (const auto& [w, c] : chain.coefficients) {
    if (w.length() != chain.degree || !is_minimal_representative(w, theta))
      throw DomainError("cell " + w.str() + " is not in the complex");
    for (const auto& [wp, v] : cell_boundary(w, theta).coefficients) out.add(wp, c * v);
  }
  return out;
}

bool verify_dd_zero(const ChainComplex& cx) {
  for (int d = 2; d <= cx.dimension(); ++d)
    if (!cx.boundary(d - 1).multiply(cx.boundary(d)).is_zero()) return false;
  return true;
}

std::vector<std::int64_t> chain_vector(const Chain& chain, const ChainComplex& cx) {
  std::vector<std::int64_t> v(cx.cells(chain.degree).size(), 0);
  for (const auto& [w, c] : chain.coefficients) {
    auto idx = cx.index_of(w);
    if (!idx || w.length() != chain.degree) throw DomainError("cell " + w.str() + " is not in the complex");
    v[*idx] = c;
  }
  return v;
}

}  // namespace schubert
