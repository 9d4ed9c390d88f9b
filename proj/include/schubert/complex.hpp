#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "schubert/perm.hpp"

namespace schubert {

// Column-major sparse integer matrix; each column keeps (row, value) sorted by row.
class SparseIntMatrix {
 public:
  using Entry = std::pair<int, std::int64_t>;

  SparseIntMatrix() = default;
  SparseIntMatrix(int rows, int cols) : rows_(rows), cols_(cols), columns_(cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const std::vector<Entry>& column(int c) const { return columns_[c]; }
  std::int64_t at(int r, int c) const;
  std::size_t nonzeros() const;

  // Adds v to entry (r, c).
  void add(int r, int c, std::int64_t v);

  // Throws IntegrityError on int64 overflow.
  SparseIntMatrix multiply(const SparseIntMatrix& other) const;
  bool is_zero() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::vector<Entry>> columns_;
};

// Formal integer combination of cells of one degree.
struct Chain {
  int degree = 0;
  std::map<Permutation, std::int64_t> coefficients;

  void add(const Permutation& w, std::int64_t c);
  bool is_zero() const { return coefficients.empty(); }
  // "2<1,2> - 2<2,2>" style, terms in cell order.
  std::string str() const;

  friend bool operator==(const Chain& a, const Chain& b) {
    return a.degree == b.degree && a.coefficients == b.coefficients;
  }
};

class ChainComplex {
 public:
  ChainComplex() = default;

  int n() const { return theta_.n(); }
  const ThetaSet& theta() const { return theta_; }
  int dimension() const { return static_cast<int>(cells_.size()) - 1; }
  const std::vector<Permutation>& cells(int degree) const;
  std::size_t cell_count() const;
  // Position of w inside cells(w.length()).
  std::optional<int> index_of(const Permutation& w) const;
  // Shape cells(d-1) x cells(d); d in [1, dimension()].
  const SparseIntMatrix& boundary(int degree) const;

 private:
  friend ChainComplex build_complex(const ThetaSet& theta);

  ThetaSet theta_;
  std::vector<std::vector<Permutation>> cells_;
  std::unordered_map<Permutation, int, PermutationHash> index_;
  std::vector<SparseIntMatrix> boundaries_;  // boundaries_[d] for d >= 1; [0] is empty
};

ChainComplex build_complex(const ThetaSet& theta);

// Direct boundary of one cell, without building the complex. Only cells in W^Theta
// appear on the right.
Chain cell_boundary(const Permutation& w, const ThetaSet& theta);

Chain boundary_of(const Chain& chain, const ChainComplex& cx);
Chain boundary_of(const Chain& chain, const ThetaSet& theta);

bool verify_dd_zero(const ChainComplex& cx);

// Coordinates of a chain in the basis cells(chain.degree). Throws DomainError
// for cells outside the complex.
std::vector<std::int64_t> chain_vector(const Chain& chain, const ChainComplex& cx);

}  // namespace schubert
