#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "schubert/complex.hpp"

namespace schubert {

using BigInt = mpz_class;

// Dense row-major matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  T& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const T& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<std::int64_t>;
using BigMatrix = Matrix<BigInt>;

struct SmithDecomposition {
  // min(rows, cols) entries, d1 | d2 | ..., zeros last.
  std::vector<BigInt> diagonal;
  int rank = 0;
};

SmithDecomposition smith_normal_form(const IntMatrix& m);
SmithDecomposition smith_normal_form(const BigMatrix& m);
SmithDecomposition smith_normal_form(const SparseIntMatrix& m);

BigMatrix to_big(const SparseIntMatrix& m);

struct HomologyGroup {
  int degree = 0;
  std::int64_t betti = 0;
  // Invariant factors > 1, each dividing the next.
  std::vector<BigInt> torsion_factors;

  // "Z^b + Z2^t"; "0" for the trivial group.
  std::string str() const;
};

// Throws IntegrityError if some composite boundary is nonzero.
std::vector<HomologyGroup> homology(const ChainComplex& cx);

// Columns of the result form a basis of {x : A x = 0}; the basis is saturated.
BigMatrix kernel_basis(const BigMatrix& a);
// True iff v is an integer combination of the columns of gens.
bool in_lattice(const BigMatrix& gens, const std::vector<BigInt>& v);
// [a | b] side by side; row counts must agree.
BigMatrix hconcat(const BigMatrix& a, const BigMatrix& b);

// How a set of cycles sits inside H_d.
struct ClassReport {
  bool all_cycles = true;
  // Rank of the span of the free candidates modulo boundaries.
  int free_rank = 0;
  // The free candidates project onto a basis of H_d / torsion.
  bool generates_free_part = false;
  // Each torsion candidate is not a boundary but twice it is.
  bool torsion_of_order_two = true;
  // Boundaries plus all candidates give every cycle.
  bool generates_homology = false;
};

ClassReport analyze_classes(const ChainComplex& cx, int degree, const std::vector<Chain>& free_candidates,
                            const std::vector<Chain>& torsion_candidates);

}  // namespace schubert
