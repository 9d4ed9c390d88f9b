#pragma once

#include <vector>

namespace schubert {

// Dense square matrix of doubles, row-major.
class RealMatrix {
 public:
  explicit RealMatrix(int n = 0) : n_(n), a_(static_cast<std::size_t>(n) * n, 0.0) {}
  static RealMatrix identity(int n);

  int size() const { return n_; }
  double& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * n_ + c]; }
  double operator()(int r, int c) const { return a_[static_cast<std::size_t>(r) * n_ + c]; }

  RealMatrix transpose() const;
  double determinant() const;

  friend RealMatrix operator*(const RealMatrix& x, const RealMatrix& y);
  // Largest entrywise absolute difference.
  friend double max_deviation(const RealMatrix& x, const RealMatrix& y);

 private:
  int n_;
  std::vector<double> a_;
};

// exp(t A_i) with A_i = E_{i,i+1} - E_{i+1,i}; i is 1-based.
RealMatrix rot(int n, int i, double t);

struct BraidIdentityReport {
  double slide_out = 0;      // e^{tA_i} e^{pA_{i+1}} e^{pA_i} = e^{pA_{i+1}} e^{pA_i} e^{tA_{i+1}}
  double slide_in = 0;      // e^{pA_i} e^{pA_{i+1}} e^{tA_i} = e^{tA_{i+1}} e^{pA_i} e^{pA_{i+1}}
  double sandwich_mid = 0;      // e^{pA_i} e^{tA_{i+1}} e^{pA_i} against its closed form
  double sandwich_next = 0;      // e^{pA_{i+1}} e^{-tA_i} e^{pA_{i+1}} against its closed form
  double diagonal = 0;  // quotient of the last two against diag(.., -1 at i, .., -1 at i+2, ..)
  double max() const;
  bool passed(double tol = 1e-12) const { return max() <= tol; }
};

// p = pi/2; t runs over k*pi/(samples+1), k = 1..samples.
BraidIdentityReport check_braid_identities(int n, int i, int samples);

// Largest deviation of rot(i,t) rot(j,s) from rot(j,s) rot(i,t) over |i-j| >= 2
// and samples x samples angle pairs.
double check_commutation(int n, int samples);

// Determinant of x -> (sign_k * x_{source_k})_k.
int signed_permutation_determinant(const std::vector<int>& source, const std::vector<int>& sign);
// Coordinate change for a commutation at letters k, k+1 of an ell-letter word.
int commutation_map_determinant(int ell, int k);
// Coordinate change (t_k, t_{k+1}, t_{k+2}) -> (t_{k+2}, -t_{k+1}, t_k).
int braid_map_determinant(int ell, int k);

}  // namespace schubert
