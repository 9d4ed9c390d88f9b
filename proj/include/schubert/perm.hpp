#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "schubert/errors.hpp"

namespace schubert {

// One-line notation w(1) ... w(n). Positions and values are 1-based in the
// public interface.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(word_.size()); }
  int operator()(int pos) const { return word_[pos - 1]; }
  const std::vector<int>& word() const { return word_; }

  // Number of inversions.
  int length() const;

  std::string str() const;

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.word_ == b.word_; }
  friend bool operator!=(const Permutation& a, const Permutation& b) { return a.word_ != b.word_; }
  friend bool operator<(const Permutation& a, const Permutation& b) { return a.word_ < b.word_; }

 private:
  std::vector<int> word_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& w) const noexcept;
};

// alpha_i = #{k > i : w(k) < w(i)}, i = 1..n-1. alpha_n = 0 is implicit.
class LehmerCode {
 public:
  LehmerCode() = default;
  // Shorter inputs are padded with trailing zeros.
  LehmerCode(int n, std::vector<int> alpha);

  int n() const { return n_; }
  const std::vector<int>& entries() const { return alpha_; }
  // 1-based; returns 0 for i == n.
  int operator[](int i) const { return i >= n_ ? 0 : alpha_[i - 1]; }
  int total() const;

  std::string str() const;

  friend bool operator==(const LehmerCode& a, const LehmerCode& b) {
    return a.n_ == b.n_ && a.alpha_ == b.alpha_;
  }
  friend bool operator!=(const LehmerCode& a, const LehmerCode& b) { return !(a == b); }

 private:
  int n_ = 1;
  std::vector<int> alpha_;
};

// Weakly increasing list of row indices; value i appears alpha_i times.
class CodeSpectrum {
 public:
  CodeSpectrum() = default;
  explicit CodeSpectrum(std::vector<int> entries);

  const std::vector<int>& entries() const { return entries_; }
  int size() const { return static_cast<int>(entries_.size()); }
  std::string str() const;

  friend bool operator==(const CodeSpectrum& a, const CodeSpectrum& b) { return a.entries_ == b.entries_; }
  friend bool operator<(const CodeSpectrum& a, const CodeSpectrum& b) { return a.entries_ < b.entries_; }

 private:
  std::vector<int> entries_;
};

// Theta as a set of simple-root indices in [1, n-1]. The k-set is its
// complement: the positions where minimal representatives may descend.
class ThetaSet {
 public:
  ThetaSet() = default;

  static ThetaSet from_theta(int n, std::vector<int> roots);
  static ThetaSet from_k(int n, std::vector<int> ks);
  static ThetaSet from_mask(int n, std::uint32_t mask);
  // Maximal flag manifold.
  static ThetaSet empty(int n) { return from_theta(n, {}); }
  // A point.
  static ThetaSet full(int n);

  int n() const { return n_; }
  bool contains(int i) const { return i >= 1 && i < n_ && ((mask_ >> (i - 1)) & 1u); }
  int size() const;
  std::uint32_t mask() const { return mask_; }
  std::vector<int> roots() const;
  std::vector<int> k_set() const;
  // k_1, k_2 - k_1, ..., n - k_r
  std::vector<int> block_sizes() const;
  // Dimension of the flag manifold, i.e. the top cell degree.
  int dimension() const;

  std::string str() const;

  friend bool operator==(const ThetaSet& a, const ThetaSet& b) { return a.n_ == b.n_ && a.mask_ == b.mask_; }

 private:
  int n_ = 1;
  std::uint32_t mask_ = 0;
};

// All 2^(n-1) subsets in mask order.
std::vector<ThetaSet> all_theta_sets(int n);

struct ReducedWord {
  std::vector<int> letters;
  std::string str() const;
  friend bool operator==(const ReducedWord& a, const ReducedWord& b) { return a.letters == b.letters; }
};

LehmerCode code(const Permutation& w);
Permutation decode(const LehmerCode& c);

CodeSpectrum spectrum(const LehmerCode& c);
LehmerCode code_from_spectrum(const CodeSpectrum& s, int n);
// decode(code_from_spectrum(s, n)).
Permutation cell(const CodeSpectrum& s, int n);

bool is_minimal_representative(const Permutation& w, const ThetaSet& th);
// Sorted by (length, word).
std::vector<Permutation> enumerate_min_reps(const ThetaSet& th);
std::vector<std::vector<int>> split_code(const LehmerCode& c, const ThetaSet& th);

ReducedWord row_reading(const Permutation& w);
// Letters applied left to right, each swapping positions s and s+1.
Permutation evaluate_word(const ReducedWord& word, int n);
Permutation project(const Permutation& w, const ThetaSet& th);

std::int64_t factorial(int n);
std::int64_t multinomial(const std::vector<int>& parts);

}  // namespace schubert
