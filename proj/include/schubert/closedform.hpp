#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "schubert/complex.hpp"
#include "schubert/perm.hpp"

namespace schubert {

struct ComponentStats {
  int n = 0;
  int r = 0;                      // connected components of Theta
  std::map<int, int> r_k;         // size -> count
  int r0 = 0;                     // 1 iff Theta is empty
  std::vector<std::pair<int, int>> runs;  // (first, last) of each component
  std::vector<int> indicators;    // indicators[i] = 1 iff a_i in Theta, i in [1, n-1]; 0 elsewhere

  int rk(int k) const;
  int in_theta(int i) const { return i >= 1 && i < n ? indicators[i] : 0; }
  int in_complement(int i) const { return 1 - in_theta(i); }
};

ComponentStats components(const ThetaSet& th);

enum class GeneratorKind { Free, Torsion };

struct GeneratorChain {
  std::string label;
  Chain chain;
  GeneratorKind kind = GeneratorKind::Free;
};

// Sum of weight * <spectrum> over the terms. Zero weights are dropped; a
// nonzero weight on a cell outside W^Theta throws IntegrityError.
Chain spectrum_chain(const ThetaSet& th, int degree, const std::vector<std::pair<std::int64_t, std::vector<int>>>& terms);

// Spectra of d-cells (d in 1..3) admitted by the skeleton case lists, sorted.
std::vector<CodeSpectrum> skeleton_cells(const ThetaSet& th, int d);

// Z(p, q) = sum_{i=p}^{q-1} 1'_{i+1} <i,i,i+1,i+1>
Chain z_chain(const ThetaSet& th, int p, int q);
// Z_1 .. Z_{r-1}.
std::vector<GeneratorChain> z_cycles(const ThetaSet& th);

struct BettiEntry {
  std::int64_t betti = 0;
  std::vector<GeneratorChain> generators;
};

// Degrees 1..6.
std::map<int, BettiEntry> betti_table(const ThetaSet& th);

// Polynomial binomial a(a-1)...(a-b+1)/b!, defined for every integer a.
std::int64_t binom(std::int64_t a, int b);

// The closed expressions as printed, without the dimension guard.
std::int64_t t3_formula(const ThetaSet& th);
std::int64_t t4_formula(const ThetaSet& th);
// Torsion counts: the closed expressions, or 0 when the manifold has no cells
// in that degree.
std::int64_t torsion_T3(const ThetaSet& th);
std::int64_t torsion_T4(const ThetaSet& th);

std::vector<GeneratorChain> h3_kernel_generators(const ThetaSet& th);

// Sizes of the sets A_k decomposing the degree-3 and degree-4 kernel
// generators, as functions of the component statistics (n >= 5). Entries
// for sets that are counted together with a neighbour are 0.
std::vector<std::int64_t> t3_set_sizes(const ThetaSet& th);
std::vector<std::int64_t> t4_set_sizes(const ThetaSet& th);

}  // namespace schubert
