#include "schubert/closedform.hpp"

#include <algorithm>

#include "schubert/poincare.hpp"

namespace schubert {

namespace {

using Terms = std::vector<std::pair<std::int64_t, std::vector<int>>>;

std::string spectrum_label(const std::string& name, const std::vector<int>& idx) {
  std::string s = name + "_{";
  for (std::size_t k = 0; k < idx.size(); ++k) s += (k ? "," : "") + std::to_string(idx[k]);
  return s + "}";
}

// Valid code and a minimal representative.
bool admitted(const ThetaSet& th, const std::vector<int>& spec) {
  const int n = th.n();
  std::vector<int> a(n, 0);
  for (int b : spec) {
    if (b < 1 || b > n - 1) return false;
    if (++a[b] > n - b) return false;
  }
  return is_minimal_representative(cell(CodeSpectrum(spec), n), th);
}

}  // namespace

int ComponentStats::rk(int k) const {
  auto it = r_k.find(k);
  return it == r_k.end() ? 0 : it->second;
}

ComponentStats components(const ThetaSet& th) {
  ComponentStats s;
  s.n = th.n();
  s.indicators.assign(std::max(s.n, 1), 0);
  for (int i = 1; i < s.n; ++i) s.indicators[i] = th.contains(i) ? 1 : 0;
  for (int i = 1; i < s.n; ++i) {
    if (!th.contains(i)) continue;
    if (!s.runs.empty() && s.runs.back().second == i - 1)
      s.runs.back().second = i;
    else
      s.runs.push_back({i, i});
  }
  s.r = static_cast<int>(s.runs.size());
  for (const auto& [a, b] : s.runs) ++s.r_k[b - a + 1];
  s.r0 = th.size() == 0 ? 1 : 0;
  return s;
}

Chain spectrum_chain(const ThetaSet& th, int degree, const Terms& terms) {
  Chain c;
  c.degree = degree;
  for (const auto& [weight, spec] : terms) {
    if (weight == 0) continue;
    if (static_cast<int>(spec.size()) != degree) throw IntegrityError("spectrum length differs from chain degree");
    if (!admitted(th, spec))
      throw IntegrityError(CodeSpectrum(spec).str() + " is not a cell for Theta=" + th.str());
    c.add(cell(CodeSpectrum(spec), th.n()), weight);
  }
  return c;
}

std::vector<CodeSpectrum> skeleton_cells(const ThetaSet& th, int d) {
  if (d < 1 || d > 3) throw DomainError("skeleton_cells handles degrees 1..3");
  const int n = th.n();
  auto out_ = [&](int i) { return i >= 1 && i <= n - 1 && !th.contains(i); };
  auto in_ = [&](int i) { return th.contains(i); };
  std::vector<CodeSpectrum> out;
  auto valid = [&](const std::vector<int>& spec) {
    std::vector<int> a(n + 1, 0);
    for (int b : spec)
      if (b < 1 || b > n - 1 || ++a[b] > n - b) return false;
    return true;
  };
  for (int i = 1; i <= n - 1; ++i) {
    if (d == 1) {
      if (out_(i)) out.push_back(CodeSpectrum({i}));
      continue;
    }
    for (int j = i; j <= n - 1; ++j) {
      if (d == 2) {
        if (!valid({i, j})) continue;
        if ((out_(i) && out_(j)) || (j == i + 1 && in_(i) && out_(i + 1))) out.push_back(CodeSpectrum({i, j}));
        continue;
      }
      for (int k = j; k <= n - 1; ++k) {
        if (!valid({i, j, k})) continue;
        const bool ok = (out_(i) && out_(j) && out_(k)) || (j == i + 1 && in_(i) && out_(i + 1) && out_(k)) ||
                        (k == j + 1 && in_(j) && out_(i) && out_(j + 1)) ||
                        (k - 1 == j && j == i + 1 && in_(i) && in_(i + 1) && out_(i + 2));
        if (ok) out.push_back(CodeSpectrum({i, j, k}));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Chain z_chain(const ThetaSet& th, int p, int q) {
  const ComponentStats s = components(th);
  Terms terms;
  for (int i = p; i <= q - 1; ++i) terms.push_back({s.in_complement(i + 1), {i, i, i + 1, i + 1}});
  return spectrum_chain(th, 4, terms);
}

std::vector<GeneratorChain> z_cycles(const ThetaSet& th) {
  const ComponentStats s = components(th);
  std::vector<GeneratorChain> out;
  for (int k = 0; k + 1 < s.r; ++k) {
    GeneratorChain g;
    g.label = "Z_" + std::to_string(k + 1);
    g.chain = z_chain(th, s.runs[k].second, s.runs[k + 1].first - 1);
    g.kind = GeneratorKind::Free;
    out.push_back(std::move(g));
  }
  return out;
}

std::map<int, BettiEntry> betti_table(const ThetaSet& th) {
  const int n = th.n();
  const int dim = th.dimension();
  const ComponentStats s = components(th);
  std::map<int, BettiEntry> t;
  for (int d = 1; d <= 6; ++d) t[d] = {};
  auto guard = [&](int d, std::int64_t v) { return d <= dim ? v : 0; };

  // The circle.
  if (n == 2 && dim >= 1) {
    t[1].betti = 1;
    t[1].generators.push_back({"<1>", spectrum_chain(th, 1, {{1, {1}}}), GeneratorKind::Free});
  }

  // Degree 3.
  if (n != 4) {
    t[3].betti = guard(3, s.r0);
    if (t[3].betti > 0) t[3].generators.push_back({"<1,1,2>", spectrum_chain(th, 3, {{1, {1, 1, 2}}}), GeneratorKind::Free});
  } else {
    t[3].betti = guard(3, 2 - s.r);
    if (t[3].betti > 0) {
      if (s.r0) t[3].generators.push_back({"<1,1,2>", spectrum_chain(th, 3, {{1, {1, 1, 2}}}), GeneratorKind::Free});
      Chain x1 = spectrum_chain(th, 3, {{s.in_complement(1), {1, 1, 1}}, {s.in_complement(3), {1, 2, 3}}});
      if (!x1.is_zero()) t[3].generators.push_back({"X_1", x1, GeneratorKind::Free});
    }
  }

  // Degree 4.
  if (n >= 4) {
    t[4].betti = guard(4, s.r0 + s.r - 1);
    if (t[4].betti > 0) t[4].generators = z_cycles(th);
  }

  // Degree 5.
  if (n == 6) {
    t[5].betti = guard(5, big_L(th) <= 2 ? 1 : 0);
    if (t[5].betti > 0) {
      const int o1 = s.in_complement(1), o3 = s.in_complement(3), o5 = s.in_complement(5);
      Chain g = spectrum_chain(th, 5,
                               {{o1, {1, 1, 1, 1, 1}}, {o3, {1, 2, 3, 3, 3}}, {o1 * o5, {1, 1, 1, 4, 5}}, {o5, {1, 2, 3, 4, 5}}});
      t[5].generators.push_back({"Y_5", g, GeneratorKind::Free});
    }
  }

  // Degree 6 follows the free Poincare polynomial; the top cell of S_4 is its generator.
  t[6].betti = guard(6, free_poincare(th).coefficient(6));
  if (t[6].betti > 0 && n == 4)
    t[6].generators.push_back({"<1,1,1,2,2,3>", spectrum_chain(th, 6, {{1, {1, 1, 1, 2, 2, 3}}}), GeneratorKind::Free});
  return t;
}

std::int64_t binom(std::int64_t a, int b) {
  if (b < 0) return 0;
  std::int64_t num = 1, den = 1;
  for (int k = 0; k < b; ++k) {
    num *= (a - k);
    den *= (k + 1);
  }
  return num / den;
}

std::int64_t t3_formula(const ThetaSet& th) {
  const int n = th.n();
  const ComponentStats s = components(th);
  const std::int64_t t = th.size();
  if (n == 3) return 0;
  if (n == 4) return 2 - t;
  return binom(n - t, 3) + s.r * (n - t - 1) - s.r0 - s.rk(1);
}

std::int64_t t4_formula(const ThetaSet& th) {
  const int n = th.n();
  const ComponentStats s = components(th);
  const std::int64_t t = th.size();
  return binom(n - t + 1, 4) + s.r * binom(n - t, 2) + binom(s.r, 2) - (n - t - 1) * (s.rk(1) + 1) - s.rk(2);
}

std::int64_t torsion_T3(const ThetaSet& th) {
  if (th.n() < 3) throw DomainError("T3 needs n >= 3");
  return th.dimension() < 3 ? 0 : t3_formula(th);
}

std::int64_t torsion_T4(const ThetaSet& th) {
  if (th.n() < 4) throw DomainError("T4 needs n >= 4");
  return th.dimension() < 4 ? 0 : t4_formula(th);
}

std::vector<GeneratorChain> h3_kernel_generators(const ThetaSet& th) {
  const int n = th.n();
  if (n < 3) throw DomainError("degree-3 generators need n >= 3");
  const ComponentStats s = components(th);
  std::vector<GeneratorChain> out;
  if (th.dimension() < 3) return out;
  auto o = [&](int i) { return static_cast<std::int64_t>(s.in_complement(i)); };

  if (n == 3) {
    out.push_back({"X_{1,1,2}", spectrum_chain(th, 3, {{1, {1, 1, 2}}}), GeneratorKind::Free});
    return out;
  }
  if (n == 4) {
    Chain x1 = spectrum_chain(th, 3, {{o(1), {1, 1, 1}}, {o(3), {1, 2, 3}}});
    if (!x1.is_zero()) out.push_back({"X_1", x1, GeneratorKind::Free});
    const GeneratorKind k112 = s.r0 ? GeneratorKind::Free : GeneratorKind::Torsion;
    for (const auto& [label, spec, kind] : {std::tuple{"X_{1,1,2}", std::vector<int>{1, 1, 2}, k112},
                                            std::tuple{"X_{1,1,3}", std::vector<int>{1, 1, 3}, GeneratorKind::Torsion},
                                            std::tuple{"X_{2,2,3}", std::vector<int>{2, 2, 3}, GeneratorKind::Torsion}}) {
      if (admitted(th, spec)) out.push_back({label, spectrum_chain(th, 3, {{1, spec}}), kind});
    }
    return out;
  }

  auto family = [&](const std::vector<int>& lab, const Terms& terms) {
    if (!admitted(th, lab)) return;
    const bool free = s.r0 && lab == std::vector<int>{1, 1, 2};
    out.push_back({spectrum_label("X", lab), spectrum_chain(th, 3, terms),
                   free ? GeneratorKind::Free : GeneratorKind::Torsion});
  };
  family({1, 1, 2}, {{1, {1, 1, 2}}});
  for (int i = 2; i <= n - 2; ++i) family({i, i, i + 1}, {{1, {i, i, i + 1}}, {-o(i - 1), {i - 1, i - 1, i}}});
  for (int i = 1; i <= n - 3; ++i) family({i, i, i + 2}, {{1, {i, i, i + 2}}});
  for (int i = 1; i <= n - 5; ++i)
    for (int j = i + 2; j <= n - 3; ++j)
      for (int k = j + 2; k <= n - 1; ++k) family({i, j, k}, {{1, {i, j, k}}});
  for (int i = 1; i <= n - 3; ++i) family({i, i, i}, {{1, {i, i, i}}, {o(i + 2), {i, i + 1, i + 2}}});
  for (int i = 1; i <= n - 4; ++i) family({i, i + 1, i + 2}, {{1, {i, i + 1, i + 2}}, {-o(i), {i, i + 2, i + 2}}});
  // Last member of the previous family; its correction term is never a cell here.
  if (th.contains(n - 3)) family({n - 3, n - 2, n - 1}, {{1, {n - 3, n - 2, n - 1}}});
  for (int i = 1; i <= n - 4; ++i) family({i, i + 1, i + 3}, {{1, {i, i + 1, i + 3}}, {1, {i + 1, i + 2, i + 3}}});
  for (int i = 1; i <= n - 4; ++i)
    for (int k = i + 3; k <= n - 1; ++k) family({i, i, k}, {{1, {i, i, k}}, {1, {i, k - 1, k}}});
  for (int i = 1; i <= n - 4; ++i)
    for (int k = i + 3; k <= n - 2; ++k) family({i, k - 1, k}, {{1, {i, k - 1, k}}, {-1, {i, k, k}}});
  for (int i = 1; i <= n - 5; ++i)
    for (int k = i + 4; k <= n - 1; ++k) family({i, i + 1, k}, {{1, {i, i + 1, k}}, {1, {i + 1, k - 1, k}}});
  return out;
}

std::vector<std::int64_t> t3_set_sizes(const ThetaSet& th) {
  const int n = th.n();
  if (n < 5) throw DomainError("set decomposition needs n >= 5");
  const ComponentStats s = components(th);
  const std::int64_t t = th.size(), r = s.r, r1 = s.rk(1);
  const std::int64_t i0 = s.in_theta(n - 2), i1 = s.in_theta(n - 1);
  return {(n - 3 - t) + i0 + i1,
          binom(n - 1 - t, 2),
          binom(n - 1 - t, 3) - (1 - i0) * (1 - i1) * (n - 3 - t),
          (r - i0 - i1 + i0 * i1) * (n - 2 - t),
          0,
          r - r1 - i0 * i1};
}

std::vector<std::int64_t> t4_set_sizes(const ThetaSet& th) {
  const int n = th.n();
  if (n < 5) throw DomainError("set decomposition needs n >= 5");
  const ComponentStats s = components(th);
  const std::int64_t t = th.size(), r = s.r, r1 = s.rk(1), r2 = s.rk(2);
  std::int64_t S = 0;
  for (int i = 2; i <= n - 4; ++i) S += (1 - s.in_theta(i - 1)) * (1 - s.in_theta(i));
  const std::int64_t a = s.in_theta(n - 4), b = s.in_theta(n - 3), c = s.in_theta(n - 2), d = s.in_theta(n - 1);
  std::vector<std::int64_t> A(16, 0);
  A[0] = binom(n - 1 - t, 2) - (2 - b - c) * (1 - d);
  A[1] = binom(n - 1 - t, 3) - (1 - c) * (1 - d) * (n - 4 - t + b);
  A[2] = binom(n - 1 - t, 3);
  A[3] = binom(n - 1 - t, 4) - (1 - a) * (1 - b) * (1 - c) * (1 - d);
  A[4] = (r - c - d * (1 - c)) * (n - 2 - t) + (1 - b) * c * (1 - d);
  A[6] = d * S;
  A[7] = d * (r - 1 - a * (1 - b) - b * (1 - c));
  A[8] = (r - d) * binom(n - 2 - t, 2) - a * (1 - b) * (1 - c) * (1 - d) - (1 - a) * b * (1 - c) * (1 - d) -
         (1 - a) * (1 - b) * c * (1 - d);
  A[11] = d * (binom(n - 2 - t, 2) + c * (n - 2 - t) - S - (1 - a) * (1 - b));
  A[12] = binom(r, 2) - (r - 1) * d - a * (1 - b) * c * (1 - d);
  A[13] = (r - r1 - c * d) * (n - 2 - t) - a * b * (1 - c) * (1 - d) - (1 - a) * b * c * (1 - d);
  A[15] = r - r1 - r2 - a * b * c * (1 - d) - b * c * d;
  return A;
}

}  // namespace schubert
