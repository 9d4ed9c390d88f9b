#include "schubert/verify.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "schubert/bruhat.hpp"
#include "schubert/closedform.hpp"
#include "schubert/complex.hpp"
#include "schubert/geomcheck.hpp"
#include "schubert/poincare.hpp"
#include "schubert/snf.hpp"

namespace schubert {

namespace {

SuiteResult timed(const std::string& name, const std::function<void(SuiteResult&)>& body) {
  SuiteResult r;
  r.name = name;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.status = Status::Fail;
    r.notes.push_back(std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

void fail(SuiteResult& r, const std::string& note) {
  r.status = Status::Fail;
  r.notes.push_back(note);
}

void warn(SuiteResult& r, const std::string& note) {
  if (r.status == Status::Pass) r.status = Status::Warn;
  r.notes.push_back(note);
}

// Every Theta for n <= all_theta_max_n, plus Theta empty up to maximal_max_n.
std::vector<ThetaSet> sweep(const TierBounds& b, int min_n) {
  std::vector<ThetaSet> out;
  for (int n = min_n; n <= b.all_theta_max_n; ++n)
    for (const auto& th : all_theta_sets(n)) out.push_back(th);
  for (int n = std::max(min_n, b.all_theta_max_n + 1); n <= b.maximal_max_n; ++n) out.push_back(ThetaSet::empty(n));
  return out;
}

std::string where(const ThetaSet& th) { return "n=" + std::to_string(th.n()) + " Theta=" + th.str(); }

}  // namespace

const char* status_name(Status s) {
  switch (s) {
    case Status::Pass:
      return "PASS";
    case Status::Warn:
      return "WARN";
    case Status::Fail:
      return "FAIL";
  }
  return "?";
}

TierBounds tier_bounds(const std::string& tier) {
  if (tier == "quick") return {5, 5};
  if (tier == "full") return {7, 7};
  throw DomainError("unknown tier '" + tier + "' (expected quick or full)");
}

SuiteResult suite_dd_zero(const TierBounds& b) {
  return timed("dd-zero", [&](SuiteResult& r) {
    int count = 0;
    for (const auto& th : sweep(b, 2)) {
      if (!verify_dd_zero(build_complex(th))) fail(r, "nonzero composite boundary at " + where(th));
      ++count;
    }
    r.summary = std::to_string(count) + " complexes";
  });
}

SuiteResult suite_oracle_equivalence(const TierBounds& b) {
  return timed("oracle-equivalence", [&](SuiteResult& r) {
    std::size_t pairs = 0;
    const int max_n = std::min(b.all_theta_max_n, 6);
    for (int n = 1; n <= max_n; ++n) {
      const auto perms = enumerate_min_reps(ThetaSet::empty(n));
      std::vector<LehmerCode> codes;
      for (const auto& w : perms) codes.push_back(code(w));
      for (std::size_t x = 0; x < perms.size(); ++x) {
        for (int i = 1; i <= n; ++i)
          for (int j = i + 1; j <= n + 1; ++j)
            if (ext_matrix(perms[x], i, j) != ext_matrix_rec(codes[x], i, j))
              fail(r, "extended matrix differs at w=" + perms[x].str());
        for (std::size_t y = 0; y < perms.size(); ++y) {
          ++pairs;
          if (covering_transposition(perms[x], perms[y]) != covering_by_code(codes[x], codes[y]))
            fail(r, "covering tests differ for " + perms[x].str() + " / " + perms[y].str());
        }
      }
    }
    r.summary = std::to_string(pairs) + " ordered pairs, n <= " + std::to_string(max_n);
  });
}

SuiteResult suite_polynomial_match(const TierBounds& b) {
  return timed("polynomial-match", [&](SuiteResult& r) {
    int count = 0;
    for (const auto& th : sweep(b, 2)) {
      const auto groups = homology(build_complex(th));
      const IntPolynomial fp = free_poincare(th), tp = torsion_poincare(th);
      for (const auto& g : groups) {
        if (g.betti != fp.coefficient(g.degree))
          fail(r, "betti mismatch in degree " + std::to_string(g.degree) + " at " + where(th));
        if (static_cast<std::int64_t>(g.torsion_factors.size()) != tp.coefficient(g.degree))
          fail(r, "torsion mismatch in degree " + std::to_string(g.degree) + " at " + where(th));
        for (const auto& f : g.torsion_factors)
          if (f != 2) fail(r, "invariant factor " + f.get_str() + " at " + where(th));
      }
      ++count;
    }
    r.summary = std::to_string(count) + " complexes; betti = FP, torsion = TP, every factor 2";
  });
}

SuiteResult suite_torsion_formulas(const TierBounds& b) {
  return timed("T3/T4-match", [&](SuiteResult& r) {
    int count = 0;
    for (const auto& th : sweep(b, 3)) {
      const auto groups = homology(build_complex(th));
      auto snf_t = [&](int d) {
        return d < static_cast<int>(groups.size()) ? static_cast<std::int64_t>(groups[d].torsion_factors.size()) : 0;
      };
      if (torsion_T3(th) != snf_t(3))
        fail(r, "T3 formula " + std::to_string(torsion_T3(th)) + " vs SNF " + std::to_string(snf_t(3)) + " at " + where(th));
      if (th.n() >= 4) {
        const std::int64_t f = torsion_T4(th);
        if (f != snf_t(4)) {
          const std::string line = "T4 formula " + std::to_string(f) + " vs SNF " + std::to_string(snf_t(4)) + " at " + where(th);
          if (th.n() == 4)
            warn(r, line);
          else
            fail(r, line);
        }
      }
      ++count;
    }
    r.summary = std::to_string(count) + " complexes";
  });
}

SuiteResult suite_generator_cycles(const TierBounds& b) {
  return timed("generator-cycles", [&](SuiteResult& r) {
    int chains = 0;
    for (const auto& th : sweep(b, 2)) {
      const ChainComplex cx = build_complex(th);
      std::vector<GeneratorChain> all = z_cycles(th);
      for (const auto& [d, entry] : betti_table(th)) {
        if (static_cast<int>(entry.generators.size()) != entry.betti)
          fail(r, "degree " + std::to_string(d) + " lists " + std::to_string(entry.generators.size()) +
                      " generators for betti " + std::to_string(entry.betti) + " at " + where(th));
        all.insert(all.end(), entry.generators.begin(), entry.generators.end());
      }
      if (th.n() >= 3) {
        auto h3 = h3_kernel_generators(th);
        all.insert(all.end(), h3.begin(), h3.end());
      }
      for (const auto& g : all) {
        ++chains;
        if (!boundary_of(g.chain, cx).is_zero()) fail(r, g.label + " is not a cycle at " + where(th));
      }
    }
    r.summary = std::to_string(chains) + " chains checked";
  });
}

SuiteResult suite_geom_identities(const TierBounds& b) {
  return timed("geom-identities", [&](SuiteResult& r) {
    double worst = 0;
    for (int n = 3; n <= std::min(b.all_theta_max_n, 5); ++n) {
      for (int i = 1; i <= n - 2; ++i) worst = std::max(worst, check_braid_identities(n, i, 20).max());
      worst = std::max(worst, check_commutation(n, 20));
    }
    if (worst > 1e-12) fail(r, "max deviation " + std::to_string(worst));
    if (commutation_map_determinant(5, 2) != -1) fail(r, "commutation coordinate change is not orientation reversing");
    if (braid_map_determinant(5, 2) != 1) fail(r, "braid coordinate change is not orientation preserving");
    std::ostringstream os;
    os << "max deviation " << worst;
    r.summary = os.str();
  });
}

std::vector<SuiteResult> run_verification(const std::string& tier) {
  const TierBounds b = tier_bounds(tier);
  return {suite_dd_zero(b),          suite_oracle_equivalence(b), suite_polynomial_match(b),
          suite_torsion_formulas(b), suite_generator_cycles(b),   suite_geom_identities(b)};
}

}  // namespace schubert
