#include "schubert/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "schubert/closedform.hpp"
#include "schubert/coeff.hpp"
#include "schubert/complex.hpp"
#include "schubert/poincare.hpp"
#include "schubert/snf.hpp"
#include "schubert/verify.hpp"

namespace schubert::cli {

namespace {

using ojson = nlohmann::ordered_json;

constexpr int kMaxN = 8;
constexpr std::int64_t kMaxCells = 40320;

void require_format(const RunConfig& cfg, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (cfg.format == f) return;
  std::string list;
  for (const char* f : allowed) list += (list.empty() ? "" : ", ") + std::string(f);
  throw DomainError("format '" + cfg.format + "' not supported by " + cfg.command + " (use " + list + ")");
}

ojson big_to_json(const BigInt& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

ojson poly_json(const IntPolynomial& p) { return p.coefficients(); }

std::string header(const ThetaSet& th) {
  std::ostringstream os;
  os << "n=" << th.n() << " k={";
  const auto ks = th.k_set();
  for (std::size_t i = 0; i < ks.size(); ++i) os << (i ? "," : "") << ks[i];
  os << "} dim=" << th.dimension();
  return os.str();
}

std::string chain_json_terms(const Chain& c, ojson& arr) {
  for (const auto& [w, v] : c.coefficients) {
    ojson t;
    t["coefficient"] = v;
    t["spectrum"] = spectrum(code(w)).entries();
    t["word"] = w.word();
    arr.push_back(t);
  }
  return c.str();
}

ThetaSet checked_theta(const RunConfig& cfg) {
  const ThetaSet th = resolve_theta(cfg);
  check_cap(th, cfg.allow_large, std::cerr);
  return th;
}

}  // namespace

ThetaSet resolve_theta(const RunConfig& cfg) {
  if (cfg.n < 2) throw DomainError("n must be at least 2");
  if (cfg.k && cfg.theta) throw DomainError("give either --k or --theta, not both");
  if (cfg.k) return ThetaSet::from_k(cfg.n, *cfg.k);
  if (cfg.theta) return ThetaSet::from_theta(cfg.n, *cfg.theta);
  return ThetaSet::empty(cfg.n);
}

void check_cap(const ThetaSet& th, bool allow_large, std::ostream& err) {
  const std::int64_t cells = th.n() <= 20 ? multinomial(th.block_sizes()) : -1;
  const bool within = th.n() <= kMaxN || (th.n() == kMaxN + 1 && cells >= 0 && cells <= kMaxCells);
  if (within) return;
  if (!allow_large)
    throw DomainError("n=" + std::to_string(th.n()) + " with " + (cells >= 0 ? std::to_string(cells) : "too many") +
                      " cells exceeds the cap (n <= 8, or n = 9 with at most " + std::to_string(kMaxCells) +
                      " cells); pass --allow-large to override");
  err << "cost estimate: " << (cells >= 0 ? std::to_string(cells) : "more than 2^63") << " cells, dimension "
      << th.dimension() << "; largest boundary matrix has at most " << (cells >= 0 ? std::to_string(cells) : "?")
      << " columns\n";
  err.flush();
}

std::string cmd_homology(const RunConfig& cfg) {
  require_format(cfg, {"text", "json"});
  const ThetaSet th = checked_theta(cfg);
  const auto groups = homology(build_complex(th));
  if (cfg.format == "json") {
    ojson j;
    j["n"] = th.n();
    j["k"] = th.k_set();
    j["dim"] = th.dimension();
    j["groups"] = ojson::array();
    for (const auto& g : groups) {
      ojson e;
      e["degree"] = g.degree;
      e["betti"] = g.betti;
      e["torsion"] = ojson::array();
      for (const auto& f : g.torsion_factors) e["torsion"].push_back(big_to_json(f));
      j["groups"].push_back(e);
    }
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << header(th) << "\n";
  for (const auto& g : groups) os << "H_" << g.degree << " = " << g.str() << "\n";
  return os.str();
}

std::string cmd_poincare(const RunConfig& cfg) {
  require_format(cfg, {"text", "json"});
  const ThetaSet th = resolve_theta(cfg);
  const IntPolynomial p = mod2_poincare(th), fp = free_poincare(th), tp = torsion_poincare(th);
  if (p != fp + IntPolynomial({1, 1}) * tp) throw IntegrityError("P != FP + (1+t) TP for Theta=" + th.str());
  if (cfg.format == "json") {
    ojson j;
    j["n"] = th.n();
    j["k"] = th.k_set();
    j["L"] = big_L(th);
    j["P"] = poly_json(p);
    j["FP"] = poly_json(fp);
    j["TP"] = poly_json(tp);
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << header(th) << " L=" << big_L(th) << "\n";
  os << "P(t)  = " << p.str() << "\n";
  os << "FP(t) = " << fp.str() << "\n";
  os << "TP(t) = " << tp.str() << "\n";
  return os.str();
}

std::string cmd_incidence(const RunConfig& cfg) {
  require_format(cfg, {"dot", "text"});
  const ThetaSet th = checked_theta(cfg);
  const ChainComplex cx = build_complex(th);
  std::ostringstream os;
  auto node = [](int d, int idx) { return "c" + std::to_string(d) + "_" + std::to_string(idx); };
  os << "digraph incidence {\n";
  os << "  // " << header(th) << "\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=box, fontname=\"monospace\"];\n";
  for (int d = 0; d <= cx.dimension(); ++d) {
    const auto& cells = cx.cells(d);
    for (std::size_t k = 0; k < cells.size(); ++k)
      os << "  " << node(d, static_cast<int>(k)) << " [label=\"" << cells[k].str() << "\\n" << code(cells[k]).str()
         << "\"];\n";
    os << "  { rank=same;";
    for (std::size_t k = 0; k < cells.size(); ++k) os << ' ' << node(d, static_cast<int>(k)) << ';';
    os << " }\n";
  }
  for (int d = 1; d <= cx.dimension(); ++d) {
    const SparseIntMatrix& m = cx.boundary(d);
    for (int col = 0; col < m.cols(); ++col)
      for (const auto& [row, v] : m.column(col))
        os << "  " << node(d, col) << " -> " << node(d - 1, row) << " [style=" << (v > 0 ? "dashed" : "solid")
           << ", label=\"" << (v > 0 ? "+" : "") << v << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::string cmd_generators(const RunConfig& cfg) {
  require_format(cfg, {"text", "json"});
  const ThetaSet th = checked_theta(cfg);
  const ChainComplex cx = build_complex(th);
  const auto table = betti_table(th);
  std::vector<GeneratorChain> h3;
  if (th.n() >= 3) h3 = h3_kernel_generators(th);
  auto is_cycle = [&](const Chain& c) { return boundary_of(c, cx).is_zero(); };
  auto kind = [](GeneratorKind k) { return k == GeneratorKind::Free ? "free" : "torsion"; };

  if (cfg.format == "json") {
    ojson j;
    j["n"] = th.n();
    j["k"] = th.k_set();
    j["free"] = ojson::array();
    for (const auto& [d, e] : table) {
      ojson row;
      row["degree"] = d;
      row["betti"] = e.betti;
      row["generators"] = ojson::array();
      for (const auto& g : e.generators) {
        ojson gj;
        gj["label"] = g.label;
        gj["terms"] = ojson::array();
        gj["chain"] = chain_json_terms(g.chain, gj["terms"]);
        gj["cycle"] = is_cycle(g.chain);
        row["generators"].push_back(gj);
      }
      j["free"].push_back(row);
    }
    j["h3_kernel"] = ojson::array();
    for (const auto& g : h3) {
      ojson gj;
      gj["label"] = g.label;
      gj["kind"] = kind(g.kind);
      gj["terms"] = ojson::array();
      gj["chain"] = chain_json_terms(g.chain, gj["terms"]);
      gj["cycle"] = is_cycle(g.chain);
      j["h3_kernel"].push_back(gj);
    }
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << header(th) << "\n";
  for (const auto& [d, e] : table) {
    os << "beta_" << d << " = " << e.betti << "\n";
    for (const auto& g : e.generators)
      os << "  " << g.label << " = " << g.chain.str() << (is_cycle(g.chain) ? "" : "  [NOT A CYCLE]") << "\n";
  }
  os << "degree-3 kernel generators: " << h3.size() << "\n";
  for (const auto& g : h3)
    os << "  " << g.label << " (" << kind(g.kind) << ") = " << g.chain.str()
       << (is_cycle(g.chain) ? "" : "  [NOT A CYCLE]") << "\n";
  return os.str();
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const auto results = run_verification(cfg.tier);
  int exit_code = 0;
  for (const auto& r : results) {
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.2fs", r.seconds);
    out << "[" << status_name(r.status) << "] " << r.name << ": " << r.summary << " (" << secs << ")\n";
    for (const auto& note : r.notes) out << "    " << note << "\n";
    if (r.status == Status::Fail) exit_code = 1;
  }
  return exit_code;
}

}  // namespace schubert::cli
