#include "verbs.hpp"

#include <cmath>
#include <iostream>

#include "json.hpp"
#include "jk/chains.hpp"
#include "jk/errors.hpp"
#include "jk/genmat.hpp"
#include "jk/krylov.hpp"
#include "jk/min_annih.hpp"
#include "jk/oracle.hpp"
#include "jk/structure.hpp"
#include "jk/text_io.hpp"
#include "report.hpp"

namespace jktool {

using json = nlohmann::ordered_json;

namespace {

template <typename Parse>
auto load(const std::string& path, Parse parse) {
  const std::string text = jk::read_file(path);
  try {
    return parse(text);
  } catch (const jk::ParseError& e) {
    throw jk::ParseError(path + ": " + e.what(), 0, 0);
  }
}

jk::RatMatrix load_matrix(const std::string& path) { return load(path, jk::parse_matrix); }
jk::UnivarPoly load_poly(const std::string& path) { return load(path, jk::parse_poly); }

std::size_t multiplicity_in(const jk::UnivarPoly& chi, const jk::UnivarPoly& f) {
  return jk::split_f_part(chi, f).f_exponent;
}

json structure_json(const jk::JordanStructure& s) { return s.counts; }

struct Certification {
  std::size_t chains = 0;
  bool chains_ok = true;
  bool oracle_ok = true;
  jk::JordanStructure oracle;
  std::string problem;
};

Certification certify(const jk::RatMatrix& a, const jk::FactorReport& rep, std::string* dump) {
  Certification c;
  for (std::size_t r = 1; r <= rep.basis.size(); ++r) {
    for (const auto& b : rep.basis[r - 1]) {
      const auto ch = jk::chain_witness(a, rep.factor.f, b, r);
      ++c.chains;
      const auto res = jk::verify_chain(a, rep.factor.f, ch);
      if (!res.ok && c.chains_ok) {
        c.chains_ok = false;
        c.problem = "chain of rank " + std::to_string(r) + " fails at link " +
                    std::to_string(res.failing_link.value_or(0) + 1);
      }
      if (dump != nullptr) *dump += jk::format_chain(ch);
    }
  }
  c.oracle = jk::structure_by_ranks(a, rep.factor.f, rep.factor.multiplicity);
  if (!(c.oracle == rep.structure)) {
    c.oracle_ok = false;
    if (c.problem.empty()) c.problem = "rank oracle gives " + jk::to_string(c.oracle);
  }
  return c;
}

}  // namespace

std::vector<bool> preprocess_flags(const std::string& value) {
  if (value == "on") return {true};
  if (value == "off") return {false};
  if (value == "both") return {false, true};
  throw UsageError("--preprocess must be on, off or both");
}

int run_structure(const StructureArgs& args) {
  if (args.factors.empty() && !args.squarefree) throw UsageError("one of --factors or --squarefree is required");
  if (args.assume_irreducible && !args.squarefree) throw UsageError("--assume-irreducible only applies to --squarefree");

  const jk::RatMatrix a = load_matrix(args.matrix);
  if (!a.is_square()) throw jk::DimensionError("matrix is " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()));

  jk::FactoredCharPoly chi;
  if (args.squarefree) {
    if (!args.assume_irreducible) {
      throw UsageError("--squarefree needs --assume-irreducible: the algorithms require irreducible factors "
                       "and squarefree parts are not checked for irreducibility");
    }
    for (auto& [part, mult] : jk::squarefree_decompose(jk::charpoly(a))) chi.factors.push_back({part, mult});
  } else {
    chi = load(args.factors, jk::parse_factored);
    chi.validate();
    // Early termination trusts m, so a wrong multiplicity would go unnoticed.
    if (!(chi.expand() == jk::charpoly(a))) {
      throw jk::InconsistencyError("input", "the factors do not multiply to the characteristic polynomial of the matrix");
    }
  }

  const jk::MethodVariant variant{*jk::parse_method(args.variant), args.preprocess == "on"};
  const auto reports = jk::jordan_blocks_all(a, chi, variant, !args.sequential);

  std::string dump;
  std::vector<Certification> certs;
  bool certified = true;
  if (args.certify || !args.dump_chains.empty()) {
    for (const auto& rep : reports) {
      certs.push_back(certify(a, rep, args.dump_chains.empty() ? nullptr : &dump));
      certified = certified && certs.back().chains_ok && certs.back().oracle_ok;
    }
  }
  if (!args.dump_chains.empty()) jk::write_file(args.dump_chains, dump);

  if (args.json) {
    json out;
    out["schema"] = 1;
    out["n"] = a.rows();
    out["variant"] = args.variant;
    out["preprocess"] = variant.preprocess;
    out["factors"] = json::array();
    for (std::size_t i = 0; i < reports.size(); ++i) {
      const auto& rep = reports[i];
      json f;
      f["factor"] = jk::format_poly(rep.factor.f);
      f["d"] = rep.d;
      f["m"] = rep.factor.multiplicity;
      f["lbar"] = rep.structure.lbar();
      f["counts"] = structure_json(rep.structure);
      f["timings"] = timings_json(rep.timings);
      if (args.certify) {
        f["certification"] = {{"chains", certs[i].chains},
                              {"chains_verified", certs[i].chains_ok},
                              {"oracle_counts", structure_json(certs[i].oracle)},
                              {"oracle_agrees", certs[i].oracle_ok}};
      }
      out["factors"].push_back(std::move(f));
    }
    if (args.certify) out["certified"] = certified;
    std::cout << out.dump(2) << '\n';
  } else {
    for (std::size_t i = 0; i < reports.size(); ++i) {
      const auto& rep = reports[i];
      std::cout << "factor " << i + 1 << ": " << jk::format_poly(rep.factor.f) << "  d=" << rep.d
                << " m=" << rep.factor.multiplicity << " lbar=" << rep.structure.lbar() << '\n';
      std::cout << "  counts " << jk::to_string(rep.structure) << '\n';
      std::cout << "  timings " << timings_text(rep.timings) << '\n';
      if (args.certify) {
        const auto& c = certs[i];
        std::cout << "  certification: " << c.chains << " chains " << (c.chains_ok ? "verified" : "FAILED")
                  << ", oracle " << (c.oracle_ok ? "agrees" : "DISAGREES") << '\n';
        if (!c.problem.empty()) std::cout << "  problem: " << c.problem << '\n';
      }
    }
  }
  return certified ? kOk : kCertifyFailed;
}

int run_oracle(const OracleArgs& args) {
  const jk::RatMatrix a = load_matrix(args.matrix);
  if (!a.is_square()) throw jk::DimensionError("matrix is not square");
  const jk::UnivarPoly f = load_poly(args.factor);
  if (f.degree() < 1 || !f.is_monic()) throw jk::DimensionError("factor must be monic of degree >= 1");
  const std::size_t m = args.multiplicity.value_or(multiplicity_in(jk::charpoly(a), f));
  const auto ranks = jk::power_ranks(a, f);
  const auto s = jk::structure_by_ranks(a, f, m);
  if (args.json) {
    json out{{"schema", 1}, {"factor", jk::format_poly(f)}, {"d", f.degree()}, {"m", m},
             {"lbar", s.lbar()}, {"ranks", ranks}, {"counts", structure_json(s)}};
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << jk::to_string(s) << '\n';
  }
  return kOk;
}

int run_charpoly(const std::string& matrix, bool factored) {
  const jk::RatMatrix a = load_matrix(matrix);
  const jk::UnivarPoly chi = jk::charpoly(a);
  if (!factored) {
    std::cout << jk::format_poly(chi) << '\n';
    return kOk;
  }
  jk::FactoredCharPoly parts;
  for (auto& [p, m] : jk::squarefree_decompose(chi)) parts.factors.push_back({p, m});
  std::cout << jk::format_factored(parts);
  return kOk;
}

int run_genmat(const GenmatArgs& args) {
  const auto spec = jk::named_family(args.family, args.degree);
  const jk::RatMatrix a = jk::generate(spec, args.seed, jk::GenOptions{args.unimodular});
  jk::write_file(args.out, jk::format_matrix(a));
  jk::write_file(args.out + ".factors", jk::format_factored(spec.charpoly()));

  json side{{"schema", 1}, {"family", args.family}, {"degree", args.degree}, {"seed", args.seed},
            {"unimodular", args.unimodular}, {"n", a.rows()}, {"factors", json::array()}};
  for (const auto& fs : spec.factors) {
    side["factors"].push_back({{"factor", jk::format_poly(fs.f)},
                               {"m", fs.counts.multiplicity()},
                               {"counts", structure_json(fs.counts)}});
  }
  jk::write_file(args.out + ".spec.json", side.dump(2) + "\n");
  std::cerr << "wrote " << a.rows() << "x" << a.cols() << " matrix to " << args.out << '\n';
  return kOk;
}

int run_chains(const ChainsArgs& args) {
  const jk::RatMatrix a = load_matrix(args.matrix);
  if (!a.is_square()) throw jk::DimensionError("matrix is not square");
  const jk::UnivarPoly f = load_poly(args.factor);
  if (f.degree() < 1 || !f.is_monic()) throw jk::DimensionError("factor must be monic of degree >= 1");
  const jk::Vector u = load(args.vector, jk::parse_vector);
  std::size_t ell = 0;
  if (args.rank) {
    ell = *args.rank;
  } else {
    ell = jk::rank_and_witness(jk::eval_matrix(f, a), u, a.rows()).first;
    if (ell == 0) throw jk::InconsistencyError("chains", "the zero vector generates no chain");
  }
  const auto ch = jk::chain_witness(a, f, u, ell);
  const auto res = jk::verify_chain(a, f, ch);
  const std::string text = jk::format_chain(ch);
  if (args.out.empty()) std::cout << text;
  else jk::write_file(args.out, text);
  std::cerr << "chain of length " << ell << (res.ok ? " verified" : " FAILED verification") << '\n';
  return res.ok ? kOk : kCertifyFailed;
}

}  // namespace jktool
