#include <iostream>

#include "CLI11.hpp"
#include "jk/errors.hpp"
#include "verbs.hpp"

using namespace jktool;

int main(int argc, char** argv) {
  CLI::App app{"Exact Jordan block structure over the rationals"};
  app.require_subcommand(1);

  StructureArgs sa;
  auto* structure = app.add_subcommand("structure", "Jordan block counts for each factor of the characteristic polynomial");
  structure->add_option("--matrix", sa.matrix, "matrix file")->required()->check(CLI::ExistingFile);
  auto* factors_opt = structure->add_option("--factors", sa.factors, "factored characteristic polynomial")->check(CLI::ExistingFile);
  auto* sqf = structure->add_flag("--squarefree", sa.squarefree, "use the squarefree parts of charpoly(A) as factors");
  structure->add_flag("--assume-irreducible", sa.assume_irreducible, "assert that every squarefree part is irreducible");
  factors_opt->excludes(sqf);
  structure->add_option("--variant", sa.variant, "full | alg6 | alg6-matrix")
      ->check(CLI::IsMember({"full", "alg6", "alg6-matrix"}));
  structure->add_option("--preprocess", sa.preprocess, "on | off")->check(CLI::IsMember({"on", "off"}));
  structure->add_flag("--certify", sa.certify, "verify symbolic chains and compare with the rank oracle");
  structure->add_flag("--json", sa.json, "machine-readable report");
  structure->add_flag("--sequential", sa.sequential, "process factors one after another");
  structure->add_option("--dump-chains", sa.dump_chains, "write the symbolic chains of the basis to FILE");

  OracleArgs oa;
  auto* oracle = app.add_subcommand("oracle", "block counts from ranks of powers of f(A)");
  oracle->add_option("--matrix", oa.matrix)->required()->check(CLI::ExistingFile);
  oracle->add_option("--factor", oa.factor, "polynomial file")->required()->check(CLI::ExistingFile);
  oracle->add_option("--multiplicity", oa.multiplicity, "defaults to the multiplicity of f in charpoly(A)");
  oracle->add_flag("--json", oa.json);

  std::string cp_matrix;
  bool cp_factored = false;
  auto* cp = app.add_subcommand("charpoly", "characteristic polynomial");
  cp->add_option("--matrix", cp_matrix)->required()->check(CLI::ExistingFile);
  cp->add_flag("--squarefree", cp_factored, "print the squarefree decomposition in factored form");

  GenmatArgs ga;
  auto* genmat = app.add_subcommand("genmat", "test matrix with a prescribed structure");
  genmat->add_option("--family", ga.family, "s51 | s52 | s53 | s54 | s55")->required();
  genmat->add_option("--degree", ga.degree, "degree of each irreducible factor")->check(CLI::PositiveNumber);
  genmat->add_option("--seed", ga.seed, "permutation seed");
  genmat->add_option("--out", ga.out, "matrix file; FILE.factors and FILE.spec.json are written next to it")->required();
  genmat->add_flag("--unimodular", ga.unimodular, "add integer elementary similarities");

  ChainsArgs ca;
  auto* chains = app.add_subcommand("chains", "symbolic Jordan chain generated by a vector");
  chains->add_option("--matrix", ca.matrix)->required()->check(CLI::ExistingFile);
  chains->add_option("--factor", ca.factor, "polynomial file")->required()->check(CLI::ExistingFile);
  chains->add_option("--vector", ca.vector, "n x 1 matrix file")->required()->check(CLI::ExistingFile);
  chains->add_option("--rank", ca.rank, "expected rank; computed when omitted");
  chains->add_option("--out", ca.out, "write the chain here instead of stdout");

  BenchArgs ba;
  std::string degrees = "4";
  auto* bench = app.add_subcommand("bench", "per-phase timings on a generated family");
  bench->add_option("--family", ba.family)->required();
  bench->add_option("--degrees", degrees, "comma separated degrees");
  bench->add_option("--variants", ba.variants, "all or a comma separated subset of full,alg6,alg6-matrix");
  bench->add_option("--preprocess", ba.preprocess, "on | off | both")->check(CLI::IsMember({"on", "off", "both"}));
  bench->add_option("--repeat", ba.repeat, "runs per cell; the median is reported")->check(CLI::PositiveNumber);
  bench->add_option("--seed", ba.seed);
  bench->add_option("--out", ba.out, "CSV file (stdout when omitted)");
  bench->add_flag("--table", ba.table, "also print the tables to stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*structure) return run_structure(sa);
    if (*oracle) return run_oracle(oa);
    if (*cp) return run_charpoly(cp_matrix, cp_factored);
    if (*genmat) return run_genmat(ga);
    if (*chains) return run_chains(ca);
    if (*bench) {
      for (const auto& tok : CLI::detail::split(degrees, ',')) {
        if (tok.empty()) continue;
        std::size_t pos = 0;
        const unsigned long v = std::stoul(tok, &pos);
        if (pos != tok.size() || v == 0) throw UsageError("invalid degree '" + tok + "'");
        ba.degrees.push_back(v);
      }
      if (ba.degrees.empty()) throw UsageError("--degrees is empty");
      return run_bench(ba);
    }
  } catch (const jk::InconsistencyError& e) {
    std::cerr << "inconsistent input: " << e.what() << '\n';
    return kInconsistent;
  } catch (const jk::DimensionError& e) {
    std::cerr << "inconsistent input: " << e.what() << '\n';
    return kInconsistent;
  } catch (const jk::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
