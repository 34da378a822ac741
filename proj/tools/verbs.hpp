#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace jktool {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,         // bad flags, unreadable files, parse errors
  kInconsistent = 2,  // input contradicts itself (wrong factor, multiplicity, shape)
  kCertifyFailed = 3,
};

/// Thrown for flag combinations CLI11 cannot express.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct StructureArgs {
  std::string matrix;
  std::string factors;
  bool squarefree = false;
  bool assume_irreducible = false;
  std::string variant = "alg6";
  std::string preprocess = "off";
  bool certify = false;
  bool json = false;
  bool sequential = false;
  std::string dump_chains;
};

struct OracleArgs {
  std::string matrix;
  std::string factor;
  std::optional<std::size_t> multiplicity;
  bool json = false;
};

struct GenmatArgs {
  std::string family;
  std::size_t degree = 4;
  std::uint64_t seed = 1;
  std::string out;
  bool unimodular = false;
};

struct ChainsArgs {
  std::string matrix;
  std::string factor;
  std::string vector;
  std::optional<std::size_t> rank;
  std::string out;
};

struct BenchArgs {
  std::string family;
  std::vector<std::size_t> degrees;
  std::string variants = "all";
  std::string preprocess = "both";
  std::size_t repeat = 1;
  std::uint64_t seed = 1;
  std::string out;
  bool table = false;
};

int run_structure(const StructureArgs& args);
int run_oracle(const OracleArgs& args);
int run_charpoly(const std::string& matrix, bool factored);
int run_genmat(const GenmatArgs& args);
int run_chains(const ChainsArgs& args);
int run_bench(const BenchArgs& args);

/// "on" / "off" / "both" to the list of flags it selects.
std::vector<bool> preprocess_flags(const std::string& value);

}  // namespace jktool
