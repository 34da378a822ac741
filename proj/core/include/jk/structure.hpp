#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "jk/column_space.hpp"
#include "jk/krylov.hpp"
#include "jk/matrix.hpp"
#include "jk/poly.hpp"

namespace jk {

/// Jordan block counts for one irreducible factor: counts[l-1] blocks of size
/// l. The length is the largest block size (empty when f does not divide chi).
struct JordanStructure {
  std::vector<std::size_t> counts;

  std::size_t lbar() const noexcept { return counts.size(); }
  /// sum of l * c_l, which must equal the multiplicity of f.
  std::size_t multiplicity() const;
  std::size_t count(std::size_t size) const;

  friend bool operator==(const JordanStructure&, const JordanStructure&) = default;
};

std::string to_string(const JordanStructure& s);

enum class Method {
  kFullElimination,         ///< eliminate every rank down to 1, no early exit
  kEarlyTermination,        ///< undetermined-multiplicity driven loop
  kEarlyTerminationMatrix,  ///< same, with a batch reduction on entering each rank
};

struct MethodVariant {
  Method method = Method::kEarlyTermination;
  bool preprocess = false;
};

/// "full", "alg6", "alg6-matrix"
std::string_view to_string(Method method);
std::optional<Method> parse_method(std::string_view name);

enum class ElimOutcome { kAccepted, kDemoted, kDropped };

struct ElimEvent {
  std::size_t rank;
  std::size_t m_before;  ///< undetermined multiplicity before the step
  ElimOutcome outcome;
};

/// Instrumentation filled in by the elimination engine.
struct EliminationCounters {
  std::vector<std::size_t> eliminations;      ///< per rank (index rank-1): candidates reduced
  std::vector<std::size_t> batch_reductions;  ///< per rank: columns pre-reduced in matrix form
  std::vector<std::size_t> accepted;          ///< per rank: basis elements found
  std::size_t demotions = 0;
  std::size_t dropped = 0;
  bool terminated_early = false;              ///< stopped because m <= 1
  std::size_t finalized_residual = 0;         ///< m assigned to c_1 without elimination
  std::vector<std::size_t> unprocessed;       ///< per rank: candidates left over at exit
  std::vector<ElimEvent> log;

  std::size_t eliminations_at(std::size_t rank) const;
  std::size_t accepted_at(std::size_t rank) const;
};

/// Mutable state of the Jordan-Krylov elimination for one (matrix, factor).
///
/// W holds the rank-1 witnesses of the accepted basis elements, spanned by
/// L_{A,d}(f(A)^(l-1) b). Its partner columns are S at rank `s_rank`: for
/// every basis column w_i, f(A)^(s_rank-1) partner_i = w_i. Lowering the rank
/// multiplies the partners by f(A).
struct EliminationState {
  EliminationState(std::size_t n, std::size_t degree, std::size_t multiplicity, ExtendedKGS candidates);

  std::size_t n;
  std::size_t d;
  std::size_t m;  ///< undetermined multiplicity
  ColumnSpace w;
  std::size_t s_rank = 0;
  std::size_t lhat = 0;
  std::vector<std::vector<Vector>> basis;  ///< accepted elements, [rank-1]
  ExtendedKGS vt;
  JordanStructure c;
  EliminationCounters counters;
  bool early_termination = true;
  bool matrix_form = false;
  bool done = false;

  /// S at `lhat`, saved when S is pushed below an unfinished rank.
  struct Snapshot {
    std::size_t rank;
    std::size_t w_dim;
    std::vector<Vector> partners;
  };
  std::optional<Snapshot> saved;
};

/// One rank of the Jordan-Krylov elimination: drains the rank-`ell` bucket,
/// accepting candidates whose witness leaves span(W) and demoting the rest
/// to their true lower rank. Requires S to be materialized at `ell`.
void jordan_krylov_elim(EliminationState& state, const RatMatrix& a, const RatMatrix& fa, std::size_t ell);

/// Matrix-form variant: pre-reduces the whole rank-`ell` bucket against W and
/// against itself before the per-entry elimination.
void matrix_form_elim(EliminationState& state, const RatMatrix& a, const RatMatrix& fa, std::size_t ell);

/// Descending-rank loop with early termination, lazy S materialization and
/// catch-up after a jump. Finalizes c_1 from the remaining multiplicity.
JordanStructure jordan_blocks_loop(EliminationState& state, const RatMatrix& a, const RatMatrix& fa,
                                   std::size_t ell);

/// Seeds the elimination with one top-rank generator and runs the loop.
JordanStructure jordan_blocks_main(const RatMatrix& a, const RatMatrix& fa, std::size_t degree,
                                   ExtendedKGS vt, std::size_t m, bool matrix_form = false,
                                   EliminationState* state_out = nullptr);

/// Eliminates every rank from lbar down to 1 without consulting m, then
/// checks sum l * c_l = m.
JordanStructure full_elimination(const RatMatrix& a, const RatMatrix& fa, std::size_t degree,
                                 ExtendedKGS vt, std::size_t m, EliminationState* state_out = nullptr);

/// Wall-clock seconds per phase. `preprocessing` is empty when disabled.
struct PhaseTimings {
  double f1a = 0;
  double annihpol = 0;
  double krylovgs = 0;
  std::optional<double> preprocessing;
  double jkelim = 0;
  double total = 0;
};

struct FactorReport {
  Factor factor;
  std::size_t d = 0;
  JordanStructure structure;
  std::size_t generators = 0;  ///< |V|
  std::size_t ext_entries = 0; ///< |V~| as produced by the extended set
  std::vector<std::vector<Vector>> basis;  ///< accepted Jordan-Krylov basis elements, [rank-1]
  EliminationCounters counters;
  AnnihStats annih;
  PhaseTimings timings;
};

/// Structure of the Jordan blocks of A for factor `index` of chi:
/// Krylov generating set, extended set, then the elimination chosen by
/// `variant`. An empty basis means the standard basis.
FactorReport jordan_blocks(const RatMatrix& a, const FactoredCharPoly& chi, std::size_t index,
                           std::span<const Vector> basis, MethodVariant variant);

/// All factors; runs them concurrently when `parallel` is set.
std::vector<FactorReport> jordan_blocks_all(const RatMatrix& a, const FactoredCharPoly& chi,
                                            MethodVariant variant, bool parallel = true);

}  // namespace jk
