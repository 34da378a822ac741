#include "jk/structure.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <sstream>

#include "jk/errors.hpp"

namespace jk {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void bump(std::vector<std::size_t>& per_rank, std::size_t rank) {
  if (per_rank.size() < rank) per_rank.resize(rank);
  ++per_rank[rank - 1];
}

std::size_t at_rank(const std::vector<std::size_t>& per_rank, std::size_t rank) {
  return rank >= 1 && rank <= per_rank.size() ? per_rank[rank - 1] : 0;
}

// Multiplies the S partners by f(A) until they sit at `target`.
void push_s_down(EliminationState& st, const RatMatrix& fa, std::size_t target) {
  if (target >= st.s_rank) {
    if (st.w.empty()) st.s_rank = target;
    return;
  }
  if (!st.w.empty()) {
    std::vector<Vector> partners = st.w.partners();
    for (std::size_t r = st.s_rank; r > target; --r) {
      for (auto& p : partners) p = mat_vec(fa, p);
    }
    st.w.set_partners(std::move(partners));
  }
  st.s_rank = target;
}

// Adds L_{A,d}(r') to W paired with L_{A,d}(r).
void extend_w(EliminationState& st, const RatMatrix& a, const Vector& r, const Vector& r_prime) {
  const auto s_cols = krylov_block(a, r, st.d);
  const auto w_cols = krylov_block(a, r_prime, st.d);
  for (std::size_t j = 0; j < st.d; ++j) {
    if (!st.w.insert(w_cols[j], s_cols[j])) {
      throw InconsistencyError("JKElim", "Krylov block of an accepted witness is dependent on W; "
                                         "the factor f is not irreducible");
    }
  }
}

void accept(EliminationState& st, const RatMatrix& a, std::size_t ell, Vector r, const Vector& r_prime) {
  if (ell > st.m) {
    throw InconsistencyError("JKElim", "undetermined multiplicity would become negative (" +
                                           std::to_string(st.m) + " - " + std::to_string(ell) +
                                           "); f or its multiplicity is wrong");
  }
  if (st.basis.size() < ell) st.basis.resize(ell);
  if (st.c.counts.size() < ell) st.c.counts.resize(ell);
  st.m -= ell;
  ++st.c.counts[ell - 1];
  bump(st.counters.accepted, ell);
  if (st.early_termination && st.m <= 1) {
    st.basis[ell - 1].push_back(std::move(r));
    st.c.counts[0] += st.m;
    st.counters.finalized_residual = st.m;
    st.counters.terminated_early = true;
    st.done = true;
    return;
  }
  extend_w(st, a, r, r_prime);
  st.basis[ell - 1].push_back(std::move(r));
}

void record_leftovers(EliminationState& st) {
  st.counters.unprocessed.assign(st.vt.lbar(), 0);
  for (std::size_t r = 1; r <= st.vt.lbar(); ++r) st.counters.unprocessed[r - 1] = st.vt.size(r);
}

void eliminate_rank(EliminationState& st, const RatMatrix& a, const RatMatrix& fa, std::size_t ell) {
  if (st.matrix_form) {
    matrix_form_elim(st, a, fa, ell);
  } else {
    jordan_krylov_elim(st, a, fa, ell);
  }
}

void demote(EliminationState& st, const RatMatrix& fa, std::size_t ell, Vector r) {
  auto [rank, witness] = rank_and_witness(fa, r, ell - 1);
  st.vt.push({std::move(r), rank, std::move(witness)});
  ++st.counters.demotions;
}

}  // namespace

std::size_t JordanStructure::multiplicity() const {
  std::size_t total = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) total += (i + 1) * counts[i];
  return total;
}

std::size_t JordanStructure::count(std::size_t size) const {
  return size >= 1 && size <= counts.size() ? counts[size - 1] : 0;
}

std::string to_string(const JordanStructure& s) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < s.counts.size(); ++i) os << (i ? "," : "") << s.counts[i];
  os << '}';
  return os.str();
}

std::string_view to_string(Method method) {
  switch (method) {
    case Method::kFullElimination: return "full";
    case Method::kEarlyTermination: return "alg6";
    case Method::kEarlyTerminationMatrix: return "alg6-matrix";
  }
  return "?";
}

std::optional<Method> parse_method(std::string_view name) {
  if (name == "full") return Method::kFullElimination;
  if (name == "alg6") return Method::kEarlyTermination;
  if (name == "alg6-matrix") return Method::kEarlyTerminationMatrix;
  return std::nullopt;
}

std::size_t EliminationCounters::eliminations_at(std::size_t rank) const { return at_rank(eliminations, rank); }
std::size_t EliminationCounters::accepted_at(std::size_t rank) const { return at_rank(accepted, rank); }

EliminationState::EliminationState(std::size_t n_, std::size_t degree, std::size_t multiplicity,
                                   ExtendedKGS candidates)
    : n(n_), d(degree), m(multiplicity), w(n_, n_), vt(std::move(candidates)) {
  s_rank = vt.lbar();
  lhat = vt.lbar();
  basis.resize(vt.lbar());
  c.counts.assign(vt.lbar(), 0);
}

void jordan_krylov_elim(EliminationState& st, const RatMatrix& a, const RatMatrix& fa, std::size_t ell) {
  if (ell == 0) throw std::invalid_argument("jordan_krylov_elim: rank must be >= 1");
  if (!st.w.empty() && st.s_rank != ell) {
    throw std::logic_error("jordan_krylov_elim: S is materialized at rank " + std::to_string(st.s_rank) +
                           ", not " + std::to_string(ell));
  }
  st.s_rank = ell;
  while (!st.done && !st.vt.empty(ell)) {
    ExtEntry e = st.vt.take(ell);
    bump(st.counters.eliminations, ell);
    const std::size_t m_before = st.m;
    auto [r_prime, r] = st.w.reduce_paired(e.witness, e.v);
    if (!is_zero(r_prime)) {
      accept(st, a, ell, std::move(r), r_prime);
      st.counters.log.push_back({ell, m_before, ElimOutcome::kAccepted});
    } else if (ell > 1 && !is_zero(r)) {
      demote(st, fa, ell, std::move(r));
      st.counters.log.push_back({ell, m_before, ElimOutcome::kDemoted});
    } else {
      ++st.counters.dropped;
      st.counters.log.push_back({ell, m_before, ElimOutcome::kDropped});
    }
  }
}

void matrix_form_elim(EliminationState& st, const RatMatrix& a, const RatMatrix& fa, std::size_t ell) {
  if (ell == 0) throw std::invalid_argument("matrix_form_elim: rank must be >= 1");
  if (!st.w.empty() && st.s_rank != ell) {
    throw std::logic_error("matrix_form_elim: S is not materialized at rank " + std::to_string(ell));
  }
  auto batch = st.vt.take_all(ell);
  if (!batch.empty()) {
    // Reduce every witness against W, then echelonize the batch among itself,
    // replaying each operation on the generator side.
    ColumnSpace local(st.n, st.n);
    for (auto& e : batch) {
      bump(st.counters.batch_reductions, ell);
      auto [w_red, v_red] = st.w.reduce_paired(e.witness, e.v);
      if (!is_zero(w_red) && local.insert(w_red, v_red)) continue;
      Vector r = local.empty() ? std::move(v_red) : local.reduce_paired(w_red, v_red).second;
      if (ell > 1 && !is_zero(r)) {
        demote(st, fa, ell, std::move(r));
      } else {
        ++st.counters.dropped;
      }
    }
    for (std::size_t i = 0; i < local.dim(); ++i) {
      st.vt.push({local.partners()[i], ell, local.basis()[i]});
    }
  }
  jordan_krylov_elim(st, a, fa, ell);
}

JordanStructure jordan_blocks_loop(EliminationState& st, const RatMatrix& a, const RatMatrix& fa,
                                   std::size_t ell) {
  while (ell > 1) {
    if (ell < st.lhat && st.s_rank != ell) {
      push_s_down(st, fa, st.lhat);
      st.saved = EliminationState::Snapshot{st.lhat, st.w.dim(), st.w.partners()};
      push_s_down(st, fa, ell);
    }
    eliminate_rank(st, a, fa, ell);
    if (st.done) break;
    push_s_down(st, fa, ell - 1);
    if (st.lhat == ell) st.lhat = ell - 1;
    if (st.basis.size() >= ell && st.basis[ell - 1].empty() && ell < st.lhat) {
      // Nothing at the jumped-to rank: finish the skipped ranks lhat..ell.
      if (!st.saved || st.saved->rank != st.lhat || st.saved->w_dim != st.w.dim()) {
        throw std::logic_error("jordan_blocks_loop: no valid S snapshot for catch-up");
      }
      if (!st.w.empty()) st.w.set_partners(std::move(st.saved->partners));
      st.s_rank = st.lhat;
      st.saved.reset();
      for (std::size_t lp = st.lhat; lp >= ell; --lp) {
        eliminate_rank(st, a, fa, lp);
        if (st.done) break;
        push_s_down(st, fa, lp - 1);
      }
      if (st.done) break;
      st.lhat = ell - 1;
    }
    ell = std::min(st.m, ell - 1);
  }
  if (!st.done) {
    st.c.counts.at(0) += st.m;
    st.counters.finalized_residual = st.m;
  }
  record_leftovers(st);
  return st.c;
}

JordanStructure jordan_blocks_main(const RatMatrix& a, const RatMatrix& fa, std::size_t degree,
                                   ExtendedKGS vt, std::size_t m, bool matrix_form,
                                   EliminationState* state_out) {
  const std::size_t lbar = vt.lbar();
  EliminationState st(a.rows(), degree, m, std::move(vt));
  st.matrix_form = matrix_form;
  auto finish = [&](JordanStructure s) {
    if (state_out != nullptr) *state_out = std::move(st);
    return s;
  };

  if (lbar == 0) {
    if (m != 0) {
      throw InconsistencyError("JordanBlocksMain", "no generalized eigenvectors found but m = " + std::to_string(m));
    }
    return finish({});
  }
  if (lbar > m) {
    throw InconsistencyError("JordanBlocksMain", "largest rank " + std::to_string(lbar) +
                                                     " exceeds the multiplicity m = " + std::to_string(m));
  }
  if (lbar == 1) {
    st.c.counts = {m};
    st.counters.finalized_residual = m;
    st.counters.terminated_early = true;
    record_leftovers(st);
    return finish(st.c);
  }

  st.m = m - lbar;
  ExtEntry seed = st.vt.take(lbar);
  st.c.counts.assign(lbar, 0);
  st.c.counts[lbar - 1] = 1;
  bump(st.counters.accepted, lbar);
  if (st.m <= 1) {
    st.c.counts[0] = st.m;
    st.basis[lbar - 1].push_back(std::move(seed.v));
    st.counters.finalized_residual = st.m;
    st.counters.terminated_early = true;
    st.done = true;
    record_leftovers(st);
    return finish(st.c);
  }
  st.s_rank = lbar;
  extend_w(st, a, seed.v, seed.witness);
  st.basis[lbar - 1].push_back(std::move(seed.v));
  st.lhat = lbar;
  const std::size_t ell = std::min(st.lhat, st.m);
  JordanStructure s = jordan_blocks_loop(st, a, fa, ell);
  return finish(std::move(s));
}

JordanStructure full_elimination(const RatMatrix& a, const RatMatrix& fa, std::size_t degree,
                                 ExtendedKGS vt, std::size_t m, EliminationState* state_out) {
  const std::size_t lbar = vt.lbar();
  EliminationState st(a.rows(), degree, m, std::move(vt));
  st.early_termination = false;
  for (std::size_t ell = lbar; ell >= 1; --ell) {
    push_s_down(st, fa, ell);
    jordan_krylov_elim(st, a, fa, ell);
  }
  record_leftovers(st);
  const std::size_t total = st.c.multiplicity();
  if (total != m) {
    throw InconsistencyError("JKElim", "multiplicity identity violated: sum l*c_l = " + std::to_string(total) +
                                           " but m = " + std::to_string(m));
  }
  JordanStructure s = st.c;
  if (state_out != nullptr) *state_out = std::move(st);
  return s;
}

FactorReport jordan_blocks(const RatMatrix& a, const FactoredCharPoly& chi, std::size_t index,
                           std::span<const Vector> basis, MethodVariant variant) {
  if (!a.is_square()) throw DimensionError("jordan_blocks: matrix is not square");
  if (index >= chi.factors.size()) throw std::out_of_range("jordan_blocks: factor index out of range");
  chi.validate();
  if (chi.degree() != a.rows()) {
    throw InconsistencyError("input", "degree of the factored characteristic polynomial is " +
                                          std::to_string(chi.degree()) + " but n = " + std::to_string(a.rows()));
  }

  const auto t_total = Clock::now();
  FactorReport rep;
  rep.factor = chi.factors[index];
  rep.d = static_cast<std::size_t>(rep.factor.f.degree());
  const std::size_t m = rep.factor.multiplicity;

  auto t0 = Clock::now();
  const RatMatrix fa = eval_matrix(rep.factor.f, a);
  rep.timings.f1a = seconds_since(t0);

  const auto route = variant.method == Method::kFullElimination ? AnnihilatorRoute::kDirect
                                                                : AnnihilatorRoute::kShifted;
  KrylovProfile prof;
  KrylovGS v = krylov_gs(a, fa, rep.factor, basis, route, &prof);
  rep.timings.annihpol = prof.annihpol_seconds;
  rep.timings.krylovgs = prof.krylovgs_seconds;
  rep.annih = prof.annih;
  rep.generators = v.vectors.size();

  if (variant.preprocess) {
    t0 = Clock::now();
    if (!v.vectors.empty()) {
      v.vectors = column_reduce_matrix(RatMatrix::from_columns(v.vectors, a.rows())).columns();
    }
    rep.timings.preprocessing = seconds_since(t0);
  }

  t0 = Clock::now();
  ExtendedKGS vt = extended_krylov_gs(fa, v, false, m);
  rep.ext_entries = vt.total();
  EliminationState st(0, 0, 0, ExtendedKGS{});
  if (variant.method == Method::kFullElimination) {
    rep.structure = full_elimination(a, fa, rep.d, std::move(vt), m, &st);
  } else {
    rep.structure = jordan_blocks_main(a, fa, rep.d, std::move(vt), m,
                                       variant.method == Method::kEarlyTerminationMatrix, &st);
  }
  rep.timings.jkelim = seconds_since(t0);
  rep.basis = std::move(st.basis);
  rep.counters = std::move(st.counters);

  if (rep.structure.multiplicity() != m) {
    throw InconsistencyError("JordanBlocks", "multiplicity identity violated: sum l*c_l = " +
                                                 std::to_string(rep.structure.multiplicity()) +
                                                 " but m = " + std::to_string(m));
  }
  rep.timings.total = seconds_since(t_total);
  return rep;
}

std::vector<FactorReport> jordan_blocks_all(const RatMatrix& a, const FactoredCharPoly& chi,
                                            MethodVariant variant, bool parallel) {
  std::vector<FactorReport> out;
  out.reserve(chi.factors.size());
  if (!parallel || chi.factors.size() < 2) {
    for (std::size_t i = 0; i < chi.factors.size(); ++i) out.push_back(jordan_blocks(a, chi, i, {}, variant));
    return out;
  }
  std::vector<std::future<FactorReport>> jobs;
  jobs.reserve(chi.factors.size());
  for (std::size_t i = 0; i < chi.factors.size(); ++i) {
    jobs.push_back(std::async(std::launch::async, [&, i] { return jordan_blocks(a, chi, i, {}, variant); }));
  }
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

}  // namespace jk
