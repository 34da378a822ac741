#include "doctest.h"
#include "jk/errors.hpp"
#include "jk/genmat.hpp"
#include "jk/krylov.hpp"
#include "jk/oracle.hpp"
#include "jk/structure.hpp"
#include "support/gen.hpp"

using namespace jk;

namespace {

UnivarPoly P(std::initializer_list<Rational> c) { return UnivarPoly(c); }

const MethodVariant kAllVariants[] = {
    {Method::kFullElimination, false},        {Method::kFullElimination, true},
    {Method::kEarlyTermination, false},       {Method::kEarlyTermination, true},
    {Method::kEarlyTerminationMatrix, false}, {Method::kEarlyTerminationMatrix, true},
};

ExtendedKGS ext_for(const RatMatrix& a, const Factor& fac, bool pre = false) {
  const RatMatrix fa = eval_matrix(fac.f, a);
  return extended_krylov_gs(fa, krylov_gs(a, fac), pre, fac.multiplicity);
}

JordanStructure S(std::vector<std::size_t> c) { return JordanStructure{std::move(c)}; }

}  // namespace

TEST_SUITE("jkstructure") {

TEST_CASE("JordanStructure basics") {
  const auto s = S({8, 0, 0, 1});
  CHECK(s.lbar() == 4);
  CHECK(s.multiplicity() == 12);
  CHECK(s.count(1) == 8);
  CHECK(s.count(9) == 0);
  CHECK(to_string(s) == "{8,0,0,1}");
  CHECK(to_string(JordanStructure{}) == "{}");
  CHECK(parse_method("alg6-matrix") == Method::kEarlyTerminationMatrix);
  CHECK(parse_method("full") == Method::kFullElimination);
  CHECK_FALSE(parse_method("fast").has_value());
  CHECK(to_string(Method::kEarlyTermination) == "alg6");
}

TEST_CASE("J2+J1: full elimination drops e1 and accepts e3 at rank 1") {
  const RatMatrix a = jkt::direct_sum({jkt::nilpotent_block(2), RatMatrix(1, 1)});
  const Factor fac{UnivarPoly::lambda(), 3};
  EliminationState st(0, 0, 0, ExtendedKGS{});
  const auto s = full_elimination(a, a, 1, ext_for(a, fac), 3, &st);
  CHECK(s == S({1, 1}));
  CHECK(st.counters.accepted_at(2) == 1);
  CHECK(st.counters.accepted_at(1) == 1);
  CHECK(st.counters.dropped == 1);
  REQUIRE(st.basis.size() >= 1);
  REQUIRE(st.basis[0].size() == 1);
  CHECK(st.basis[0][0] == unit_vector(3, 2));
  CHECK(structure_by_ranks(a, UnivarPoly::lambda(), 3) == s);
}

TEST_CASE("jordan_krylov_elim on an empty bucket leaves the state unchanged") {
  const RatMatrix a = jkt::nilpotent_block(2);
  EliminationState st(2, 1, 2, ExtendedKGS{});
  st.s_rank = 1;
  jordan_krylov_elim(st, a, a, 1);
  CHECK(st.m == 2);
  CHECK(st.w.empty());
  CHECK(st.counters.eliminations_at(1) == 0);
}

TEST_CASE("jordan_blocks_main exits") {
  const RatMatrix z(3, 3);
  // lbar = 1
  CHECK(jordan_blocks_main(z, z, 1, ext_for(z, {UnivarPoly::lambda(), 3}), 3) == S({3}));
  // lbar = 2, m = 3: m drops to 1 after seeding
  const RatMatrix a = jkt::direct_sum({jkt::nilpotent_block(2), RatMatrix(1, 1)});
  EliminationState st(0, 0, 0, ExtendedKGS{});
  CHECK(jordan_blocks_main(a, a, 1, ext_for(a, {UnivarPoly::lambda(), 3}), 3, false, &st) == S({1, 1}));
  CHECK(st.counters.terminated_early);
  CHECK(st.counters.finalized_residual == 1);
  CHECK(st.counters.eliminations_at(1) == 0);
  // empty set with m = 0
  CHECK(jordan_blocks_main(a, a, 1, ExtendedKGS{}, 0) == JordanStructure{});
  CHECK_THROWS_AS(jordan_blocks_main(a, a, 1, ExtendedKGS{}, 2), InconsistencyError);
  CHECK(full_elimination(a, a, 1, ExtendedKGS{}, 0) == JordanStructure{});
}

TEST_CASE("wrong multiplicity is reported") {
  const RatMatrix a = jkt::direct_sum({jkt::nilpotent_block(2), RatMatrix(1, 1)});
  CHECK_THROWS_AS(full_elimination(a, a, 1, ext_for(a, {UnivarPoly::lambda(), 4}), 4), InconsistencyError);
  FactoredCharPoly chi{{{UnivarPoly::lambda(), 4}}};
  for (const auto& v : kAllVariants) CHECK_THROWS_AS(jordan_blocks(a, chi, 0, {}, v), InconsistencyError);
}

TEST_CASE("reducible factor is reported") {
  // lambda^2 - 1 = (lambda - 1)(lambda + 1) with A = diag(1, 1, -1, -1)
  RatMatrix a(4, 4);
  a(0, 0) = 1;
  a(1, 1) = 1;
  a(2, 2) = -1;
  a(3, 3) = -1;
  FactoredCharPoly chi{{{P({-1, 0, 1}), 2}}};
  bool threw = false;
  for (const auto& v : kAllVariants) {
    try {
      const auto r = jordan_blocks(a, chi, 0, {}, v);
      CHECK(r.structure.multiplicity() == 2);
    } catch (const InconsistencyError&) {
      threw = true;
    }
  }
  CHECK(threw);
}

TEST_CASE("trivial pipeline instances") {
  FactoredCharPoly chi{{{P({-1, 1}), 3}}};
  for (const auto& v : kAllVariants) {
    CHECK(jordan_blocks(RatMatrix::identity(3), chi, 0, {}, v).structure == S({3}));
  }
  FactoredCharPoly c2{{{P({1, 0, 1}), 1}}};
  for (const auto& v : kAllVariants) {
    CHECK(jordan_blocks(companion(P({1, 0, 1})), c2, 0, {}, v).structure == S({1}));
  }
  FactoredCharPoly bad{{{P({-1, 1}), 2}}};
  CHECK_THROWS_AS(jordan_blocks(RatMatrix::identity(3), bad, 0, {}, {}), InconsistencyError);
}

TEST_CASE("named families under every variant") {
  struct Case {
    const char* family;
    std::size_t d;
  };
  for (const Case c : {Case{"s51", 4}, Case{"s52", 2}, Case{"s53", 3}, Case{"s54", 2}, Case{"s55", 2}}) {
    const auto spec = named_family(c.family, c.d);
    const RatMatrix a = generate(spec, 7);
    for (const auto& v : kAllVariants) {
      const auto reps = jordan_blocks_all(a, spec.charpoly(), v, true);
      REQUIRE(reps.size() == spec.factors.size());
      for (std::size_t i = 0; i < reps.size(); ++i) {
        INFO(c.family << " variant " << to_string(v.method) << " pre " << v.preprocess);
        CHECK(reps[i].structure == spec.factors[i].counts);
      }
    }
  }
}

TEST_CASE("s53: no elimination below rank 6") {
  const auto spec = named_family("s53", 4);
  const RatMatrix a = generate(spec, 3);
  for (Method m : {Method::kEarlyTermination, Method::kEarlyTerminationMatrix}) {
    const auto rep = jordan_blocks(a, spec.charpoly(), 0, {}, {m, false});
    CHECK(rep.structure == S({0, 0, 0, 0, 0, 2}));
    CHECK(rep.counters.accepted_at(6) == 2);
    for (std::size_t r = 1; r <= 5; ++r) CHECK(rep.counters.eliminations_at(r) == 0);
    CHECK(rep.counters.terminated_early);
    CHECK(rep.counters.finalized_residual == 0);
  }
}

TEST_CASE("s51: c1 finalized from the residual multiplicity") {
  const auto spec = named_family("s51", 4);
  const RatMatrix a = generate(spec, 3);
  const auto rep = jordan_blocks(a, spec.charpoly(), 0, {}, {Method::kEarlyTermination, false});
  CHECK(rep.structure == S({8, 0, 0, 1}));
  CHECK(rep.counters.eliminations_at(1) == 0);
  CHECK(rep.counters.finalized_residual == 8);
  CHECK(rep.annih.calls == 0);
  const auto full = jordan_blocks(a, spec.charpoly(), 0, {}, {Method::kFullElimination, false});
  CHECK(full.counters.accepted_at(1) == 8);
  CHECK(full.annih.calls == a.rows());
}

TEST_CASE("property: no block of size k once the undetermined multiplicity is below k") {
  jkt::Gen g(61);
  for (int t = 0; t < 40; ++t) {
    const auto spec = g.spec(24);
    const RatMatrix a = generate(spec, g.raw());
    for (std::size_t i = 0; i < spec.factors.size(); ++i) {
      const auto rep = jordan_blocks(a, spec.charpoly(), i, {}, {Method::kEarlyTermination, g.coin()});
      for (const auto& ev : rep.counters.log) {
        if (ev.outcome == ElimOutcome::kAccepted) CHECK(ev.m_before >= ev.rank);
      }
    }
  }
}

TEST_CASE("property: variants agree with each other and with the rank oracle") {
  jkt::Gen g(62);
  for (int t = 0; t < 40; ++t) {
    const auto spec = g.spec(24);
    const RatMatrix a = generate(spec, g.raw(), GenOptions{g.coin(30)});
    const auto chi = spec.charpoly();
    for (std::size_t i = 0; i < spec.factors.size(); ++i) {
      const auto want = structure_by_ranks(a, spec.factors[i].f, chi.factors[i].multiplicity);
      CHECK(want == spec.factors[i].counts);
      for (const auto& v : kAllVariants) {
        const auto rep = jordan_blocks(a, chi, i, {}, v);
        CHECK(rep.structure == want);
        CHECK(rep.structure.multiplicity() == chi.factors[i].multiplicity);
      }
    }
  }
}

TEST_CASE("property: random nilpotent matrices match the oracle") {
  jkt::Gen g(63);
  for (int t = 0; t < 30; ++t) {
    const RatMatrix a = g.nilpotent(8);
    FactoredCharPoly chi{{{UnivarPoly::lambda(), 8}}};
    const auto want = structure_by_ranks(a, UnivarPoly::lambda(), 8);
    for (const auto& v : kAllVariants) CHECK(jordan_blocks(a, chi, 0, {}, v).structure == want);
  }
}

TEST_CASE("property: a non-standard basis gives the same structure") {
  jkt::Gen g(64);
  for (int t = 0; t < 15; ++t) {
    const auto spec = g.spec(14);
    const RatMatrix a = generate(spec, g.raw());
    const std::size_t n = a.rows();
    RatMatrix b = g.matrix(n, n, 3, 2, 30);
    while (rank(b) < n) b = g.matrix(n, n, 3, 2, 30);
    const auto basis = b.columns();
    for (std::size_t i = 0; i < spec.factors.size(); ++i) {
      const auto rep = jordan_blocks(a, spec.charpoly(), i, basis, {Method::kEarlyTermination, false});
      CHECK(rep.structure == spec.factors[i].counts);
    }
  }
}

TEST_CASE("property: factor order does not matter") {
  jkt::Gen g(65);
  for (int t = 0; t < 10; ++t) {
    const auto spec = g.spec(20);
    const RatMatrix a = generate(spec, g.raw());
    auto chi = spec.charpoly();
    auto rev = chi;
    std::reverse(rev.factors.begin(), rev.factors.end());
    const auto r1 = jordan_blocks_all(a, chi, {}, false);
    const auto r2 = jordan_blocks_all(a, rev, {}, true);
    for (std::size_t i = 0; i < r1.size(); ++i) CHECK(r1[i].structure == r2[r1.size() - 1 - i].structure);
  }
}

}
