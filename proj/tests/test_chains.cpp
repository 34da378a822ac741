#include "doctest.h"
#include "jk/chains.hpp"
#include "jk/errors.hpp"
#include "jk/genmat.hpp"
#include "jk/structure.hpp"
#include "support/gen.hpp"

using namespace jk;

namespace {
UnivarPoly P(std::initializer_list<Rational> c) { return UnivarPoly(c); }
}

TEST_SUITE("chains") {

TEST_CASE("f = lambda gives the plain Krylov chain") {
  const RatMatrix j = jkt::nilpotent_block(3);
  const Vector u = unit_vector(3, 2);
  const auto ch = chain_witness(j, UnivarPoly::lambda(), u, 3);
  REQUIRE(ch.length() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    // links[i] = p^(3-i) = A^i u
    const Vector want = mat_vec(jkt::brute_pow(j, i), u);
    for (std::size_t r = 0; r < 3; ++r) CHECK(ch.links[i].entries[r] == UnivarPoly::constant(want[r]));
  }
  CHECK(verify_chain(j, UnivarPoly::lambda(), ch).ok);
}

TEST_CASE("companion of (lambda^2 - 2)^2") {
  const UnivarPoly f = P({-2, 0, 1});
  const RatMatrix a = companion(f * f);
  const auto ch = chain_witness(a, f, unit_vector(4, 0), 2);
  REQUIRE(ch.length() == 2);
  CHECK(apply_shifted(a, ch.links[0]).entries == ch.links[1].entries);
  CHECK(apply_shifted(a, ch.links[1]).is_zero());
  CHECK_FALSE(ch.links[1].is_zero());
  CHECK(verify_chain(a, f, ch).ok);
  for (const auto& l : ch.links)
    for (const auto& e : l.entries) CHECK(e.degree() < 2);
}

TEST_CASE("rank one vector is an eigenvector mod f") {
  const UnivarPoly f = P({1, 0, 1});
  const RatMatrix a = companion(f);
  const auto ch = chain_witness(a, f, unit_vector(2, 1), 1);
  REQUIRE(ch.length() == 1);
  CHECK(apply_shifted(a, ch.links[0]).is_zero());
  CHECK(verify_chain(a, f, ch).ok);
}

TEST_CASE("rank mismatch names the actual rank") {
  const RatMatrix j = jkt::nilpotent_block(3);
  try {
    chain_witness(j, UnivarPoly::lambda(), unit_vector(3, 1), 3);
    FAIL("expected an exception");
  } catch (const InconsistencyError& e) {
    CHECK(std::string(e.what()).find("rank 2") != std::string::npos);
  }
  CHECK_THROWS_AS(chain_witness(j, UnivarPoly::lambda(), unit_vector(3, 2), 2), InconsistencyError);
  CHECK_THROWS_AS(chain_witness(j, UnivarPoly::lambda(), zero_vector(3), 1), InconsistencyError);
}

TEST_CASE("verify_chain rejects mutations and accepts the empty chain") {
  const UnivarPoly f = P({-2, 0, 1});
  const RatMatrix a = companion(pow(f, 3));
  auto ch = chain_witness(a, f, unit_vector(6, 0), 3);
  REQUIRE(verify_chain(a, f, ch).ok);
  for (std::size_t i = 0; i < ch.length(); ++i) {
    auto z = ch;
    for (auto& e : z.links[i].entries) e = UnivarPoly{};
    const auto res = verify_chain(a, f, z);
    CHECK_FALSE(res.ok);
    REQUIRE(res.failing_link.has_value());
    CHECK(*res.failing_link <= i);
  }
  auto m = ch;
  m.links[1].entries[2] += UnivarPoly::constant(1);
  CHECK_FALSE(verify_chain(a, f, m).ok);
  CHECK(verify_chain(a, f, SymbolicChain{f, {}}).ok);
}

TEST_CASE("property: accepted basis elements certify and chains are independent") {
  jkt::Gen g(71);
  for (int t = 0; t < 25; ++t) {
    const auto spec = g.spec(24);
    const RatMatrix a = generate(spec, g.raw());
    for (std::size_t i = 0; i < spec.factors.size(); ++i) {
      const auto rep = jordan_blocks(a, spec.charpoly(), i, {}, {Method::kFullElimination, false});
      const UnivarPoly& f = spec.factors[i].f;
      for (std::size_t r = 1; r <= rep.basis.size(); ++r) {
        for (const auto& b : rep.basis[r - 1]) {
          const auto ch = chain_witness(a, f, b, r);
          CHECK(verify_chain(a, f, ch).ok);
          const auto cols = scalar_expansion(ch);
          CHECK(cols.size() == r * static_cast<std::size_t>(f.degree()));
          CHECK(jkt::brute_rank(RatMatrix::from_columns(cols, a.rows() * f.degree())) == cols.size());
        }
      }
    }
  }
}

}
