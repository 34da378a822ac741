#include "doctest.h"
#include "jk/errors.hpp"
#include "jk/poly.hpp"
#include "jk/psi.hpp"
#include "support/gen.hpp"

using namespace jk;

namespace {
const UnivarPoly lam = UnivarPoly::lambda();
UnivarPoly P(std::initializer_list<Rational> c) { return UnivarPoly(c); }
}  // namespace

TEST_SUITE("rpoly") {

TEST_CASE("representation") {
  CHECK(UnivarPoly{0, 0}.is_zero());
  CHECK(UnivarPoly{}.degree() == -1);
  CHECK(P({1, 2, 0}).degree() == 1);
  CHECK(P({-2, 0, 1}).is_monic());
  CHECK(P({2, 4}).monic() == P({Rational(1, 2), 1}));
}

TEST_CASE("arithmetic examples") {
  CHECK(gcd(P({-1, 0, 1}), P({-1, 1})) == P({-1, 1}));
  const auto [q, r] = divmod(P({0, 0, 0, 1}), P({0, 0, 1}));
  CHECK(q == lam);
  CHECK(r.is_zero());
  CHECK(gcd(P({1, 0, 1}), P({-2, 0, 1})).is_one());
  CHECK_THROWS_AS(divmod(lam, UnivarPoly{}), DimensionError);
  CHECK(gcd(UnivarPoly{}, UnivarPoly{}).is_zero());
  CHECK(gcd(P({2, 4}), UnivarPoly{}) == P({Rational(1, 2), 1}));
}

TEST_CASE("charpoly examples") {
  CHECK(charpoly(RatMatrix{{2, 1}, {0, 2}}) == P({4, -4, 1}));
  CHECK(charpoly(RatMatrix{{0, 1}, {1, 0}}) == P({-1, 0, 1}));
  const UnivarPoly f = P({3, -1, 0, 2, 1});
  CHECK(charpoly(companion(f)) == f);
  CHECK_THROWS_AS(charpoly(RatMatrix(2, 3)), DimensionError);
}

TEST_CASE("companion convention") {
  const RatMatrix c = companion(P({5, 6, 7, 1}));
  CHECK(mat_vec(c, unit_vector(3, 0)) == unit_vector(3, 1));
  CHECK(eval_matrix(P({5, 6, 7, 1}), c).is_zero());
}

TEST_CASE("squarefree_decompose examples") {
  const UnivarPoly a = P({-1, 1});
  const UnivarPoly b = P({2, 1});
  auto sf = squarefree_decompose(a * a * b);
  REQUIRE(sf.size() == 2);
  CHECK(sf[0] == std::pair{b, std::size_t{1}});
  CHECK(sf[1] == std::pair{a, std::size_t{2}});

  sf = squarefree_decompose(P({1, 0, 1}));
  REQUIRE(sf.size() == 1);
  CHECK(sf[0] == std::pair{P({1, 0, 1}), std::size_t{1}});

  const UnivarPoly c = P({-2, 0, 1});
  sf = squarefree_decompose(pow(c, 3));
  REQUIRE(sf.size() == 1);
  CHECK(sf[0] == std::pair{c, std::size_t{3}});

  CHECK_THROWS_AS(squarefree_decompose(UnivarPoly{}), DimensionError);
}

TEST_CASE("eval_matrix examples") {
  jkt::Gen g(21);
  const RatMatrix a = g.matrix(4, 4);
  CHECK(eval_matrix(UnivarPoly::constant(1), a) == RatMatrix::identity(4));
  CHECK(eval_matrix(lam, a) == a);
  CHECK(eval_matrix(P({-2, 0, 1}), companion(P({-2, 0, 1}))).is_zero());
  CHECK_THROWS_AS(eval_matrix(lam, RatMatrix(2, 3)), DimensionError);

  const Vector v = g.vector(4);
  CHECK(eval_matrix_vec(UnivarPoly::constant(1), a, v) == v);
  CHECK(eval_matrix_vec(lam, a, v) == mat_vec(a, v));
  for (int t = 0; t < 10; ++t) {
    const UnivarPoly p = g.poly(static_cast<std::size_t>(g.integer(0, 5)), false);
    const RatMatrix b = g.matrix(4, 4);
    const Vector w = g.vector(4);
    CHECK(eval_matrix_vec(p, b, w) == mat_vec(eval_matrix(p, b), w));
  }
  CHECK_THROWS_AS(eval_matrix_vec(lam, a, zero_vector(3)), DimensionError);
}

TEST_CASE("factored charpoly validation") {
  FactoredCharPoly ok{{{P({-1, 1}), 2}, {P({1, 0, 1}), 1}}};
  CHECK_NOTHROW(ok.validate());
  CHECK(ok.degree() == 4);
  CHECK(ok.expand() == P({-1, 1}) * P({-1, 1}) * P({1, 0, 1}));
  FactoredCharPoly shared{{{P({-1, 1}), 1}, {P({-1, 0, 1}), 1}}};
  CHECK_THROWS_AS(shared.validate(), InconsistencyError);
  FactoredCharPoly not_monic{{{P({1, 2}), 1}}};
  CHECK_THROWS_AS(not_monic.validate(), InconsistencyError);
  FactoredCharPoly zero_mult{{{P({1, 1}), 0}}};
  CHECK_THROWS_AS(zero_mult.validate(), InconsistencyError);
}

TEST_CASE("property: charpoly matches interpolated determinant and is permutation invariant") {
  jkt::Gen g(22);
  for (int t = 0; t < 20; ++t) {
    const auto n = static_cast<std::size_t>(g.integer(1, 6));
    const RatMatrix a = g.matrix(n, n);
    const UnivarPoly chi = charpoly(a);
    CHECK(chi.is_monic());
    CHECK(chi.degree() == static_cast<int>(n));
    CHECK(chi == jkt::interpolated_charpoly(a));
    CHECK(charpoly(g.permute(a)) == chi);
  }
}

TEST_CASE("property: eval_matrix is multiplicative") {
  jkt::Gen g(23);
  for (int t = 0; t < 15; ++t) {
    const RatMatrix a = g.matrix(4, 4, 3, 2);
    const UnivarPoly f = g.poly(static_cast<std::size_t>(g.integer(0, 3)), false);
    const UnivarPoly h = g.poly(static_cast<std::size_t>(g.integer(0, 3)), false);
    CHECK(eval_matrix(f * h, a) == eval_matrix(f, a) * eval_matrix(h, a));
    CHECK(eval_matrix(f + h, a) == eval_matrix(f, a) + eval_matrix(h, a));
  }
}

TEST_CASE("property: squarefree parts are squarefree, coprime and reproduce p") {
  jkt::Gen g(24);
  for (int t = 0; t < 25; ++t) {
    Rational lead = g.rational(5, 3, 0);
    while (is_zero(lead)) lead = g.rational(5, 3, 0);
    UnivarPoly p = UnivarPoly::constant(lead);
    const auto k = g.integer(1, 3);
    for (long i = 0; i < k; ++i) p = p * pow(g.poly(static_cast<std::size_t>(g.integer(1, 2)), true, 3, 1),
                                            static_cast<std::size_t>(g.integer(1, 3)));
    const auto parts = squarefree_decompose(p);
    UnivarPoly prod = UnivarPoly::constant(1);
    for (std::size_t i = 0; i < parts.size(); ++i) {
      CHECK(parts[i].first.is_monic());
      CHECK(gcd(parts[i].first, parts[i].first.derivative()).is_one());
      for (std::size_t j = i + 1; j < parts.size(); ++j) CHECK(gcd(parts[i].first, parts[j].first).is_one());
      if (i > 0) CHECK(parts[i - 1].second < parts[i].second);
      prod = prod * pow(parts[i].first, parts[i].second);
    }
    CHECK(prod == p.monic());
  }
}

}
