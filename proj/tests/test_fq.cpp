#include <doctest.h>

#include "ccring/fq.hpp"
#include "ccring/linalg.hpp"
#include "helpers.hpp"

using namespace ccring;

namespace {

FqPoly P(std::initializer_list<FqElem> cs) {
  FqPoly p;
  p.c = cs;
  return poly_trim(std::move(p));
}

}  // namespace

TEST_CASE("prime field basics") {
  FieldCtx F(3);
  CHECK(F.q() == 3);
  CHECK(F.add(2, 2) == 1);
  CHECK(F.mul(2, 2) == 1);
  CHECK(F.inv(2) == 2);
  CHECK(F.neg(1) == 2);
  CHECK_THROWS_AS(FieldCtx(4), std::invalid_argument);
  CHECK_THROWS_AS(F.inv(0), std::invalid_argument);
}

TEST_CASE("F_4 with the unique irreducible quadratic") {
  FieldCtx F(2, 2, {1, 1, 1});  // x^2 + x + 1
  CHECK(F.q() == 4);
  // x * x = x + 1
  CHECK(F.mul(2, 2) == 3);
  // every nonzero element has an inverse
  for (FqElem a = 1; a < 4; ++a) CHECK(F.mul(a, F.inv(a)) == 1);
  CHECK_THROWS_AS(FieldCtx(2, 2, {1, 0, 1}), std::invalid_argument);  // (x+1)^2
  CHECK_THROWS_AS(FieldCtx(2, 2, {1, 1}), std::invalid_argument);     // wrong degree
}

TEST_CASE("default modulus is the lexicographically smallest irreducible") {
  // independent search over all 9 monic quadratics mod 3: irreducible iff no
  // root, compared low-degree-first
  std::vector<std::uint64_t> expected;
  for (std::uint64_t code = 0; code < 9 && expected.empty(); ++code) {
    const std::uint64_t c0 = code % 3, c1 = code / 3;
    bool has_root = false;
    for (std::uint64_t x = 0; x < 3; ++x)
      if ((x * x + c1 * x + c0) % 3 == 0) has_root = true;
    if (!has_root) expected = {c0, c1, 1};
  }
  REQUIRE(expected == std::vector<std::uint64_t>{1, 0, 1});  // x^2 + 1
  FieldCtx F(3, 2);
  CHECK(F.modulus() == expected);
}

TEST_CASE("divmod and gcd") {
  FieldCtx F(3);
  SUBCASE("x^10 - 1 is divisible by x + 1") {
    auto [q, r] = poly_divmod(F, poly_xn_minus(F, 10, 1), P({1, 1}));
    CHECK(r.is_zero());
    CHECK(poly_mul(F, q, P({1, 1})) == poly_xn_minus(F, 10, 1));
  }
  SUBCASE("gcd(x^2 - 1, x - 1) = x + 2") {
    CHECK(poly_gcd(F, P({2, 0, 1}), P({2, 1})) == P({2, 1}));
  }
  SUBCASE("f3*f4 factors as stated") {
    auto [q, r] = poly_divmod(F, P({1, 0, 1, 0, 1, 0, 1, 0, 1}), P({1, 1, 1, 1, 1}));
    CHECK(r.is_zero());
    CHECK(q == P({1, 2, 1, 2, 1}));
  }
  SUBCASE("division by zero throws") {
    CHECK_THROWS_AS(poly_divmod(F, P({1, 1}), FqPoly{}), std::invalid_argument);
  }
  SUBCASE("gcd(0,0) = 0") { CHECK(poly_gcd(F, FqPoly{}, FqPoly{}).is_zero()); }
  SUBCASE("round trip on random pairs") {
    FieldCtx F4(2, 2, {1, 1, 1});
    SplitMix64 rng(7);
    for (int it = 0; it < 200; ++it) {
      FqPoly a = testing::rand_poly(F4, 9, rng);
      FqPoly b = testing::rand_poly(F4, 5, rng);
      if (b.is_zero()) continue;
      auto [q, r] = poly_divmod(F4, a, b);
      CHECK(poly_add(F4, poly_mul(F4, q, b), r) == a);
      CHECK(r.deg() < b.deg());
    }
  }
}

TEST_CASE("factorization of x^n - 1") {
  SUBCASE("F_3, n = 10: the four stated factors in order") {
    FieldCtx F(3);
    const auto fs = factor_xn_minus_1(F, 10);
    REQUIRE(fs.size() == 4);
    CHECK(fs[0] == P({1, 1}));
    CHECK(fs[1] == P({2, 1}));
    CHECK(fs[2] == P({1, 1, 1, 1, 1}));
    CHECK(fs[3] == P({1, 2, 1, 2, 1}));
  }
  SUBCASE("F_3, n = 1") {
    FieldCtx F(3);
    const auto fs = factor_xn_minus_1(F, 1);
    REQUIRE(fs.size() == 1);
    CHECK(fs[0] == P({2, 1}));
  }
  SUBCASE("F_2, n = 3: cosets {0},{1,2}") {
    FieldCtx F(2);
    const auto fs = factor_xn_minus_1(F, 3);
    REQUIRE(fs.size() == 2);
    CHECK(fs[0] == P({1, 1}));
    CHECK(fs[1] == P({1, 1, 1}));
  }
  SUBCASE("p | n rejected") {
    FieldCtx F(3);
    CHECK_THROWS_AS(factor_xn_minus_1(F, 9), std::invalid_argument);
  }
}

TEST_CASE("factorization invariants") {
  struct Case {
    FieldCtx F;
    std::uint64_t n;
  };
  const std::vector<Case> cases = {{FieldCtx(2), 3},  {FieldCtx(2), 7},
                                   {FieldCtx(2), 15}, {FieldCtx(3), 10},
                                   {FieldCtx(3), 13}, {FieldCtx(2, 2, {1, 1, 1}), 5}};
  for (const auto& [F, n] : cases) {
    CAPTURE(F.q());
    CAPTURE(n);
    const auto fs = factor_xn_minus_1(F, n);
    FqPoly prod = poly_one();
    for (const auto& f : fs) {
      CHECK(poly_is_monic(f));
      CHECK(poly_is_irreducible(F, f));
      prod = poly_mul(F, prod, f);
    }
    CHECK(prod == poly_xn_minus(F, n, 1));
    for (std::size_t i = 0; i < fs.size(); ++i)
      for (std::size_t j = i + 1; j < fs.size(); ++j)
        CHECK(poly_gcd(F, fs[i], fs[j]) == poly_one());
    // deterministic canonical order, byte-identical across runs
    const auto again = factor_xn_minus_1(F, n);
    for (std::size_t i = 0; i < fs.size(); ++i)
      CHECK(poly_to_string(fs[i]) == poly_to_string(again[i]));
    for (std::size_t i = 0; i + 1 < fs.size(); ++i)
      CHECK(!poly_canonical_less(fs[i + 1], fs[i]));
  }
}

TEST_CASE("irreducibility test agrees with trial division on small inputs") {
  FieldCtx F(3);
  SplitMix64 rng(11);
  for (int it = 0; it < 300; ++it) {
    FqPoly f = testing::rand_poly(F, 5, rng);
    if (f.deg() < 1) continue;
    f = poly_make_monic(F, f);
    bool trial = true;
    for (std::uint64_t d = 1; d <= static_cast<std::uint64_t>(f.deg()) / 2; ++d) {
      for (std::uint64_t code = 0; code < checked_pow(3, d); ++code) {
        FqPoly div;
        div.c.assign(d + 1, 0);
        div.c[d] = 1;
        std::uint64_t c = code;
        for (std::uint64_t i = 0; i < d; ++i) {
          div.c[i] = c % 3;
          c /= 3;
        }
        if (poly_divides(F, div, f)) trial = false;
      }
    }
    CHECK(poly_is_irreducible(F, f) == trial);
  }
}

TEST_CASE("constacyclic minimum distance over the field") {
  FieldCtx F(3);
  SUBCASE("g = 1 gives the full space, distance 1") {
    CHECK(fq_consta_min_distance(F, poly_one(), 7, 1) == 1);
  }
  SUBCASE("<(x+2)^2> in F_3[x]/(x^3 - 1)") {
    const FqPoly g = poly_pow(F, P({2, 1}), 2);
    CHECK(fq_consta_min_distance(F, g, 3, 1) == 3);
    CHECK(testing::oracle_fq_consta_distance(F, g, 3) == 3);
  }
  SUBCASE("negacyclic <(x+1)^7> in F_3[x]/(x^9 + 1)") {
    const FqPoly g = poly_pow(F, P({1, 1}), 7);
    const auto d = fq_consta_min_distance(F, g, 9, F.neg(1));
    CHECK(d == 6);
    CHECK(testing::oracle_fq_consta_distance(F, g, 9) == 6);
  }
  SUBCASE("scalar multiples of g give the same code") {
    const FqPoly g = P({1, 1, 1, 1, 1});
    CHECK(fq_consta_min_distance(F, g, 10, 1) ==
          fq_consta_min_distance(F, poly_scale(F, g, 2), 10, 1));
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(fq_consta_min_distance(F, poly_xn_minus(F, 3, 1), 3, 1),
                    std::invalid_argument);  // zero code
    CHECK_THROWS_AS(fq_consta_min_distance(F, P({1, 1}), 3, 1),
                    std::invalid_argument);  // x+1 does not divide x^3 - 1 over F_3
    CHECK_THROWS_AS(fq_consta_min_distance(F, poly_one(), 20, 1, /*threshold=*/100),
                    ThresholdExceeded);
  }
}

TEST_CASE("polynomial text format") {
  FieldCtx F(3);
  CHECK(poly_to_string(P({2, 0, 0, 0, 1})) == "2,0,0,0,1");
  CHECK(poly_parse(F, "2,0,0,0,1") == P({2, 0, 0, 0, 1}));
  CHECK(poly_to_string(FqPoly{}) == "0");
  CHECK(poly_parse(F, "0").is_zero());
  CHECK_THROWS_AS(poly_parse(F, "1,x"), std::invalid_argument);
  CHECK_THROWS_AS(poly_parse(F, "7"), std::invalid_argument);
}
