#include <doctest.h>

#include "ccring/chain_ring.hpp"
#include "helpers.hpp"

using namespace ccring;

namespace {

RElem re(const ChainRing& R, std::initializer_list<FqElem> cs) {
  RElem x = R.zero();
  std::size_t i = 0;
  for (auto c : cs) x.c[i++] = c;
  return x;
}

}  // namespace

TEST_CASE("units and inverses in R") {
  FieldCtx F(3);
  SUBCASE("u is not a unit") {
    ChainRing R(F, 2);
    CHECK(!R.is_unit(R.u()));
    CHECK_THROWS_AS(R.inverse(R.u()), std::invalid_argument);
  }
  SUBCASE("(1+u)^-1 = 1+2u when e = 2") {
    ChainRing R(F, 2);
    CHECK(R.inverse(re(R, {1, 1})) == re(R, {1, 2}));
  }
  SUBCASE("(1+u)^-1 = 1+2u+u^2 when e = 3, against the geometric series") {
    ChainRing R(F, 3);
    const RElem a = re(R, {1, 1});
    // sum of (-u)^i
    RElem series = R.zero();
    for (std::uint32_t i = 0; i < 3; ++i) series = R.add(series, R.pow(R.neg(R.u()), i));
    CHECK(series == re(R, {1, 2, 1}));
    CHECK(R.inverse(a) == series);
    CHECK(R.mul(a, R.inverse(a)) == R.one());
  }
  SUBCASE("random units invert") {
    ChainRing R(F, 4);
    SplitMix64 rng(3);
    for (int it = 0; it < 100; ++it) {
      RElem a = testing::rand_relem(R, rng);
      if (!R.is_unit(a)) continue;
      CHECK(R.mul(a, R.inverse(a)) == R.one());
    }
  }
}

TEST_CASE("u-adic expansion") {
  FieldCtx F(3);
  ChainRing R(F, 2);
  CHECK(R.u_adic(R.one()) == std::vector<FqElem>{1, 0});
  CHECK(R.u_adic(re(R, {2, 1})) == std::vector<FqElem>{2, 1});
  SplitMix64 rng(5);
  for (int it = 0; it < 50; ++it) {
    const RElem b = testing::rand_relem(R, rng);
    const auto coords = R.u_adic(b);
    RElem back = R.zero();
    for (std::uint32_t s = 0; s < R.e(); ++s)
      back = R.add(back, R.mul(R.pow(R.u(), s), R.from_field(coords[s])));
    CHECK(back == b);
  }
}

TEST_CASE("R_k multiplication and the defining relation") {
  FieldCtx F(3);
  ChainRing R(F, 2);
  RkRing Rk(R, 2, R.one());  // p^k = 9, omega = 1
  SUBCASE("v * v^{p^k - 1} = 1 + omega*u") {
    const RkElem left = Rk.mul(Rk.v(), Rk.pow(Rk.v(), Rk.pk() - 1));
    CHECK(left == Rk.from_base(Rk.unit_1_wu()));
  }
  SUBCASE("(v-1)^{p^k} = omega*u") {
    const RkElem vm1_pk = Rk.pow(Rk.v_minus_1(), Rk.pk());
    CHECK(vm1_pk == Rk.from_base(R.mul(Rk.omega(), R.u())));
  }
  SUBCASE("(v-1)^{p^k e} = 0 but (v-1)^{p^k e - 1} != 0") {
    CHECK(Rk.pow(Rk.v_minus_1(), Rk.dim()).is_zero());
    CHECK(!Rk.pow(Rk.v_minus_1(), Rk.dim() - 1).is_zero());
  }
  SUBCASE("mismatched element shapes are rejected") {
    RkRing other(R, 1, R.one());
    CHECK_THROWS_AS(Rk.mul(Rk.one(), other.one()), std::invalid_argument);
  }
  SUBCASE("omega must be a unit") {
    CHECK_THROWS_AS(RkRing(R, 1, R.u()), std::invalid_argument);
  }
}

TEST_CASE("(v-1)-adic expansion") {
  FieldCtx F(3);
  ChainRing R(F, 2);
  RkRing Rk(R, 2, R.one());
  const std::size_t D = Rk.dim();
  SUBCASE("expansion of 1") {
    auto a = Rk.v1_expansion(Rk.one());
    CHECK(a[0] == 1);
    for (std::size_t s = 1; s < D; ++s) CHECK(a[s] == 0);
  }
  SUBCASE("expansion of v is 1 + (v-1)") {
    auto a = Rk.v1_expansion(Rk.v());
    CHECK(a[0] == 1);
    CHECK(a[1] == 1);
    for (std::size_t s = 2; s < D; ++s) CHECK(a[s] == 0);
  }
  SUBCASE("with omega = 1, u sits at layer p^k") {
    auto a = Rk.v1_expansion(Rk.from_base(R.u()));
    for (std::size_t s = 0; s < D; ++s) CHECK(a[s] == (s == Rk.pk() ? 1u : 0u));
  }
  SUBCASE("round trip, random elements") {
    SplitMix64 rng(9);
    for (int it = 0; it < 200; ++it) {
      linalg::Row mono(D);
      for (auto& x : mono) x = rng.below(F.q());
      const RkElem a = Rk.unflatten(mono);
      CHECK(Rk.from_v1(Rk.v1_expansion(a)) == a);
    }
  }
  SUBCASE("round trip, exhaustive on a 16-element ring") {
    ChainRing R2(FieldCtx(2), 2);
    RkRing Rk2(R2, 1, R2.one());
    for (std::uint64_t code = 0; code < 16; ++code) {
      linalg::Row mono(4);
      std::uint64_t c = code;
      for (auto& x : mono) {
        x = c % 2;
        c /= 2;
      }
      const RkElem a = Rk2.unflatten(mono);
      CHECK(Rk2.from_v1(Rk2.v1_expansion(a)) == a);
    }
  }
}

TEST_CASE("tau is a ring homomorphism onto F_q") {
  FieldCtx F(3);
  ChainRing R(F, 2);
  RkRing Rk(R, 2, R.one());
  CHECK(Rk.tau(Rk.one()) == 1);
  CHECK(Rk.tau(Rk.from_base(R.u())) == 0);
  SplitMix64 rng(13);
  for (int it = 0; it < 100; ++it) {
    linalg::Row ma(Rk.dim()), mb(Rk.dim());
    for (auto& x : ma) x = rng.below(F.q());
    for (auto& x : mb) x = rng.below(F.q());
    const RkElem a = Rk.unflatten(ma), b = Rk.unflatten(mb);
    CHECK(Rk.tau(Rk.mul(a, b)) == F.mul(Rk.tau(a), Rk.tau(b)));
    CHECK(Rk.tau(Rk.add(a, b)) == F.add(Rk.tau(a), Rk.tau(b)));
  }
}

TEST_CASE("tau kills exactly the ideal (v-1)R_k") {
  // exhaustive on the 16-element ring: tau(a) = 0 iff a in (v-1)R_k
  ChainRing R(FieldCtx(2), 2);
  RkRing Rk(R, 1, R.one());
  linalg::Matrix image = testing::mult_matrix_rk(Rk, 1, Rk.v_minus_1());
  const auto pivots = linalg::rref(R.field(), image);
  for (std::uint64_t code = 0; code < 16; ++code) {
    linalg::Row mono(4);
    std::uint64_t c = code;
    for (auto& x : mono) {
      x = c % 2;
      c /= 2;
    }
    const bool in_ideal = linalg::rowspace_contains(R.field(), image, pivots, mono);
    CHECK((Rk.tau(Rk.unflatten(mono)) == 0) == in_ideal);
  }
}

TEST_CASE("nilpotency index of v-1") {
  SUBCASE("p=3, e=2, k=2 gives 18") {
    ChainRing R(FieldCtx(3), 2);
    CHECK(RkRing(R, 2, R.one()).nilpotency_index() == 18);
  }
  SUBCASE("k=0 reduces to the nilpotency of u") {
    ChainRing R(FieldCtx(3), 2);
    CHECK(RkRing(R, 0, R.one()).nilpotency_index() == 2);
  }
  SUBCASE("p=2, e=2, k=1 gives 4") {
    ChainRing R(FieldCtx(2), 2);
    CHECK(RkRing(R, 1, R.one()).nilpotency_index() == 4);
  }
}

TEST_CASE("ideal chain sizes and u R_k = (v-1)^{p^k} R_k") {
  struct Set {
    std::uint64_t p;
    std::uint32_t e, k;
    std::string omega;
  };
  for (const Set& s : {Set{2, 2, 1, "1,1"}, Set{3, 2, 1, "1,0"}, Set{2, 3, 1, "1,0,1"}}) {
    CAPTURE(s.p);
    CAPTURE(s.e);
    ChainRing R(FieldCtx(s.p), s.e);
    RkRing Rk(R, s.k, R.parse(s.omega));
    const std::size_t D = Rk.dim();
    for (std::size_t i = 0; i <= D; ++i) {
      const auto M = testing::mult_matrix_rk(Rk, 1, Rk.pow(Rk.v_minus_1(), i));
      CHECK(linalg::rank(R.field(), M) == D - i);  // |(v-1)^i R_k| = q^{D-i}
    }
    const auto Mu = testing::mult_matrix_rk(Rk, 1, Rk.from_base(R.u()));
    const auto Mv = testing::mult_matrix_rk(Rk, 1, Rk.pow(Rk.v_minus_1(), Rk.pk()));
    CHECK(linalg::rowspace_equal(R.field(), Mu, Mv));
  }
}

TEST_CASE("RElem text format") {
  ChainRing R(FieldCtx(3), 2);
  CHECK(R.to_string(re(R, {1, 0})) == "1,0");
  CHECK(R.parse("1,0") == re(R, {1, 0}));
  CHECK(R.parse("1") == R.one());  // short inputs zero-pad
  CHECK_THROWS_AS(R.parse("1,0,2"), std::invalid_argument);
  CHECK_THROWS_AS(R.parse("3"), std::invalid_argument);
  CHECK_THROWS_AS(R.parse(""), std::invalid_argument);
}
