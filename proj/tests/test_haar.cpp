#include <doctest.h>

#include "dynsu2/haar.hpp"

using namespace dynsu2;

namespace {
constexpr uint64_t kSeed = 0xaaa5;
}

TEST_CASE("haar normalization and grading") {
  CHECK(is_zero(haar(unit(Mode::SL2)) - Scalar(1), 10, kSeed));
  CHECK(haar(gen_elem(Gen::Alpha, Mode::SL2)).is_const_zero());
}

TEST_CASE("to_xi_poly of gamma beta is linear in Xi") {
  Mono gb;
  gb.g = 1;
  gb.b = 1;
  XiPoly p = to_xi_poly(mono_elem(gb, Mode::SL2));
  REQUIRE(p.c.size() == 2);
  XiPoly expect = ccr_form(CcrKind::GammaBeta, 1);
  CHECK(is_zero(p.c[0] - expect.c[0], 15, kSeed));
  CHECK(is_zero(p.c[1] - expect.c[1], 15, kSeed));
}

TEST_CASE("to_xi_poly round trips through the algebra") {
  AlgElement xi2 = mul(xi_elem(0), xi_elem(0));
  XiPoly p = to_xi_poly(xi2);
  REQUIRE(p.c.size() >= 3);
  CHECK(is_zero(p.c[0], 15, kSeed));
  CHECK(is_zero(p.c[1], 15, splitmix64(kSeed + 1)));
  CHECK(is_zero(p.c[2] - Scalar(1), 15, splitmix64(kSeed + 2)));
}

TEST_CASE("moment table solves the defining relations") {
  auto m = moments(2);
  CHECK(m[0].is_const_one());
  XiPoly p1 = haar_pk(1);
  Scalar r = p1.c[0] * m[0] + p1.c[1] * m[1];
  CHECK(is_zero(r, 20, kSeed));
}

TEST_CASE("haar kills t^2_{11}") {
  CHECK(is_zero(haar(matelem(2, 1, 1)), 15, kSeed));
}

TEST_CASE("strict mode rejects mixed degrees") {
  CHECK_THROWS_AS(to_xi_poly(gen_elem(Gen::Gamma, Mode::SL2), true), NotDegreeZero);
  CHECK_NOTHROW(to_xi_poly(gen_elem(Gen::Gamma, Mode::SL2), false));
}
