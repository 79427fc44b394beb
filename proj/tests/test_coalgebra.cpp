#include <doctest.h>

#include "dynsu2/coalgebra.hpp"

using namespace dynsu2;

namespace {
constexpr uint64_t kSeed = 0xc0a16;
}

TEST_CASE("coproduct of generators") {
  TensorElement d = coproduct(gen_elem(Gen::Alpha, Mode::SL2));
  Mono a, b, g;
  a.a = 1;
  b.b = 1;
  g.g = 1;
  REQUIRE(d.terms.size() == 2);
  CHECK(d.terms.count({a, a}) == 1);
  CHECK(d.terms.count({b, g}) == 1);
  CHECK(is_zero(d.terms.at({a, a}) - Scalar(1), 5, kSeed));
}

TEST_CASE("counit collapses recover the element") {
  // coefficient placements: f(lambda) g(mu) gamma^2 beta
  Scalar c = aux_F("lambda") * Scalar::var("mu").pow(2);
  Mono m;
  m.g = 2;
  m.b = 1;
  AlgElement e = scale(mono_elem(m, Mode::SL2), c);
  TensorElement t = coproduct(e);
  CHECK(alg_equal(counit_collapse_left(t), e, 20, kSeed));
  CHECK(alg_equal(counit_collapse_right(t), e, 20, kSeed));
}

TEST_CASE("coproduct is multiplicative") {
  AlgElement a = gen_elem(Gen::Gamma, Mode::SL2);
  AlgElement b = scale(gen_elem(Gen::Beta, Mode::SL2), aux_F("mu", -1));
  CHECK(tensor_equal(coproduct(mul(a, b)), tensor_mul(coproduct(a), coproduct(b)), 15, kSeed));
}

TEST_CASE("coassociativity on a generator") {
  AlgElement a = gen_elem(Gen::Alpha, Mode::SL2);
  CHECK(tensor3_equal(coassoc_left(a), coassoc_right(a), 15, kSeed));
}

TEST_CASE("antipode axiom on generators") {
  Mono a, b;
  a.a = 1;
  b.b = 1;
  CHECK(alg_equal(conv_id_S(a, Mode::SL2), unit(Mode::SL2), 15, kSeed));
  CHECK(alg_equal(conv_S_id(a, Mode::SL2), unit(Mode::SL2), 15, kSeed));
  CHECK(alg_equal(conv_id_S(b, Mode::SL2), AlgElement(Mode::SL2, VarNames{}), 15, kSeed));
  CHECK(alg_equal(conv_S_id(b, Mode::SL2), AlgElement(Mode::SL2, VarNames{}), 15, kSeed));
}

TEST_CASE("hat tensor multiplication is well defined") {
  AlgElement a = gen_elem(Gen::Alpha, Mode::SL2);
  AlgElement g = gen_elem(Gen::Gamma, Mode::SL2);
  HatTensor h = hat(scale(a, aux_F("mu")), g);
  AlgElement m = mul_out(h);
  // a mu_r(F) (x) g = a (x) mu_r(F) g
  HatTensor h2 = hat(a, scale(g, rename(aux_F("mu"), {{"mu", "mu"}})));
  // moving mu_r(F) across the hat needs no shift when written at the left
  AlgElement m2 = mul_out(h2);
  // both are a F(mu-shifted appropriately) g up to the hat relation; check
  // against direct multiplication
  AlgElement direct = mul(mul(a, embed_r(aux_F("mu"), Mode::SL2)), g);
  CHECK(alg_equal(m2, direct, 15, kSeed));
  (void)m;
}

TEST_CASE("hat coproduct counit legs") {
  Mono g, b;
  g.g = 1;
  b.b = 1;
  HatTensor h = hat(mono_elem(g, Mode::SL2), mono_elem(b, Mode::SL2));
  TildeOfHat dh = hat_coproduct(h);
  CHECK(hat_equal(hat_counit_collapse_left(dh), h, 15, kSeed));
  CHECK(hat_equal(hat_counit_collapse_right(dh), h, 15, kSeed));
  // trivial example: 1 (x) 1
  HatTensor one = hat(unit(Mode::SL2), unit(Mode::SL2));
  TildeOfHat done = hat_coproduct(one);
  REQUIRE(done.terms.size() == 1);
  CHECK(std::get<0>(done.terms.begin()->first).is_one());
}

TEST_CASE("multiplication intertwines the hat coproduct") {
  Mono g, a;
  g.g = 1;
  a.a = 1;
  HatTensor h = hat(mono_elem(g, Mode::SL2), mono_elem(a, Mode::SL2));
  CHECK(tensor_equal(coproduct(mul_out(h)), mul_out_pairs(hat_coproduct(h)), 15, kSeed));
}

TEST_CASE("mul_out example: Delta(alpha) multiplies back") {
  // m(id (x) S) would not be defined termwise; but m on Delta(alpha) is the
  // guarded tilde multiplication and equals alpha^2 + beta gamma
  TensorElement d = coproduct(gen_elem(Gen::Alpha, Mode::SL2));
  AlgElement m = mul_tilde_guarded(d, 15, kSeed);
  GenWord w1, w2;
  w1.push_back(WordItem::of(Gen::Alpha));
  w1.push_back(WordItem::of(Gen::Alpha));
  w2.push_back(WordItem::of(Gen::Beta));
  w2.push_back(WordItem::of(Gen::Gamma));
  AlgElement expect = normalize(w1, Mode::SL2) + normalize(w2, Mode::SL2);
  CHECK(alg_equal(m, expect, 15, kSeed));
}

TEST_CASE("sigma23 on bare monomials flips the middle") {
  AlgElement a = gen_elem(Gen::Gamma, Mode::SL2);
  AlgElement b = gen_elem(Gen::Alpha, Mode::SL2);
  AlgElement c = gen_elem(Gen::Beta, Mode::SL2);
  AlgElement d = gen_elem(Gen::Delta, Mode::SL2);
  TildeOfHat out = sigma23(hat_of_tensors(tensor_of(a, b), tensor_of(c, d)));
  REQUIRE(out.terms.size() == 1);
  Mono ma, mb, mc, md;
  ma.g = 1;
  mb.a = 1;
  mc.b = 1;
  md.d = 1;
  CHECK(out.terms.begin()->first == std::make_tuple(ma, mc, mb, md));
  // mismatched inner bidegrees are rejected
  CHECK_THROWS_AS(tensor_of(b, a), IncompatibleGrading);
}
