#include <doctest.h>

#include "dynsu2/dynrep.hpp"

using namespace dynsu2;

namespace {
constexpr uint64_t kSeed = 0xd13a;
}

TEST_CASE("action table basics") {
  RepVector e0 = RepVector::basis(0);
  CHECK(act(gen_elem(Gen::Beta, Mode::SL2), e0).c.empty());
  RepVector g = act(gen_elem(Gen::Gamma, Mode::SL2), e0);
  REQUIRE(g.c.size() == 1);
  CHECK(g.c.begin()->first == 1);
  CHECK(is_zero(g.c.begin()->second + qpow(-1), 10, kSeed));
}

TEST_CASE("xi acts by the scalar q^{omega-1} + q^{1-omega}") {
  Scalar uw = Scalar::var("omega");
  Scalar eig = uw / Scalar::q() + Scalar::q() / uw;
  for (int k = 0; k <= 3; ++k) {
    RepVector v = act(xi_elem(0), RepVector::basis(k));
    RepVector expect;
    expect.insert(k, eig);
    CHECK(repvec_equal(v, expect, 15, splitmix64(kSeed + static_cast<uint64_t>(k))));
  }
}

TEST_CASE("tfun closed form matches the action") {
  for (int N = 0; N <= 2; ++N)
    for (int k = 0; k <= N; ++k)
      for (int j = 0; j <= N; ++j)
        for (int m = 0; m <= 2; ++m) {
          RepVector lhs = act(matelem(N, k, j), RepVector::basis(m));
          RepVector rhs;
          if (m + j - k >= 0) rhs.insert(m + j - k, tfun(N, k, j, m));
          CHECK(repvec_equal(lhs, rhs, 10,
                             splitmix64(kSeed + static_cast<uint64_t>(27 * N + 9 * k + 3 * j +
                                                                      static_cast<uint64_t>(m)))));
        }
  CHECK(tfun(0, 0, 0, 2).is_const_one());
}

TEST_CASE("gamma_rep basics") {
  CHECK(gamma_rep(0).is_const_one());
}

TEST_CASE("tensor action respects the bar-tensor bookkeeping") {
  // gamma acting on e_0 (x) e_0: Delta(gamma) = gamma (x) alpha + delta (x) gamma
  TensorRepVector v = TensorRepVector::basis(0, 0);
  TensorRepVector g = tensor_act(gen_elem(Gen::Gamma, Mode::SL2), v);
  CHECK(g.c.size() == 2);
  CHECK(g.c.count({1, 0}) == 1);
  CHECK(g.c.count({0, 1}) == 1);
}

TEST_CASE("eigvec at the bottom of a weight space") {
  // v(0;0) = e_0 (x) e_0
  TensorRepVector v = eigvec(0, 0);
  REQUIRE(v.c.size() == 1);
  CHECK(v.c.begin()->first == std::make_pair(0, 0));
  CHECK(is_zero(v.c.begin()->second - Scalar(1), 10, kSeed));
  // C e_0 = phi_0 v(0;0) has the single component e_0 (x) e_0
  TensorRepVector img = dyn_intertwiner_image(0, 0);
  REQUIRE(img.c.size() == 1);
}

TEST_CASE("cg_dyn requires the grading constraint") {
  CHECK_THROWS_AS(cg_dyn(1, 1, 0, 0), IndexOutOfRange);
  // trivial value at s = k = 0
  CHECK(is_zero(cg_dyn(0, 0, 0, 0) - Scalar(1), 10, kSeed));
}

TEST_CASE("act_word matches act on normalized input") {
  GenWord w;
  w.push_back(WordItem::of(Gen::Beta));
  w.push_back(WordItem::of(Gen::Gamma));
  for (int k = 0; k <= 2; ++k) {
    RepVector via_word = act_word(w, RepVector::basis(k));
    RepVector via_alg = act(normalize(w, Mode::SL2), RepVector::basis(k));
    CHECK(repvec_equal(via_word, via_alg, 15, splitmix64(kSeed + static_cast<uint64_t>(k))));
  }
}
