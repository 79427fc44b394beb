#include <doctest.h>

#include "dynsu2/corep.hpp"

using namespace dynsu2;

namespace {
constexpr uint64_t kSeed = 0xc09e9;
}

TEST_CASE("matrix elements at N = 1 are the generators") {
  CHECK(alg_equal(matelem(1, 0, 0), gen_elem(Gen::Delta, Mode::SL2), 10, kSeed));
  CHECK(alg_equal(matelem(1, 1, 1), gen_elem(Gen::Alpha, Mode::SL2), 10, kSeed));
  CHECK(alg_equal(matelem(1, 0, 1), gen_elem(Gen::Gamma, Mode::SL2), 10, kSeed));
  CHECK(alg_equal(matelem(1, 1, 0), gen_elem(Gen::Beta, Mode::SL2), 10, kSeed));
  CHECK(alg_equal(matelem(0, 0, 0), unit(Mode::SL2), 10, kSeed));
  CHECK_THROWS_AS(matelem(1, 2, 0), IndexOutOfRange);
}

TEST_CASE("backends agree at N = 2") {
  for (int k = 0; k <= 2; ++k)
    for (int j = 0; j <= 2; ++j)
      CHECK(alg_equal(matelem(2, k, j, MatBackend::Combinatorial),
                      matelem(2, k, j, MatBackend::Factored), 15,
                      splitmix64(kSeed + static_cast<uint64_t>(3 * k + j))));
}

TEST_CASE("gamma_corep values") {
  CHECK(is_zero(gamma_corep(3, 0) - Scalar(1), 15, kSeed));
  // Gamma^1_1 = (q^{-2(lambda+1)};q^2)_1 / (q^{-2 lambda};q^2)_1
  Scalar g = gamma_corep(1, 1);
  Scalar ul2 = Scalar::var("lambda").pow(2);
  Scalar expect = (Scalar(1) - qpow(-2) / ul2) / (Scalar(1) - Scalar(1) / ul2);
  CHECK(is_zero(g - expect, 20, kSeed));
}

TEST_CASE("cg coefficients: s = 0 is multiplication") {
  // the s = 0 intertwiner is the product map, so C^{MN,M+N}_{jk,j+k} is the
  // coefficient of gamma^{M+N-j-k} alpha^{j+k} in the basis-vector product
  for (int M = 1; M <= 2; ++M)
    for (int N = 1; N <= 2; ++N)
      for (int j = 0; j <= M; ++j)
        for (int k = 0; k <= N; ++k) {
          GenWord w;
          for (int i = 0; i < M - j; ++i) w.push_back(WordItem::of(Gen::Gamma));
          for (int i = 0; i < j; ++i) w.push_back(WordItem::of(Gen::Alpha));
          for (int i = 0; i < N - k; ++i) w.push_back(WordItem::of(Gen::Gamma));
          for (int i = 0; i < k; ++i) w.push_back(WordItem::of(Gen::Alpha));
          AlgElement prod = normalize(w, Mode::SL2);
          REQUIRE(prod.terms.size() == 1);
          Mono expect;
          expect.g = M + N - j - k;
          expect.a = j + k;
          CHECK(prod.terms.begin()->first == expect);
          CHECK(is_zero(prod.terms.begin()->second - cg(M, N, 0, j, k), 15,
                        splitmix64(kSeed + static_cast<uint64_t>(8 * j + k))));
        }
  CHECK(is_zero(zconst(1, 1, 0) - Scalar(1), 10, kSeed));
  CHECK(is_zero(zconst(3, 2, 0) - Scalar(1), 10, kSeed));
}

TEST_CASE("cg backends agree at a small case") {
  for (int s = 0; s <= 1; ++s)
    for (int j = 0; j <= 1; ++j)
      for (int k = 0; k <= 1; ++k) {
        if (j + k - s < 0 || j + k - s > 2 - 2 * s) continue;
        CHECK(is_zero(cg(1, 1, s, j, k, CgBackend::W) - cg(1, 1, s, j, k, CgBackend::Phi), 15,
                      splitmix64(kSeed + static_cast<uint64_t>(4 * s + 2 * j + k))));
      }
}

TEST_CASE("grading: cg vanishes outside the admissible window") {
  CHECK(cg(1, 1, 1, 0, 0).is_const_zero());
}

TEST_CASE("rank computation") {
  std::vector<AlgElement> rows = {gen_elem(Gen::Alpha, Mode::SL2),
                                  gen_elem(Gen::Beta, Mode::SL2),
                                  gen_elem(Gen::Alpha, Mode::SL2) + gen_elem(Gen::Beta, Mode::SL2)};
  CHECK(coeff_rank(rows, kSeed) == 2);
}
