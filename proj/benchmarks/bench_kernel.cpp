#include <benchmark/benchmark.h>

#include "dynsu2/corep.hpp"
#include "dynsu2/formulas.hpp"

using namespace dynsu2;

namespace {

GenWord random_word(Sampler& s, int len) {
  GenWord w;
  for (int i = 0; i < len; ++i)
    w.push_back(WordItem::of(static_cast<Gen>(s.next_u64() % 4)));
  return w;
}

void BM_normalize(benchmark::State& state) {
  Sampler s(12345);
  std::vector<GenWord> words;
  for (int i = 0; i < 64; ++i) words.push_back(random_word(s, static_cast<int>(state.range(0))));
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(normalize(words[i++ & 63], Mode::SL2));
  }
}
BENCHMARK(BM_normalize)->Arg(4)->Arg(6)->Arg(8);

void BM_mul_matelem(benchmark::State& state) {
  const AlgElement& a = matelem(2, 1, 1);
  const AlgElement& b = matelem(2, 1, 0);
  for (auto _ : state) benchmark::DoNotOptimize(mul(a, b));
}
BENCHMARK(BM_mul_matelem);

void BM_is_zero_hi(benchmark::State& state) {
  VarNames v;
  Scalar rel = aux_G("mu") - aux_G("lambda") - aux_H(v) * aux_I(v);
  uint64_t seed = 7;
  for (auto _ : state) benchmark::DoNotOptimize(is_zero(rel, 20, ++seed));
}
BENCHMARK(BM_is_zero_hi);

void BM_qracah_pointwise(benchmark::State& state) {
  Sampler s(99);
  PRat q(s.sample_q()), a(s.sample_u()), b(s.sample_u()), c(s.sample_u()), d(s.sample_u());
  for (auto _ : state)
    benchmark::DoNotOptimize(qs::qracah(3, 3, a, b, c, d, q));
}
BENCHMARK(BM_qracah_pointwise);

void BM_eval_tfun(benchmark::State& state) {
  Scalar t = fml::tfun_qracah<Scalar>(3, 2, 1, 2, Scalar::q(), Scalar::var("lambda"),
                                      Scalar::var("omega"));
  Sampler s(5);
  Point p = s.point_for({"lambda", "omega"});
  for (auto _ : state) benchmark::DoNotOptimize(eval(t, p));
}
BENCHMARK(BM_eval_tfun);

}  // namespace

BENCHMARK_MAIN();
