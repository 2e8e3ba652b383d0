#include <benchmark/benchmark.h>

#include "a1weyl/geometry.hpp"
#include "a1weyl/hyperbolic.hpp"
#include "a1weyl/presentation.hpp"
#include "a1weyl/random.hpp"

using namespace a1weyl;

namespace {

std::vector<Word> words(std::size_t nu, std::size_t len, std::size_t count) {
  Rng rng(1);
  const auto s = Semilattice::toroidal(nu);
  std::vector<Word> out;
  while (out.size() < count) {
    Word w = random_word(rng, s, len);
    if (w.size() == len) out.push_back(std::move(w));
  }
  return out;
}

void BM_EvalWord(benchmark::State& state) {
  const auto ws = words(3, static_cast<std::size_t>(state.range(0)), 64);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(eval_word(ws[i++ % ws.size()]));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EvalWord)->Arg(8)->Arg(32)->Arg(128);

void BM_EvalWordHyp(benchmark::State& state) {
  const auto ws = words(3, static_cast<std::size_t>(state.range(0)), 64);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(eval_word_hyp(ws[i++ % ws.size()]));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EvalWordHyp)->Arg(8)->Arg(32)->Arg(128);

void BM_MatrixOfWord(benchmark::State& state) {
  const auto ws = words(3, static_cast<std::size_t>(state.range(0)), 64);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(matrix_of_word(ws[i++ % ws.size()]));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MatrixOfWord)->Arg(8)->Arg(32);

void BM_RewriteToIdentity(benchmark::State& state) {
  const std::size_t nu = 4;
  const ReflectableBase b(Semilattice::baby(nu));
  Rng rng(2);
  std::vector<std::vector<std::size_t>> rels;
  for (int k = 0; k < 64; ++k) rels.push_back(random_relation(rng, nu, static_cast<std::size_t>(state.range(0))));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(rewrite_to_identity(b, rels[i++ % rels.size()]));
}
BENCHMARK(BM_RewriteToIdentity)->Arg(12)->Arg(24)->Arg(48);

void BM_ReduceLoop(benchmark::State& state) {
  const ReflectableBase b(Semilattice::baby(2));
  const std::vector<std::size_t> w{2, 0, 2, 1, 0, 1, 0, 2, 1, 2, 1, 0};
  const Path p = path_of_word(Word::from_base(b, w), Simplex::origin(2));
  for (auto _ : state) benchmark::DoNotOptimize(reduce_loop(b, p));
}
BENCHMARK(BM_ReduceLoop);

void BM_EnumerateAlternating(benchmark::State& state) {
  const ReflectableBase b(Semilattice::toroidal(2));
  const auto k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_alternating(b.roots(), k));
}
BENCHMARK(BM_EnumerateAlternating)->Arg(4)->Arg(6)->Arg(8);

void BM_ReflectableCheck(benchmark::State& state) {
  const auto s = Semilattice::toroidal(2);
  const ReflectableBase b(s);
  for (auto _ : state) benchmark::DoNotOptimize(check_reflectable_set(s, b.roots(), state.range(0)));
}
BENCHMARK(BM_ReflectableCheck)->Arg(2)->Arg(4)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
