#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "lefsig/catalog.hpp"
#include "lefsig/engine.hpp"
#include "lefsig/wall_step.hpp"
#include "lefsig/word_dsl.hpp"

namespace {

using namespace lefsig;

std::vector<VanishingCycle> random_chain_word(int genus, std::size_t length, unsigned seed) {
  const GenusContext ctx(genus);
  const CurveTable table = chain_preset(ctx);
  std::vector<const VanishingCycle*> curves;
  for (std::size_t k = 1; k <= 2 * static_cast<std::size_t>(genus) + 1; ++k) {
    curves.push_back(table.find("c" + std::to_string(k)));
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, curves.size() - 1);
  std::vector<VanishingCycle> word;
  word.reserve(length);
  for (std::size_t i = 0; i < length; ++i) word.push_back(*curves[pick(rng)]);
  return word;
}

// The hot path: one presentation + kernel solve against a fixed prefix.
void BM_relative_signature(benchmark::State& state) {
  const int genus = static_cast<int>(state.range(0));
  const auto word = random_chain_word(genus, 20, 12345);
  const SymplecticMap prefix = word_monodromy(word, word.size());
  for (auto _ : state) {
    benchmark::DoNotOptimize(relative_signature(prefix, word.front()));
  }
}
BENCHMARK(BM_relative_signature)->Arg(1)->Arg(2)->Arg(3);

void BM_compute_word40(benchmark::State& state) {
  const int genus = static_cast<int>(state.range(0));
  FibrationSpec spec{GenusContext(genus), BaseSurface::disk,
                     random_chain_word(genus, 40, 99), HyperellipticSetting::automatic, false};
  for (auto _ : state) {
    benchmark::DoNotOptimize(compute(spec));
  }
}
BENCHMARK(BM_compute_word40)->Arg(1)->Arg(2)->Arg(3);

void BM_compute_elliptic_surface(benchmark::State& state) {
  const FibrationSpec spec = parse_document("genus 1\nbase S2\npreset chain\nword (a b)^6\n");
  for (auto _ : state) {
    benchmark::DoNotOptimize(compute(spec));
  }
}
BENCHMARK(BM_compute_elliptic_surface);

}  // namespace

BENCHMARK_MAIN();
