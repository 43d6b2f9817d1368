#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>

#include "crnt/cone.hpp"
#include "crnt/model.hpp"
#include "crnt/steady_state.hpp"
#include "crnt/translation.hpp"
#include "crnt/tree_constants.hpp"

using namespace crnt;

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(CRNT_DATA_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const char* const kNetworks[] = {"futile_cycle.crn", "mfc2.crn", "shinar_feinberg.crn"};

void BM_ExtremeCurrents(benchmark::State& state) {
  Network net = parse_network(slurp(kNetworks[state.range(0)]));
  for (auto _ : state) benchmark::DoNotOptimize(extreme_currents(net));
  state.SetLabel(net.name());
}
BENCHMARK(BM_ExtremeCurrents)->DenseRange(0, 2);

void BM_SymbolicTreeConstants(benchmark::State& state) {
  Network src = parse_network(slurp(kNetworks[state.range(0)]));
  std::string tname = std::string(kNetworks[state.range(0)]);
  tname.replace(tname.size() - 4, 4, ".translation");
  Translation t = parse_translation(slurp(tname), src);
  for (auto _ : state) benchmark::DoNotOptimize(translated_tree_constants(t));
  state.SetLabel(src.name());
}
BENCHMARK(BM_SymbolicTreeConstants)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_FindTranslations(benchmark::State& state) {
  Network net = parse_network(slurp(kNetworks[state.range(0)]));
  for (auto _ : state) benchmark::DoNotOptimize(find_translations(net));
  state.SetLabel(net.name());
}
BENCHMARK(BM_FindTranslations)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

// Orthants met by a random n-dimensional subspace of Q^{2n}.
void BM_SignVectors(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<RatVec> gens;
  for (std::size_t j = 0; j < n; ++j) {
    RatVec v(2 * n);
    for (std::size_t i = 0; i < 2 * n; ++i) v[i] = static_cast<long>((7 * i + 3 * j * j + 1) % 5) - 2;
    gens.push_back(v);
  }
  SubspaceBasis space = SubspaceBasis::span_of(2 * n, gens);
  for (auto _ : state) benchmark::DoNotOptimize(sign_vectors(space, 2 * n));
}
BENCHMARK(BM_SignVectors)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_SolveSteadyState(benchmark::State& state) {
  Network src = parse_network(slurp("shinar_feinberg.crn"));
  Translation t = parse_translation(slurp("shinar_feinberg.translation"), src);
  RateMap k = parse_assignments(slurp("shinar_feinberg.rates"));
  std::vector<double> x0;
  for (const auto& v : parse_state(slurp("shinar_feinberg.x0"), src)) x0.push_back(v.get_d());
  for (auto _ : state) benchmark::DoNotOptimize(solve_steady_state(t, k, x0));
}
BENCHMARK(BM_SolveSteadyState)->Unit(benchmark::kMicrosecond);

}  // namespace

// The distro libbenchmark_main.a carries LTO bytecode from another compiler build.
BENCHMARK_MAIN();
