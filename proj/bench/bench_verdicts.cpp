#include <benchmark/benchmark.h>

#include <random>

#include "ldlf/batch.hpp"
#include "ldlf/parser.hpp"

namespace {

std::vector<ldlf::Trace> make_traces(std::size_t count, std::size_t max_len) {
  std::mt19937_64 rng(7);
  const std::vector<std::string> atoms{"a", "b", "c", "d"};
  std::vector<ldlf::Trace> out;
  for (std::size_t k = 0; k < count; ++k) {
    ldlf::Trace t;
    const std::size_t len = rng() % (max_len + 1);
    for (std::size_t i = 0; i < len; ++i) {
      std::vector<std::string> on;
      for (const auto& a : atoms)
        if (rng() & 1) on.push_back(a);
      t.letters.emplace_back(on);
    }
    out.push_back(t);
  }
  return out;
}

const char* kFormula = "G (a -> F (b & X c)) & <(a + b)* ; d?> tt";

void run(benchmark::State& state, ldlf::Backend backend, bool parallel) {
  const ldlf::Acceptor acc(ldlf::parse_formula(kFormula), backend);
  const auto traces = make_traces(static_cast<std::size_t>(state.range(0)), 40);
  for (auto _ : state) {
    auto v = parallel ? ldlf::verdicts(acc, traces) : ldlf::verdicts_serial(acc, traces);
    benchmark::DoNotOptimize(v);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_DfaSerial(benchmark::State& s) { run(s, ldlf::Backend::Dfa, false); }
void BM_DfaParallel(benchmark::State& s) { run(s, ldlf::Backend::Dfa, true); }
void BM_AfaSerial(benchmark::State& s) { run(s, ldlf::Backend::Afa, false); }
void BM_AfaParallel(benchmark::State& s) { run(s, ldlf::Backend::Afa, true); }
void BM_OracleSerial(benchmark::State& s) { run(s, ldlf::Backend::Oracle, false); }
void BM_OracleParallel(benchmark::State& s) { run(s, ldlf::Backend::Oracle, true); }

}  // namespace

BENCHMARK(BM_DfaSerial)->Arg(1 << 14);
BENCHMARK(BM_DfaParallel)->Arg(1 << 14);
BENCHMARK(BM_AfaSerial)->Arg(1 << 12);
BENCHMARK(BM_AfaParallel)->Arg(1 << 12);
BENCHMARK(BM_OracleSerial)->Arg(1 << 10);
BENCHMARK(BM_OracleParallel)->Arg(1 << 10);

BENCHMARK_MAIN();
