#include <benchmark/benchmark.h>

#include "arith/boxcheck.hpp"
#include "arith/compiler.hpp"
#include "arith/coding.hpp"
#include "arith/eval.hpp"
#include "arith/syntax_defs.hpp"

using namespace arith;

namespace {

// compiled characteristic function against the direct evaluator on {0..max}^3
BoxPredicate compiled_agrees() {
  static const Formula f = parse_formula("(A v3 <= v0)(E v4 <= (v1 + v2))(((v3 + v4) = (v2 * v3)) | (v4 <= v1))");
  static const Compiled c = compile(f, {0, 1, 2});
  return [](const std::vector<Natural>& p) {
    const bool direct = eval_delta0(f, {{0, p[0]}, {1, p[1]}, {2, p[2]}});
    return eval(c, p) == (direct ? 1 : 0);
  };
}

// structural fml test against the building-sequence definition on codes lo..hi
BoxPredicate syn_agrees() {
  return [](const std::vector<Natural>& p) {
    const Verdict3 v = seqdef(Scheme::Compact, SeqPred::Fml, p, 2'000'000);
    return v == verdict(syn(Scheme::Compact, SynPred::Fml, p[0]));
  };
}

void BM_compiled_serial(benchmark::State& st) {
  const auto agree = compiled_agrees();
  for (auto _ : st) benchmark::DoNotOptimize(box_check_serial(3, st.range(0), agree));
}
void BM_compiled_parallel(benchmark::State& st) {
  const auto agree = compiled_agrees();
  for (auto _ : st) benchmark::DoNotOptimize(box_check_parallel(3, st.range(0), agree));
}
void BM_syn_serial(benchmark::State& st) {
  const auto agree = syn_agrees();
  for (auto _ : st) benchmark::DoNotOptimize(range_check_serial(0, st.range(0), agree));
}
void BM_syn_parallel(benchmark::State& st) {
  const auto agree = syn_agrees();
  for (auto _ : st) benchmark::DoNotOptimize(range_check_parallel(0, st.range(0), agree));
}

}  // namespace

BENCHMARK(BM_compiled_serial)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_compiled_parallel)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_syn_serial)->Arg(1000)->Arg(5000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_syn_parallel)->Arg(1000)->Arg(5000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
