#include <benchmark/benchmark.h>

#include <string>

#include "ctc/abp.hpp"
#include "ctc/equivalence.hpp"
#include "ctc/generator.hpp"
#include "ctc/parser.hpp"
#include "ctc/semantics.hpp"
#include "ctc/unfolding.hpp"

namespace {

// n cycles of lengths 2..n+1 in parallel; they move in lock step, so the
// system has lcm(2..n+1) states
std::string cycles(int n) {
  std::string src, r = "R = ";
  for (int i = 0; i < n; ++i) {
    std::string c = "C" + std::to_string(i), body;
    for (int k = 0; k < i + 2; ++k) body += "a" + std::to_string(i) + "_" + std::to_string(k) + ".";
    src += c + " = " + body + c + ";\n";
    r += (i ? " || " : "") + c;
  }
  return src + r + ";\n";
}

void BM_ParseAbp(benchmark::State& state) {
  const std::string src = ctc::abp_source(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ctc::parse_program(src));
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * src.size()));
}
BENCHMARK(BM_ParseAbp)->Arg(1)->Arg(3);

void BM_BuildLts(benchmark::State& state) {
  auto env = ctc::parse_program(cycles(static_cast<int>(state.range(0))));
  auto r = ctc::Process::constant("R");
  std::size_t states = 0;
  for (auto _ : state) states = ctc::build_lts(r, env).num_states();
  state.counters["states"] = static_cast<double>(states);
}
BENCHMARK(BM_BuildLts)->DenseRange(2, 8, 2);

void BM_SaturateWeak(benchmark::State& state) {
  auto env = ctc::parse_program("T = tau.a.T + tau.(b || tau).T + c.tau.tau.T;\nW = T || T || T;");
  auto lts = ctc::build_lts(ctc::Process::constant("W"), env);
  for (auto _ : state) benchmark::DoNotOptimize(ctc::saturate_weak(lts));
  state.counters["states"] = static_cast<double>(lts.num_states());
}
BENCHMARK(BM_SaturateWeak);

void BM_StepBisim(benchmark::State& state) {
  auto env = ctc::parse_program(cycles(static_cast<int>(state.range(0))));
  auto r = ctc::Process::constant("R");
  auto q = ctc::Process::par(r, ctc::Process::nil());
  const auto strength = state.range(1) ? ctc::Strength::Weak : ctc::Strength::Strong;
  for (auto _ : state) benchmark::DoNotOptimize(ctc::step_bisim(r, q, env, strength).equivalent);
}
BENCHMARK(BM_StepBisim)->ArgsProduct({{2, 4, 6}, {0, 1}});

void BM_Unfold(benchmark::State& state) {
  auto env = ctc::parse_program("A = (a || b).A + c.(A || d.nil);");
  ctc::UnfoldOptions o;
  o.depth = static_cast<int>(state.range(0));
  std::size_t events = 0;
  for (auto _ : state) events = ctc::unfold(ctc::Process::constant("A"), env, o).size();
  state.counters["events"] = static_cast<double>(events);
}
BENCHMARK(BM_Unfold)->DenseRange(2, 6, 2);

void BM_EquivalenceFlavor(benchmark::State& state) {
  auto env = ctc::parse_program("A = (a || b).c.A + tau.A2;\nA2 = (b || a).c.A2 + a.d.A;");
  auto p = ctc::Process::constant("A");
  auto q = ctc::Process::sum(p, ctc::Process::nil());
  ctc::CheckOptions o;
  o.depth = 4;
  const ctc::EquivKind k{static_cast<ctc::Flavor>(state.range(0)), ctc::Strength::Strong};
  state.SetLabel(k.str());
  for (auto _ : state) benchmark::DoNotOptimize(ctc::check(p, q, env, k, o).equivalent);
}
BENCHMARK(BM_EquivalenceFlavor)->DenseRange(0, 3);

void BM_RandomCorpusStep(benchmark::State& state) {
  const auto& env = ctc::library_env();
  for (auto _ : state) {
    ctc::TermGenerator gen(1);
    for (int i = 0; i < 100; ++i) {
      auto p = gen.term();
      benchmark::DoNotOptimize(ctc::step_bisim(p, ctc::Process::sum(p, p), env, ctc::Strength::Weak).equivalent);
    }
  }
}
BENCHMARK(BM_RandomCorpusStep);

}  // namespace

BENCHMARK_MAIN();
