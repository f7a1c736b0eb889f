// Serial reference vs OpenMP variant for each parallel kernel.

#include <benchmark/benchmark.h>

#include <map>

#include "kleinstab/walls.hpp"

using namespace kleinstab;

namespace {

const LatticeContext& ctx_of(const char* s) {
  static std::map<std::string, LatticeContext> cache;
  auto it = cache.find(s);
  if (it == cache.end()) it = cache.emplace(s, LatticeContext(group(GroupSpec::parse(s)))).first;
  return it->second;
}

StabilityParams sigma_star(const LatticeContext& ctx) {
  return {Rational(1), Rational(1), Rational(1, 2 * (ctx.group->order - 1))};
}

void BM_LieblichSerial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(lieblich_table_serial(st.range(0)));
}
void BM_LieblichParallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(lieblich_table_parallel(st.range(0)));
}

std::vector<StabilityParams> kernel_params(const LatticeContext& ctx, int count) {
  std::vector<StabilityParams> out;
  for (int k = 0; k < count; ++k)
    out.push_back({Rational(k + 1, 3), Rational(k % 7 - 3, 2), Rational(1, (ctx.group->order - 1) * (2 + k % 3))});
  return out;
}

void BM_KernelSerial(benchmark::State& st) {
  const auto& ctx = ctx_of("E8");
  const auto prof = SurfaceProfile::picard_rank_one(1);
  const auto ps = kernel_params(ctx, static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(kernel_sweep_serial(ps, ctx, prof));
}
void BM_KernelParallel(benchmark::State& st) {
  const auto& ctx = ctx_of("E8");
  const auto prof = SurfaceProfile::picard_rank_one(1);
  const auto ps = kernel_params(ctx, static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(kernel_sweep_parallel(ps, ctx, prof));
}

void BM_SweepSerial(benchmark::State& st) {
  const auto& ctx = ctx_of("E7");
  const auto prof = SurfaceProfile::picard_rank_one(1);
  for (auto _ : st)
    benchmark::DoNotOptimize(stability_function_sweep_serial(sigma_star(ctx), ctx, prof, static_cast<std::size_t>(st.range(0)), 7));
}
void BM_SweepParallel(benchmark::State& st) {
  const auto& ctx = ctx_of("E7");
  const auto prof = SurfaceProfile::picard_rank_one(1);
  for (auto _ : st)
    benchmark::DoNotOptimize(
        stability_function_sweep_parallel(sigma_star(ctx), ctx, prof, static_cast<std::size_t>(st.range(0)), 7));
}

SliceSpec slice(const LatticeContext& ctx, long steps) {
  SliceSpec s;
  s.base = sigma_star(ctx);
  for (std::size_t i = 0; i < ctx.rank(); ++i) {
    s.dir_x.push_back({Rational(0), Rational(1)});
    s.dir_y.push_back({Rational(i == 0 ? 1 : 0), Rational(0)});
  }
  s.x = {Rational(-1), Rational(1), Rational(2, steps)};
  s.y = {Rational(-1), Rational(1), Rational(2, steps)};
  s.v = cluster_class(ctx);
  return s;
}

void BM_ScanSerial(benchmark::State& st) {
  const auto& ctx = ctx_of("D:4");
  const auto s = slice(ctx, st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(scan_slice_serial(s, ctx));
}
void BM_ScanParallel(benchmark::State& st) {
  const auto& ctx = ctx_of("D:4");
  const auto s = slice(ctx, st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(scan_slice_parallel(s, ctx));
}

}  // namespace

BENCHMARK(BM_LieblichSerial)->Arg(30)->Arg(60)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LieblichParallel)->Arg(30)->Arg(60)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KernelSerial)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KernelParallel)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepSerial)->Arg(20000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Arg(20000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanSerial)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanParallel)->Arg(16)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
