#include <benchmark/benchmark.h>

#include <vector>

#include "hardy/certify.hpp"
#include "hardy/kernels.hpp"
#include "hardy/parallel.hpp"
#include "hardy/peak.hpp"

using namespace hardy;

namespace {

// eight peak functions with moderately large exponents
std::vector<AnalyticFn> peak_family() {
  std::vector<AnalyticFn> fns;
  for (int n = 0; n < 8; ++n) fns.push_back(peak_function(BoundaryPoint::at_angle(kTwoPi * n / 8.0), 20 + 15 * n));
  return fns;
}

std::vector<kernels::Segment> segments(std::size_t n) {
  std::vector<kernels::Segment> s(n);
  for (std::size_t k = 0; k < n; ++k) s[k] = {kTwoPi * k / n, kTwoPi * (k + 1) / n};
  return s;
}

std::vector<cplx> polar_grid(std::size_t nr, std::size_t nt) {
  std::vector<cplx> pts;
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t k = 0; k < nt; ++k)
      pts.push_back(std::polar(static_cast<double>(i + 1) / nr, kTwoPi * k / nt));
  return pts;
}

template <bool Parallel>
void BM_BoundSegments(benchmark::State& state) {
  const auto fns = peak_family();
  const auto segs = segments(static_cast<std::size_t>(state.range(0)));
  const Path path = Path::arc(0.0, kTwoPi);
  std::vector<kernels::SegmentBound> out(segs.size());
  for (auto _ : state) {
    if constexpr (Parallel) kernels::bound_segments_omp(fns, path, segs, out, {});
    else kernels::bound_segments_serial(fns, path, segs, out, {});
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool Parallel>
void BM_SumAbsGrid(benchmark::State& state) {
  const auto fns = peak_family();
  const auto pts = polar_grid(static_cast<std::size_t>(state.range(0)), 720);
  std::vector<double> out(pts.size());
  for (auto _ : state) {
    if constexpr (Parallel) kernels::sum_abs_grid_omp(fns, pts, out);
    else kernels::sum_abs_grid_serial(fns, pts, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(pts.size()));
}

void BM_SupAbsSum(benchmark::State& state) {
  const auto fns = peak_family();
  CertifyOptions o;
  o.exec = state.range(0) ? ExecPolicy::parallel : ExecPolicy::serial;
  for (auto _ : state) benchmark::DoNotOptimize(sup_abs_sum(fns, o).bound.estimate);
}

}  // namespace

BENCHMARK(BM_BoundSegments<false>)->Name("bound_segments/serial")->Arg(1024)->Arg(16384);
BENCHMARK(BM_BoundSegments<true>)->Name("bound_segments/omp")->Arg(1024)->Arg(16384);
BENCHMARK(BM_SumAbsGrid<false>)->Name("sum_abs_grid/serial")->Arg(50)->Arg(200);
BENCHMARK(BM_SumAbsGrid<true>)->Name("sum_abs_grid/omp")->Arg(50)->Arg(200);
BENCHMARK(BM_SupAbsSum)->Name("sup_abs_sum/exec")->Arg(0)->Arg(1);

int main(int argc, char** argv) {
  apply_thread_cap_from_env();
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
