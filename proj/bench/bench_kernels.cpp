// Serial reference kernel against the OpenMP kernel on one frontier batch.

#include "nullsol/parser.hpp"
#include "nullsol/subdivision.hpp"

#include <benchmark/benchmark.h>

#include <stdexcept>

using namespace nullsol;

namespace {

std::vector<CompiledPoly> workload() {
  // Two curves with irrational crossings so most boxes survive to the
  // candidate-point stage.
  RealPolySystem sys{2, {}};
  for (const char* text : {"X1^2 + X2^2 - 3", "X1^3 - 2*X2^2 + X1*X2 - 1/3"}) {
    auto r = parse(SourceExpr{text, 2});
    if (!std::holds_alternative<MultiPoly>(r)) throw std::runtime_error("bench fixture does not parse");
    sys.polys.push_back(std::get<MultiPoly>(r));
  }
  return compile(sys);
}

// side x side grid of equal boxes covering [-4, 4]^2.
std::vector<IntervalBox> grid(int side) {
  std::vector<IntervalBox> boxes;
  const Rational width = Rational(8) / side;
  for (int a = 0; a < side; ++a)
    for (int b = 0; b < side; ++b) {
      Rational x0 = -4 + width * a, y0 = -4 + width * b;
      boxes.push_back(IntervalBox({Interval(x0, x0 + width), Interval(y0, y0 + width)}));
    }
  return boxes;
}

void BM_serial(benchmark::State& state) {
  auto system = workload();
  auto boxes = grid(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::examine_boxes_serial(system, boxes, 64));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(boxes.size()));
}

void BM_parallel(benchmark::State& state) {
  auto system = workload();
  auto boxes = grid(static_cast<int>(state.range(0)));
  const int threads = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::examine_boxes_parallel(system, boxes, 64, threads));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(boxes.size()));
}

}  // namespace

BENCHMARK(BM_serial)->Arg(32)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_parallel)->ArgsProduct({{32, 128}, {1, 2, 4, 8}})->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
