#include <benchmark/benchmark.h>

#include <cmath>
#include <random>

#include "ballgeo/compact_set.hpp"
#include "ballgeo/hausdorff_kernels.hpp"
#include "ballgeo/spaces.hpp"

using namespace ballgeo;

namespace {

double euclid(const Point& a, const Point& b) { return std::hypot(a[0] - b[0], a[1] - b[1]); }

std::vector<Point> cloud(std::size_t n, double spread, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-spread, spread);
  std::vector<Point> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back({u(rng), u(rng)});
  return out;
}

void BM_CloudSerial(benchmark::State& state) {
  auto a = cloud(state.range(0), 3.0, 1), b = cloud(state.range(0), 2.0, 2);
  for (auto _ : state) benchmark::DoNotOptimize(directed_sup_serial(a, b, euclid));
}

void BM_CloudParallel(benchmark::State& state) {
  auto a = cloud(state.range(0), 3.0, 1), b = cloud(state.range(0), 2.0, 2);
  for (auto _ : state) benchmark::DoNotOptimize(directed_sup_parallel(a, b, euclid));
}

// hyperbolic ball nets: the expensive distance of the catalogue
struct HyperbolicNets {
  std::vector<Point> a, b;
  DistanceFn d;
  explicit HyperbolicNets(double eps) {
    auto h = make_model("hyperbolic_plane");
    a = h->ball_net({HyperbolicPlane::lift(0.0, 0.0), 1.0}, eps).points;
    b = h->ball_net({HyperbolicPlane::lift(0.7, -0.2), 1.3}, eps).points;
    d = [h](const Point& p, const Point& q) { return h->distance(p, q); };
  }
};

void BM_HyperbolicSerial(benchmark::State& state) {
  HyperbolicNets nets(0.1 / static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(directed_sup_serial(nets.b, nets.a, nets.d));
  state.counters["points"] = static_cast<double>(nets.a.size() + nets.b.size());
}

void BM_HyperbolicParallel(benchmark::State& state) {
  HyperbolicNets nets(0.1 / static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(directed_sup_parallel(nets.b, nets.a, nets.d));
  state.counters["points"] = static_cast<double>(nets.a.size() + nets.b.size());
}

}  // namespace

BENCHMARK(BM_CloudSerial)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CloudParallel)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HyperbolicSerial)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HyperbolicParallel)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
