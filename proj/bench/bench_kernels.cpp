// Serial reference kernels against their OpenMP versions.

#include <benchmark/benchmark.h>

#include "cgeom/constructions.hpp"
#include "cgeom/hopf.hpp"
#include "cgeom/kernels.hpp"
#include "cgeom/setfam.hpp"

using namespace cgeom;

namespace {

// Downsets of the 3 x 4 grid poset: 12 elements, 35 closed sets.
ConvexGeometry grid_geometry() {
  std::vector<std::string> names;
  std::vector<std::pair<std::size_t, std::size_t>> less;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      names.push_back("g" + std::to_string(i) + std::to_string(j));
      if (i > 0) less.emplace_back((i - 1) * 4 + j, i * 4 + j);
      if (j > 0) less.emplace_back(i * 4 + j - 1, i * 4 + j);
    }
  return poset_shelling(FinitePoset(names, less));
}

const ConvexGeometry& grid() {
  static const auto g = grid_geometry();
  return g;
}

template <bool Parallel>
void BM_ClosureTable(benchmark::State& state) {
  const auto g = boolean_geometry(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto t = Parallel ? parallel::closure_table(g.ground_size(), g.closed())
                      : serial::closure_table(g.ground_size(), g.closed());
    benchmark::DoNotOptimize(t.data());
  }
}

template <bool Parallel>
void BM_Antiexchange(benchmark::State& state) {
  const auto& g = grid();
  const auto table = serial::closure_table(g.ground_size(), g.closed());
  for (auto _ : state) {
    auto r = Parallel ? parallel::find_antiexchange_violation(g.ground_size(), table)
                      : serial::find_antiexchange_violation(g.ground_size(), table);
    benchmark::DoNotOptimize(r);
  }
}

template <bool Parallel>
void BM_HullFilter(benchmark::State& state) {
  const auto pc = convex_position_configuration(static_cast<std::size_t>(state.range(0)));
  const auto& pts = pc.points();
  const MaskPredicate closed = [&](SubsetMask m) {
    std::vector<Point> xs;
    for (auto i : m.indices()) xs.push_back(pts[i]);
    for (std::size_t p = 0; p < pts.size(); ++p)
      if (!m.contains(p) && point_in_hull(pts[p], xs)) return false;
    return true;
  };
  for (auto _ : state) {
    auto r = Parallel ? parallel::filter_masks(pts.size(), closed) : serial::filter_masks(pts.size(), closed);
    benchmark::DoNotOptimize(r.data());
  }
}

template <bool Parallel>
void BM_IntersectionCheck(benchmark::State& state) {
  const auto g = boolean_geometry(static_cast<std::size_t>(state.range(0)));
  const auto member = detail::membership_table(g.ground_size(), g.closed());
  for (auto _ : state) {
    auto r = Parallel ? parallel::find_intersection_violation(g.closed(), member)
                      : serial::find_intersection_violation(g.closed(), member);
    benchmark::DoNotOptimize(r);
  }
}

template <bool Parallel>
void BM_AntipodeChain(benchmark::State& state) {
  const auto g = boolean_geometry(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto v = Parallel ? antipode_chain(g) : serial::antipode_chain(g);
    benchmark::DoNotOptimize(v);
  }
}

}  // namespace

BENCHMARK(BM_ClosureTable<false>)->Name("closure_table/serial")->Arg(10)->Arg(14);
BENCHMARK(BM_ClosureTable<true>)->Name("closure_table/parallel")->Arg(10)->Arg(14);
BENCHMARK(BM_Antiexchange<false>)->Name("antiexchange/serial");
BENCHMARK(BM_Antiexchange<true>)->Name("antiexchange/parallel");
BENCHMARK(BM_HullFilter<false>)->Name("hull_filter/serial")->Arg(6)->Arg(8);
BENCHMARK(BM_HullFilter<true>)->Name("hull_filter/parallel")->Arg(6)->Arg(8);
BENCHMARK(BM_IntersectionCheck<false>)->Name("intersection/serial")->Arg(8)->Arg(10);
BENCHMARK(BM_IntersectionCheck<true>)->Name("intersection/parallel")->Arg(8)->Arg(10);
BENCHMARK(BM_AntipodeChain<false>)->Name("antipode_chain/serial")->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AntipodeChain<true>)->Name("antipode_chain/parallel")->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
