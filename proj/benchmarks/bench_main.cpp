#include <benchmark/benchmark.h>

#include "isohopf/cone.hpp"
#include "isohopf/ideal.hpp"
#include "isohopf/numeric_topology.hpp"
#include "isohopf/routes.hpp"

using namespace isohopf;

namespace {

IsoSection running(long d, long i, long j) {
  RingPtr ring = make_ring({"x", "y"});
  MultiPoly x = MultiPoly::variable(ring, 0), y = MultiPoly::variable(ring, 1);
  IsoSection s;
  s.ring = ring;
  s.space = QuadSpace::hyperbolic(2);
  s.components = {x.pow(d), y.pow(d), x.pow(i) * y.pow(j), -(x.pow(d - i) * y.pow(d - j))};
  s.torus = TorusWeights{{1, -1}, {d, -d, i - j, j - i}};
  return validate(s);
}

void BM_Colength(benchmark::State& st) {
  RingPtr r = make_ring({"x", "y", "z"});
  PolyIdeal I(r, {parse_poly(r, "x^3 + 2*y^3 - z^3 + x*y*z"), parse_poly(r, "y^3 - 3*x^2*z + z^3"),
                  parse_poly(r, "x^3 - y^2*z + 5*z^3")});
  for (auto _ : st) {
    PolyIdeal fresh(r, I.generators());
    benchmark::DoNotOptimize(colength(fresh));
  }
}
BENCHMARK(BM_Colength)->Unit(benchmark::kMillisecond);

void BM_Rh3(benchmark::State& st) {
  IsoSection s = running(st.range(0), st.range(0) - 1, 1);
  for (auto _ : st) benchmark::DoNotOptimize(route_rh3(s).sqrt_e);
}
BENCHMARK(BM_Rh3)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_Rh7(benchmark::State& st) {
  IsoSection s = running(st.range(0), st.range(0) - 1, 1);
  for (auto _ : st) benchmark::DoNotOptimize(route_rh7_clifford(s).sqrt_e);
}
BENCHMARK(BM_Rh7)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_Rh4(benchmark::State& st) {
  IsoSection s = running(st.range(0), st.range(0) - 1, 1);
  for (auto _ : st) benchmark::DoNotOptimize(route_rh4_deform(s).sqrt_e);
}
BENCHMARK(BM_Rh4)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_ConeSegre(benchmark::State& st) {
  IsoSection s = running(2, 1, 1);
  for (auto _ : st) benchmark::DoNotOptimize(segre_class(s));
}
BENCHMARK(BM_ConeSegre)->Unit(benchmark::kMillisecond);

void BM_Winding(benchmark::State& st) {
  IsoSection s = running(3, 2, 1);
  SphereDegreeOptions o;
  o.samples = static_cast<std::size_t>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(oh1_check(s, o).degree);
}
BENCHMARK(BM_Winding)->Arg(50000)->Arg(200000)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
