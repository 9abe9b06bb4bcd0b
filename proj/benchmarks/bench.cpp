#include <benchmark/benchmark.h>

#include <random>

#include "congrue/cgg.hpp"
#include "congrue/crt.hpp"
#include "congrue/eqvlat.hpp"
#include "congrue/lattice_gen.hpp"
#include "congrue/ultra.hpp"

namespace {

using congrue::Int;

void BM_NewtonEval(benchmark::State& state) {
  std::vector<Int> c;
  for (int k = 0; k <= state.range(0); ++k) c.push_back(k * k + 1);
  congrue::NewtonPoly p(c);
  Int x = 123456789;
  for (auto _ : state) {
    benchmark::DoNotOptimize(congrue::eval(p, x));
  }
}
BENCHMARK(BM_NewtonEval)->Arg(5)->Arg(20)->Arg(100);

void BM_Decompose(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  auto f = [](const Int& x) { return x * x * (x - 1) * (x - 1) / 2; };
  for (auto _ : state) {
    benchmark::DoNotOptimize(congrue::decompose(f, n));
  }
}
BENCHMARK(BM_Decompose)->Arg(6)->Arg(20)->Arg(60);

void BM_WindowOracle(benchmark::State& state) {
  congrue::NewtonPoly p({0, 0, 2, 6, 24});
  auto f = [&p](const Int& x) { return congrue::eval(p, x); };
  const Int r = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(congrue::window_oracle(f, -r, r));
  }
}
BENCHMARK(BM_WindowOracle)->Arg(10)->Arg(30);

void BM_CrtSolve(benchmark::State& state) {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> mod(1, 1000);
  std::uniform_int_distribution<int> res(0, 999);
  std::vector<congrue::CrtSystem> systems;
  for (int i = 0; i < 64; ++i) {
    congrue::CrtSystem s;
    for (int j = 0; j < int(state.range(0)); ++j) {
      s.constraints.emplace_back(res(rng), mod(rng));
    }
    systems.push_back(std::move(s));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(congrue::solve(systems[i++ % systems.size()]));
  }
}
BENCHMARK(BM_CrtSolve)->Arg(4)->Arg(16);

void BM_Pol1(benchmark::State& state) {
  const int n = int(state.range(0));
  congrue::SubLattice L = congrue::lattice_closure(n, {});
  for (auto _ : state) {
    benchmark::DoNotOptimize(congrue::pol1(L));
  }
}
BENCHMARK(BM_Pol1)->Arg(4)->Arg(6);

void BM_Hyperconvex(benchmark::State& state) {
  congrue::UltraSpace s =
      congrue::dv_space(congrue::boolean_algebra(int(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(congrue::is_hyperconvex(s));
  }
}
BENCHMARK(BM_Hyperconvex)->Arg(2)->Arg(3);

void BM_RepresentationCheck(benchmark::State& state) {
  congrue::FiniteSemilattice V = congrue::divisor_lattice(12);
  for (auto _ : state) {
    benchmark::DoNotOptimize(congrue::representation_check(V));
  }
}
BENCHMARK(BM_RepresentationCheck);

}  // namespace

BENCHMARK_MAIN();
