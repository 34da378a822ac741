// Phase timings of the elimination variants on the generated families.
// Counters report the per-phase seconds summed over factors.
#include <benchmark/benchmark.h>

#include <map>
#include <string>
#include <tuple>

#include "jk/genmat.hpp"
#include "jk/poly.hpp"
#include "jk/structure.hpp"

namespace {

struct Instance {
  jk::RatMatrix a;
  jk::FactoredCharPoly chi;
};

const Instance& instance(const std::string& family, std::size_t d) {
  static std::map<std::pair<std::string, std::size_t>, Instance> cache;
  auto key = std::make_pair(family, d);
  auto it = cache.find(key);
  if (it == cache.end()) {
    const auto spec = jk::named_family(family, d);
    it = cache.emplace(key, Instance{jk::generate(spec, 1), spec.charpoly()}).first;
  }
  return it->second;
}

void run_family(benchmark::State& state, std::string family, jk::Method method, bool preprocess) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const Instance& inst = instance(family, d);
  jk::PhaseTimings sum;
  std::size_t iters = 0;
  for (auto _ : state) {
    auto reports = jk::jordan_blocks_all(inst.a, inst.chi, {method, preprocess}, false);
    benchmark::DoNotOptimize(reports);
    for (const auto& r : reports) {
      sum.f1a += r.timings.f1a;
      sum.annihpol += r.timings.annihpol;
      sum.krylovgs += r.timings.krylovgs;
      sum.jkelim += r.timings.jkelim;
      if (r.timings.preprocessing) sum.preprocessing = sum.preprocessing.value_or(0) + *r.timings.preprocessing;
    }
    ++iters;
  }
  const double k = iters == 0 ? 1 : static_cast<double>(iters);
  state.counters["n"] = static_cast<double>(inst.a.rows());
  state.counters["f1A"] = sum.f1a / k;
  state.counters["annihpol"] = sum.annihpol / k;
  state.counters["krylovgs"] = sum.krylovgs / k;
  state.counters["jkelim"] = sum.jkelim / k;
  if (sum.preprocessing) state.counters["preprocessing"] = *sum.preprocessing / k;
}

void BM_charpoly(benchmark::State& state, std::string family) {
  const Instance& inst = instance(family, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(jk::charpoly(inst.a));
  state.counters["n"] = static_cast<double>(inst.a.rows());
}

void register_all() {
  for (const char* family : {"s51", "s52", "s53", "s54", "s55"}) {
    for (auto [method, tag] : {std::tuple{jk::Method::kFullElimination, "full"},
                               std::tuple{jk::Method::kEarlyTermination, "alg6"},
                               std::tuple{jk::Method::kEarlyTerminationMatrix, "alg6-matrix"}}) {
      for (bool pre : {false, true}) {
        const std::string name = std::string("jordan/") + family + "/" + tag + (pre ? "/pre" : "");
        benchmark::RegisterBenchmark(name.c_str(), run_family, std::string(family), method, pre)
            ->Arg(1)->Arg(2)
            ->Unit(benchmark::kMillisecond);
      }
    }
    benchmark::RegisterBenchmark((std::string("charpoly/") + family).c_str(), BM_charpoly, std::string(family))
        ->Arg(1)->Arg(2)
        ->Unit(benchmark::kMillisecond);
  }
}

}  // namespace

int main(int argc, char** argv) {
  register_all();
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
