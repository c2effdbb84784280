#include <benchmark/benchmark.h>

#include <memory>
#include <random>

#include "colax/diagram/latching.hpp"
#include "colax/homotopy/homotopy.hpp"
#include "colax/homotopy/search.hpp"
#include "colax/reedy2/groupement.hpp"
#include "colax/segal/segal.hpp"

namespace {

using colax::base::Base;
using colax::base::System;
using colax::reedy2::Groupement;
namespace hm = colax::homotopy;

std::shared_ptr<const Groupement> delta_plus(int m) {
  return std::make_shared<const Groupement>(colax::reedy2::build_delta_plus(m));
}

void BM_BuildDeltaPlus(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(colax::reedy2::build_delta_plus(m));
}
BENCHMARK(BM_BuildDeltaPlus)->DenseRange(2, 5);

void BM_BuildPX(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(colax::reedy2::build_px({"a", "b"}, m));
}
BENCHMARK(BM_BuildPX)->DenseRange(2, 4);

void BM_Divisibility(benchmark::State& state) {
  const Groupement g = colax::reedy2::build_delta_plus(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(colax::reedy2::check_direct_divisibility(g));
}
BENCHMARK(BM_Divisibility)->DenseRange(2, 4);

void BM_EnumerateIcons(benchmark::State& state) {
  const auto g = delta_plus(2);
  const auto ds = hm::enumerate_diagrams(g, Base::finvect(2), 2, 0, 2);
  for (auto _ : state) {
    std::size_t n = 0;
    for (const auto& f : ds) n += hm::enumerate_icons(f, ds.back()).size();
    benchmark::DoNotOptimize(n);
  }
  state.counters["diagrams"] = static_cast<double>(ds.size());
}
BENCHMARK(BM_EnumerateIcons)->Unit(benchmark::kMillisecond);

struct IconSample {
  std::vector<colax::diagram::Icon> icons;
  IconSample() {
    const auto g = delta_plus(2);
    const auto ds = hm::enumerate_diagrams(g, Base::finvect(2), 2, 0, 2);
    std::mt19937 rng(7);
    for (int i = 0; i < 64 && icons.size() < 32; ++i) {
      const auto& f = ds[rng() % ds.size()];
      const auto& h = ds[rng() % ds.size()];
      if (auto s = hm::random_icon(f, h, rng)) icons.push_back(*s);
    }
  }
};

const IconSample& sample() {
  static const IconSample s;
  return s;
}

void BM_Classify(benchmark::State& state) {
  const auto& icons = sample().icons;
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(hm::classify(icons[i++ % icons.size()]));
}
BENCHMARK(BM_Classify);

void BM_FactorIcon(benchmark::State& state) {
  const auto& icons = sample().icons;
  const auto system = static_cast<System>(state.range(0));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(hm::factor_icon(icons[i++ % icons.size()], system));
}
BENCHMARK(BM_FactorIcon)->Arg(static_cast<int>(System::TrivCofFib))->Arg(static_cast<int>(System::CofTrivFib));

void BM_LimitColax(benchmark::State& state) {
  const auto g = delta_plus(2);
  const Base b = Base::finset();
  const auto ds = hm::enumerate_diagrams(g, b, 2, 1, 2);
  hm::DiagramFamily fam;
  fam.nodes = {ds.front(), ds.back()};
  for (auto _ : state) {
    benchmark::DoNotOptimize(hm::limit_colax(g, b, 2, fam));
    benchmark::DoNotOptimize(hm::colimit_colax(g, b, 2, fam));
  }
}
BENCHMARK(BM_LimitColax)->Unit(benchmark::kMicrosecond);

void BM_JoyalT(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(colax::segal::joyal_T(m));
}
BENCHMARK(BM_JoyalT)->DenseRange(2, 4);

}  // namespace

BENCHMARK_MAIN();
