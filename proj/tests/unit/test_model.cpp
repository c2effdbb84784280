#include <chrono>
#include <memory>
#include <random>

#include "colax/homotopy/classical.hpp"
#include "colax/homotopy/model.hpp"
#include "colax/homotopy/search.hpp"
#include "doctest.h"

using namespace colax::homotopy;
namespace cl = colax::homotopy::classical;
namespace r2 = colax::reedy2;

namespace {

std::shared_ptr<const Groupement> delta_plus(int m) { return std::make_shared<const Groupement>(r2::build_delta_plus(m)); }

void print_failures(const colax::Report& r) {
  int shown = 0;
  for (const auto& v : r.failures()) {
    if (shown++ == 5) break;
    MESSAGE(v.check << " [" << v.instance << "] " << v.witness);
  }
}

}  // namespace

TEST_CASE("Δ⁺≤2 over FinVect dims ≤2 satisfies the model axioms") {
  const auto t0 = std::chrono::steady_clock::now();
  const auto s = enumerated_sample("Δ⁺≤2 FinVect", delta_plus(2), Base::finvect(2), 2, 0, 2);
  MESSAGE(s.diagrams.size() << " diagrams, " << s.icons.size() << " icons");
  REQUIRE(s.diagrams.size() > 1);
  const auto r = verify_model_axioms(s);
  print_failures(r);
  CHECK(r.ok());
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  MESSAGE("elapsed " << secs << " s");
  CHECK(secs < 600.0);
}

TEST_CASE("walking arrow agrees with the classical Reedy structure") {
  auto arrow = std::make_shared<const r2::ReedyCat>(r2::walking_arrow());
  auto b01 = std::make_shared<const Groupement>(r2::build_from_reedy1(*arrow));
  for (const Base& b : {Base::finset(), Base::finvect(2)}) {
    auto s = enumerated_sample("B01 " + b.name(), b01, b, b01->bound(), 0, b.cartesian() ? 2 : 1);
    s.reedy1 = arrow;
    const auto r = verify_model_axioms(s);
    print_failures(r);
    CHECK(r.ok());
  }
}

TEST_CASE("chain groupements over FinSet agree with unital presheaves") {
  auto g = std::make_shared<const Groupement>(r2::build_px({"a", "b"}, 2));
  const Base b = Base::finset();
  ModelSample s;
  s.name = "PX≤2 FinSet";
  s.presheaves = true;
  s.diagrams.push_back(colax::diagram::constant_unit(g, b, 2));
  std::mt19937 rng(5);
  for (int i = 0; i < 6; ++i) {
    if (auto f = random_diagram(g, b, 2, 1, 2, rng)) s.diagrams.push_back(*f);
  }
  REQUIRE(s.diagrams.size() >= 4);
  for (const auto& x : s.diagrams) {
    for (const auto& y : s.diagrams) {
      SearchLimits lim;
      lim.cap = 6;
      lim.budget = 200000;
      for (auto& i : enumerate_icons(x, y, lim)) s.icons.push_back(std::move(i));
    }
  }
  MESSAGE(s.icons.size() << " icons");
  ModelLimits ml;
  ml.squares = 150;
  const auto r = verify_model_axioms(s, ml);
  print_failures(r);
  CHECK(r.ok());
}

TEST_CASE("a base whose fibrations are all maps fails lifting") {
  Base bad = Base::finvect(2);
  auto m = bad.model();
  m.fib = [](const colax::base::Arrow&) { return true; };
  bad.set_model(m);
  const auto good = enumerated_sample("Δ⁺≤1 FinVect", delta_plus(1), Base::finvect(2), 1, 0, 2);
  const auto r = verify_model_axioms(rebase(good, bad));
  bool lifting = false;
  for (const auto& v : r.failures()) lifting = lifting || v.check == "lifting";
  CHECK(lifting);
  CHECK(verify_model_axioms(good).ok());
}
