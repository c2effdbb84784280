#include <chrono>
#include <functional>

#include "colax/diagram/latching.hpp"
#include "colax/error.hpp"
#include "colax/homotopy/homotopy.hpp"
#include "colax/homotopy/search.hpp"
#include "support.hpp"

namespace acceptance {

namespace r2 = colax::reedy2;
namespace dg = colax::diagram;
using colax::homotopy::DiagramFamily;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

Outcome criterion1() {
  Tally t;
  std::string timing;
  auto timed = [&](const std::string& name, const std::function<void()>& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const double s = seconds_since(t0);
    t.expect(s < 10.0, name + " took " + std::to_string(s) + " s");
    timing += " " + name;
  };
  timed("Δ⁺≤4", [&] {
    const auto r = r2::check_direct_divisibility(r2::build_delta_plus(4));
    t.expect(r.ok(), "Δ⁺≤4: " + r.first_witness());
  });
  timed("PX≤3(|X|=2)", [&] {
    const auto r = r2::check_direct_divisibility(r2::build_px({"a", "b"}, 3));
    t.expect(r.ok(), "PX≤3 |X|=2: " + r.first_witness());
  });
  timed("PX≤3(|X|=3)", [&] {
    const auto r = r2::check_direct_divisibility(r2::build_px({"a", "b", "c"}, 3));
    t.expect(r.ok(), "PX≤3 |X|=3: " + r.first_witness());
  });
  timed("mutated Δ⁺≤3", [&] {
    r2::Groupement d3 = r2::build_delta_plus(3);
    d3.erase_hcomp2(two_cell(d3, "0>1:"), d3.identity2(cell(d3, "1")));
    d3.finalize();
    const auto r = r2::check_direct_divisibility(d3);
    t.expect(!r.ok(), "mutated Δ⁺≤3 passed");
    t.expect(!r.ok() && !r.failures().front().witness.empty(), "mutated Δ⁺≤3 has no witness");
  });
  return t.outcome("passes on" + timing.substr(0, timing.rfind(' ')) + "; mutation caught");
}

namespace {

void check_iz(Tally& t, const ColaxDiagram& f, const std::string& label, long& maps) {
  const Groupement& g = f.groupement();
  const Base& b = f.base();
  for (int z = 0; z < g.one_cell_count(); ++z) {
    if (!f.in_scope(z) || g.is_unit(z)) continue;
    const std::string where = label + " at " + g.one_cell(z).name;
    try {
      const auto cm = dg::canonical_map_iz(f, z);
      ++maps;
      const auto& li = cm.latching.index;
      const auto& mi = cm.matching.index;
      // Case 1: latching morphisms; case 2: matching morphisms.
      for (const auto& m : li.morphisms) {
        if (g.is_identity2(m.gamma)) continue;
        for (std::size_t o = 0; o < mi.objects.size(); ++o) {
          t.expect(cm.components[static_cast<std::size_t>(m.from)][o] ==
                       b.compose(f.action(m.gamma), cm.components[static_cast<std::size_t>(m.to)][o]),
                   where + ": latching triangle");
        }
      }
      for (std::size_t a = 0; a < li.objects.size(); ++a) {
        for (const auto& m : mi.morphisms) {
          t.expect(b.compose(cm.components[a][static_cast<std::size_t>(m.from)], dg::matching_arrow(f, mi, m)) ==
                       cm.components[a][static_cast<std::size_t>(m.to)],
                   where + ": matching triangle");
        }
      }
      if (cm.latching.to_value && cm.matching.from_value) {
        t.expect(cm.iz == b.compose(*cm.latching.to_value, *cm.matching.from_value), where + ": i_z ≠ composite");
      }
    } catch (const colax::Error& e) {
      t.expect(false, where + ": " + e.what());
    }
  }
}

}  // namespace

Outcome criterion2() {
  Tally t;
  long maps = 0;
  const auto d3 = delta_plus(3);
  for (int n = 1; n <= 3; ++n) check_iz(t, power_diagram(d3, Base::finset(), cyclic(n), 3), "Δ⁺ Z/" + std::to_string(n), maps);
  check_iz(t, power_diagram(d3, Base::finvect(2), dual_numbers(), 3), "Δ⁺ dual numbers", maps);
  check_iz(t, power_diagram(d3, Base::finvect(2), cyclic(1), 3), "Δ⁺ field", maps);
  for (const Base& b : {Base::finset(), Base::finvect(2)}) check_iz(t, dg::constant_unit(d3, b, 3), "Δ⁺ unit " + b.name(), maps);

  const auto p3 = px({"a", "b"}, 3);
  auto dx = std::make_shared<const colax::segal::DeltaX>(std::vector<std::string>{"a", "b"}, 3);
  DiagramFamily fam;
  for (int n : {1, 2}) {
    fam.nodes.push_back(colax::segal::from_presheaf(nerve(dx, n), p3));
    check_iz(t, fam.nodes.back(), "PX nerve Z/" + std::to_string(n), maps);
  }
  check_iz(t, colax::homotopy::colimit_colax(p3, Base::finset(), 3, fam).apex, "PX nerve colimit", maps);
  check_iz(t, colax::homotopy::limit_colax(p3, Base::finset(), 3, fam).apex, "PX nerve limit", maps);
  colax::homotopy::SearchLimits lim;
  lim.cap = 10;
  lim.budget = 5000000;
  int k = 0;
  for (const auto& f : colax::homotopy::enumerate_diagrams(p3, Base::finvect(2), 3, 0, 1, lim)) {
    check_iz(t, f, "PX FinVect #" + std::to_string(k++), maps);
  }
  check_iz(t, dg::constant_unit(p3, Base::finvect(2), 3), "PX unit FinVect", maps);
  return t.outcome(std::to_string(maps) + " canonical maps on Δ⁺≤3 and PX≤3 over FinSet and FinVect");
}

}  // namespace acceptance
