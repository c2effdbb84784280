#include <random>

#include "colax/diagram/latching.hpp"
#include "colax/homotopy/classical.hpp"
#include "colax/homotopy/homotopy.hpp"
#include "colax/homotopy/model.hpp"
#include "colax/homotopy/search.hpp"
#include "support.hpp"

namespace acceptance {

namespace hm = colax::homotopy;
namespace cl = colax::homotopy::classical;
namespace sg = colax::segal;
namespace r2 = colax::reedy2;
using colax::base::System;

namespace {

void verify(Tally& t, const hm::ModelSample& s, std::string& summary, const hm::ModelLimits& lim = {}) {
  const auto r = hm::verify_model_axioms(s, lim);
  long failures = 0;
  for (const auto& v : r.failures()) {
    if (failures++ < 3) t.expect(false, s.name + ": " + v.check + " [" + v.instance + "] " + v.witness);
  }
  t.expect(r.ok(), s.name + ": " + std::to_string(failures) + " failing verdicts");
  summary += "; " + s.name + " (" + std::to_string(s.diagrams.size()) + " diagrams, " + std::to_string(s.icons.size()) + " icons)";
}

}  // namespace

Outcome criterion6() {
  Tally t;
  std::string summary;
  verify(t, hm::enumerated_sample("Δ⁺≤2 FinVect dims 0..2", delta_plus(2), Base::finvect(2), 2, 0, 2), summary);

  auto ab = hm::enumerated_sample("PX{a,b}≤2 FinSet sizes 0..1", px({"a", "b"}, 2), Base::finset(), 2, 0, 1);
  ab.presheaves = true;
  verify(t, ab, summary);
  auto a = hm::enumerated_sample("PX{a}≤2 FinSet sizes 1..2", px({"a"}, 2), Base::finset(), 2, 1, 2);
  a.presheaves = true;
  verify(t, a, summary);

  const auto g = px({"a", "b"}, 2);
  hm::ModelSample r;
  r.name = "PX{a,b}≤2 FinSet seeded sizes 1..2";
  r.presheaves = true;
  r.diagrams.push_back(colax::diagram::constant_unit(g, Base::finset(), 2));
  auto dx = std::make_shared<const sg::DeltaX>(std::vector<std::string>{"a", "b"}, 2);
  r.diagrams.push_back(sg::from_presheaf(nerve(dx, 2), g));
  std::mt19937 rng(6);
  for (int i = 0; i < 8; ++i) {
    if (auto f = hm::random_diagram(g, Base::finset(), 2, 1, 2, rng)) r.diagrams.push_back(*f);
  }
  for (const auto& x : r.diagrams) {
    for (const auto& y : r.diagrams) {
      for (auto& s : hm::enumerate_icons(x, y, {8})) r.icons.push_back(std::move(s));
    }
  }
  verify(t, r, summary);
  return t.outcome(summary.substr(2));
}

Outcome criterion7() {
  Tally t;
  const auto jt = sg::joyal_T(4);
  const auto jr = sg::check_joyal(jt);
  t.expect(jr.ok(), "joyal: " + jr.first_witness());
  t.expect(jt.forward.at(r2::Monotone{2, 1, {0, 0}}) == r2::Monotone{2, 3, {0, 2}}, "T(μ) ≠ {0, 2}");
  t.expect(jt.forward.at(r2::Monotone{0, 1, {}}) == r2::Monotone{2, 1, {0, 0}}, "T(η) ≠ {0, 0}");

  auto d3 = std::make_shared<const sg::DeltaX>(std::vector<std::string>{"a", "b"}, 3);
  auto g3 = px({"a", "b"}, 3);
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      const auto jr2 = sg::check_iso_J(*g3, *d3, sg::iso_J(*g3, *d3, x, y));
      t.expect(jr2.ok(), "J: " + jr2.first_witness());
    }
  }
  hm::DiagramFamily fam;
  for (int n : {1, 2, 3}) {
    const auto p = nerve(d3, n);
    const auto f = sg::from_presheaf(p, g3);
    t.expect(colax::diagram::validate_colax(f).ok(), "nerve Z/" + std::to_string(n) + " is not a colax diagram");
    t.expect(sg::to_presheaf(f, d3) == p, "round trip on nerve Z/" + std::to_string(n));
    if (n > 1) fam.nodes.push_back(f);
  }
  for (const auto& f : {hm::colimit_colax(g3, Base::finset(), 3, fam).apex, hm::limit_colax(g3, Base::finset(), 3, fam).apex}) {
    const auto p = sg::to_presheaf(f, d3);
    const auto rep = sg::check_presheaf(p);
    t.expect(rep.ok(), "functoriality: " + rep.first_witness());
    t.expect(sg::from_presheaf(p, g3) == f, "round trip on a (co)limit of nerves");
  }

  auto d2 = std::make_shared<const sg::DeltaX>(std::vector<std::string>{"a", "b"}, 2);
  auto g2 = px({"a", "b"}, 2);
  const auto shape = sg::classical_shape(*d2);
  std::vector<ColaxDiagram> ds;
  for (int n : {1, 2}) ds.push_back(sg::from_presheaf(nerve(d2, n), g2));
  std::mt19937 rng(21);
  for (int i = 0; i < 5; ++i) {
    if (auto f = hm::random_diagram(g2, Base::finset(), 2, 1, 2, rng)) ds.push_back(*f);
  }
  long compared = 0;
  for (const auto& x : ds) {
    for (const auto& y : ds) {
      for (const auto& s : hm::enumerate_icons(x, y, {6})) {
        const auto tp = sg::to_presheaf(s, d2);
        t.expect(hm::same_icon(sg::from_presheaf(tp, g2), s), "icon round trip");
        const auto nt = sg::to_classical(tp, shape);
        const auto c = hm::classify(s);
        const auto v = cl::classify(nt);
        bool same = c.we.value == v.we && c.cof.value == v.cof && c.fib.value == v.fib;
        for (int k = 0; k < 3; ++k) same = same && c.in_left(static_cast<System>(k)) == v.left[k] && c.in_right(static_cast<System>(k)) == v.right[k];
        t.expect(same, "verdicts differ from classical presheaf verdicts");
        ++compared;
      }
    }
  }
  t.expect(compared > 20, "too few icons compared");
  return t.outcome("joyal_T(4), J at n=3, nerve round trips and functoriality at |X|=2 n=3, " + std::to_string(compared) +
                   " transported verdicts");
}

}  // namespace acceptance
