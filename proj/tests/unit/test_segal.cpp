#include <memory>
#include <random>
#include <set>

#include "colax/error.hpp"
#include "colax/homotopy/classical.hpp"
#include "colax/homotopy/homotopy.hpp"
#include "colax/homotopy/search.hpp"
#include "colax/segal/segal.hpp"
#include "doctest.h"

using namespace colax::segal;
using colax::base::Base;
using colax::diagram::ColaxDiagram;
using colax::diagram::Icon;
using colax::diagram::validate_colax;
using colax::diagram::validate_icon;
namespace r2 = colax::reedy2;
namespace cl = colax::homotopy::classical;

namespace {

// The nerve of the category on X with every hom-set Z/n and composition by addition.
UnitalPresheaf nerve(const std::shared_ptr<const DeltaX>& d, int n) {
  const Base b = Base::finset();
  UnitalPresheaf p(d, b);
  auto power = [n](int k) {
    int s = 1;
    for (int i = 0; i < k; ++i) s *= n;
    return s;
  };
  for (int o = 0; o < d->object_count(); ++o) p.values[static_cast<std::size_t>(o)] = b.object(power(d->dim(o)));
  for (int m = 0; m < d->morphism_count(); ++m) {
    const auto& mo = d->morphism(m);
    const int nx = d->dim(mo.dst);
    const int ny = d->dim(mo.src);
    std::vector<int> data(static_cast<std::size_t>(power(nx)));
    for (int e = 0; e < power(nx); ++e) {
      std::vector<int> digits(static_cast<std::size_t>(nx));
      for (int j = nx - 1, t = e; j >= 0; --j, t /= n) digits[static_cast<std::size_t>(j)] = t % n;
      int out = 0;
      for (int i = 1; i <= ny; ++i) {
        int s = 0;
        for (int j = mo.phi(i - 1); j < mo.phi(i); ++j) s += digits[static_cast<std::size_t>(j)];
        out = out * n + s % n;
      }
      data[static_cast<std::size_t>(e)] = out;
    }
    p.actions[static_cast<std::size_t>(m)] = b.arrow(p.values[static_cast<std::size_t>(mo.dst)], p.values[static_cast<std::size_t>(mo.src)], data);
  }
  return p;
}

// Multiplication by c on Z/n, applied edgewise.
PresheafMap scale(const UnitalPresheaf& a, const UnitalPresheaf& b, int n, int c) {
  PresheafMap t{a, b, {}};
  const auto& d = *a.shape;
  for (int o = 0; o < d.object_count(); ++o) {
    const int k = d.dim(o);
    std::vector<int> data(static_cast<std::size_t>(a.values[static_cast<std::size_t>(o)].n));
    for (std::size_t e = 0; e < data.size(); ++e) {
      int t2 = static_cast<int>(e);
      int out = 0;
      int place = 1;
      for (int j = 0; j < k; ++j, t2 /= n, place *= n) out += ((t2 % n) * c % n) * place;
      data[e] = out;
    }
    t.comp.push_back(a.base.arrow(a.values[static_cast<std::size_t>(o)], b.values[static_cast<std::size_t>(o)], data));
  }
  return t;
}

std::uint64_t count_monotone(int n, int k) {
  // [k] -> [n]
  return r2::binomial(n + k + 1, k + 1);
}

}  // namespace

TEST_CASE("Δ_X objects, lifts and the fibration over Δ") {
  DeltaX d({"a", "b"}, 1);
  CHECK(d.object_count() == 6);
  std::set<std::string> names;
  for (int o = 0; o < d.object_count(); ++o) names.insert(d.name(o));
  CHECK(names == std::set<std::string>{"a", "b", "a.a", "a.b", "b.a", "b.b"});
  const int ab = *d.find({0, 1});
  CHECK(d.morphism(d.lift(r2::Monotone::identity(2), ab)).src == ab);
  for (int n : {1, 2, 3}) {
    for (const std::vector<std::string>& x : {std::vector<std::string>{"a"}, std::vector<std::string>{"a", "b"}}) {
      DeltaX dx(x, n);
      CHECK(check_fibration(dx).ok());
    }
  }
  // One label: Δ_X is the truncated Δ.
  DeltaX one({"a"}, 3);
  CHECK(one.object_count() == 4);
  std::uint64_t total = 0;
  for (int n = 0; n <= 3; ++n)
    for (int k = 0; k <= 3; ++k) total += count_monotone(n, k);
  CHECK(static_cast<std::uint64_t>(one.morphism_count()) == total);
}

TEST_CASE("Joyal duality from generators") {
  const auto t = joyal_T(4);
  const auto rep = check_joyal(t);
  CHECK_MESSAGE(rep.ok(), rep.first_witness());
  CHECK(t.forward.at(r2::Monotone{2, 1, {0, 0}}) == r2::Monotone{2, 3, {0, 2}});
  CHECK(t.forward.at(r2::Monotone{0, 1, {}}) == r2::Monotone{2, 1, {0, 0}});
  // σ(1) = 1, σ(2) = σ(3) = 2
  const r2::Monotone sigma{3, 2, {0, 1, 1}};
  const auto img = joyal_from_generators(sigma);
  int galois = 0;
  for (const auto& psi : r2::all_extremal(2, 3)) {
    bool ok = true;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j <= 2; ++j) ok = ok && ((sigma(i) < j) == (i < psi(j)));
    if (ok) {
      ++galois;
      CHECK(psi == img);
    }
  }
  CHECK(galois == 1);
  CHECK(img == r2::Monotone{3, 4, {0, 1, 3}});
}

TEST_CASE("J identifies P_X̄(x, y) with Ω(x, y)^op") {
  const auto g = r2::build_px({"a", "b"}, 3);
  DeltaX d({"a", "b"}, 3);
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      const auto j = iso_J(g, d, x, y);
      const auto rep = check_iso_J(g, d, j);
      CHECK_MESSAGE(rep.ok(), rep.first_witness());
      const int xy = *g.find_chain({x, y});
      CHECK(j.object.at(xy) == *d.find({x, y}));
      for (int t = 0; t < 2; ++t) {
        const int xty = *g.find_chain({x, t, y});
        const int mu = *g.find_labelled(xty, r2::Monotone{2, 1, {0, 0}});
        CHECK(g.two_cell(mu).dst == xy);
        const auto& m = d.morphism(j.morphism.at(mu));
        CHECK(m.phi == r2::Monotone{2, 3, {0, 2}});
        CHECK(m.src == *d.find({x, y}));
        CHECK(m.dst == *d.find({x, t, y}));
      }
    }
  }
}

TEST_CASE("nerve presheaves round trip through colax diagrams") {
  auto d = std::make_shared<const DeltaX>(std::vector<std::string>{"a", "b"}, 3);
  auto g = std::make_shared<const r2::Groupement>(r2::build_px({"a", "b"}, 3));
  for (int n : {1, 2, 3}) {
    const auto p = nerve(d, n);
    REQUIRE(check_presheaf(p).ok());
    const auto f = from_presheaf(p, g);
    const auto v = validate_colax(f);
    REQUIRE_MESSAGE(v.ok(), v.first_witness());
    CHECK(to_presheaf(f, d) == p);
    CHECK(check_segal_conditions(f).ok());
  }
  // constant terminal presheaf
  CHECK(from_presheaf(nerve(d, 1), g) == colax::diagram::constant_unit(g, Base::finset(), 3));
}

TEST_CASE("outer cofaces are projections after colaxity") {
  auto d = std::make_shared<const DeltaX>(std::vector<std::string>{"a", "b"}, 2);
  auto g = std::make_shared<const r2::Groupement>(r2::build_px({"a", "b"}, 2));
  const Base b = Base::finset();
  std::mt19937 rng(5);
  int n = 0;
  for (int t = 0; t < 6; ++t) {
    auto f = colax::homotopy::random_diagram(g, b, 2, 1, 2, rng);
    if (!f) continue;
    const auto p = to_presheaf(*f, d);
    const auto rep = check_presheaf(p);
    REQUIRE_MESSAGE(rep.ok(), rep.first_witness());
    CHECK(from_presheaf(p, g) == *f);
    for (int o = 0; o < d->object_count(); ++o) {
      if (d->dim(o) == 0) CHECK(p.values[static_cast<std::size_t>(o)] == b.terminal());
    }
    for (int x0 = 0; x0 < 2; ++x0) {
      for (int x1 = 0; x1 < 2; ++x1) {
        for (int x2 = 0; x2 < 2; ++x2) {
          const int s = *g->find_chain({x0, x1});
          const int u = *g->find_chain({x1, x2});
          const int z = *d->find({x0, x1, x2});
          const std::vector<colax::base::Object> objs{f->value(s), f->value(u)};
          const auto last = p.actions[static_cast<std::size_t>(d->lift(r2::Monotone{2, 3, {0, 1}}, z))];
          CHECK(last == b.compose(f->colax(s, u), b.projection(objs, 0)));
          const auto first = p.actions[static_cast<std::size_t>(d->lift(r2::Monotone{2, 3, {1, 2}}, z))];
          CHECK(first == b.compose(f->colax(s, u), b.projection(objs, 1)));
        }
      }
    }
    ++n;
  }
  CHECK(n >= 3);
  CHECK_THROWS_AS(to_presheaf(colax::diagram::constant_unit(g, Base::finvect(2), 2), d), colax::DomainError);
  UnitalPresheaf bad = nerve(d, 2);
  bad.values[0] = b.object(2);
  CHECK_THROWS_AS(from_presheaf(bad, g), colax::DomainError);
}

TEST_CASE("Δ_𝓕 is functorial on every composable pair at |X| = 2, n = 3") {
  auto d = std::make_shared<const DeltaX>(std::vector<std::string>{"a", "b"}, 3);
  auto g = std::make_shared<const r2::Groupement>(r2::build_px({"a", "b"}, 3));
  // Colimits and limits of nerves are colax diagrams that do not come from a presheaf by construction.
  colax::homotopy::DiagramFamily fam;
  fam.nodes = {from_presheaf(nerve(d, 2), g), from_presheaf(nerve(d, 3), g)};
  const auto co = colax::homotopy::colimit_colax(g, Base::finset(), 3, fam);
  const auto li = colax::homotopy::limit_colax(g, Base::finset(), 3, fam);
  for (const auto* f : {&co.apex, &li.apex}) {
    REQUIRE(validate_colax(*f).ok());
    const auto p = to_presheaf(*f, d);
    const auto rep = check_presheaf(p);
    CHECK_MESSAGE(rep.ok(), rep.first_witness());
    CHECK(from_presheaf(p, g) == *f);
  }
}

TEST_CASE("icons transport and Reedy verdicts agree with presheaves") {
  auto d = std::make_shared<const DeltaX>(std::vector<std::string>{"a", "b"}, 2);
  auto g = std::make_shared<const r2::Groupement>(r2::build_px({"a", "b"}, 2));
  const Base b = Base::finset();
  const auto shape = classical_shape(*d);
  CHECK(shape.cat->validate().ok());
  std::vector<ColaxDiagram> ds;
  for (int n : {1, 2}) ds.push_back(from_presheaf(nerve(d, n), g));
  std::mt19937 rng(21);
  for (int t = 0; t < 5; ++t) {
    if (auto f = colax::homotopy::random_diagram(g, b, 2, 1, 2, rng)) ds.push_back(*f);
  }
  int compared = 0;
  for (const auto& x : ds) {
    const auto px = to_presheaf(x, d);
    const auto fx = to_classical(px, shape);
    CHECK(cl::is_functor(fx));
    for (int o = 0; o < d->object_count(); ++o) {
      if (d->dim(o) == 0) continue;
      const int z = *g->find_chain(d->sequence(o));
      CHECK(colax::diagram::colax_latching_object(x, z).cocone.apex == cl::latching(fx, o).cocone.apex);
    }
    for (const auto& y : ds) {
      for (const auto& s : colax::homotopy::enumerate_icons(x, y, {6})) {
        const auto t = to_presheaf(s, d);
        CHECK(colax::homotopy::same_icon(from_presheaf(t, g), s));
        const auto nt = to_classical(t, shape);
        REQUIRE(cl::is_natural(nt));
        const auto c = colax::homotopy::classify(s);
        const auto v = cl::classify(nt);
        CHECK(c.we.value == v.we);
        CHECK(c.cof.value == v.cof);
        CHECK(c.fib.value == v.fib);
        for (int k = 0; k < 3; ++k) {
          CHECK(c.in_left(static_cast<colax::base::System>(k)) == v.left[k]);
          CHECK(c.in_right(static_cast<colax::base::System>(k)) == v.right[k]);
        }
        ++compared;
      }
    }
  }
  CHECK(compared > 20);
  // edgewise scaling between nerves
  const auto a = nerve(d, 3);
  for (int c = 0; c < 3; ++c) {
    const auto t = scale(a, a, 3, c);
    const auto s = from_presheaf(t, g);
    CHECK(validate_icon(s).ok());
    CHECK(colax::homotopy::classify(s).we.value == (c != 0));
  }
}

TEST_CASE("Segal conditions") {
  auto g = std::make_shared<const r2::Groupement>(r2::build_px({"a", "b"}, 2));
  const Base b = Base::finset();
  std::mt19937 rng(4);
  int failing = 0;
  for (int t = 0; t < 8; ++t) {
    auto f = colax::homotopy::random_diagram(g, b, 2, 1, 2, rng);
    if (!f) continue;
    const auto rep = check_segal_conditions(*f);
    for (int z = 0; z < g->one_cell_count(); ++z) {
      if (g->degree(z) != 2) continue;
      const auto& ch = g->chain(z);
      const int e1 = f->value(*g->find_chain({ch[0], ch[1]})).n;
      const int e2 = f->value(*g->find_chain({ch[1], ch[2]})).n;
      if (f->value(z).n != e1 * e2) {
        bool found = false;
        for (const auto& v : rep.failures()) found = found || v.instance == g->one_cell(z).name;
        CHECK(found);
        ++failing;
      }
    }
  }
  CHECK(failing > 0);
  auto gv = std::make_shared<const r2::Groupement>(r2::build_px({"a", "b"}, 2));
  std::mt19937 rng2(2);
  auto fv = colax::homotopy::random_diagram(gv, Base::finvect(2), 2, 0, 2, rng2);
  REQUIRE(fv.has_value());
  CHECK(check_segal_conditions(*fv).ok());
}
