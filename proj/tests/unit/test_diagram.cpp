#include <memory>
#include <numeric>

#include "colax/diagram/colax_diagram.hpp"
#include "colax/diagram/latching.hpp"
#include "colax/error.hpp"
#include "doctest.h"

using namespace colax::diagram;
using colax::base::Kind;
using colax::reedy2::build_delta_plus;
using colax::reedy2::Monotone;

namespace {

std::shared_ptr<const Groupement> delta_plus(int m) { return std::make_shared<const Groupement>(build_delta_plus(m)); }

int cell(const Groupement& g, const std::string& name) {
  auto c = g.find_one_cell(name);
  REQUIRE(c.has_value());
  return *c;
}

int two(const Groupement& g, const std::string& name) {
  auto c = g.find_two_cell(name);
  REQUIRE(c.has_value());
  return *c;
}

int ipow(int b, int e) {
  int r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

std::vector<int> digits(int x, int base, int len) {
  std::vector<int> d(static_cast<std::size_t>(len));
  for (int i = len - 1; i >= 0; --i) {
    d[static_cast<std::size_t>(i)] = x % base;
    x /= base;
  }
  return d;
}

int undigits(const std::vector<int>& d, int base) {
  int x = 0;
  for (int v : d) x = x * base + v;
  return x;
}

// Basis monoid with an optional absorbing zero (-1): mult[a][b], unit index e.
struct BasisMonoid {
  int size;
  int e;
  std::vector<std::vector<int>> mult;
};

BasisMonoid cyclic(int n) {
  BasisMonoid m{n, 0, {}};
  m.mult.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) m.mult[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % n;
  return m;
}

// Basis {1, x} of F_2[x]/(x^2).
BasisMonoid dual_numbers() { return {2, 0, {{0, 1}, {1, -1}}}; }

// Image of a basis tuple under φ: the ordered product along each fiber, or nullopt for zero.
std::optional<std::vector<int>> push(const BasisMonoid& m, const Monotone& phi, const std::vector<int>& in) {
  std::vector<int> out(static_cast<std::size_t>(phi.to), m.e);
  for (int i = 0; i < phi.from; ++i) {
    auto& slot = out[static_cast<std::size_t>(phi.image[static_cast<std::size_t>(i)])];
    slot = m.mult[static_cast<std::size_t>(slot)][static_cast<std::size_t>(in[static_cast<std::size_t>(i)])];
    if (slot < 0) return std::nullopt;
  }
  return out;
}

// The strict monoidal diagram n ↦ M^n on Δ⁺, over FinSet (monoid) or FinVect (algebra basis).
ColaxDiagram power_diagram(const std::shared_ptr<const Groupement>& g, const Base& base, const BasisMonoid& m,
                           int level) {
  ColaxDiagram f(g, base, level);
  for (int c = 0; c < g->one_cell_count(); ++c) {
    if (g->degree(c) > level || g->is_unit(c)) continue;
    f.set_value(c, base.object(ipow(m.size, g->degree(c))));
  }
  for (int a = 0; a < g->two_cell_count(); ++a) {
    if (!f.in_scope2(a) || g->is_identity2(a)) continue;
    const Monotone& phi = g->label(a);
    const int n = ipow(m.size, phi.from);
    const int k = ipow(m.size, phi.to);
    std::vector<int> data;
    if (base.kind() == Kind::FinSet) {
      for (int x = 0; x < n; ++x) data.push_back(undigits(*push(m, phi, digits(x, m.size, phi.from)), m.size));
    } else {
      data.assign(static_cast<std::size_t>(k * n), 0);
      for (int x = 0; x < n; ++x) {
        auto y = push(m, phi, digits(x, m.size, phi.from));
        if (y) data[static_cast<std::size_t>(undigits(*y, m.size) * n + x)] = 1;
      }
    }
    f.set_action(a, base.arrow(base.object(n), base.object(k), data));
  }
  for (const auto& [s, t] : f.colax_pairs()) {
    f.set_colax(s, t, base.identity(f.value(*g->hcomp1(s, t))));
  }
  return f;
}

// Transport of a FinSet diagram along the cyclic shift x ↦ x + 1 on each non-unit value.
ColaxDiagram shifted(const ColaxDiagram& f) {
  const Groupement& g = f.groupement();
  const Base& b = f.base();
  auto tau = [&](int c) {
    const int n = f.value(c).n;
    std::vector<int> d(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) d[static_cast<std::size_t>(x)] = g.is_unit(c) ? x : (x + 1) % n;
    return b.arrow(f.value(c), f.value(c), d);
  };
  ColaxDiagram out(f.groupement_ptr(), b, f.level());
  for (int c = 0; c < g.one_cell_count(); ++c) {
    if (f.in_scope(c) && !g.is_unit(c)) out.set_value(c, f.value(c));
  }
  for (int a = 0; a < g.two_cell_count(); ++a) {
    if (!f.in_scope2(a) || g.is_identity2(a)) continue;
    const auto& tc = g.two_cell(a);
    out.set_action(a, b.compose(b.compose(*b.inverse(tau(tc.src)), f.action(a)), tau(tc.dst)));
  }
  for (const auto& [s, t] : f.colax_pairs()) {
    const int st = *g.hcomp1(s, t);
    out.set_colax(s, t, b.compose(b.compose(*b.inverse(tau(st)), f.colax(s, t)), b.tensor(tau(s), tau(t))));
  }
  return out;
}

// Bracketing that splits off the last factor first.
Arrow colax_right_first(const ColaxDiagram& f, const std::vector<int>& parts) {
  const Groupement& g = f.groupement();
  const Base& b = f.base();
  if (parts.size() == 1) return b.identity(f.value(parts[0]));
  const std::vector<int> head(parts.begin(), parts.end() - 1);
  const int h = *g.hcomp1(head);
  return b.compose(f.colax(h, parts.back()), b.tensor(colax_right_first(f, head), b.identity(f.value(parts.back()))));
}

}  // namespace

TEST_CASE("constant-unit diagrams are valid") {
  for (int m = 1; m <= 3; ++m) {
    auto g = delta_plus(m);
    for (const Base& b : {Base::finset(), Base::finvect(2), Base::finvect(3)}) {
      const auto f = constant_unit(g, b, m);
      const auto r = validate_colax(f);
      CHECK_MESSAGE(r.ok(), r.first_witness());
      const auto ri = validate_icon(Icon::identity(f));
      CHECK_MESSAGE(ri.ok(), ri.first_witness());
    }
  }
}

TEST_CASE("monoid powers give valid diagrams on Δ⁺") {
  auto g = delta_plus(3);
  for (int n = 1; n <= 3; ++n) {
    const auto f = power_diagram(g, Base::finset(), cyclic(n), 3);
    const auto r = validate_colax(f);
    CHECK_MESSAGE(r.ok(), r.first_witness());
    const auto s = shifted(f);
    CHECK_MESSAGE(validate_colax(s).ok(), validate_colax(s).first_witness());
  }
  const auto v = power_diagram(g, Base::finvect(2), dual_numbers(), 3);
  const auto rv = validate_colax(v);
  CHECK_MESSAGE(rv.ok(), rv.first_witness());
}

TEST_CASE("broken actions are reported with a witness") {
  auto g = delta_plus(2);
  const Base b = Base::finset();
  auto f = power_diagram(g, b, cyclic(2), 2);
  // multiplication replaced by the first projection
  f.set_action(two(*g, "2>1:00"), b.arrow(b.object(4), b.object(2), {0, 0, 1, 1}));
  const auto r = validate_colax(f);
  REQUIRE_FALSE(r.ok());
  CHECK(r.first_witness().find("2>1:00") != std::string::npos);

  auto h = power_diagram(g, b, cyclic(2), 2);
  h.set_colax(cell(*g, "1"), cell(*g, "1"), b.arrow(b.object(4), b.object(4), {1, 0, 3, 2}));
  CHECK_FALSE(validate_colax(h).ok());
}

TEST_CASE("values are pinned on units and identities") {
  auto g = delta_plus(2);
  const Base b = Base::finset();
  ColaxDiagram f(g, b, 2);
  CHECK_THROWS_AS(f.set_value(cell(*g, "0"), b.object(2)), colax::DomainError);
  CHECK_THROWS_AS(f.set_action(g->identity2(cell(*g, "1")), b.arrow(b.object(2), b.object(2), {1, 0})),
                  colax::DomainError);
  ColaxDiagram low(g, b, 1);
  CHECK_THROWS_AS(low.set_value(cell(*g, "2"), b.object(2)), colax::TruncationError);
}

TEST_CASE("truncation and extension") {
  auto g = delta_plus(3);
  const Base b = Base::finset();
  const auto f = power_diagram(g, b, cyclic(2), 3);
  const auto f2 = truncate(f, 2);
  CHECK(f2 == power_diagram(g, b, cyclic(2), 2));
  CHECK(extend_check(f2, f).ok());
  CHECK_THROWS_AS(truncate(f2, 3), colax::TruncationError);
  const auto other = power_diagram(g, b, cyclic(3), 3);
  CHECK_FALSE(extend_check(f2, other).ok());
}

TEST_CASE("latching and matching indices at 2 in Δ⁺") {
  auto g = delta_plus(2);
  const int z = cell(*g, "2");
  const auto li = latching_index(*g, z);
  CHECK(li.objects.size() == 3);
  CHECK(li.category.validate().ok());
  int non_identity = 0;
  for (const auto& m : li.morphisms) {
    if (g->is_identity2(m.gamma)) continue;
    ++non_identity;
    CHECK(g->two_cell(li.objects[static_cast<std::size_t>(m.from)]).name == "0>2:");
  }
  CHECK(non_identity == 2);

  const auto mi = matching_index(*g, z);
  REQUIRE(mi.objects.size() == 2);
  CHECK(mi.find({cell(*g, "1"), cell(*g, "1")}, g->identity2(z)).has_value());
  CHECK(mi.find({cell(*g, "1")}, two(*g, "2>1:00")).has_value());
  for (const auto& m : mi.morphisms) CHECK(m.from == m.to);
  CHECK(mi.category.validate().ok());

  CHECK_THROWS_AS(latching_index(*g, cell(*g, "0")), colax::DomainError);
}

TEST_CASE("indices at 3 in Δ⁺ are categories") {
  auto g = delta_plus(3);
  const int z = cell(*g, "3");
  const auto li = latching_index(*g, z);
  CHECK(li.objects.size() == 7);  // injections from 0, 1, 2 into 3
  CHECK(li.category.validate().ok());
  const auto mi = matching_index(*g, z);
  CHECK(mi.category.validate().ok());
  // id: (1,2), (2,1), (1,1,1); each surjection 3->2: (2), (1,1); 3->1: (1)
  CHECK(mi.objects.size() == 8);
}

TEST_CASE("latching and matching objects of monoid powers") {
  auto g = delta_plus(2);
  const Base b = Base::finset();
  const auto f = power_diagram(g, b, cyclic(2), 2);
  const int z = cell(*g, "2");
  const auto l = colax_latching_object(f, z);
  CHECK(l.cocone.apex == b.object(3));  // S ⊔_1 S
  const auto m = colax_matching_object(f, z);
  CHECK(m.cone.apex == b.object(8));  // (S × S) × S
  REQUIRE(l.to_value.has_value());
  REQUIRE(m.from_value.has_value());
  CHECK(b.injective(*m.from_value));

  const auto cm = canonical_map_iz(f, z);
  CHECK(cm.iz == b.compose(*l.to_value, *m.from_value));
}

TEST_CASE("canonical map factors through the value") {
  auto g = delta_plus(3);
  for (int n = 1; n <= 3; ++n) {
    const auto f = shifted(power_diagram(g, Base::finset(), cyclic(n), 3));
    for (int z : {cell(*g, "1"), cell(*g, "2"), cell(*g, "3")}) {
      const auto cm = canonical_map_iz(f, z);
      CHECK(cm.iz == f.base().compose(*cm.latching.to_value, *cm.matching.from_value));
    }
  }
  const auto v = power_diagram(g, Base::finvect(2), dual_numbers(), 3);
  for (int z : {cell(*g, "1"), cell(*g, "2"), cell(*g, "3")}) {
    const auto cm = canonical_map_iz(v, z);
    CHECK(cm.iz == v.base().compose(*cm.latching.to_value, *cm.matching.from_value));
  }
}

TEST_CASE("i_z components are computed below z") {
  // Truncating at deg z - 1 and adding back only z's value must not change the components.
  auto g = delta_plus(2);
  const Base b = Base::finset();
  const auto f = shifted(power_diagram(g, b, cyclic(3), 2));
  const int z = cell(*g, "2");
  const auto full = canonical_map_iz(f, z);
  for (std::size_t a = 0; a < full.latching.index.objects.size(); ++a) {
    for (std::size_t o = 0; o < full.matching.index.objects.size(); ++o) {
      const int alpha = full.latching.index.objects[a];
      const auto& obj = full.matching.index.objects[o];
      CHECK(full.components[a][o] ==
            b.compose(f.action(alpha), matching_leg(f, obj)));
    }
  }
}

TEST_CASE("iterated colaxity is independent of bracketing") {
  auto g = delta_plus(4);
  const auto f = shifted(power_diagram(g, Base::finset(), cyclic(2), 4));
  REQUIRE(validate_colax(f).ok());
  const int one = cell(*g, "1");
  const int two_ = cell(*g, "2");
  for (const auto& parts : std::vector<std::vector<int>>{
           {one, one, one}, {one, two_, one}, {two_, one, one}, {one, one, two_}, {one, one, one, one}}) {
    CHECK(f.iterated_colax(parts) == colax_right_first(f, parts));
  }
}

TEST_CASE("icons compose and validate") {
  auto g = delta_plus(2);
  const Base b = Base::finset();
  const auto f = power_diagram(g, b, cyclic(2), 2);
  const auto u = constant_unit(g, b, 2);
  Icon t(f, u);
  for (int c = 0; c < g->one_cell_count(); ++c) t.set(c, b.to_terminal(f.value(c)));
  CHECK(validate_icon(t).ok());
  const auto tt = compose(Icon::identity(f), t);
  CHECK(validate_icon(tt).ok());
  CHECK(tt.component(cell(*g, "2")) == t.component(cell(*g, "2")));

  Icon bad(f, f);
  for (int c = 0; c < g->one_cell_count(); ++c) {
    const int n = f.value(c).n;
    std::vector<int> d(static_cast<std::size_t>(n), n - 1);
    bad.set(c, g->is_unit(c) ? b.identity(f.value(c)) : b.arrow(f.value(c), f.value(c), d));
  }
  CHECK_FALSE(validate_icon(bad).ok());
}

TEST_CASE("i_z at 2 sends v to e ⊗ v on the leg hitting slot 2") {
  auto g = delta_plus(2);
  const Base b = Base::finvect(2);
  const BasisMonoid field{1, 0, {{0}}};
  for (const BasisMonoid& m : {field, dual_numbers()}) {
    const auto f = power_diagram(g, b, m, 2);
    const int one = cell(*g, "1");
    const int alpha = two(*g, "1>2:1");
    const auto mi = matching_index(*g, cell(*g, "2"));
    const auto obj = mi.find({one, one}, g->identity2(cell(*g, "2")));
    REQUIRE(obj.has_value());
    const auto& o = mi.objects[static_cast<std::size_t>(*obj)];
    const Arrow e = f.action(two(*g, "0>1:"));
    const Arrow got = iz_component(f, alpha, o);
    CHECK(got == b.tensor(e, b.identity(f.value(one))));
    if (m.size == 1) CHECK(got == b.arrow(b.object(1), b.object(1), {1}));
  }
}
