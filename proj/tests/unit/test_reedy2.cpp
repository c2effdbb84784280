#include <set>

#include "colax/error.hpp"
#include "colax/reedy2/groupement.hpp"
#include "doctest.h"

using namespace colax::reedy2;
using colax::Report;

namespace {

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

std::uint64_t factorial_ratio(int n, int k) {
  // C(n, k) = n! / (k! (n-k)!) by direct factorials
  std::uint64_t num = 1;
  std::uint64_t den = 1;
  for (int i = 1; i <= n; ++i) num *= static_cast<std::uint64_t>(i);
  for (int i = 1; i <= k; ++i) den *= static_cast<std::uint64_t>(i);
  for (int i = 1; i <= n - k; ++i) den *= static_cast<std::uint64_t>(i);
  return num / den;
}

// Direct-divisibility by enumerating every pair of direct-or-identity 2-cells.
bool brute_divisible(const Groupement& g) {
  for (int a = 0; a < g.two_cell_count(); ++a) {
    if (g.two_cell(a).cls != CellClass::Direct) continue;
    for (const auto& [s2, t2] : g.splits(g.two_cell(a).dst)) {
      int count = 0;
      for (int b1 = 0; b1 < g.two_cell_count(); ++b1) {
        if (g.two_cell(b1).dst != s2 || !g.direct_or_identity(b1)) continue;
        for (int b2 = 0; b2 < g.two_cell_count(); ++b2) {
          if (g.two_cell(b2).dst != t2 || !g.direct_or_identity(b2)) continue;
          if (g.one_cell(g.two_cell(b1).src).dst != g.one_cell(g.two_cell(b2).src).src) continue;
          if (g.hcomp2(b1, b2) == a) ++count;
        }
      }
      if (count != 1) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("monotone maps and Joyal duality by formula") {
  CHECK(all_monotone(2, 2).size() == 3);
  CHECK(all_monotone(0, 3).size() == 1);
  CHECK(all_monotone(2, 0).empty());
  for (int n = 1; n <= 4; ++n)
    for (int k = 1; k <= 4; ++k) CHECK(all_monotone(n, k).size() == factorial_ratio(n + k - 1, n));
  const Monotone mu{2, 1, {0, 0}};
  CHECK(joyal_dual(mu).image == std::vector<int>{0, 2});
  const Monotone eta{0, 1, {}};
  CHECK(joyal_dual(eta).image == std::vector<int>{0, 0});
  for (int n = 0; n <= 4; ++n)
    for (int k = 0; k <= 4; ++k)
      for (const auto& phi : all_monotone(n, k)) CHECK(joyal_undual(joyal_dual(phi)) == phi);
}

TEST_CASE("delta_plus hom sets") {
  const Groupement d1 = build_delta_plus(1);
  CHECK(d1.two_cell_count() == 3);
  const int eta = two(d1, "0>1:");
  CHECK(d1.two_cell(eta).cls == CellClass::Direct);
  CHECK(d1.is_unit(d1.two_cell(eta).src));

  const Groupement d3 = build_delta_plus(3);
  int surj21 = 0;
  for (int a : d3.between(cell(d3, "2"), cell(d3, "1"))) surj21 += d3.two_cell(a).cls == CellClass::Inverse ? 1 : 0;
  CHECK(surj21 == 1);
  CHECK(d3.between(cell(d3, "2"), cell(d3, "2")).size() == 3);

  const Groupement d4 = build_delta_plus(4);
  for (int n = 1; n <= 4; ++n)
    for (int k = 1; k <= 4; ++k) {
      CHECK(d4.between(cell(d4, std::to_string(n)), cell(d4, std::to_string(k))).size() == factorial_ratio(n + k - 1, n));
    }
}

TEST_CASE("px chains and 2-cells") {
  const Groupement p = build_px({"a", "b"}, 2);
  CHECK(p.hom_cells(0, 1).size() == 3);
  // (a,b,a) -> (a,a) over the surjection 2 -> 1
  const int aba = cell(p, "a.b.a");
  const int aa = cell(p, "a.a");
  bool found = false;
  for (int u : p.between(aba, aa)) found = found || p.label(u) == Monotone{2, 1, {0, 0}};
  CHECK(found);
  // (a) -> (a,a) over η, and no 2-cell (a) -> (a,b)
  CHECK(p.between(cell(p, "a"), aa).size() == 1);
  CHECK(p.label(p.between(cell(p, "a"), aa).front()) == Monotone{0, 1, {}});
  Groupement q = p;
  CHECK_THROWS_AS(q.add_two_cell(cell(p, "a"), cell(p, "a.b"), CellClass::Direct, "bad"), colax::EndpointError);
}

TEST_CASE("Le is a strict 2-functor with unique cocartesian lifts") {
  for (int nx = 1; nx <= 3; ++nx) {
    std::vector<std::string> x;
    for (int i = 0; i < nx; ++i) x.push_back(std::string(1, static_cast<char>('a' + i)));
    const Groupement g = build_px(x, 3);
    for (int c = 0; c < g.one_cell_count(); ++c) {
      CHECK(g.label(g.identity2(c)) == Monotone::identity(g.degree(c)));
      for (int k = 0; k <= 3; ++k) {
        for (const auto& phi : all_monotone(g.degree(c), k)) {
          int count = 0;
          for (int a : g.out_of(c)) count += g.label(a) == phi ? 1 : 0;
          CHECK(count == 1);
        }
      }
    }
    for (int a = 0; a < g.two_cell_count(); ++a) {
      for (int b : g.out_of(g.two_cell(a).dst)) {
        auto ab = g.vcomp(a, b);
        REQUIRE(ab.has_value());
        CHECK(g.label(*ab) == compose(g.label(a), g.label(b)));
      }
    }
    for (const auto& [k, c] : g.hcomp2_table()) {
      const int a = static_cast<int>(k >> 32);
      const int b = static_cast<int>(k & 0xffffffffu);
      CHECK(g.label(c) == ordinal_sum(g.label(a), g.label(b)));
    }
  }
}

TEST_CASE("builders pass validate_simple_lr") {
  CHECK(validate_simple_lr(build_delta_plus(3)).ok());
  CHECK(validate_simple_lr(build_delta_plus(4)).ok());
  CHECK(validate_simple_lr(build_px({"a", "b"}, 2)).ok());
  CHECK(validate_simple_lr(build_px({"a", "b"}, 3)).ok());
  CHECK(validate_simple_lr(build_px({"a", "b", "c"}, 2)).ok());
  for (const ReedyCat& b : {walking_arrow(), walking_cospan_direct(), walking_span_inverse(), delta_truncated(2)}) {
    CHECK(b.validate().ok());
    const Groupement g = build_from_reedy1(b);
    const Report r = validate_simple_lr(g);
    CHECK_MESSAGE(r.ok(), r.first_witness());
    CHECK(check_direct_divisibility(g).ok());
  }
  ReedyCat one;
  one.add_object("x", 0);
  const Groupement g1 = build_from_reedy1(one);
  CHECK(g1.hom_cells(0, 1).size() == 1);
  CHECK(validate_simple_lr(g1).ok());
}

TEST_CASE("validate_simple_lr catches a surjection reclassified as direct") {
  Groupement g = build_delta_plus(3);
  const int sigma = two(g, "2>1:00");
  g.reclassify(sigma, CellClass::Direct);
  g.finalize();
  const Report r = validate_simple_lr(g);
  REQUIRE_FALSE(r.ok());
  bool named = false;
  for (const auto& v : r.failures()) named = named || (v.check == "reedy-degree" && v.witness.find("2>1:00") != std::string::npos);
  CHECK(named);
}

TEST_CASE("direct divisibility") {
  const Groupement d4 = build_delta_plus(4);
  CHECK(check_direct_divisibility(d4).ok());
  CHECK(brute_divisible(d4));
  for (const auto& x : {std::vector<std::string>{"a", "b"}, std::vector<std::string>{"a", "b", "c"}}) {
    const Groupement p = build_px(x, 3);
    CHECK(check_direct_divisibility(p).ok());
    CHECK(brute_divisible(p));
  }

  Groupement d3 = build_delta_plus(3);
  // delete the lift (η, id_1) of the injection 1 -> 2 hitting slot 1
  d3.erase_hcomp2(two(d3, "0>1:"), d3.identity2(cell(d3, "1")));
  d3.finalize();
  const Report r = check_direct_divisibility(d3);
  REQUIRE_FALSE(r.ok());
  CHECK(r.failures().front().witness.find("1>2:1") != std::string::npos);
  CHECK_FALSE(brute_divisible(d3));
}

TEST_CASE("reedy_factorize") {
  const Groupement d = build_delta_plus(3);
  const int u = two(d, "2>2:11");
  auto [inv, dir] = reedy_factorize(d, u);
  CHECK(d.two_cell(inv).name == "2>1:00");
  CHECK(d.two_cell(dir).name == "1>2:1");
  CHECK(d.reedy_factor(u) == std::make_pair(inv, dir));

  const int direct = two(d, "1>3:2");
  CHECK(reedy_factorize(d, direct) == std::make_pair(d.identity2(cell(d, "1")), direct));
  const int inverse = two(d, "3>1:000");
  CHECK(reedy_factorize(d, inverse) == std::make_pair(inverse, d.identity2(cell(d, "1"))));
  CHECK_THROWS_AS((void)reedy_factorize(d, 100000), colax::DomainError);
}

TEST_CASE("decompositions and splits") {
  const Groupement d = build_delta_plus(3);
  const auto decs = d.decompositions(cell(d, "3"));
  CHECK(decs.size() == 4);  // 3, 1+2, 2+1, 1+1+1
  CHECK(decs.front() == std::vector<int>{cell(d, "3")});
  const int alpha = two(d, "1>3:1");
  const auto parts = d.split(alpha, std::vector<int>{cell(d, "1"), cell(d, "1"), cell(d, "1")});
  REQUIRE(parts.size() == 3);
  CHECK(d.two_cell(parts[0]).name == "0>1:");
  CHECK(d.is_identity2(parts[1]));
  CHECK(d.two_cell(parts[2]).name == "0>1:");
}
