#include <limits>
#include <random>

#include "colax/base/base.hpp"
#include "colax/error.hpp"
#include "doctest.h"

using namespace colax::base;

namespace {

// Brute-force count of arrows w -> lim whose composites with the legs are `legs`.
int count_limit_mediators(const Base& b, const Cone& lim, Object w, const std::vector<Arrow>& legs) {
  int n = 0;
  for (const auto& h : b.hom(w, lim.apex)) {
    bool ok = true;
    for (std::size_t i = 0; i < legs.size() && ok; ++i) ok = b.compose(h, lim.legs[i]) == legs[i];
    n += ok ? 1 : 0;
  }
  return n;
}

int count_colimit_mediators(const Base& b, const Cone& colim, Object w, const std::vector<Arrow>& legs) {
  int n = 0;
  for (const auto& h : b.hom(colim.apex, w)) {
    bool ok = true;
    for (std::size_t i = 0; i < legs.size() && ok; ++i) ok = b.compose(colim.legs[i], h) == legs[i];
    n += ok ? 1 : 0;
  }
  return n;
}

bool is_cone(const Base& b, const FinDiagram& d, const std::vector<Arrow>& legs) {
  for (const auto& e : d.edges) {
    if (b.compose(legs[static_cast<std::size_t>(e.from)], e.arrow) != legs[static_cast<std::size_t>(e.to)]) return false;
  }
  return true;
}

bool is_cocone(const Base& b, const FinDiagram& d, const std::vector<Arrow>& legs) {
  for (const auto& e : d.edges) {
    if (b.compose(e.arrow, legs[static_cast<std::size_t>(e.to)]) != legs[static_cast<std::size_t>(e.from)]) return false;
  }
  return true;
}

// Every tuple of arrows (one per node) from w / into w.
void for_each_tuple(const Base& b, const FinDiagram& d, Object w, bool outgoing,
                    const std::function<void(const std::vector<Arrow>&)>& fn) {
  std::vector<std::vector<Arrow>> homs;
  for (const auto& n : d.nodes) homs.push_back(outgoing ? b.hom(w, n) : b.hom(n, w));
  std::vector<Arrow> cur(d.nodes.size());
  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (pos == d.nodes.size()) {
      fn(cur);
      return;
    }
    for (const auto& a : homs[pos]) {
      cur[pos] = a;
      self(self, pos + 1);
    }
  };
  rec(rec, 0);
}

FinDiagram random_diagram(const Base& b, std::mt19937& rng, int max_nodes, int max_size) {
  FinDiagram d;
  const int k = std::uniform_int_distribution<int>(1, max_nodes)(rng);
  for (int i = 0; i < k; ++i) d.add_node(b.object(std::uniform_int_distribution<int>(0, max_size)(rng)));
  const int edges = std::uniform_int_distribution<int>(0, k)(rng);
  for (int e = 0; e < edges; ++e) {
    const int from = std::uniform_int_distribution<int>(0, k - 1)(rng);
    const int to = std::uniform_int_distribution<int>(0, k - 1)(rng);
    auto h = b.hom(d.nodes[static_cast<std::size_t>(from)], d.nodes[static_cast<std::size_t>(to)]);
    if (h.empty()) continue;
    d.add_edge(from, to, h[std::uniform_int_distribution<std::size_t>(0, h.size() - 1)(rng)]);
  }
  return d;
}

}  // namespace

TEST_CASE("compose") {
  const Base s = Base::finset();
  const Arrow f = s.arrow(s.object(1), s.object(2), {1});
  const Arrow g = s.arrow(s.object(2), s.object(1), {0, 0});
  CHECK(s.compose(f, g) == s.identity(s.object(1)));

  const Base v = Base::finvect(2);
  const Arrow vf = v.arrow(v.object(1), v.object(2), {1, 1});
  const Arrow vg = v.arrow(v.object(2), v.object(1), {1, 1});
  CHECK(v.compose(vf, vg).data == std::vector<int>{0});

  CHECK(s.compose(s.identity(s.object(2)), g) == g);
  CHECK_THROWS_AS((void)s.compose(g, g), colax::EndpointError);
}

TEST_CASE("tensor") {
  const Base v = Base::finvect(2);
  const Arrow f = v.arrow(v.object(2), v.object(1), {1, 0});
  const Arrow g = v.arrow(v.object(1), v.object(2), {1, 1});
  const Arrow fg = v.tensor(f, g);
  CHECK(fg.src.n == 2);
  CHECK(fg.dst.n == 2);
  CHECK(fg.data == std::vector<int>{1, 0, 1, 0});

  const Base s = Base::finset();
  CHECK(s.tensor(s.object(2), s.object(3)).n == 6);
  // pairing index of (1, 2) in 2 x 3
  const Arrow p = s.arrow(s.object(1), s.object(2), {1});
  const Arrow q = s.arrow(s.object(1), s.object(3), {2});
  CHECK(s.tensor(p, q).data == std::vector<int>{5});
  const std::vector<Object> fac{s.object(2), s.object(3)};
  CHECK(s.projection(fac, 0).data == std::vector<int>{0, 0, 0, 1, 1, 1});
  CHECK(s.projection(fac, 1).data == std::vector<int>{0, 1, 2, 0, 1, 2});

  CHECK(s.tensor(s.identity(s.object(2)), s.identity(s.object(3))) == s.identity(s.object(6)));
}

TEST_CASE("tensor is functorial on enumerated small arrows") {
  for (const Base& b : {Base::finset(), Base::finvect(2)}) {
    const int top = b.kind() == Kind::FinSet ? 2 : 1;
    for (int a1 = 0; a1 <= top; ++a1)
      for (int a2 = 0; a2 <= top; ++a2)
        for (int a3 = 0; a3 <= top; ++a3)
          for (const auto& f : b.hom(b.object(a1), b.object(a2)))
            for (const auto& g : b.hom(b.object(a2), b.object(a3)))
              for (const auto& h : b.hom(b.object(1), b.object(2)))
                for (const auto& k : b.hom(b.object(2), b.object(top))) {
                  CHECK(b.tensor(b.compose(f, g), b.compose(h, k)) == b.compose(b.tensor(f, h), b.tensor(g, k)));
                }
  }
}

TEST_CASE("limits") {
  const Base s = Base::finset();
  FinDiagram empty;
  CHECK(s.limit(empty).apex.n == 1);
  CHECK(Base::finvect().limit(empty).apex.n == 0);

  auto pb = pullback(s, s.arrow(s.object(2), s.object(1), {0, 0}), s.identity(s.object(1)));
  CHECK(pb.cone.apex.n == 2);

  FinDiagram eq;
  eq.add_node(s.object(3));
  eq.add_node(s.object(2));
  const Arrow f = s.arrow(s.object(3), s.object(2), {0, 1, 1});
  eq.add_edge(0, 1, f);
  eq.add_edge(0, 1, f);
  const Cone c = s.limit(eq);
  CHECK(c.apex.n == 3);
  CHECK(c.legs[0] == s.identity(s.object(3)));
}

TEST_CASE("colimits") {
  const Base s = Base::finset();
  FinDiagram empty;
  CHECK(s.colimit(empty).apex.n == 0);
  CHECK(Base::finvect().colimit(empty).apex.n == 0);

  const Arrow hit0 = s.arrow(s.object(1), s.object(2), {0});
  auto po = pushout(s, hit0, hit0);
  CHECK(po.cone.apex.n == 3);

  FinDiagram coeq;
  coeq.add_node(s.object(2));
  coeq.add_node(s.object(3));
  const Arrow f = s.arrow(s.object(2), s.object(3), {2, 0});
  coeq.add_edge(0, 1, f);
  coeq.add_edge(0, 1, f);
  const Cone c = s.colimit(coeq);
  CHECK(c.apex.n == 3);
  CHECK(s.is_iso(c.legs[1]));

  // finvect pushout of 1 <- 1 -> 1 along identities is 1-dimensional
  const Base v = Base::finvect(3);
  auto vpo = pushout(v, v.identity(v.object(1)), v.identity(v.object(1)));
  CHECK(vpo.cone.apex.n == 1);
}

TEST_CASE("universal property of limits and colimits, finset, exhaustive cones") {
  const Base s = Base::finset();
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const FinDiagram d = random_diagram(s, rng, 3, 3);
    const Cone lim = s.limit(d);
    CHECK(is_cone(s, d, lim.legs));
    const Cone col = s.colimit(d);
    CHECK(is_cocone(s, d, col.legs));
    for (int w = 0; w <= 2; ++w) {
      for_each_tuple(s, d, s.object(w), true, [&](const std::vector<Arrow>& legs) {
        if (!is_cone(s, d, legs)) return;
        CHECK(count_limit_mediators(s, lim, s.object(w), legs) == 1);
        const Arrow m = s.limit_mediator(d, lim, s.object(w), legs);
        for (std::size_t i = 0; i < legs.size(); ++i) CHECK(s.compose(m, lim.legs[i]) == legs[i]);
      });
      for_each_tuple(s, d, s.object(w), false, [&](const std::vector<Arrow>& legs) {
        if (!is_cocone(s, d, legs)) return;
        CHECK(count_colimit_mediators(s, col, s.object(w), legs) == 1);
        const Arrow m = s.colimit_mediator(d, col, s.object(w), legs);
        for (std::size_t i = 0; i < legs.size(); ++i) CHECK(s.compose(col.legs[i], m) == legs[i]);
      });
    }
  }
}

TEST_CASE("universal property of limits and colimits, finvect, exhaustive cones") {
  for (int p : {2, 3}) {
    const Base v = Base::finvect(p);
    std::mt19937 rng(11 + static_cast<unsigned>(p));
    for (int trial = 0; trial < 40; ++trial) {
      const FinDiagram d = random_diagram(v, rng, 3, 2);
      const Cone lim = v.limit(d);
      CHECK(is_cone(v, d, lim.legs));
      const Cone col = v.colimit(d);
      CHECK(is_cocone(v, d, col.legs));
      for (int w = 0; w <= 1; ++w) {
        for_each_tuple(v, d, v.object(w), true, [&](const std::vector<Arrow>& legs) {
          if (!is_cone(v, d, legs)) return;
          CHECK(count_limit_mediators(v, lim, v.object(w), legs) == 1);
          (void)v.limit_mediator(d, lim, v.object(w), legs);
        });
        for_each_tuple(v, d, v.object(w), false, [&](const std::vector<Arrow>& legs) {
          if (!is_cocone(v, d, legs)) return;
          CHECK(count_colimit_mediators(v, col, v.object(w), legs) == 1);
          (void)v.colimit_mediator(d, col, v.object(w), legs);
        });
      }
    }
  }
}

TEST_CASE("mediators reject non-cones") {
  const Base s = Base::finset();
  auto pb = pullback(s, s.arrow(s.object(2), s.object(2), {0, 1}), s.arrow(s.object(2), s.object(2), {1, 0}));
  CHECK_THROWS_AS((void)pullback_mediator(s, pb, s.arrow(s.object(1), s.object(2), {0}), s.arrow(s.object(1), s.object(2), {0})),
                  colax::PreconditionError);
}

TEST_CASE("factorize examples") {
  const Base v = Base::finvect(2);
  const Arrow f = v.arrow(v.object(2), v.object(1), {1, 1});
  for (System sys : {System::TrivCofFib, System::CofTrivFib}) {
    auto [i, p] = v.factorize(f, sys);
    CHECK(i.dst.n == 3);
    CHECK(v.injective(i));
    CHECK(v.surjective(p));
    CHECK(v.compose(i, p) == f);
  }

  const Base s = Base::finset();
  auto [i, p] = s.factorize(s.arrow(s.object(2), s.object(2), {1, 1}), System::Ofs);
  CHECK(i.data == std::vector<int>{0, 0});
  CHECK(i.dst.n == 1);
  CHECK(p.data == std::vector<int>{1});

  for (System sys : {System::TrivCofFib, System::CofTrivFib, System::Ofs}) {
    auto [a, bb] = s.factorize(s.identity(s.object(2)), sys);
    CHECK(a == s.identity(s.object(2)));
    CHECK(bb == s.identity(s.object(2)));
  }
  CHECK_THROWS_AS((void)parse_system("nope"), colax::DomainError);
}

TEST_CASE("factorizations land in their classes; lifts exist for every enumerated square") {
  for (const Base& b : {Base::finset(), Base::finvect(2)}) {
    const int top = b.kind() == Kind::FinSet ? 3 : 2;
    for (System sys : {System::TrivCofFib, System::CofTrivFib, System::Ofs}) {
      for (int n = 0; n <= top; ++n)
        for (int m = 0; m <= top; ++m)
          for (const auto& f : b.hom(b.object(n), b.object(m))) {
            auto [i, p] = b.factorize(f, sys);
            CHECK(b.compose(i, p) == f);
            CHECK(b.in_left(i, sys));
            CHECK(b.in_right(p, sys));
          }
    }
    // lifting on all commuting squares with objects of size/dim <= 2
    const int lt = 2;
    int solved = 0;
    for (System sys : {System::TrivCofFib, System::CofTrivFib, System::Ofs}) {
      for (int a = 0; a <= lt; ++a)
        for (int bb = 0; bb <= lt; ++bb)
          for (int x = 0; x <= lt; ++x)
            for (int y = 0; y <= lt; ++y)
              for (const auto& i : b.hom(b.object(a), b.object(bb))) {
                if (!b.in_left(i, sys)) continue;
                for (const auto& p : b.hom(b.object(x), b.object(y))) {
                  if (!b.in_right(p, sys)) continue;
                  for (const auto& t : b.hom(b.object(a), b.object(x)))
                    for (const auto& bo : b.hom(b.object(bb), b.object(y))) {
                      if (b.compose(t, p) != b.compose(i, bo)) continue;
                      auto h = b.find_lift(i, p, t, bo);
                      REQUIRE(h.has_value());
                      CHECK(b.compose(i, *h) == t);
                      CHECK(b.compose(*h, p) == bo);
                      ++solved;
                    }
                }
              }
    }
    CHECK(solved > 0);
  }
}

TEST_CASE("weak equivalences satisfy 2-of-3 and contain the isos") {
  for (const Base& b : {Base::finset(), Base::finvect(2)}) {
    for (int n = 0; n <= 2; ++n)
      for (int m = 0; m <= 2; ++m)
        for (int k = 0; k <= 2; ++k)
          for (const auto& f : b.hom(b.object(n), b.object(m)))
            for (const auto& g : b.hom(b.object(m), b.object(k))) {
              const Arrow gf = b.compose(f, g);
              const int count = (b.we(f) ? 1 : 0) + (b.we(g) ? 1 : 0) + (b.we(gf) ? 1 : 0);
              CHECK(count != 2);
            }
    for (int n = 0; n <= 3; ++n)
      for (const auto& f : b.hom(b.object(n), b.object(n))) {
        if (!b.is_iso(f)) continue;
        CHECK(b.we(f));
        CHECK(b.cof(f));
        CHECK(b.fib(f));
        auto inv = b.inverse(f);
        REQUIRE(inv.has_value());
        CHECK(b.compose(f, *inv) == b.identity(f.src));
      }
  }
}

TEST_CASE("finvect: mono ⧄ epi orthogonality at dim <= 2 over F_2") {
  const Base v = Base::finvect(2);
  for (int a = 0; a <= 2; ++a)
    for (int bb = 0; bb <= 2; ++bb)
      for (int x = 0; x <= 2; ++x)
        for (int y = 0; y <= 2; ++y)
          for (const auto& i : v.hom(v.object(a), v.object(bb))) {
            if (!v.injective(i)) continue;
            for (const auto& p : v.hom(v.object(x), v.object(y))) {
              if (!v.surjective(p)) continue;
              for (const auto& t : v.hom(v.object(a), v.object(x)))
                for (const auto& bo : v.hom(v.object(bb), v.object(y))) {
                  if (v.compose(t, p) != v.compose(i, bo)) continue;
                  bool any = false;
                  for (const auto& h : v.hom(v.object(bb), v.object(x))) {
                    if (v.compose(i, h) == t && v.compose(h, p) == bo) {
                      any = true;
                      break;
                    }
                  }
                  CHECK(any);
                }
            }
          }
}

TEST_CASE("finset: (surjection, injection) lifts are unique at size <= 4") {
  const Base s = Base::finset();
  long squares = 0;
  for (int a = 0; a <= 4; ++a)
    for (int bb = 0; bb <= 4; ++bb)
      for (const auto& i : s.hom(s.object(a), s.object(bb))) {
        if (!s.surjective(i)) continue;
        for (int x = 0; x <= 4; ++x)
          for (int y = 0; y <= 4; ++y)
            for (const auto& p : s.hom(s.object(x), s.object(y))) {
              if (!s.injective(p)) continue;
              for (const auto& t : s.hom(s.object(a), s.object(x))) {
                // i surjective: bottom is determined on all of B by p∘top
                std::vector<int> bot(static_cast<std::size_t>(bb), -1);
                bool ok = true;
                for (int e = 0; e < a && ok; ++e) {
                  const int want = p.data[static_cast<std::size_t>(t.data[static_cast<std::size_t>(e)])];
                  int& slot = bot[static_cast<std::size_t>(i.data[static_cast<std::size_t>(e)])];
                  if (slot >= 0 && slot != want) ok = false;
                  slot = want;
                }
                if (!ok) continue;
                const Arrow bo{s.object(bb), s.object(y), bot};
                int lifts = 0;
                for (const auto& h : s.hom(s.object(bb), s.object(x))) {
                  if (s.compose(i, h) == t && s.compose(h, p) == bo) ++lifts;
                }
                CHECK(lifts == 1);
                ++squares;
              }
            }
      }
  CHECK(squares > 1000);
}

TEST_CASE("find_lift examples") {
  const Base s = Base::finset();
  const Arrow i = s.arrow(s.object(1), s.object(2), {0});
  const Arrow p = s.identity(s.object(1));
  const Arrow bottom = s.arrow(s.object(2), s.object(1), {0, 0});
  const Arrow top = s.arrow(s.object(1), s.object(1), {0});
  auto h = s.find_lift(i, p, top, bottom);
  REQUIRE(h.has_value());
  CHECK(*h == bottom);

  const Base v = Base::finvect(2);
  const Arrow vi = v.arrow(v.object(1), v.object(2), {1, 0});
  const Arrow vp = v.arrow(v.object(2), v.object(1), {0, 1});
  for (const auto& t : v.hom(v.object(1), v.object(2)))
    for (const auto& bo : v.hom(v.object(2), v.object(1))) {
      if (v.compose(t, vp) != v.compose(vi, bo)) continue;
      CHECK(v.find_lift(vi, vp, t, bo).has_value());
    }

  // iso i: lift is top ∘ i⁻¹
  const Arrow swap = s.arrow(s.object(2), s.object(2), {1, 0});
  const Arrow t2 = s.arrow(s.object(2), s.object(3), {2, 0});
  const Arrow pp = s.identity(s.object(3));
  auto l = s.find_lift(swap, pp, t2, s.compose(*s.inverse(swap), t2));
  REQUIRE(l.has_value());
  CHECK(*l == s.compose(*s.inverse(swap), t2));

  const Arrow two_pt = s.arrow(s.object(1), s.object(2), {1});
  CHECK_THROWS_AS((void)s.find_lift(i, s.identity(s.object(2)), two_pt, s.identity(s.object(2))), colax::PreconditionError);
}

TEST_CASE("hom enumeration counts") {
  const Base s = Base::finset();
  CHECK(s.hom(s.object(2), s.object(3)).size() == 9);
  CHECK(s.hom(s.object(0), s.object(0)).size() == 1);
  CHECK(s.hom(s.object(2), s.object(0)).empty());
  const Base v = Base::finvect(3);
  CHECK(v.hom(v.object(1), v.object(2)).size() == 9);
  CHECK(v.hom(v.object(0), v.object(2)).size() == 1);
}

TEST_CASE("hom_count saturates instead of wrapping") {
  const Base v = Base::finvect(2);
  CHECK(v.hom_count(v.object(2), v.object(3)) == 64);
  CHECK(v.hom_count(v.object(8), v.object(8)) == std::numeric_limits<std::uint64_t>::max());
  CHECK(Base::finset().hom_count(Base::finset().object(41), Base::finset().object(3)) ==
        std::numeric_limits<std::uint64_t>::max());
  CHECK(Base::finset().hom_count(Base::finset().object(0), Base::finset().object(0)) == 1);
  CHECK(Base::finset().hom_count(Base::finset().object(2), Base::finset().object(0)) == 0);
}
