#include "colax/homotopy/classical.hpp"

#include <algorithm>
#include <functional>

#include "colax/error.hpp"

namespace colax::homotopy::classical {

namespace {

struct LatchCore {
  std::vector<int> arrows;
  base::FinDiagram diagram;
  base::Cone cocone;
};
struct MatchCore {
  std::vector<int> arrows;
  base::FinDiagram diagram;
  base::Cone cone;
};

LatchCore latch_core(const ReedyCat& c, const Base& b, const std::vector<Object>& values,
                     const std::vector<std::optional<Arrow>>& actions, int o) {
  LatchCore out;
  for (int a : c.cat.into(o)) {
    if (c.cls[static_cast<std::size_t>(a)] == reedy2::CellClass::Direct) out.arrows.push_back(a);
  }
  for (int a : out.arrows) out.diagram.add_node(values[static_cast<std::size_t>(c.cat.arrow(a).src)]);
  for (std::size_t i = 0; i < out.arrows.size(); ++i) {
    for (std::size_t j = 0; j < out.arrows.size(); ++j) {
      const int a = out.arrows[i];
      const int a2 = out.arrows[j];
      for (int gam : c.cat.hom(c.cat.arrow(a).src, c.cat.arrow(a2).src)) {
        if (c.cls[static_cast<std::size_t>(gam)] != reedy2::CellClass::Direct) continue;
        if (c.cat.try_compose(gam, a2) != a) continue;
        out.diagram.add_edge(static_cast<int>(i), static_cast<int>(j), *actions[static_cast<std::size_t>(gam)]);
      }
    }
  }
  out.cocone = b.colimit(out.diagram);
  return out;
}

MatchCore match_core(const ReedyCat& c, const Base& b, const std::vector<Object>& values,
                     const std::vector<std::optional<Arrow>>& actions, int o) {
  MatchCore out;
  for (int a : c.cat.out_of(o)) {
    if (c.cls[static_cast<std::size_t>(a)] == reedy2::CellClass::Inverse) out.arrows.push_back(a);
  }
  for (int a : out.arrows) out.diagram.add_node(values[static_cast<std::size_t>(c.cat.arrow(a).dst)]);
  for (std::size_t i = 0; i < out.arrows.size(); ++i) {
    for (std::size_t j = 0; j < out.arrows.size(); ++j) {
      const int a = out.arrows[i];
      const int a2 = out.arrows[j];
      for (int del : c.cat.hom(c.cat.arrow(a).dst, c.cat.arrow(a2).dst)) {
        if (c.cls[static_cast<std::size_t>(del)] != reedy2::CellClass::Inverse) continue;
        if (c.cat.try_compose(a, del) != a2) continue;
        out.diagram.add_edge(static_cast<int>(i), static_cast<int>(j), *actions[static_cast<std::size_t>(del)]);
      }
    }
  }
  out.cone = b.limit(out.diagram);
  return out;
}

std::vector<std::optional<Arrow>> opt_actions(const Functor& f) {
  return {f.actions.begin(), f.actions.end()};
}

Arrow latch_map(const Base& b, const ReedyCat& c, const LatchCore& from, const LatchCore& to,
                const std::function<Arrow(int)>& comp) {
  std::vector<Arrow> legs;
  for (std::size_t i = 0; i < from.arrows.size(); ++i) {
    legs.push_back(b.compose(comp(c.cat.arrow(from.arrows[i]).src), to.cocone.legs[i]));
  }
  return b.colimit_mediator(from.diagram, from.cocone, to.cocone.apex, legs);
}

Arrow match_map(const Base& b, const ReedyCat& c, const MatchCore& from, const MatchCore& to,
                const std::function<Arrow(int)>& comp) {
  std::vector<Arrow> legs;
  for (std::size_t i = 0; i < to.arrows.size(); ++i) {
    legs.push_back(b.compose(from.cone.legs[i], comp(c.cat.arrow(to.arrows[i]).dst)));
  }
  return b.limit_mediator(to.diagram, to.cone, from.cone.apex, legs);
}

std::vector<int> by_degree(const ReedyCat& c) {
  std::vector<int> objs(static_cast<std::size_t>(c.cat.object_count()));
  for (std::size_t i = 0; i < objs.size(); ++i) objs[i] = static_cast<int>(i);
  std::stable_sort(objs.begin(), objs.end(),
                   [&](int x, int y) { return c.degree[static_cast<std::size_t>(x)] < c.degree[static_cast<std::size_t>(y)]; });
  return objs;
}

}  // namespace

Functor::Functor(std::shared_ptr<const ReedyCat> c, Base b) : cat(std::move(c)), base(std::move(b)) {
  values.assign(static_cast<std::size_t>(cat->cat.object_count()), base.initial());
  actions.assign(static_cast<std::size_t>(cat->cat.arrow_count()), Arrow{});
}

bool is_functor(const Functor& f) {
  const auto& c = f.cat->cat;
  for (int a = 0; a < c.arrow_count(); ++a) {
    const auto& ar = c.arrow(a);
    const Arrow& x = f.actions[static_cast<std::size_t>(a)];
    if (x.src != f.values[static_cast<std::size_t>(ar.src)] || x.dst != f.values[static_cast<std::size_t>(ar.dst)]) return false;
    if (c.is_identity(a) && x != f.base.identity(x.src)) return false;
  }
  for (int a = 0; a < c.arrow_count(); ++a) {
    for (int b2 : c.out_of(c.arrow(a).dst)) {
      auto h = c.try_compose(a, b2);
      if (h && f.actions[static_cast<std::size_t>(*h)] !=
                   f.base.compose(f.actions[static_cast<std::size_t>(a)], f.actions[static_cast<std::size_t>(b2)])) {
        return false;
      }
    }
  }
  return true;
}

bool is_natural(const NatTrans& t) {
  const auto& c = t.src.cat->cat;
  const Base& b = t.src.base;
  for (int a = 0; a < c.arrow_count(); ++a) {
    const auto& ar = c.arrow(a);
    if (b.compose(t.src.actions[static_cast<std::size_t>(a)], t.comp[static_cast<std::size_t>(ar.dst)]) !=
        b.compose(t.comp[static_cast<std::size_t>(ar.src)], t.dst.actions[static_cast<std::size_t>(a)])) {
      return false;
    }
  }
  return true;
}

Latching latching(const Functor& f, int object) {
  auto core = latch_core(*f.cat, f.base, f.values, opt_actions(f), object);
  std::vector<Arrow> legs;
  for (int a : core.arrows) legs.push_back(f.actions[static_cast<std::size_t>(a)]);
  Arrow to = f.base.colimit_mediator(core.diagram, core.cocone, f.values[static_cast<std::size_t>(object)], legs);
  return {core.arrows, core.diagram, core.cocone, to};
}

Matching matching(const Functor& f, int object) {
  auto core = match_core(*f.cat, f.base, f.values, opt_actions(f), object);
  std::vector<Arrow> legs;
  for (int a : core.arrows) legs.push_back(f.actions[static_cast<std::size_t>(a)]);
  Arrow from = f.base.limit_mediator(core.diagram, core.cone, f.values[static_cast<std::size_t>(object)], legs);
  return {core.arrows, core.diagram, core.cone, from};
}

Relative relative(const NatTrans& t, int o) {
  const Base& b = t.src.base;
  const ReedyCat& c = *t.src.cat;
  const auto comp = [&t](int x) { return t.comp[static_cast<std::size_t>(x)]; };
  const Latching lf = latching(t.src, o);
  const Latching lg = latching(t.dst, o);
  const Matching mf = matching(t.src, o);
  const Matching mg = matching(t.dst, o);
  const LatchCore lfc{lf.arrows, lf.diagram, lf.cocone};
  const LatchCore lgc{lg.arrows, lg.diagram, lg.cocone};
  const MatchCore mfc{mf.arrows, mf.diagram, mf.cone};
  const MatchCore mgc{mg.arrows, mg.diagram, mg.cone};
  const auto po = base::pushout(b, lf.to_value, latch_map(b, c, lfc, lgc, comp));
  const auto pb = base::pullback(b, mg.from_value, match_map(b, c, mfc, mgc, comp));
  return {base::pushout_mediator(b, po, t.comp[static_cast<std::size_t>(o)], lg.to_value),
          base::pullback_mediator(b, pb, t.comp[static_cast<std::size_t>(o)], mf.from_value)};
}

bool operator==(const Verdict& a, const Verdict& b) {
  return a.we == b.we && a.cof == b.cof && a.fib == b.fib && std::equal(a.left, a.left + 3, b.left) &&
         std::equal(a.right, a.right + 3, b.right);
}

Verdict classify(const NatTrans& t) {
  const Base& b = t.src.base;
  Verdict v;
  const base::System systems[3] = {base::System::TrivCofFib, base::System::CofTrivFib, base::System::Ofs};
  for (int o = 0; o < t.src.cat->cat.object_count(); ++o) {
    v.we = v.we && b.we(t.comp[static_cast<std::size_t>(o)]);
    const Relative r = relative(t, o);
    v.cof = v.cof && b.cof(r.latch_rel);
    v.fib = v.fib && b.fib(r.match_rel);
    for (int s = 0; s < 3; ++s) {
      v.left[s] = v.left[s] && b.in_left(r.latch_rel, systems[s]);
      v.right[s] = v.right[s] && b.in_right(r.match_rel, systems[s]);
    }
  }
  return v;
}

Factorization factorize(const NatTrans& t, base::System s) {
  const Functor& f = t.src;
  const Functor& g = t.dst;
  const ReedyCat& c = *f.cat;
  const Base& b = f.base;
  const int n = c.cat.object_count();
  std::vector<Object> kval(static_cast<std::size_t>(n), b.initial());
  std::vector<std::optional<Arrow>> kact(static_cast<std::size_t>(c.cat.arrow_count()));
  std::vector<Arrow> lam(static_cast<std::size_t>(n)), rho(static_cast<std::size_t>(n));
  std::vector<Arrow> from_latching(static_cast<std::size_t>(n)), to_matching(static_cast<std::size_t>(n));
  std::vector<LatchCore> lk(static_cast<std::size_t>(n));
  std::vector<MatchCore> mk(static_cast<std::size_t>(n));
  const auto lc = [&lam](int x) { return lam[static_cast<std::size_t>(x)]; };
  const auto rc = [&rho](int x) { return rho[static_cast<std::size_t>(x)]; };

  const std::vector<int> order = by_degree(c);
  std::size_t pos = 0;
  while (pos < order.size()) {
    const int d = c.degree[static_cast<std::size_t>(order[pos])];
    std::vector<int> stage;
    while (pos < order.size() && c.degree[static_cast<std::size_t>(order[pos])] == d) stage.push_back(order[pos++]);
    for (int o : stage) {
      const auto us = static_cast<std::size_t>(o);
      const Latching lf = latching(f, o);
      const Latching lg = latching(g, o);
      const Matching mf = matching(f, o);
      const Matching mg = matching(g, o);
      lk[us] = latch_core(c, b, kval, kact, o);
      mk[us] = match_core(c, b, kval, kact, o);
      std::vector<Arrow> rows;
      for (std::size_t i = 0; i < lk[us].arrows.size(); ++i) {
        std::vector<Arrow> cols;
        for (std::size_t j = 0; j < mk[us].arrows.size(); ++j) {
          const int comp = c.cat.compose(lk[us].arrows[i], mk[us].arrows[j]);
          cols.push_back(*kact[static_cast<std::size_t>(comp)]);
        }
        rows.push_back(b.limit_mediator(mk[us].diagram, mk[us].cone, lk[us].diagram.nodes[i], cols));
      }
      const Arrow lm = b.colimit_mediator(lk[us].diagram, lk[us].cocone, mk[us].cone.apex, rows);
      const LatchCore lfc{lf.arrows, lf.diagram, lf.cocone};
      const LatchCore lgc{lg.arrows, lg.diagram, lg.cocone};
      const MatchCore mfc{mf.arrows, mf.diagram, mf.cone};
      const MatchCore mgc{mg.arrows, mg.diagram, mg.cone};
      const auto po = base::pushout(b, lf.to_value, latch_map(b, c, lfc, lk[us], lc));
      const auto pb = base::pullback(b, mg.from_value, match_map(b, c, mk[us], mgc, rc));
      const Arrow x = base::pullback_mediator(b, pb, t.comp[us], b.compose(mf.from_value, match_map(b, c, mfc, mk[us], lc)));
      const Arrow y = base::pullback_mediator(b, pb, b.compose(latch_map(b, c, lk[us], lgc, rc), lg.to_value), lm);
      const auto [l, p] = b.factorize(base::pushout_mediator(b, po, x, y), s);
      kval[us] = l.dst;
      lam[us] = b.compose(po.cone.legs[0], l);
      rho[us] = b.compose(p, pb.cone.legs[0]);
      from_latching[us] = b.compose(po.cone.legs[1], l);
      to_matching[us] = b.compose(p, pb.cone.legs[1]);
    }
    for (int a = 0; a < c.cat.arrow_count(); ++a) {
      const auto& ar = c.cat.arrow(a);
      if (std::max(c.degree[static_cast<std::size_t>(ar.src)], c.degree[static_cast<std::size_t>(ar.dst)]) != d) continue;
      if (c.cat.is_identity(a)) {
        kact[static_cast<std::size_t>(a)] = b.identity(kval[static_cast<std::size_t>(ar.src)]);
        continue;
      }
      const auto [inv, dir] = c.factorize(a);
      auto part = [&](int x, bool inverse) -> Arrow {
        const auto& xa = c.cat.arrow(x);
        if (c.cat.is_identity(x)) return b.identity(kval[static_cast<std::size_t>(xa.src)]);
        if (inverse) {
          if (c.degree[static_cast<std::size_t>(xa.src)] != d) return *kact[static_cast<std::size_t>(x)];
          const auto& m = mk[static_cast<std::size_t>(xa.src)];
          const auto idx = static_cast<std::size_t>(std::find(m.arrows.begin(), m.arrows.end(), x) - m.arrows.begin());
          return b.compose(to_matching[static_cast<std::size_t>(xa.src)], m.cone.legs[idx]);
        }
        if (c.degree[static_cast<std::size_t>(xa.dst)] != d) return *kact[static_cast<std::size_t>(x)];
        const auto& l = lk[static_cast<std::size_t>(xa.dst)];
        const auto idx = static_cast<std::size_t>(std::find(l.arrows.begin(), l.arrows.end(), x) - l.arrows.begin());
        return b.compose(l.cocone.legs[idx], from_latching[static_cast<std::size_t>(xa.dst)]);
      };
      kact[static_cast<std::size_t>(a)] = b.compose(part(inv, true), part(dir, false));
    }
  }
  Functor k(f.cat, b);
  k.values = kval;
  for (std::size_t a = 0; a < kact.size(); ++a) k.actions[a] = *kact[a];
  if (!is_functor(k)) throw ConsistencyError("classical factorization produced a non-functor");
  return {{f, k, lam}, k, {k, g, rho}};
}

diagram::ColaxDiagram to_colax(const Functor& f, const std::shared_ptr<const reedy2::Groupement>& g) {
  diagram::ColaxDiagram out(g, f.base, g->bound());
  const auto& c = f.cat->cat;
  for (int o = 0; o < c.object_count(); ++o) {
    out.set_value(*g->find_one_cell(c.object_name(o)), f.values[static_cast<std::size_t>(o)]);
  }
  for (int a = 0; a < c.arrow_count(); ++a) {
    if (c.is_identity(a)) continue;
    out.set_action(*g->find_two_cell(c.arrow(a).name), f.actions[static_cast<std::size_t>(a)]);
  }
  return out;
}

Functor from_colax(const diagram::ColaxDiagram& f, const std::shared_ptr<const ReedyCat>& cat) {
  Functor out(cat, f.base());
  const auto& g = f.groupement();
  const auto& c = cat->cat;
  for (int o = 0; o < c.object_count(); ++o) {
    out.values[static_cast<std::size_t>(o)] = f.value(*g.find_one_cell(c.object_name(o)));
  }
  for (int a = 0; a < c.arrow_count(); ++a) {
    const auto& ar = c.arrow(a);
    out.actions[static_cast<std::size_t>(a)] =
        c.is_identity(a) ? f.base().identity(out.values[static_cast<std::size_t>(ar.src)])
                         : f.action(*g.find_two_cell(ar.name));
  }
  return out;
}

diagram::Icon to_colax(const NatTrans& t, const std::shared_ptr<const reedy2::Groupement>& g) {
  diagram::Icon out(to_colax(t.src, g), to_colax(t.dst, g));
  const auto& c = t.src.cat->cat;
  for (int o = 0; o < c.object_count(); ++o) out.set(*g->find_one_cell(c.object_name(o)), t.comp[static_cast<std::size_t>(o)]);
  return out;
}

NatTrans from_colax(const diagram::Icon& t, const std::shared_ptr<const ReedyCat>& cat) {
  NatTrans out{from_colax(t.src, cat), from_colax(t.dst, cat), {}};
  const auto& g = t.src.groupement();
  for (int o = 0; o < cat->cat.object_count(); ++o) out.comp.push_back(t.component(*g.find_one_cell(cat->cat.object_name(o))));
  return out;
}

std::vector<Functor> enumerate_functors(const std::shared_ptr<const ReedyCat>& cat, const Base& b, int min_size,
                                        int max_size, std::size_t cap) {
  const auto& c = cat->cat;
  const int n = c.object_count();
  std::vector<Functor> out;
  std::vector<int> sizes(static_cast<std::size_t>(n), min_size);
  std::vector<int> arrows;
  for (int a = 0; a < c.arrow_count(); ++a) {
    if (!c.is_identity(a)) arrows.push_back(a);
  }
  while (out.size() < cap) {
    Functor f(cat, b);
    for (int o = 0; o < n; ++o) {
      f.values[static_cast<std::size_t>(o)] = b.object(sizes[static_cast<std::size_t>(o)]);
      f.actions[static_cast<std::size_t>(c.identity(o))] = b.identity(f.values[static_cast<std::size_t>(o)]);
    }
    // Odometer over the action tables with a composite check once all three arrows are set.
    std::vector<std::vector<Arrow>> homs;
    for (int a : arrows) {
      homs.push_back(b.hom(f.values[static_cast<std::size_t>(c.arrow(a).src)], f.values[static_cast<std::size_t>(c.arrow(a).dst)]));
    }
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
      if (out.size() >= cap) return;
      if (k == arrows.size()) {
        if (is_functor(f)) out.push_back(f);
        return;
      }
      for (const auto& x : homs[k]) {
        f.actions[static_cast<std::size_t>(arrows[k])] = x;
        bool ok = true;
        for (std::size_t i = 0; i <= k && ok; ++i) {
          for (std::size_t j = 0; j <= k && ok; ++j) {
            if (c.arrow(arrows[i]).dst != c.arrow(arrows[j]).src) continue;
            auto h = c.try_compose(arrows[i], arrows[j]);
            if (!h) continue;
            const bool known = c.is_identity(*h) ||
                               std::find(arrows.begin(), arrows.begin() + static_cast<long>(k) + 1, *h) !=
                                   arrows.begin() + static_cast<long>(k) + 1;
            if (!known) continue;
            ok = f.actions[static_cast<std::size_t>(*h)] ==
                 b.compose(f.actions[static_cast<std::size_t>(arrows[i])], f.actions[static_cast<std::size_t>(arrows[j])]);
          }
        }
        if (ok) rec(k + 1);
      }
    };
    rec(0);
    int o = n - 1;
    for (; o >= 0; --o) {
      if (sizes[static_cast<std::size_t>(o)] < max_size) {
        ++sizes[static_cast<std::size_t>(o)];
        break;
      }
      sizes[static_cast<std::size_t>(o)] = min_size;
    }
    if (o < 0) break;
  }
  return out;
}

std::vector<NatTrans> enumerate_nat(const Functor& f, const Functor& g) {
  const int n = f.cat->cat.object_count();
  std::vector<NatTrans> out;
  NatTrans t{f, g, std::vector<Arrow>(static_cast<std::size_t>(n))};
  std::function<void(int)> rec = [&](int o) {
    if (o == n) {
      if (is_natural(t)) out.push_back(t);
      return;
    }
    for (const auto& x : f.base.hom(f.values[static_cast<std::size_t>(o)], g.values[static_cast<std::size_t>(o)])) {
      t.comp[static_cast<std::size_t>(o)] = x;
      rec(o + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace colax::homotopy::classical
