#include "colax/homotopy/homotopy.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <numeric>
#include <optional>
#include <random>

#include "colax/error.hpp"

namespace colax::homotopy {

using diagram::LatchingObject;
using diagram::MatchingObject;

namespace {

std::string cn(const Groupement& g, int c) { return g.one_cell(c).name; }

template <class R, class Fn>
std::vector<R> map_cells(const std::vector<int>& zs, const Options& opt, Fn fn) {
  std::vector<std::size_t> order(zs.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  if (opt.shuffle) {
    std::mt19937 rng(*opt.shuffle);
    std::shuffle(order.begin(), order.end(), rng);
  }
  std::vector<std::optional<R>> slots(zs.size());
  if (!opt.parallel || zs.size() < 2) {
    for (std::size_t i : order) slots[i].emplace(fn(zs[i]));
  } else {
    std::vector<std::pair<std::size_t, std::future<R>>> futs;
    futs.reserve(zs.size());
    for (std::size_t i : order) futs.emplace_back(i, std::async(std::launch::async, fn, zs[i]));
    for (auto& [i, f] : futs) slots[i].emplace(f.get());
  }
  std::vector<R> out;
  out.reserve(zs.size());
  for (auto& r : slots) out.push_back(std::move(*r));
  return out;
}

// What a stage contributes at one new 1-cell: its value and the arrows from the latching
// object and into the matching object, from which actions and colaxity maps are read off.
struct StageData {
  int z = 0;
  LatchingObject latching;
  MatchingObject matching;
  Object value;
  Arrow from_latching;
  Arrow to_matching;
};

Arrow inverse_action(const ColaxDiagram& k, int d, const std::map<int, const StageData*>& data, int i) {
  const Groupement& g = k.groupement();
  const auto& tc = g.two_cell(i);
  if (g.is_identity2(i)) return k.base().identity(k.value(tc.src));
  if (g.degree(tc.src) != d) return k.action(i);
  if (g.is_unit(tc.dst)) throw DomainError("inverse 2-cell " + tc.name + " into a unit 1-cell");
  const StageData& sd = *data.at(tc.src);
  auto idx = sd.matching.index.find({tc.dst}, i);
  if (!idx) throw ConsistencyError("inverse 2-cell " + tc.name + " missing from the matching index");
  return k.base().compose(sd.to_matching, sd.matching.cone.legs[static_cast<std::size_t>(*idx)]);
}

Arrow direct_action(const ColaxDiagram& k, int d, const std::map<int, const StageData*>& data, int a) {
  const Groupement& g = k.groupement();
  const auto& tc = g.two_cell(a);
  if (g.is_identity2(a)) return k.base().identity(k.value(tc.src));
  if (g.degree(tc.dst) != d) return k.action(a);
  const StageData& sd = *data.at(tc.dst);
  const auto& objs = sd.latching.index.objects;
  auto it = std::find(objs.begin(), objs.end(), a);
  if (it == objs.end()) throw ConsistencyError("direct 2-cell " + tc.name + " missing from the latching index");
  return k.base().compose(sd.latching.cocone.legs[static_cast<std::size_t>(it - objs.begin())], sd.from_latching);
}

// Writes values, colaxity maps and the 2-cell actions whose top degree is d.
void assemble(ColaxDiagram& k, int d, const std::vector<StageData>& stage) {
  const Groupement& g = k.groupement();
  const Base& b = k.base();
  std::map<int, const StageData*> data;
  for (const auto& sd : stage) {
    data[sd.z] = &sd;
    k.set_value(sd.z, sd.value);
  }
  for (const auto& sd : stage) {
    for (const auto& [s, t] : g.splits(sd.z)) {
      auto idx = sd.matching.index.find({s, t}, g.identity2(sd.z));
      if (!idx) throw ConsistencyError("decomposition " + cn(g, s) + " ⊗ " + cn(g, t) + " missing from the matching index");
      k.set_colax(s, t, b.compose(sd.to_matching, sd.matching.cone.legs[static_cast<std::size_t>(*idx)]));
    }
  }
  for (int a = 0; a < g.two_cell_count(); ++a) {
    if (!k.in_scope2(a) || g.is_identity2(a)) continue;
    const auto& tc = g.two_cell(a);
    if (std::max(g.degree(tc.src), g.degree(tc.dst)) != d) continue;
    const auto [i, dd] = g.reedy_factor(a);
    k.set_action(a, b.compose(inverse_action(k, d, data, i), direct_action(k, d, data, dd)));
  }
}

void check_stage(const ColaxDiagram& k, int d, const std::string& what) {
  const Report r = d == 0 ? diagram::validate_colax(diagram::truncate(k, 0))
                          : diagram::extend_check(diagram::truncate(k, d - 1), diagram::truncate(k, d));
  if (!r.ok()) throw ConsistencyError(what + " stage " + std::to_string(d) + ": " + r.first_witness());
}

void require_divisible(const Groupement& g) {
  const Report r = reedy2::check_direct_divisibility(g);
  if (!r.ok()) {
    throw PreconditionError("groupement " + g.name() + " is not direct-divisible (see check_direct_divisibility): " +
                            r.first_witness());
  }
}

std::function<Arrow(int)> comp_of(const Base& b, const std::vector<std::optional<Arrow>>& c, const Groupement& g) {
  return [&b, &c, &g](int cell) {
    if (g.is_unit(cell)) return b.identity(b.unit());
    const auto& x = c[static_cast<std::size_t>(cell)];
    if (!x) throw ConsistencyError("component at " + cn(g, cell) + " not yet built");
    return *x;
  };
}

std::function<Arrow(int)> comp_of(const Icon& s) {
  return [&s](int cell) { return s.component(cell); };
}

}  // namespace

bool Classification::in_left(System s) const {
  switch (s) {
    case System::TrivCofFib: return left_trivcof_fib.value;
    case System::CofTrivFib: return left_cof_trivfib.value;
    case System::Ofs: return left_ofs.value;
  }
  return false;
}

bool Classification::in_right(System s) const {
  switch (s) {
    case System::TrivCofFib: return right_trivcof_fib.value;
    case System::CofTrivFib: return right_cof_trivfib.value;
    case System::Ofs: return right_ofs.value;
  }
  return false;
}

std::vector<std::vector<int>> stages(const ColaxDiagram& f) {
  const Groupement& g = f.groupement();
  std::vector<std::vector<int>> out(static_cast<std::size_t>(f.level() + 1));
  for (int c = 0; c < g.one_cell_count(); ++c) {
    if (f.in_scope(c) && !g.is_unit(c)) out[static_cast<std::size_t>(g.degree(c))].push_back(c);
  }
  return out;
}


Arrow latching_map(const Groupement& g, const Base& b, const LatchingObject& from, const LatchingObject& to,
                   const std::function<Arrow(int)>& comp) {
  std::vector<Arrow> legs;
  for (std::size_t a = 0; a < from.index.objects.size(); ++a) {
    legs.push_back(b.compose(comp(g.two_cell(from.index.objects[a]).src), to.cocone.legs[a]));
  }
  return b.colimit_mediator(from.diagram, from.cocone, to.cocone.apex, legs);
}

Arrow matching_map(const Groupement& g, const Base& b, const MatchingObject& from, const MatchingObject& to,
                   const std::function<Arrow(int)>& comp) {
  (void)g;
  std::vector<Arrow> legs;
  for (std::size_t o = 0; o < to.index.objects.size(); ++o) {
    std::vector<Arrow> parts;
    for (int x : to.index.objects[o].parts) parts.push_back(comp(x));
    legs.push_back(b.compose(from.cone.legs[o], b.tensor(parts)));
  }
  return b.limit_mediator(to.diagram, to.cone, from.cone.apex, legs);
}

RelativeAt relative_at(const Icon& s, int z) {
  const ColaxDiagram& f = s.src;
  const ColaxDiagram& h = s.dst;
  const Groupement& g = f.groupement();
  const Base& b = f.base();
  const auto comp = comp_of(s);
  const LatchingObject lf = diagram::colax_latching_object(f, z);
  const LatchingObject lg = diagram::colax_latching_object(h, z);
  const MatchingObject mf = diagram::colax_matching_object(f, z);
  const MatchingObject mg = diagram::colax_matching_object(h, z);
  RelativeAt out{z, base::pushout(b, *lf.to_value, latching_map(g, b, lf, lg, comp)), Arrow{},
                 base::pullback(b, *mg.from_value, matching_map(g, b, mf, mg, comp)), Arrow{}};
  out.latch_rel = base::pushout_mediator(b, out.latch_pushout, s.component(z), *lg.to_value);
  out.match_rel = base::pullback_mediator(b, out.match_pullback, s.component(z), *mf.from_value);
  return out;
}

RelativeMaps relative_maps(const Icon& s, Options opt) {
  std::vector<int> zs;
  for (const auto& st : stages(s.src)) zs.insert(zs.end(), st.begin(), st.end());
  std::sort(zs.begin(), zs.end());
  RelativeMaps out;
  out.at = map_cells<RelativeAt>(zs, opt, [&s](int z) { return relative_at(s, z); });
  return out;
}

Classification classify(const Icon& s, const RelativeMaps& r) {
  const Groupement& g = s.src.groupement();
  const Base& b = s.src.base();
  Classification c;
  auto note = [&](Flag& f, bool ok, int z) {
    if (!ok && f.value) {
      f.value = false;
      f.witness = cn(g, z);
    }
  };
  for (int z = 0; z < g.one_cell_count(); ++z) {
    if (s.src.in_scope(z)) note(c.we, b.we(s.component(z)), z);
  }
  for (const auto& at : r.at) {
    note(c.cof, b.cof(at.latch_rel), at.z);
    note(c.fib, b.fib(at.match_rel), at.z);
    note(c.left_trivcof_fib, b.in_left(at.latch_rel, System::TrivCofFib), at.z);
    note(c.right_trivcof_fib, b.in_right(at.match_rel, System::TrivCofFib), at.z);
    note(c.left_cof_trivfib, b.in_left(at.latch_rel, System::CofTrivFib), at.z);
    note(c.right_cof_trivfib, b.in_right(at.match_rel, System::CofTrivFib), at.z);
    note(c.left_ofs, b.in_left(at.latch_rel, System::Ofs), at.z);
    note(c.right_ofs, b.in_right(at.match_rel, System::Ofs), at.z);
  }
  return c;
}

Classification classify(const Icon& s, Options opt) { return classify(s, relative_maps(s, opt)); }

bool same_icon(const Icon& a, const Icon& b) {
  if (!(a.src == b.src) || !(a.dst == b.dst)) return false;
  const Groupement& g = a.src.groupement();
  for (int z = 0; z < g.one_cell_count(); ++z) {
    if (!a.src.in_scope(z)) continue;
    if (a.has(z) != b.has(z)) return false;
    if (a.has(z) && a.component(z) != b.component(z)) return false;
  }
  return true;
}

ColimitResult colimit_colax(const std::shared_ptr<const Groupement>& gp, const Base& b, int level,
                            const DiagramFamily& d) {
  const Groupement& g = *gp;
  const std::size_t n = d.nodes.size();
  ColaxDiagram apex(gp, b, level);
  std::vector<std::optional<base::FinDiagram>> diag(static_cast<std::size_t>(g.one_cell_count()));
  std::vector<std::optional<base::Cone>> cocone(diag.size());
  std::vector<std::vector<int>> etas(diag.size());  // unit-sourced 2-cells into each 1-cell

  for (int z = 0; z < g.one_cell_count(); ++z) {
    if (!apex.in_scope(z) || g.is_unit(z)) continue;
    base::FinDiagram fd;
    for (const auto& x : d.nodes) fd.add_node(x.value(z));
    for (const auto& e : d.edges) fd.add_edge(e.from, e.to, e.icon.component(z));
    for (int a : g.into(z)) {
      if (!g.is_unit(g.two_cell(a).src)) continue;
      const int node = fd.add_node(b.unit());
      etas[static_cast<std::size_t>(z)].push_back(a);
      for (std::size_t i = 0; i < n; ++i) fd.add_edge(node, static_cast<int>(i), d.nodes[i].action(a));
    }
    cocone[static_cast<std::size_t>(z)] = b.colimit(fd);
    diag[static_cast<std::size_t>(z)] = std::move(fd);
    apex.set_value(z, cocone[static_cast<std::size_t>(z)]->apex);
  }
  auto leg = [&](int z, std::size_t i) {
    if (g.is_unit(z)) return b.identity(b.unit());
    return cocone[static_cast<std::size_t>(z)]->legs[i];
  };
  auto eta_leg = [&](int z, int eta) {
    if (g.is_unit(z)) return b.identity(b.unit());
    const auto& es = etas[static_cast<std::size_t>(z)];
    auto it = std::find(es.begin(), es.end(), eta);
    if (it == es.end()) throw ConsistencyError("unit-sourced 2-cell " + g.two_cell(eta).name + " not indexed");
    return cocone[static_cast<std::size_t>(z)]->legs[n + static_cast<std::size_t>(it - es.begin())];
  };
  for (int a = 0; a < g.two_cell_count(); ++a) {
    if (!apex.in_scope2(a) || g.is_identity2(a)) continue;
    const auto& tc = g.two_cell(a);
    if (g.is_unit(tc.src)) {
      apex.set_action(a, eta_leg(tc.dst, a));
      continue;
    }
    std::vector<Arrow> legs;
    for (std::size_t i = 0; i < n; ++i) legs.push_back(b.compose(d.nodes[i].action(a), leg(tc.dst, i)));
    for (int eta : etas[static_cast<std::size_t>(tc.src)]) legs.push_back(eta_leg(tc.dst, *g.vcomp(eta, a)));
    apex.set_action(a, b.colimit_mediator(*diag[static_cast<std::size_t>(tc.src)], *cocone[static_cast<std::size_t>(tc.src)],
                                          apex.value(tc.dst), legs));
  }
  for (const auto& [s, t] : apex.colax_pairs()) {
    const int z = *g.hcomp1(s, t);
    std::vector<Arrow> legs;
    for (std::size_t i = 0; i < n; ++i) legs.push_back(b.compose(d.nodes[i].colax(s, t), b.tensor(leg(s, i), leg(t, i))));
    for (int eta : etas[static_cast<std::size_t>(z)]) {
      const auto [e1, e2] = g.split(eta, s, t);
      legs.push_back(b.tensor(eta_leg(s, e1), eta_leg(t, e2)));
    }
    apex.set_colax(s, t, b.colimit_mediator(*diag[static_cast<std::size_t>(z)], *cocone[static_cast<std::size_t>(z)],
                                            b.tensor(apex.value(s), apex.value(t)), legs));
  }
  ColimitResult out{apex, {}};
  for (std::size_t i = 0; i < n; ++i) {
    Icon l(d.nodes[i], apex);
    for (int z = 0; z < g.one_cell_count(); ++z) {
      if (apex.in_scope(z) && !g.is_unit(z)) l.set(z, leg(z, i));
    }
    out.legs.push_back(std::move(l));
  }
  return out;
}

LimitResult limit_colax(const std::shared_ptr<const Groupement>& gp, const Base& b, int level, const DiagramFamily& d,
                        Options opt) {
  const Groupement& g = *gp;
  require_divisible(g);
  const std::size_t n = d.nodes.size();
  ColaxDiagram e(gp, b, level);
  std::vector<std::vector<std::optional<Arrow>>> proj(n, std::vector<std::optional<Arrow>>(static_cast<std::size_t>(g.one_cell_count())));
  const auto st = stages(e);
  for (int deg = 0; deg <= level; ++deg) {
    const auto& zs = st[static_cast<std::size_t>(deg)];
    struct Out {
      StageData data;
      std::vector<Arrow> proj;
    };
    auto one = [&](int z) {
      const auto cm = diagram::canonical_map_iz(e, z);
      base::FinDiagram fd;
      fd.add_node(cm.matching.cone.apex);
      for (const auto& x : d.nodes) fd.add_node(x.value(z));
      std::vector<Arrow> m_to_mx;
      std::vector<MatchingObject> mxs;
      for (std::size_t i = 0; i < n; ++i) {
        mxs.push_back(diagram::colax_matching_object(d.nodes[i], z));
        fd.add_node(mxs.back().cone.apex);
        m_to_mx.push_back(matching_map(g, b, cm.matching, mxs.back(), comp_of(b, proj[i], g)));
      }
      for (std::size_t i = 0; i < n; ++i) {
        fd.add_edge(0, static_cast<int>(n + 1 + i), m_to_mx[i]);
        fd.add_edge(static_cast<int>(1 + i), static_cast<int>(n + 1 + i), *mxs[i].from_value);
      }
      for (const auto& ed : d.edges) fd.add_edge(1 + ed.from, 1 + ed.to, ed.icon.component(z));
      const base::Cone lim = b.limit(fd);

      std::vector<Arrow> legs(2 * n + 1);
      legs[0] = cm.iz;
      for (std::size_t i = 0; i < n; ++i) {
        std::vector<Arrow> into;
        const auto pc = comp_of(b, proj[i], g);
        for (int a : cm.latching.index.objects) into.push_back(b.compose(pc(g.two_cell(a).src), d.nodes[i].action(a)));
        legs[1 + i] = b.colimit_mediator(cm.latching.diagram, cm.latching.cocone, d.nodes[i].value(z), into);
        legs[n + 1 + i] = b.compose(cm.iz, m_to_mx[i]);
      }
      Out o{{z, cm.latching, cm.matching, lim.apex,
             b.limit_mediator(fd, lim, cm.latching.cocone.apex, legs), lim.legs[0]},
            {}};
      for (std::size_t i = 0; i < n; ++i) o.proj.push_back(lim.legs[1 + i]);
      return o;
    };
    auto outs = map_cells<Out>(zs, opt, one);
    std::vector<StageData> stage;
    for (std::size_t k = 0; k < outs.size(); ++k) {
      stage.push_back(outs[k].data);
      for (std::size_t i = 0; i < n; ++i) proj[i][static_cast<std::size_t>(zs[k])] = outs[k].proj[i];
    }
    assemble(e, deg, stage);
    check_stage(e, deg, "limit");
  }
  LimitResult out{e, {}};
  for (std::size_t i = 0; i < n; ++i) {
    Icon p(e, d.nodes[i]);
    for (int z = 0; z < g.one_cell_count(); ++z) {
      if (proj[i][static_cast<std::size_t>(z)]) p.set(z, *proj[i][static_cast<std::size_t>(z)]);
    }
    out.legs.push_back(std::move(p));
  }
  return out;
}

Factorization factor_icon(const Icon& s, System system, Options opt) {
  const ColaxDiagram& f = s.src;
  const ColaxDiagram& h = s.dst;
  const Groupement& g = f.groupement();
  const Base& b = f.base();
  require_divisible(g);
  ColaxDiagram k(f.groupement_ptr(), b, f.level());
  std::vector<std::optional<Arrow>> lam(static_cast<std::size_t>(g.one_cell_count()));
  std::vector<std::optional<Arrow>> rho(lam.size());
  const auto st = stages(f);
  for (int deg = 0; deg <= f.level(); ++deg) {
    const auto& zs = st[static_cast<std::size_t>(deg)];
    struct Out {
      StageData data;
      Arrow lam;
      Arrow rho;
    };
    auto one = [&](int z) {
      const auto lc = comp_of(b, lam, g);
      const auto rc = comp_of(b, rho, g);
      const auto cm = diagram::canonical_map_iz(k, z);
      const LatchingObject lf = diagram::colax_latching_object(f, z);
      const LatchingObject lg = diagram::colax_latching_object(h, z);
      const MatchingObject mf = diagram::colax_matching_object(f, z);
      const MatchingObject mg = diagram::colax_matching_object(h, z);
      const base::Pushout po = base::pushout(b, *lf.to_value, latching_map(g, b, lf, cm.latching, lc));
      const Arrow mk_mg = matching_map(g, b, cm.matching, mg, rc);
      const base::Pullback pb = base::pullback(b, *mg.from_value, mk_mg);
      const Arrow from_f =
          base::pullback_mediator(b, pb, s.component(z), b.compose(*mf.from_value, matching_map(g, b, mf, cm.matching, lc)));
      const Arrow from_lk =
          base::pullback_mediator(b, pb, b.compose(latching_map(g, b, cm.latching, lg, rc), *lg.to_value), cm.iz);
      const Arrow mid = base::pushout_mediator(b, po, from_f, from_lk);
      const auto [l, p] = b.factorize(mid, system);
      return Out{{z, cm.latching, cm.matching, l.dst, b.compose(po.cone.legs[1], l), b.compose(p, pb.cone.legs[1])},
                 b.compose(po.cone.legs[0], l),
                 b.compose(p, pb.cone.legs[0])};
    };
    auto outs = map_cells<Out>(zs, opt, one);
    std::vector<StageData> stage;
    for (std::size_t i = 0; i < outs.size(); ++i) {
      stage.push_back(outs[i].data);
      lam[static_cast<std::size_t>(zs[i])] = outs[i].lam;
      rho[static_cast<std::size_t>(zs[i])] = outs[i].rho;
    }
    assemble(k, deg, stage);
    check_stage(k, deg, "factorization");
  }
  Icon left(f, k);
  Icon right(k, h);
  for (int z = 0; z < g.one_cell_count(); ++z) {
    if (!lam[static_cast<std::size_t>(z)]) continue;
    left.set(z, *lam[static_cast<std::size_t>(z)]);
    right.set(z, *rho[static_cast<std::size_t>(z)]);
  }
  return {left, k, right};
}

LiftResult lift_icon(const Icon& lambda, const Icon& rho, const Icon& top, const Icon& bottom) {
  if (!(lambda.src == top.src) || !(lambda.dst == bottom.src) || !(rho.src == top.dst) || !(rho.dst == bottom.dst)) {
    throw PreconditionError("lift_icon: square endpoints do not match");
  }
  if (!same_icon(diagram::compose(top, rho), diagram::compose(lambda, bottom))) {
    throw PreconditionError("lift_icon: square does not commute");
  }
  const ColaxDiagram& a = lambda.src;
  const ColaxDiagram& bb = lambda.dst;
  const ColaxDiagram& x = rho.src;
  const ColaxDiagram& y = rho.dst;
  const Groupement& g = a.groupement();
  const Base& b = a.base();
  std::vector<std::optional<Arrow>> hc(static_cast<std::size_t>(g.one_cell_count()));
  const auto hcomp = comp_of(b, hc, g);
  const auto lc = comp_of(lambda);
  const auto rc = comp_of(rho);
  for (const auto& zs : stages(a)) {
    for (int z : zs) {
      const LatchingObject la = diagram::colax_latching_object(a, z);
      const LatchingObject lb = diagram::colax_latching_object(bb, z);
      const LatchingObject lx = diagram::colax_latching_object(x, z);
      const MatchingObject mb = diagram::colax_matching_object(bb, z);
      const MatchingObject mx = diagram::colax_matching_object(x, z);
      const MatchingObject my = diagram::colax_matching_object(y, z);
      const base::Pushout po = base::pushout(b, *la.to_value, latching_map(g, b, la, lb, lc));
      const Arrow l = base::pushout_mediator(b, po, lambda.component(z), *lb.to_value);
      const base::Pullback pb = base::pullback(b, *my.from_value, matching_map(g, b, mx, my, rc));
      const Arrow r = base::pullback_mediator(b, pb, rho.component(z), *mx.from_value);
      const Arrow t = base::pushout_mediator(b, po, top.component(z), b.compose(latching_map(g, b, lb, lx, hcomp), *lx.to_value));
      const Arrow u = base::pullback_mediator(b, pb, bottom.component(z), b.compose(*mb.from_value, matching_map(g, b, mb, mx, hcomp)));
      std::optional<Arrow> d;
      try {
        d = b.find_lift(l, r, t, u);
      } catch (const PreconditionError& e) {
        return {std::nullopt, cn(g, z) + ": " + e.what()};
      }
      if (!d) return {std::nullopt, cn(g, z) + ": no lift of the relative latching map against the relative matching map"};
      hc[static_cast<std::size_t>(z)] = *d;
    }
  }
  Icon out(bb, x);
  for (int z = 0; z < g.one_cell_count(); ++z) {
    if (hc[static_cast<std::size_t>(z)]) out.set(z, *hc[static_cast<std::size_t>(z)]);
  }
  const Report r = diagram::validate_icon(out);
  if (!r.ok()) throw ConsistencyError("lift_icon: assembled lift is not an icon: " + r.first_witness());
  return {out, {}};
}

}  // namespace colax::homotopy
