#include "colax/segal/segal.hpp"

#include <algorithm>
#include <set>

#include "colax/error.hpp"

namespace colax::segal {

using reedy2::all_extremal;
using reedy2::all_monotone;
using reedy2::CellClass;
using reedy2::Groupement;

namespace {

Monotone glue(const Monotone& a, const Monotone& b) {
  // [k1] -> [n1] and [k2] -> [n2] glued at the shared extremity.
  const int n1 = a.to - 1;
  Monotone out{a.from + b.from - 1, a.to + b.to - 1, a.image};
  for (std::size_t j = 1; j < b.image.size(); ++j) out.image.push_back(n1 + b.image[j]);
  return out;
}

Monotone t_collapse(int f) {
  if (f == 0) return Monotone{2, 1, {0, 0}};  // T(η)
  if (f == 1) return Monotone::identity(2);
  const Monotone t_mu{2, 3, {0, 2}};
  // μ_f = μ ∘ (μ_{f-1} + id_1), so T(μ_f) = T(μ_{f-1} + id_1) ∘ T(μ).
  return reedy2::compose(t_mu, glue(t_collapse(f - 1), Monotone::identity(2)));
}

Arrow pair(const Base& b, const Arrow& p, const Arrow& q) {
  Arrow out{p.src, b.tensor(p.dst, q.dst), std::vector<int>(p.data.size())};
  for (std::size_t e = 0; e < p.data.size(); ++e) out.data[e] = p.data[e] * q.dst.n + q.data[e];
  return out;
}

Monotone interval(int from, int len, int n) {
  Monotone m{len + 1, n + 1, {}};
  for (int i = 0; i <= len; ++i) m.image.push_back(from + i);
  return m;
}

void require_shape(const Groupement& g, const DeltaX& d, int level) {
  if (!g.labelled()) throw DomainError("presheaf correspondence needs a chain groupement");
  if (g.object_count() != static_cast<int>(d.labels().size())) throw DomainError("presheaf shape: object sets differ");
  for (int i = 0; i < g.object_count(); ++i) {
    if (g.object_name(i) != d.labels()[static_cast<std::size_t>(i)]) {
      throw DomainError("presheaf shape: object " + g.object_name(i) + " vs " + d.labels()[static_cast<std::size_t>(i)]);
    }
  }
  if (d.n_max() > level) throw TruncationError("presheaf shape exceeds the diagram level");
}

}  // namespace

DeltaX::DeltaX(std::vector<std::string> x, int n_max) : x_(std::move(x)), n_max_(n_max) {
  if (x_.empty()) throw DomainError("Δ_X needs at least one label");
  const int k = static_cast<int>(x_.size());
  for (int n = 0; n <= n_max_; ++n) {
    std::vector<int> seq(static_cast<std::size_t>(n + 1), 0);
    auto rec = [&](auto&& self, int pos) -> void {
      if (pos == n + 1) {
        by_seq_[seq] = static_cast<int>(objects_.size());
        objects_.push_back(seq);
        return;
      }
      for (int v = 0; v < k; ++v) {
        seq[static_cast<std::size_t>(pos)] = v;
        self(self, pos + 1);
      }
    };
    rec(rec, 0);
  }
  into_.resize(objects_.size());
  for (int t = 0; t < object_count(); ++t) {
    const auto& x = sequence(t);
    const int n = dim(t);
    for (int kk = 0; kk <= n_max_; ++kk) {
      for (auto& phi : all_monotone(kk + 1, n + 1)) {
        std::vector<int> y(static_cast<std::size_t>(kk + 1));
        for (int i = 0; i <= kk; ++i) y[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(phi(i))];
        const int m = static_cast<int>(mors_.size());
        mors_.push_back({by_seq_.at(y), t, phi});
        by_lift_[{t, phi}] = m;
        into_[static_cast<std::size_t>(t)].push_back(m);
      }
    }
  }
}

std::string DeltaX::name(int o) const {
  std::string s;
  for (std::size_t i = 0; i < sequence(o).size(); ++i) s += (i ? "." : "") + x_[static_cast<std::size_t>(sequence(o)[i])];
  return s;
}

std::string DeltaX::morphism_name(int m) const {
  const auto& mo = morphism(m);
  return name(mo.src) + ">" + name(mo.dst) + ":" + mo.phi.str();
}

std::optional<int> DeltaX::find(const std::vector<int>& seq) const {
  auto it = by_seq_.find(seq);
  if (it == by_seq_.end()) return std::nullopt;
  return it->second;
}

int DeltaX::lift(const Monotone& phi, int target) const {
  auto it = by_lift_.find({target, phi});
  if (it == by_lift_.end()) throw DomainError("Δ_X: no morphism over " + phi.str() + " into " + name(target));
  return it->second;
}

std::optional<int> DeltaX::find_morphism(int src, int dst, const Monotone& phi) const {
  auto it = by_lift_.find({dst, phi});
  if (it == by_lift_.end() || morphism(it->second).src != src) return std::nullopt;
  return it->second;
}

int DeltaX::compose(int f, int g) const {
  if (morphism(f).dst != morphism(g).src) throw EndpointError("Δ_X compose: " + morphism_name(f) + " then " + morphism_name(g));
  return lift(reedy2::compose(morphism(f).phi, morphism(g).phi), morphism(g).dst);
}

int DeltaX::identity(int o) const { return lift(Monotone::identity(dim(o) + 1), o); }

Report check_fibration(const DeltaX& d) {
  Report r("fibration Δ_X");
  for (int t = 0; t < d.object_count(); ++t) {
    for (int k = 0; k <= d.n_max(); ++k) {
      for (const auto& phi : all_monotone(k + 1, d.dim(t) + 1)) {
        int hits = 0;
        for (int m : d.into(t)) hits += d.morphism(m).phi == phi ? 1 : 0;
        if (hits != 1) r.fail("unique-lift", phi.str() + " into " + d.name(t) + ": " + std::to_string(hits) + " lifts");
        const auto& y = d.sequence(d.morphism(d.lift(phi, t)).src);
        for (int i = 0; i <= k; ++i) {
          if (y[static_cast<std::size_t>(i)] != d.sequence(t)[static_cast<std::size_t>(phi(i))]) {
            r.fail("lift-labels", d.morphism_name(d.lift(phi, t)));
          }
        }
      }
    }
  }
  for (int g = 0; g < d.morphism_count(); ++g) {
    for (int f : d.into(d.morphism(g).src)) {
      const int h = d.compose(f, g);
      if (d.morphism(h).phi != reedy2::compose(d.morphism(f).phi, d.morphism(g).phi) || d.morphism(h).src != d.morphism(f).src) {
        r.fail("composition-over-Δ", d.morphism_name(f) + " then " + d.morphism_name(g));
      }
    }
  }
  if (r.ok()) r.pass("fibration");
  return r;
}

Monotone joyal_from_generators(const Monotone& phi) {
  // φ = ⊕_j μ_{|φ⁻¹(j)|}.
  Monotone out = Monotone::identity(1);
  for (int j = 0; j < phi.to; ++j) {
    const int f = static_cast<int>(std::count(phi.image.begin(), phi.image.end(), j));
    out = glue(out, t_collapse(f));
  }
  return out;
}

JoyalIso joyal_T(int m) {
  JoyalIso t;
  t.m = m;
  for (int n = 0; n <= m; ++n) {
    for (int k = 0; k <= m; ++k) {
      for (const auto& phi : all_monotone(n, k)) {
        const Monotone psi = joyal_from_generators(phi);
        t.forward.emplace(phi, psi);
        t.backward.emplace(psi, phi);
      }
    }
  }
  return t;
}

Report check_joyal(const JoyalIso& t) {
  Report r("joyal T ≤ " + std::to_string(t.m));
  const auto lookup = [](const std::map<Monotone, Monotone>& m, const Monotone& k) -> const Monotone* {
    auto it = m.find(k);
    return it == m.end() ? nullptr : &it->second;
  };
  for (int n = 0; n <= t.m; ++n) {
    for (int k = 0; k <= t.m; ++k) {
      const auto dom = all_monotone(n, k);
      const auto cod = all_extremal(k, n);
      const std::string hs = std::to_string(n) + "->" + std::to_string(k);
      r.record("hom-cardinality", hs, dom.size() == cod.size(),
               std::to_string(dom.size()) + " vs " + std::to_string(cod.size()));
      std::set<Monotone> image;
      for (const auto& phi : dom) {
        const Monotone* psi = lookup(t.forward, phi);
        if (psi == nullptr) {
          r.fail("forward-defined", phi.str(), hs);
          continue;
        }
        image.insert(*psi);
        if (!psi->extremal() || psi->from != k + 1 || psi->to != n + 1) {
          r.fail("forward-type", phi.str() + " -> " + psi->str(), hs);
          continue;
        }
        const Monotone* back = lookup(t.backward, *psi);
        if (back == nullptr || *back != phi) r.fail("inverse", phi.str(), hs);
        if (*psi != reedy2::joyal_dual(phi)) r.fail("closed-formula", phi.str() + " -> " + psi->str(), hs);
      }
      r.record("bijective", hs, image == std::set<Monotone>(cod.begin(), cod.end()));
    }
  }
  if (!r.ok()) return r;
  for (const auto& [phi, tphi] : t.forward) {
    for (int l = 0; l <= t.m; ++l) {
      for (const auto& psi : all_monotone(phi.to, l)) {
        const Monotone comp = reedy2::compose(phi, psi);
        if (t.forward.at(comp) != reedy2::compose(t.forward.at(psi), tphi)) {
          r.fail("contravariance", phi.str() + " then " + psi.str());
        }
      }
    }
    for (const auto& [chi, tchi] : t.forward) {
      if (phi.from + chi.from > t.m || phi.to + chi.to > t.m) continue;
      if (t.forward.at(reedy2::ordinal_sum(phi, chi)) != glue(tphi, tchi)) r.fail("monoidal", phi.str() + " + " + chi.str());
    }
  }
  return r;
}

JTable iso_J(const Groupement& g, const DeltaX& d, int x, int y) {
  if (!g.labelled()) throw DomainError("iso_J needs a chain groupement");
  JTable j{x, y, {}, {}};
  for (int c : g.hom_cells(x, y)) {
    if (g.degree(c) > d.n_max()) continue;
    auto o = d.find(g.chain(c));
    if (!o) throw DomainError("iso_J: chain " + g.one_cell(c).name + " has no Δ_X object");
    j.object[c] = *o;
  }
  for (int a = 0; a < g.two_cell_count(); ++a) {
    const auto& ta = g.two_cell(a);
    if (!j.object.count(ta.src) || !j.object.count(ta.dst)) continue;
    j.morphism[a] = d.lift(reedy2::joyal_dual(g.label(a)), j.object.at(ta.src));
  }
  return j;
}

Report check_iso_J(const Groupement& g, const DeltaX& d, const JTable& j) {
  const std::string inst = g.object_name(j.x) + "," + g.object_name(j.y);
  Report r("iso_J " + inst);
  std::set<int> objs;
  for (const auto& [c, o] : j.object) objs.insert(o);
  int expected = 0;
  for (int o = 0; o < d.object_count(); ++o) {
    const auto& s = d.sequence(o);
    if (s.front() == j.x && s.back() == j.y) ++expected;
  }
  r.record("objects-bijective", inst, static_cast<int>(objs.size()) == expected && objs.size() == j.object.size(),
           std::to_string(objs.size()) + " of " + std::to_string(expected));
  for (const auto& [c, oc] : j.object) {
    for (const auto& [e, oe] : j.object) {
      std::set<int> hit;
      int cells = 0;
      for (int a : g.between(c, e)) {
        auto found = j.morphism.find(a);
        if (found == j.morphism.end()) {
          r.fail("defined", g.two_cell(a).name, inst);
          continue;
        }
        const int m = found->second;
        if (d.morphism(m).src != oe || d.morphism(m).dst != oc) {
          r.fail("endpoints", g.two_cell(a).name, inst);
        }
        hit.insert(m);
        ++cells;
      }
      int target = 0;
      for (int m : d.into(oc)) {
        if (d.morphism(m).src == oe && d.morphism(m).phi.extremal()) ++target;
      }
      if (static_cast<int>(hit.size()) != cells || cells != target) {
        r.fail("hom-bijective", g.one_cell(c).name + " -> " + g.one_cell(e).name + ": " + std::to_string(cells) +
                                    " cells, " + std::to_string(hit.size()) + " images, " + std::to_string(target) +
                                    " Ω maps",
               inst);
      }
    }
  }
  for (const auto& [a, ma] : j.morphism) {
    for (int b : g.out_of(g.two_cell(a).dst)) {
      if (!j.morphism.count(b)) continue;
      auto ab = g.vcomp(a, b);
      if (!ab) continue;
      const int mb = j.morphism.at(b);
      if (d.morphism(mb).dst != d.morphism(ma).src) continue;  // reported as endpoints
      if (j.morphism.at(*ab) != d.compose(mb, ma)) {
        r.fail("functorial", g.two_cell(a).name + " then " + g.two_cell(b).name, inst);
      }
    }
    if (g.is_identity2(a) && ma != d.identity(d.morphism(ma).dst)) r.fail("identities", g.two_cell(a).name, inst);
  }
  if (r.ok()) r.pass("iso_J", inst);
  return r;
}

UnitalPresheaf::UnitalPresheaf(std::shared_ptr<const DeltaX> d, Base b) : shape(std::move(d)), base(std::move(b)) {
  values.assign(static_cast<std::size_t>(shape->object_count()), base.terminal());
  actions.assign(static_cast<std::size_t>(shape->morphism_count()), Arrow{});
}

Report check_presheaf(const UnitalPresheaf& p) {
  const DeltaX& d = *p.shape;
  const Base& b = p.base;
  Report r("presheaf");
  for (int o = 0; o < d.object_count(); ++o) {
    if (d.dim(o) == 0 && p.values[static_cast<std::size_t>(o)] != b.terminal()) r.fail("unital", d.name(o));
  }
  for (int m = 0; m < d.morphism_count(); ++m) {
    const auto& mo = d.morphism(m);
    const Arrow& a = p.actions[static_cast<std::size_t>(m)];
    if (a.src != p.values[static_cast<std::size_t>(mo.dst)] || a.dst != p.values[static_cast<std::size_t>(mo.src)]) {
      r.fail("endpoints", d.morphism_name(m));
      return r;
    }
    if (mo.phi.is_identity() && a != b.identity(a.src)) r.fail("identity", d.morphism_name(m));
  }
  for (int g = 0; g < d.morphism_count(); ++g) {
    for (int f : d.into(d.morphism(g).src)) {
      const int h = d.compose(f, g);
      if (p.actions[static_cast<std::size_t>(h)] !=
          b.compose(p.actions[static_cast<std::size_t>(g)], p.actions[static_cast<std::size_t>(f)])) {
        r.fail("functorial", d.morphism_name(f) + " then " + d.morphism_name(g));
      }
    }
  }
  if (r.ok()) r.pass("presheaf");
  return r;
}

UnitalPresheaf to_presheaf(const diagram::ColaxDiagram& f, const std::shared_ptr<const DeltaX>& dp) {
  const Base& b = f.base();
  if (!b.cartesian()) throw DomainError("to_presheaf: the base must be cartesian");
  const Groupement& g = f.groupement();
  const DeltaX& d = *dp;
  require_shape(g, d, f.level());
  UnitalPresheaf p(dp, b);
  auto cell = [&](const std::vector<int>& seq) {
    auto c = g.find_chain(seq);
    if (!c) throw DomainError("to_presheaf: no chain for a sequence");
    return *c;
  };
  for (int o = 0; o < d.object_count(); ++o) {
    if (d.dim(o) > 0) p.values[static_cast<std::size_t>(o)] = f.value(cell(d.sequence(o)));
  }
  for (int m = 0; m < d.morphism_count(); ++m) {
    const auto& mo = d.morphism(m);
    const auto& x = d.sequence(mo.dst);
    const int n = d.dim(mo.dst);
    const int k = d.dim(mo.src);
    const int lo = mo.phi(0);
    const int hi = mo.phi(k);
    const Object vx = p.values[static_cast<std::size_t>(mo.dst)];
    // Outer cofaces: restrict F(x) to F(x_lo..x_hi) through the colaxity maps.
    Arrow restrict = b.identity(vx);
    const std::vector<int> sub(x.begin() + lo, x.begin() + hi + 1);
    if (hi == lo) {
      restrict = b.to_terminal(vx);
    } else if (hi - lo < n) {
      std::vector<int> parts;
      int which = 0;
      if (lo > 0) {
        parts.push_back(cell(std::vector<int>(x.begin(), x.begin() + lo + 1)));
        which = 1;
      }
      parts.push_back(cell(sub));
      if (hi < n) parts.push_back(cell(std::vector<int>(x.begin() + hi, x.end())));
      std::vector<Object> objs;
      for (int c : parts) objs.push_back(f.value(c));
      restrict = b.compose(f.iterated_colax(parts), b.projection(objs, which));
    }
    // Ω part through J.
    Monotone omega{k + 1, hi - lo + 1, {}};
    for (int i = 0; i <= k; ++i) omega.image.push_back(mo.phi(i) - lo);
    const int from = cell(sub);
    auto a = g.find_labelled(from, reedy2::joyal_undual(omega));
    if (!a || g.two_cell(*a).dst != cell(d.sequence(mo.src))) {
      throw ConsistencyError("to_presheaf: J has no 2-cell for " + d.morphism_name(m));
    }
    Arrow act = g.is_identity2(*a) ? b.identity(f.value(from)) : f.action(*a);
    p.actions[static_cast<std::size_t>(m)] = b.compose(restrict, act);
  }
  return p;
}

diagram::ColaxDiagram from_presheaf(const UnitalPresheaf& p, const std::shared_ptr<const Groupement>& gp) {
  const DeltaX& d = *p.shape;
  const Base& b = p.base;
  if (!b.cartesian()) throw DomainError("from_presheaf: the base must be cartesian");
  const Groupement& g = *gp;
  require_shape(g, d, g.bound());
  for (int o = 0; o < d.object_count(); ++o) {
    if (d.dim(o) == 0 && p.values[static_cast<std::size_t>(o)] != b.terminal()) {
      throw DomainError("from_presheaf: not unital at " + d.name(o));
    }
  }
  diagram::ColaxDiagram f(gp, b, d.n_max());
  auto obj = [&](int c) { return *d.find(g.chain(c)); };
  for (int c = 0; c < g.one_cell_count(); ++c) {
    if (f.in_scope(c) && !g.is_unit(c)) f.set_value(c, p.values[static_cast<std::size_t>(obj(c))]);
  }
  for (int a = 0; a < g.two_cell_count(); ++a) {
    if (!f.in_scope2(a) || g.is_identity2(a)) continue;
    const int m = d.lift(reedy2::joyal_dual(g.label(a)), obj(g.two_cell(a).src));
    f.set_action(a, p.actions[static_cast<std::size_t>(m)]);
  }
  for (const auto& [s, t] : f.colax_pairs()) {
    const int z = obj(*g.hcomp1(s, t));
    const int ns = g.degree(s);
    const int nz = d.dim(z);
    const Arrow first = p.actions[static_cast<std::size_t>(d.lift(interval(0, ns, nz), z))];
    const Arrow second = p.actions[static_cast<std::size_t>(d.lift(interval(ns, nz - ns, nz), z))];
    f.set_colax(s, t, pair(b, first, second));
  }
  return f;
}

PresheafMap to_presheaf(const diagram::Icon& s, const std::shared_ptr<const DeltaX>& d) {
  PresheafMap t{to_presheaf(s.src, d), to_presheaf(s.dst, d), {}};
  const Groupement& g = s.src.groupement();
  for (int o = 0; o < d->object_count(); ++o) {
    t.comp.push_back(d->dim(o) == 0 ? s.src.base().identity(s.src.base().terminal())
                                     : s.component(*g.find_chain(d->sequence(o))));
  }
  return t;
}

diagram::Icon from_presheaf(const PresheafMap& t, const std::shared_ptr<const Groupement>& g) {
  diagram::Icon s(from_presheaf(t.src, g), from_presheaf(t.dst, g));
  const DeltaX& d = *t.src.shape;
  for (int c = 0; c < g->one_cell_count(); ++c) {
    if (s.src.in_scope(c) && !g->is_unit(c)) s.set(c, t.comp[static_cast<std::size_t>(*d.find(g->chain(c)))]);
  }
  return s;
}

ClassicalShape classical_shape(const DeltaX& d) {
  reedy2::ReedyCat r;
  for (int o = 0; o < d.object_count(); ++o) r.add_object(d.name(o), d.dim(o));
  ClassicalShape s;
  s.arrow_of.resize(static_cast<std::size_t>(d.morphism_count()));
  for (int m = 0; m < d.morphism_count(); ++m) {
    const auto& mo = d.morphism(m);
    if (mo.phi.is_identity()) {
      s.arrow_of[static_cast<std::size_t>(m)] = r.cat.identity(mo.dst);
      continue;
    }
    const CellClass c = mo.phi.injective() ? CellClass::Direct : mo.phi.surjective() ? CellClass::Inverse : CellClass::Mixed;
    s.arrow_of[static_cast<std::size_t>(m)] = r.add_arrow(mo.src, mo.dst, d.morphism_name(m), c);
  }
  for (int g = 0; g < d.morphism_count(); ++g) {
    if (d.morphism(g).phi.is_identity()) continue;
    for (int f : d.into(d.morphism(g).src)) {
      if (d.morphism(f).phi.is_identity()) continue;
      r.cat.set_compose(s.arrow_of[static_cast<std::size_t>(f)], s.arrow_of[static_cast<std::size_t>(g)],
                        s.arrow_of[static_cast<std::size_t>(d.compose(f, g))]);
    }
  }
  s.cat = std::make_shared<const reedy2::ReedyCat>(r.opposite());
  return s;
}

homotopy::classical::Functor to_classical(const UnitalPresheaf& p, const ClassicalShape& s) {
  homotopy::classical::Functor f(s.cat, p.base);
  f.values = p.values;
  for (std::size_t m = 0; m < p.actions.size(); ++m) f.actions[static_cast<std::size_t>(s.arrow_of[m])] = p.actions[m];
  return f;
}

homotopy::classical::NatTrans to_classical(const PresheafMap& t, const ClassicalShape& s) {
  return {to_classical(t.src, s), to_classical(t.dst, s), t.comp};
}

Report check_segal_conditions(const diagram::ColaxDiagram& f) {
  const Groupement& g = f.groupement();
  const Base& b = f.base();
  Report r("segal conditions");
  for (int z = 0; z < g.one_cell_count(); ++z) {
    if (!f.in_scope(z) || g.degree(z) < 2) continue;
    std::vector<int> finest;
    for (auto& parts : g.decompositions(z)) {
      if (parts.size() > finest.size()) finest = parts;
    }
    const Arrow m = f.iterated_colax(finest);
    r.record("segal", g.one_cell(z).name, b.we(m),
             "total colaxity " + std::to_string(m.src.n) + " -> " + std::to_string(m.dst.n) + " is not a weak equivalence");
  }
  return r;
}

}  // namespace colax::segal
