#include "colax/diagram/colax_diagram.hpp"

#include <algorithm>

#include "colax/error.hpp"

namespace colax::diagram {

namespace {

std::string cn(const Groupement& g, int c) { return g.one_cell(c).name; }
std::string tn(const Groupement& g, int a) { return g.two_cell(a).name; }

bool same_base(const Base& a, const Base& b) { return a.kind() == b.kind() && a.prime() == b.prime(); }

}  // namespace

ColaxDiagram::ColaxDiagram(std::shared_ptr<const Groupement> g, Base base, int level)
    : g_(std::move(g)), base_(std::move(base)), level_(level) {
  if (level_ < 0 || level_ > g_->bound()) throw TruncationError("diagram level outside the groupement bound");
  val1_.assign(static_cast<std::size_t>(g_->one_cell_count()), std::nullopt);
  val2_.assign(static_cast<std::size_t>(g_->two_cell_count()), std::nullopt);
}

bool ColaxDiagram::in_scope2(int a) const {
  return in_scope(g_->two_cell(a).src) && in_scope(g_->two_cell(a).dst);
}

void ColaxDiagram::set_value(int cell, Object o) {
  if (!in_scope(cell)) throw TruncationError("value for " + cn(*g_, cell) + " beyond the diagram level");
  if (o.kind != base_.kind()) throw DomainError("value of the wrong base kind");
  if (g_->is_unit(cell)) {
    if (o != base_.unit()) throw DomainError("unit 1-cell " + cn(*g_, cell) + " must take the monoidal unit");
    return;
  }
  val1_[static_cast<std::size_t>(cell)] = o;
}

void ColaxDiagram::set_action(int a, Arrow f) {
  if (!in_scope2(a)) throw TruncationError("action for " + tn(*g_, a) + " beyond the diagram level");
  if (g_->is_identity2(a)) {
    if (f.src != f.dst || f != base_.identity(f.src)) throw DomainError("identity 2-cell " + tn(*g_, a) + " must act by an identity");
    return;
  }
  val2_[static_cast<std::size_t>(a)] = std::move(f);
}

void ColaxDiagram::set_colax(int s, int t, Arrow f) {
  auto st = g_->hcomp1(s, t);
  if (!st || !in_scope(*st)) throw TruncationError("colaxity for " + cn(*g_, s) + " ⊗ " + cn(*g_, t) + " beyond the diagram level");
  if (g_->is_unit(s) || g_->is_unit(t)) {
    if (f != base_.identity(f.src)) throw DomainError("colaxity with a unit factor must be an identity");
    return;
  }
  colax_[{s, t}] = std::move(f);
}

bool ColaxDiagram::has_value(int cell) const {
  return in_scope(cell) && (g_->is_unit(cell) || val1_[static_cast<std::size_t>(cell)].has_value());
}

bool ColaxDiagram::has_action(int a) const {
  return in_scope2(a) && (g_->is_identity2(a) || val2_[static_cast<std::size_t>(a)].has_value());
}

bool ColaxDiagram::has_colax(int s, int t) const {
  auto st = g_->hcomp1(s, t);
  if (!st || !in_scope(*st)) return false;
  return g_->is_unit(s) || g_->is_unit(t) || colax_.count({s, t}) > 0;
}

Object ColaxDiagram::value(int cell) const {
  if (!in_scope(cell)) throw TruncationError("no value for " + cn(*g_, cell) + " beyond level " + std::to_string(level_));
  if (g_->is_unit(cell)) return base_.unit();
  const auto& v = val1_[static_cast<std::size_t>(cell)];
  if (!v) throw DomainError("missing value for " + cn(*g_, cell));
  return *v;
}

Arrow ColaxDiagram::action(int a) const {
  if (!in_scope2(a)) throw TruncationError("no action for " + tn(*g_, a) + " beyond level " + std::to_string(level_));
  if (g_->is_identity2(a)) return base_.identity(value(g_->two_cell(a).src));
  const auto& v = val2_[static_cast<std::size_t>(a)];
  if (!v) throw DomainError("missing action for " + tn(*g_, a));
  return *v;
}

Arrow ColaxDiagram::colax(int s, int t) const {
  auto st = g_->hcomp1(s, t);
  if (!st) throw TruncationError("no composite " + cn(*g_, s) + " ⊗ " + cn(*g_, t));
  if (g_->is_unit(s) || g_->is_unit(t)) return base_.identity(value(*st));
  if (!in_scope(*st)) throw TruncationError("no colaxity for " + cn(*g_, s) + " ⊗ " + cn(*g_, t) + " beyond the level");
  auto it = colax_.find({s, t});
  if (it == colax_.end()) throw DomainError("missing colaxity for " + cn(*g_, s) + " ⊗ " + cn(*g_, t));
  return it->second;
}

Arrow ColaxDiagram::iterated_colax(const std::vector<int>& parts) const {
  if (parts.empty()) throw DomainError("iterated_colax: empty decomposition");
  if (parts.size() == 1) return base_.identity(value(parts.front()));
  const std::vector<int> rest(parts.begin() + 1, parts.end());
  auto r = g_->hcomp1(rest);
  if (!r) throw TruncationError("iterated_colax: decomposition outside the bound");
  const Arrow head = colax(parts.front(), *r);
  const Arrow tail = base_.tensor(base_.identity(value(parts.front())), iterated_colax(rest));
  return base_.compose(head, tail);
}

Object ColaxDiagram::tensor_values(const std::vector<int>& parts) const {
  Object o = base_.unit();
  for (int p : parts) o = base_.tensor(o, value(p));
  return o;
}

std::vector<std::pair<int, int>> ColaxDiagram::colax_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int z = 0; z < g_->one_cell_count(); ++z) {
    if (!in_scope(z)) continue;
    for (const auto& st : g_->splits(z)) out.push_back(st);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool operator==(const ColaxDiagram& a, const ColaxDiagram& b) {
  const bool same_g = a.g_ == b.g_ || a.g_->name() == b.g_->name();
  return same_g && same_base(a.base_, b.base_) && a.level_ == b.level_ && a.val1_ == b.val1_ && a.val2_ == b.val2_ &&
         a.colax_ == b.colax_;
}

Icon::Icon(ColaxDiagram s, ColaxDiagram d) : src(std::move(s)), dst(std::move(d)) {
  if (src.groupement_ptr() != dst.groupement_ptr() && src.groupement().name() != dst.groupement().name()) {
    throw DomainError("icon between diagrams on different groupements");
  }
  if (!same_base(src.base(), dst.base())) throw DomainError("icon between diagrams in different bases");
  if (src.level() != dst.level()) throw DomainError("icon between diagrams of different levels");
  comp.assign(static_cast<std::size_t>(src.groupement().one_cell_count()), std::nullopt);
}

void Icon::set(int cell, Arrow a) {
  if (!src.in_scope(cell)) throw TruncationError("icon component beyond the level");
  if (src.groupement().is_unit(cell)) {
    if (a != src.base().identity(src.base().unit())) throw DomainError("icon component at a unit must be the identity");
    return;
  }
  comp[static_cast<std::size_t>(cell)] = std::move(a);
}

bool Icon::has(int cell) const {
  return src.in_scope(cell) && (src.groupement().is_unit(cell) || comp[static_cast<std::size_t>(cell)].has_value());
}

Arrow Icon::component(int cell) const {
  if (src.groupement().is_unit(cell)) return src.base().identity(src.base().unit());
  const auto& c = comp[static_cast<std::size_t>(cell)];
  if (!c) throw DomainError("missing icon component at " + src.groupement().one_cell(cell).name);
  return *c;
}

Icon Icon::identity(const ColaxDiagram& f) {
  Icon s(f, f);
  for (int z = 0; z < f.groupement().one_cell_count(); ++z) {
    if (f.in_scope(z) && !f.groupement().is_unit(z)) s.set(z, f.base().identity(f.value(z)));
  }
  return s;
}

namespace {

int top_degree(const Groupement& g, std::initializer_list<int> cells) {
  int d = 0;
  for (int c : cells) d = std::max(d, g.degree(c));
  return d;
}

}  // namespace

Report validate_colax(const ColaxDiagram& f, int from_degree) {
  Report r("validate_colax");
  const Groupement& g = f.groupement();
  const Base& b = f.base();

  // presence and endpoints
  for (int z = 0; z < g.one_cell_count(); ++z) {
    if (!f.in_scope(z) || g.degree(z) < from_degree) continue;
    if (!f.has_value(z)) r.fail("presence", "no value at " + cn(g, z));
  }
  if (!r.ok()) return r;
  for (int a = 0; a < g.two_cell_count(); ++a) {
    if (!f.in_scope2(a)) continue;
    const auto& t = g.two_cell(a);
    if (top_degree(g, {t.src, t.dst}) < from_degree) continue;
    if (!f.has_action(a)) {
      r.fail("presence", "no action for " + tn(g, a));
      continue;
    }
    const Arrow x = f.action(a);
    if (x.src != f.value(t.src) || x.dst != f.value(t.dst)) r.fail("endpoints", "action of " + tn(g, a) + " has wrong endpoints");
  }
  for (const auto& [s, t] : f.colax_pairs()) {
    const int st = *g.hcomp1(s, t);
    if (g.degree(st) < from_degree) continue;
    if (!f.has_colax(s, t)) {
      r.fail("presence", "no colaxity for " + cn(g, s) + " ⊗ " + cn(g, t));
      continue;
    }
    const Arrow x = f.colax(s, t);
    if (x.src != f.value(st) || x.dst != b.tensor(f.value(s), f.value(t))) {
      r.fail("endpoints", "colaxity " + cn(g, s) + " ⊗ " + cn(g, t) + " has wrong endpoints");
    }
  }
  if (!r.ok()) return r;
  r.pass("normality");

  // functoriality
  for (int a = 0; a < g.two_cell_count(); ++a) {
    if (!f.in_scope2(a) || g.is_identity2(a)) continue;
    for (int c : g.out_of(g.two_cell(a).dst)) {
      if (!f.in_scope2(c) || g.is_identity2(c)) continue;
      if (top_degree(g, {g.two_cell(a).src, g.two_cell(a).dst, g.two_cell(c).dst}) < from_degree) continue;
      auto ac = g.vcomp(a, c);
      if (!ac) continue;
      if (f.action(*ac) != b.compose(f.action(a), f.action(c))) {
        r.fail("functoriality", "F(" + tn(g, c) + " ∘ " + tn(g, a) + ") != F(" + tn(g, c) + ") ∘ F(" + tn(g, a) + ")");
      }
    }
  }

  // naturality of colaxity
  for (const auto& [a, bb, c] : g.hcomp2_entries()) {
    if (!f.in_scope2(c)) continue;
    const auto& tc = g.two_cell(c);
    if (top_degree(g, {tc.src, tc.dst}) < from_degree) continue;
    const int s = g.two_cell(a).src;
    const int t = g.two_cell(bb).src;
    const int s2 = g.two_cell(a).dst;
    const int t2 = g.two_cell(bb).dst;
    const Arrow lhs = b.compose(f.colax(s, t), b.tensor(f.action(a), f.action(bb)));
    const Arrow rhs = b.compose(f.action(c), f.colax(s2, t2));
    if (lhs != rhs) r.fail("naturality", "square at " + tn(g, a) + " ⊗ " + tn(g, bb));
  }

  // coassociativity
  for (const auto& [p, u] : f.colax_pairs()) {
    const int w = *g.hcomp1(p, u);
    if (g.degree(w) < from_degree) continue;
    for (const auto& [s, t] : g.splits(p)) {
      auto tu = g.hcomp1(t, u);
      if (!tu) continue;
      const Arrow lhs = b.compose(f.colax(p, u), b.tensor(f.colax(s, t), b.identity(f.value(u))));
      const Arrow rhs = b.compose(f.colax(s, *tu), b.tensor(b.identity(f.value(s)), f.colax(t, u)));
      if (lhs != rhs) r.fail("coassociativity", cn(g, s) + " ⊗ " + cn(g, t) + " ⊗ " + cn(g, u));
    }
  }
  if (r.ok()) r.pass("colax-coherence");
  return r;
}

Report validate_icon(const Icon& s, int from_degree) {
  Report r("validate_icon");
  const ColaxDiagram& f = s.src;
  const ColaxDiagram& h = s.dst;
  const Groupement& g = f.groupement();
  const Base& b = f.base();
  for (int z = 0; z < g.one_cell_count(); ++z) {
    if (!f.in_scope(z) || g.degree(z) < from_degree) continue;
    if (!s.has(z)) {
      r.fail("presence", "no component at " + cn(g, z));
      continue;
    }
    const Arrow c = s.component(z);
    if (c.src != f.value(z) || c.dst != h.value(z)) r.fail("endpoints", "component at " + cn(g, z));
  }
  if (!r.ok()) return r;
  for (int a = 0; a < g.two_cell_count(); ++a) {
    if (!f.in_scope2(a) || g.is_identity2(a)) continue;
    const auto& t = g.two_cell(a);
    if (top_degree(g, {t.src, t.dst}) < from_degree) continue;
    if (b.compose(f.action(a), s.component(t.dst)) != b.compose(s.component(t.src), h.action(a))) {
      r.fail("icon-naturality", "square at " + tn(g, a));
    }
  }
  for (const auto& [x, y] : f.colax_pairs()) {
    const int xy = *g.hcomp1(x, y);
    if (g.degree(xy) < from_degree) continue;
    const Arrow lhs = b.compose(f.colax(x, y), b.tensor(s.component(x), s.component(y)));
    const Arrow rhs = b.compose(s.component(xy), h.colax(x, y));
    if (lhs != rhs) r.fail("icon-colaxity", "at " + cn(g, x) + " ⊗ " + cn(g, y));
  }
  if (r.ok()) r.pass("icon");
  return r;
}

ColaxDiagram truncate(const ColaxDiagram& f, int k) {
  if (k > f.level()) throw TruncationError("truncate: level " + std::to_string(k) + " above " + std::to_string(f.level()));
  if (k < 0) throw TruncationError("truncate: negative level");
  ColaxDiagram out(f.groupement_ptr(), f.base(), k);
  const Groupement& g = f.groupement();
  for (int z = 0; z < g.one_cell_count(); ++z) {
    if (out.in_scope(z) && !g.is_unit(z) && f.has_value(z)) out.set_value(z, f.value(z));
  }
  for (int a = 0; a < g.two_cell_count(); ++a) {
    if (out.in_scope2(a) && !g.is_identity2(a) && f.has_action(a)) out.set_action(a, f.action(a));
  }
  for (const auto& [st, x] : f.colax_table()) {
    if (out.in_scope(*g.hcomp1(st.first, st.second))) out.set_colax(st.first, st.second, x);
  }
  return out;
}

Icon truncate(const Icon& s, int k) {
  Icon out(truncate(s.src, k), truncate(s.dst, k));
  const Groupement& g = s.src.groupement();
  for (int z = 0; z < g.one_cell_count(); ++z) {
    if (out.src.in_scope(z) && !g.is_unit(z) && s.has(z)) out.set(z, s.component(z));
  }
  return out;
}

Report extend_check(const ColaxDiagram& f, const ColaxDiagram& candidate) {
  Report r("extend_check");
  if (candidate.level() != f.level() + 1) {
    r.fail("level", "candidate level " + std::to_string(candidate.level()) + " is not " + std::to_string(f.level() + 1));
    return r;
  }
  if (!(truncate(candidate, f.level()) == f)) {
    r.fail("restriction", "candidate does not restrict to the given truncation");
    return r;
  }
  r.merge(validate_colax(candidate, candidate.level()));
  return r;
}

Icon compose(const Icon& tau, const Icon& sigma) {
  if (!(tau.dst == sigma.src)) throw EndpointError("icon compose: middle diagrams differ");
  Icon out(tau.src, sigma.dst);
  const Groupement& g = tau.src.groupement();
  for (int z = 0; z < g.one_cell_count(); ++z) {
    if (!out.src.in_scope(z) || g.is_unit(z)) continue;
    out.set(z, tau.src.base().compose(tau.component(z), sigma.component(z)));
  }
  return out;
}

ColaxDiagram constant_unit(std::shared_ptr<const Groupement> g, const Base& base, int level) {
  ColaxDiagram f(std::move(g), base, level);
  const Groupement& gr = f.groupement();
  const Arrow id = base.identity(base.unit());
  for (int z = 0; z < gr.one_cell_count(); ++z)
    if (f.in_scope(z) && !gr.is_unit(z)) f.set_value(z, base.unit());
  for (int a = 0; a < gr.two_cell_count(); ++a)
    if (f.in_scope2(a) && !gr.is_identity2(a)) f.set_action(a, id);
  for (const auto& [s, t] : f.colax_pairs()) f.set_colax(s, t, id);
  return f;
}

}  // namespace colax::diagram
