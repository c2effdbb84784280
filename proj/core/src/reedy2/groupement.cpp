#include "colax/reedy2/groupement.hpp"

#include <algorithm>
#include <set>

#include "colax/error.hpp"

namespace colax::reedy2 {

int Groupement::add_object(const std::string& name) {
  const int o = static_cast<int>(objects_.size());
  objects_.push_back(name);
  units_.push_back(add_one_cell(o, o, 0, name));
  return o;
}

int Groupement::add_one_cell(int a, int b, int degree, std::string name) {
  if (degree > bound_) throw TruncationError("1-cell '" + name + "' exceeds the bound");
  const int c = static_cast<int>(cells_.size());
  cells_.push_back({a, b, degree, name});
  two_.push_back({c, c, CellClass::Identity, "id[" + name + "]"});
  identity2_.push_back(static_cast<int>(two_.size()) - 1);
  return c;
}

int Groupement::add_two_cell(int src, int dst, CellClass cls, std::string name) {
  if (one_cell(src).src != one_cell(dst).src || one_cell(src).dst != one_cell(dst).dst) {
    throw EndpointError("2-cell '" + name + "' joins 1-cells of different homs");
  }
  two_.push_back({src, dst, cls, std::move(name)});
  return static_cast<int>(two_.size()) - 1;
}

void Groupement::set_vcomp(int a, int b, int c) {
  if (two_cell(a).dst != two_cell(b).src) throw EndpointError("set_vcomp: " + two_cell(a).name + " then " + two_cell(b).name);
  if (two_cell(c).src != two_cell(a).src || two_cell(c).dst != two_cell(b).dst) {
    throw EndpointError("set_vcomp: composite " + two_cell(c).name + " has wrong endpoints");
  }
  vcomp_[key(a, b)] = c;
}

void Groupement::set_hcomp1(int s, int t, int u) {
  if (one_cell(s).dst != one_cell(t).src) throw EndpointError("set_hcomp1: " + one_cell(s).name + " ⊗ " + one_cell(t).name);
  hcomp1_[key(s, t)] = u;
}

void Groupement::set_hcomp2(int a, int b, int c) { hcomp2_[key(a, b)] = c; }

void Groupement::erase_hcomp2(int a, int b) { hcomp2_.erase(key(a, b)); }

void Groupement::reclassify(int a, CellClass cls) { two_[static_cast<std::size_t>(a)].cls = cls; }

bool Groupement::is_unit(int cell) const { return units_[static_cast<std::size_t>(one_cell(cell).src)] == cell; }

void Groupement::finalize() {
  const auto n1 = cells_.size();
  const auto n2 = two_.size();
  into_.assign(n1, {});
  out_of_.assign(n1, {});
  splits_.assign(n1, {});
  for (std::size_t a = 0; a < n2; ++a) {
    into_[static_cast<std::size_t>(two_[a].dst)].push_back(static_cast<int>(a));
    out_of_[static_cast<std::size_t>(two_[a].src)].push_back(static_cast<int>(a));
  }
  for (const auto& [k, u] : hcomp1_) {
    const int s = static_cast<int>(k >> 32);
    const int t = static_cast<int>(k & 0xffffffffu);
    if (!is_unit(s) && !is_unit(t)) splits_[static_cast<std::size_t>(u)].emplace_back(s, t);
  }
  for (auto& v : splits_) std::sort(v.begin(), v.end());

  factor_.assign(n2, {-1, -1});
  for (std::size_t u = 0; u < n2; ++u) {
    bool found = false;
    for (int i : out_of_[static_cast<std::size_t>(two_[u].src)]) {
      if (!inverse_or_identity(i)) continue;
      for (int d : out_of_[static_cast<std::size_t>(two_cell(i).dst)]) {
        if (two_cell(d).dst != two_[u].dst || !direct_or_identity(d)) continue;
        if (vcomp(i, d) == static_cast<int>(u)) {
          factor_[u] = {i, d};
          found = true;
          break;
        }
      }
      if (found) break;
    }
  }

  lifts_.clear();
  hcomp2_sorted_.clear();
  for (const auto& [k, c] : hcomp2_) {
    const int a = static_cast<int>(k >> 32);
    const int b = static_cast<int>(k & 0xffffffffu);
    hcomp2_sorted_.emplace_back(a, b, c);
    if (direct_or_identity(a) && direct_or_identity(b)) {
      lifts_[{c, two_cell(a).dst, two_cell(b).dst}].emplace_back(a, b);
    }
  }
  for (auto& [k, v] : lifts_) std::sort(v.begin(), v.end());
  std::sort(hcomp2_sorted_.begin(), hcomp2_sorted_.end());

  cell_by_name_.clear();
  two_by_name_.clear();
  for (std::size_t c = 0; c < n1; ++c) cell_by_name_.emplace(cells_[c].name, static_cast<int>(c));
  for (std::size_t a = 0; a < n2; ++a) two_by_name_.emplace(two_[a].name, static_cast<int>(a));
}

std::optional<int> Groupement::find_object(const std::string& name) const {
  for (int i = 0; i < object_count(); ++i)
    if (objects_[static_cast<std::size_t>(i)] == name) return i;
  return std::nullopt;
}

std::optional<int> Groupement::find_one_cell(const std::string& name) const {
  auto it = cell_by_name_.find(name);
  if (it == cell_by_name_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> Groupement::find_two_cell(const std::string& name) const {
  auto it = two_by_name_.find(name);
  if (it == two_by_name_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> Groupement::vcomp(int a, int b) const {
  if (two_cell(a).dst != two_cell(b).src) throw EndpointError("vcomp: " + two_cell(a).name + " then " + two_cell(b).name);
  if (is_identity2(a)) return b;
  if (is_identity2(b)) return a;
  auto it = vcomp_.find(key(a, b));
  if (it == vcomp_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> Groupement::hcomp1(int s, int t) const {
  if (one_cell(s).dst != one_cell(t).src) throw EndpointError("hcomp1: " + one_cell(s).name + " ⊗ " + one_cell(t).name);
  if (is_unit(s)) return t;
  if (is_unit(t)) return s;
  auto it = hcomp1_.find(key(s, t));
  if (it == hcomp1_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> Groupement::hcomp2(int a, int b) const {
  const int s = two_cell(a).src;
  const int t = two_cell(b).src;
  if (one_cell(s).dst != one_cell(t).src) throw EndpointError("hcomp2: " + two_cell(a).name + " ⊗ " + two_cell(b).name);
  if (is_unit(s) && a == identity2(s)) return b;
  if (is_unit(t) && b == identity2(t)) return a;
  auto it = hcomp2_.find(key(a, b));
  if (it == hcomp2_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> Groupement::hcomp1(const std::vector<int>& cells) const {
  if (cells.empty()) throw DomainError("hcomp1: empty list");
  std::optional<int> acc = cells.front();
  for (std::size_t i = 1; i < cells.size() && acc; ++i) acc = hcomp1(*acc, cells[i]);
  return acc;
}

std::optional<int> Groupement::hcomp2(const std::vector<int>& cells) const {
  if (cells.empty()) throw DomainError("hcomp2: empty list");
  std::optional<int> acc = cells.front();
  for (std::size_t i = 1; i < cells.size() && acc; ++i) acc = hcomp2(*acc, cells[i]);
  return acc;
}

std::vector<int> Groupement::between(int x, int y) const {
  std::vector<int> out;
  for (int a : out_of(x))
    if (two_cell(a).dst == y) out.push_back(a);
  return out;
}

std::vector<std::vector<int>> Groupement::decompositions(int z) const {
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> out;
  auto rec = [&](auto&& self, int cell) -> std::vector<std::vector<int>> {
    std::vector<std::vector<int>> res{{cell}};
    for (const auto& [s, t] : splits(cell)) {
      for (auto& rest : self(self, t)) {
        std::vector<int> d{s};
        d.insert(d.end(), rest.begin(), rest.end());
        res.push_back(std::move(d));
      }
    }
    return res;
  };
  for (auto& d : rec(rec, z)) {
    if (seen.insert(d).second) out.push_back(std::move(d));
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::vector<int> Groupement::hom_cells(int a, int b) const {
  std::vector<int> out;
  for (int c = 0; c < one_cell_count(); ++c)
    if (one_cell(c).src == a && one_cell(c).dst == b) out.push_back(c);
  return out;
}

std::pair<int, int> Groupement::reedy_factor(int u) const {
  const auto& f = factor_[static_cast<std::size_t>(u)];
  if (f.first < 0) throw DomainError("2-cell " + two_cell(u).name + " has no Reedy factorization");
  return f;
}

std::vector<std::pair<int, int>> Groupement::direct_lifts(int alpha, int s2, int t2) const {
  auto it = lifts_.find({alpha, s2, t2});
  if (it == lifts_.end()) return {};
  return it->second;
}

std::pair<int, int> Groupement::split(int alpha, int s2, int t2) const {
  auto l = direct_lifts(alpha, s2, t2);
  if (l.size() != 1) {
    throw ConsistencyError("direct 2-cell " + two_cell(alpha).name + " has " + std::to_string(l.size()) +
                           " lifts along " + one_cell(s2).name + " ⊗ " + one_cell(t2).name);
  }
  return l.front();
}

std::vector<int> Groupement::split(int alpha, const std::vector<int>& parts) const {
  if (parts.empty()) throw DomainError("split: empty decomposition");
  std::vector<int> out;
  int rest = alpha;
  for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
    std::vector<int> tail(parts.begin() + static_cast<std::ptrdiff_t>(i) + 1, parts.end());
    auto t = hcomp1(tail);
    if (!t) throw TruncationError("split: tail of the decomposition is outside the bound");
    auto [b1, b2] = split(rest, parts[i], *t);
    out.push_back(b1);
    rest = b2;
  }
  out.push_back(rest);
  return out;
}

std::optional<int> Groupement::find_chain(const std::vector<int>& chain) const {
  auto it = cell_by_chain_.find(chain);
  if (it == cell_by_chain_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> Groupement::find_labelled(int src, const Monotone& phi) const {
  auto it = two_by_label_.find({src, phi});
  if (it == two_by_label_.end()) return std::nullopt;
  return it->second;
}

void Groupement::set_labels(std::vector<std::vector<int>> chains, std::vector<Monotone> labels) {
  chains_ = std::move(chains);
  labels_ = std::move(labels);
  cell_by_chain_.clear();
  two_by_label_.clear();
  for (std::size_t c = 0; c < chains_.size(); ++c) cell_by_chain_[chains_[c]] = static_cast<int>(c);
  for (std::size_t a = 0; a < labels_.size(); ++a) two_by_label_[{two_[a].src, labels_[a]}] = static_cast<int>(a);
}

namespace {

std::string join_chain(const std::vector<int>& chain, const std::vector<std::string>& x) {
  std::string s;
  for (std::size_t i = 0; i < chain.size(); ++i) s += (i ? "." : "") + x[static_cast<std::size_t>(chain[i])];
  return s;
}

CellClass classify_map(const Monotone& phi) {
  if (phi.is_identity()) return CellClass::Identity;
  if (phi.injective()) return CellClass::Direct;
  if (phi.surjective()) return CellClass::Inverse;
  return CellClass::Mixed;
}

// Shared builder: Δ⁺ is the chain groupement on a single object.
Groupement build_chains(const std::string& name, const std::vector<std::string>& x, int m, bool delta_names) {
  if (m < 0) throw DomainError("bound must be nonnegative");
  if (x.empty()) throw DomainError("chain groupement needs at least one object");
  Groupement g(name, m);
  std::vector<std::vector<int>> chains;
  for (std::size_t i = 0; i < x.size(); ++i) {
    g.add_object(x[i]);
    chains.push_back({static_cast<int>(i)});
  }
  std::map<std::vector<int>, int> by_chain;
  for (std::size_t i = 0; i < x.size(); ++i) by_chain[{static_cast<int>(i)}] = g.unit(static_cast<int>(i));
  const int k = static_cast<int>(x.size());
  for (int n = 1; n <= m; ++n) {
    std::vector<int> chain(static_cast<std::size_t>(n + 1), 0);
    auto rec = [&](auto&& self, int pos) -> void {
      if (pos == n + 1) {
        const std::string cname = delta_names ? std::to_string(n) : join_chain(chain, x);
        const int c = g.add_one_cell(chain.front(), chain.back(), n, cname);
        chains.push_back(chain);
        by_chain[chain] = c;
        return;
      }
      for (int v = 0; v < k; ++v) {
        chain[static_cast<std::size_t>(pos)] = v;
        self(self, pos + 1);
      }
    };
    rec(rec, 0);
  }
  const int cells = g.one_cell_count();
  std::vector<Monotone> labels;
  for (int c = 0; c < cells; ++c) labels.push_back(Monotone::identity(g.degree(c)));
  std::map<std::pair<int, Monotone>, int> by_label;
  for (int c = 0; c < cells; ++c) by_label[{c, labels[static_cast<std::size_t>(g.identity2(c))]}] = g.identity2(c);

  for (int c = 0; c < cells; ++c) {
    const auto& src = chains[static_cast<std::size_t>(c)];
    const int n = g.degree(c);
    for (int kk = 0; kk <= m; ++kk) {
      for (auto& phi : all_monotone(n, kk)) {
        if (phi.is_identity()) continue;
        const Monotone psi = joyal_dual(phi);
        std::vector<int> dst(static_cast<std::size_t>(kk + 1));
        for (int j = 0; j <= kk; ++j) dst[static_cast<std::size_t>(j)] = src[static_cast<std::size_t>(psi(j))];
        const int d = by_chain.at(dst);
        const std::string aname = delta_names ? phi.str() : g.one_cell(c).name + "|" + phi.str();
        const int a = g.add_two_cell(c, d, classify_map(phi), aname);
        labels.push_back(phi);
        by_label[{c, phi}] = a;
      }
    }
  }

  const int twos = g.two_cell_count();
  std::vector<std::vector<int>> out_of(static_cast<std::size_t>(cells));
  for (int a = 0; a < twos; ++a) out_of[static_cast<std::size_t>(g.two_cell(a).src)].push_back(a);
  for (int a = 0; a < twos; ++a) {
    const auto& ta = g.two_cell(a);
    for (int b : out_of[static_cast<std::size_t>(ta.dst)]) {
      if (g.is_identity2(a) || g.is_identity2(b)) continue;
      const Monotone comp = compose(labels[static_cast<std::size_t>(a)], labels[static_cast<std::size_t>(b)]);
      g.set_vcomp(a, b, by_label.at({ta.src, comp}));
    }
  }

  for (int s = 0; s < cells; ++s) {
    for (int t = 0; t < cells; ++t) {
      const auto& cs = chains[static_cast<std::size_t>(s)];
      const auto& ct = chains[static_cast<std::size_t>(t)];
      if (cs.back() != ct.front()) continue;
      if (g.degree(s) == 0 || g.degree(t) == 0) continue;
      if (g.degree(s) + g.degree(t) > m) continue;
      std::vector<int> cat(cs);
      cat.insert(cat.end(), ct.begin() + 1, ct.end());
      g.set_hcomp1(s, t, by_chain.at(cat));
    }
  }

  // Horizontal composites of 2-cells; only identities of units are implicit.
  std::vector<std::vector<int>> by_src_obj(static_cast<std::size_t>(k));
  for (int a = 0; a < twos; ++a) by_src_obj[static_cast<std::size_t>(g.one_cell(g.two_cell(a).src).src)].push_back(a);
  for (int a = 0; a < twos; ++a) {
    const auto& ta = g.two_cell(a);
    const bool a_unit_id = g.is_unit(ta.src) && g.is_identity2(a);
    for (int b : by_src_obj[static_cast<std::size_t>(g.one_cell(ta.src).dst)]) {
      const auto& tb = g.two_cell(b);
      const bool b_unit_id = g.is_unit(tb.src) && g.is_identity2(b);
      if (a_unit_id || b_unit_id) continue;
      if (g.degree(ta.src) + g.degree(tb.src) > m || g.degree(ta.dst) + g.degree(tb.dst) > m) continue;
      const auto& cs = chains[static_cast<std::size_t>(ta.src)];
      const auto& ct = chains[static_cast<std::size_t>(tb.src)];
      std::vector<int> cat(cs);
      cat.insert(cat.end(), ct.begin() + 1, ct.end());
      const int src = by_chain.at(cat);
      const Monotone sum = ordinal_sum(labels[static_cast<std::size_t>(a)], labels[static_cast<std::size_t>(b)]);
      g.set_hcomp2(a, b, by_label.at({src, sum}));
    }
  }

  g.set_labels(std::move(chains), std::move(labels));
  g.finalize();
  return g;
}

}  // namespace

Groupement build_delta_plus(int m) {
  if (m > 9) throw DomainError("delta_plus: bound above 9 is not supported");
  return build_chains("delta_plus(" + std::to_string(m) + ")", {"0"}, m, true);
}

Groupement build_px(const std::vector<std::string>& x, int m) {
  std::set<std::string> uniq(x.begin(), x.end());
  if (uniq.size() != x.size()) throw DomainError("px: repeated object name");
  for (const auto& s : x) {
    if (s.empty() || s.find_first_of(".|> ") != std::string::npos) throw DomainError("px: invalid object name '" + s + "'");
  }
  std::string name = "px(";
  for (std::size_t i = 0; i < x.size(); ++i) name += (i ? "," : "") + x[i];
  return build_chains(name + ";" + std::to_string(m) + ")", x, m, false);
}

Groupement build_from_reedy1(const ReedyCat& b) {
  int bound = 0;
  for (int d : b.degree) bound = std::max(bound, d);
  Groupement g("reedy1", bound);
  const int o0 = g.add_object("0");
  const int o1 = g.add_object("1");
  std::vector<int> cell_of(static_cast<std::size_t>(b.cat.object_count()));
  for (int o = 0; o < b.cat.object_count(); ++o) {
    cell_of[static_cast<std::size_t>(o)] = g.add_one_cell(o0, o1, b.degree[static_cast<std::size_t>(o)], b.cat.object_name(o));
  }
  std::vector<int> two_of(static_cast<std::size_t>(b.cat.arrow_count()));
  for (int a = 0; a < b.cat.arrow_count(); ++a) {
    const auto& ar = b.cat.arrow(a);
    if (b.cat.is_identity(a)) {
      two_of[static_cast<std::size_t>(a)] = g.identity2(cell_of[static_cast<std::size_t>(ar.src)]);
    } else {
      two_of[static_cast<std::size_t>(a)] = g.add_two_cell(cell_of[static_cast<std::size_t>(ar.src)],
                                                          cell_of[static_cast<std::size_t>(ar.dst)],
                                                          b.cls[static_cast<std::size_t>(a)], ar.name);
    }
  }
  for (int f = 0; f < b.cat.arrow_count(); ++f) {
    if (b.cat.is_identity(f)) continue;
    for (int h : b.cat.out_of(b.cat.arrow(f).dst)) {
      if (b.cat.is_identity(h)) continue;
      if (auto c = b.cat.try_compose(f, h)) {
        g.set_vcomp(two_of[static_cast<std::size_t>(f)], two_of[static_cast<std::size_t>(h)], two_of[static_cast<std::size_t>(*c)]);
      }
    }
  }
  g.finalize();
  return g;
}

namespace {

std::string cname(const Groupement& g, int c) { return g.one_cell(c).name; }
std::string tname(const Groupement& g, int a) { return g.two_cell(a).name; }

}  // namespace

Report validate_simple_lr(const Groupement& g) {
  Report r("validate_simple_lr " + g.name());
  const int n1 = g.one_cell_count();
  const int n2 = g.two_cell_count();

  // Per-hom category laws.
  for (int a = 0; a < n2; ++a) {
    for (int b : g.out_of(g.two_cell(a).dst)) {
      auto ab = g.vcomp(a, b);
      if (!ab) {
        r.fail("vertical-closure", tname(g, a) + " then " + tname(g, b) + " has no composite");
        continue;
      }
      for (int c : g.out_of(g.two_cell(b).dst)) {
        auto bc = g.vcomp(b, c);
        if (!bc) continue;
        auto l = g.vcomp(*ab, c);
        auto rr = g.vcomp(a, *bc);
        if (l != rr) r.fail("vertical-associativity", tname(g, a) + ", " + tname(g, b) + ", " + tname(g, c));
      }
    }
  }

  // Reedy structure of each hom.
  for (int a = 0; a < n2; ++a) {
    const auto& t = g.two_cell(a);
    const bool is_id = g.identity2(t.src) == a;
    if ((t.cls == CellClass::Identity) != is_id) {
      r.fail("identity-class", tname(g, a) + " is classified " + class_name(t.cls));
    }
    const int ds = g.degree(t.src);
    const int dt = g.degree(t.dst);
    if (t.cls == CellClass::Direct && !(dt > ds)) {
      r.fail("reedy-degree", tname(g, a) + " is direct but does not raise degree");
    }
    if (t.cls == CellClass::Inverse && !(dt < ds)) {
      r.fail("reedy-degree", tname(g, a) + " is inverse but does not lower degree");
    }
    int count = 0;
    for (int i : g.out_of(t.src)) {
      if (!g.inverse_or_identity(i)) continue;
      for (int d : g.between(g.two_cell(i).dst, t.dst)) {
        if (g.direct_or_identity(d) && g.vcomp(i, d) == a) ++count;
      }
    }
    if (count != 1) {
      r.fail("reedy-factorization", tname(g, a) + " has " + std::to_string(count) + " direct∘inverse factorizations");
    }
    if (!is_id) {
      for (int b : g.between(t.dst, t.src)) {
        if (g.vcomp(a, b) == g.identity2(t.src) && g.vcomp(b, a) == g.identity2(t.dst)) {
          r.fail("reedy-isomorphism", tname(g, a) + " is a non-identity isomorphism");
        }
      }
    }
  }

  // Horizontal composition of 1-cells.
  std::vector<std::vector<int>> cells_from(static_cast<std::size_t>(g.object_count()));
  for (int c = 0; c < n1; ++c) cells_from[static_cast<std::size_t>(g.one_cell(c).src)].push_back(c);
  for (int s = 0; s < n1; ++s) {
    if (g.degree(s) > g.bound()) r.fail("bound", cname(g, s) + " exceeds the bound");
    if (g.is_unit(s) && g.degree(s) != 0) r.fail("unit-degree", cname(g, s) + " is a unit of nonzero degree");
    for (int t : cells_from[static_cast<std::size_t>(g.one_cell(s).dst)]) {
      auto u = g.hcomp1(s, t);
      const bool within = g.degree(s) + g.degree(t) <= g.bound();
      if (u.has_value() != within) {
        r.fail("hcomp1-domain", cname(g, s) + " ⊗ " + cname(g, t) + (within ? " missing within bound" : " defined beyond bound"));
        continue;
      }
      if (!u) continue;
      const auto& cu = g.one_cell(*u);
      if (cu.src != g.one_cell(s).src || cu.dst != g.one_cell(t).dst) {
        r.fail("hcomp1-endpoints", cname(g, s) + " ⊗ " + cname(g, t));
      }
      if (cu.degree != g.degree(s) + g.degree(t)) {
        r.fail("simplicity", "deg(" + cname(g, s) + " ⊗ " + cname(g, t) + ") = " + std::to_string(cu.degree));
      }
      for (int w : cells_from[static_cast<std::size_t>(g.one_cell(t).dst)]) {
        if (g.degree(*u) + g.degree(w) > g.bound()) continue;
        auto l = g.hcomp1(*u, w);
        auto tw = g.hcomp1(t, w);
        auto rr = tw ? g.hcomp1(s, *tw) : std::nullopt;
        if (l != rr) r.fail("hcomp1-associativity", cname(g, s) + ", " + cname(g, t) + ", " + cname(g, w));
      }
    }
  }

  // Horizontal composition of 2-cells.
  std::vector<std::vector<int>> twos_from(static_cast<std::size_t>(g.object_count()));
  for (int a = 0; a < n2; ++a) twos_from[static_cast<std::size_t>(g.one_cell(g.two_cell(a).src).src)].push_back(a);
  for (int a = 0; a < n2; ++a) {
    const auto& ta = g.two_cell(a);
    for (int b : twos_from[static_cast<std::size_t>(g.one_cell(ta.src).dst)]) {
      const auto& tb = g.two_cell(b);
      auto src = g.hcomp1(ta.src, tb.src);
      auto dst = g.hcomp1(ta.dst, tb.dst);
      auto c = g.hcomp2(a, b);
      const std::string w = tname(g, a) + " ⊗ " + tname(g, b);
      if (c.has_value() != (src.has_value() && dst.has_value())) {
        r.fail("hcomp2-domain", w + (c ? " defined with an endpoint outside the bound" : " missing"));
        continue;
      }
      if (!c) continue;
      const auto& tc = g.two_cell(*c);
      if (tc.src != *src || tc.dst != *dst) {
        r.fail("hcomp2-endpoints", w + " = " + tname(g, *c));
        continue;
      }
      const bool id_a = g.is_identity2(a);
      const bool id_b = g.is_identity2(b);
      if (id_a && id_b && !g.is_identity2(*c)) r.fail("hcomp2-identity", w + " is not an identity");
      if (g.is_identity2(*c) && !(id_a && id_b)) r.fail("identity-reflection", w + " = identity");
      if (g.direct_or_identity(a) && g.direct_or_identity(b) && !g.direct_or_identity(*c)) {
        r.fail("direct-closure", w + " = " + tname(g, *c) + " is not direct");
      }
      if (g.inverse_or_identity(a) && g.inverse_or_identity(b) && !g.inverse_or_identity(*c)) {
        r.fail("inverse-closure", w + " = " + tname(g, *c) + " is not inverse");
      }
      // interchange
      for (int a2 : g.out_of(ta.dst)) {
        for (int b2 : g.out_of(tb.dst)) {
          if (g.is_identity2(a2) && g.is_identity2(b2)) continue;
          auto top = g.hcomp2(a2, b2);
          auto va = g.vcomp(a, a2);
          auto vb = g.vcomp(b, b2);
          if (!top || !va || !vb) continue;
          auto l = g.vcomp(*c, *top);
          auto rr = g.hcomp2(*va, *vb);
          if (l != rr) {
            r.fail("interchange", "(" + tname(g, a2) + " ⊗ " + tname(g, b2) + ") ∘ (" + w + ")");
          }
        }
      }
      // associativity
      for (int e : twos_from[static_cast<std::size_t>(g.one_cell(tb.src).dst)]) {
        const auto& te = g.two_cell(e);
        if (g.degree(tc.src) + g.degree(te.src) > g.bound() || g.degree(tc.dst) + g.degree(te.dst) > g.bound()) continue;
        auto l = g.hcomp2(*c, e);
        auto be = g.hcomp2(b, e);
        auto rr = be ? g.hcomp2(a, *be) : std::nullopt;
        if (l != rr) r.fail("hcomp2-associativity", w + " ⊗ " + tname(g, e));
      }
    }
  }
  if (r.ok()) r.pass("simple-locally-reedy", g.name());
  return r;
}

Report check_direct_divisibility(const Groupement& g) {
  Report r("check_direct_divisibility " + g.name());
  const int n2 = g.two_cell_count();
  for (int a = 0; a < n2; ++a) {
    if (g.two_cell(a).cls != CellClass::Direct) continue;
    for (const auto& [s2, t2] : g.splits(g.two_cell(a).dst)) {
      const auto lifts = g.direct_lifts(a, s2, t2);
      if (lifts.size() != 1) {
        r.fail("unique-lift", tname(g, a) + " along " + cname(g, s2) + " ⊗ " + cname(g, t2) + ": " +
                                  std::to_string(lifts.size()) + " lifts");
      }
    }
  }
  // Lifts of a composite are composites of lifts.
  for (int a = 0; a < n2; ++a) {
    if (!g.direct_or_identity(a)) continue;
    for (int b : g.out_of(g.two_cell(a).dst)) {
      if (!g.direct_or_identity(b)) continue;
      if (g.is_identity2(a) && g.is_identity2(b)) continue;
      auto ab = g.vcomp(a, b);
      if (!ab) continue;
      for (const auto& [s3, t3] : g.splits(g.two_cell(b).dst)) {
        const auto lb = g.direct_lifts(b, s3, t3);
        if (lb.size() != 1) continue;
        const auto [g1, g2] = lb.front();
        const auto la = g.direct_lifts(a, g.two_cell(g1).src, g.two_cell(g2).src);
        const auto lab = g.direct_lifts(*ab, s3, t3);
        if (la.size() != 1 || lab.size() != 1) continue;
        const auto [b1, b2] = la.front();
        if (g.vcomp(b1, g1) != lab.front().first || g.vcomp(b2, g2) != lab.front().second) {
          r.fail("lift-functoriality", tname(g, b) + " ∘ " + tname(g, a) + " along " + cname(g, s3) + " ⊗ " + cname(g, t3));
        }
      }
    }
  }
  if (r.ok()) r.pass("direct-divisible", g.name());
  return r;
}

std::pair<int, int> reedy_factorize(const Groupement& g, int u) {
  if (u < 0 || u >= g.two_cell_count()) throw DomainError("reedy_factorize: unknown 2-cell");
  std::vector<std::pair<int, int>> found;
  const auto& t = g.two_cell(u);
  for (int i : g.out_of(t.src)) {
    if (!g.inverse_or_identity(i)) continue;
    for (int d : g.between(g.two_cell(i).dst, t.dst)) {
      if (g.direct_or_identity(d) && g.vcomp(i, d) == u) found.emplace_back(i, d);
    }
  }
  if (found.size() != 1) {
    throw ConsistencyError("reedy_factorize: " + t.name + " has " + std::to_string(found.size()) + " factorizations");
  }
  return found.front();
}

}  // namespace colax::reedy2
