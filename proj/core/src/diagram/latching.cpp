#include "colax/diagram/latching.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "colax/error.hpp"

namespace colax::diagram {

namespace {

std::string tn(const Groupement& g, int a) { return g.two_cell(a).name; }

std::string parts_name(const Groupement& g, const std::vector<int>& parts) {
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + g.one_cell(parts[i]).name;
  return s + ")";
}

std::string object_name(const Groupement& g, const MatchingIndex::Object& o) {
  return parts_name(g, o.parts) + "/" + tn(g, o.beta);
}

// Compositions of p into k positive parts, lexicographic.
std::vector<std::vector<int>> compositions(int p, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int left, int slots) -> void {
    if (slots == 0) {
      if (left == 0) out.push_back(cur);
      return;
    }
    for (int v = 1; v <= left - (slots - 1); ++v) {
      cur.push_back(v);
      self(self, left - v, slots - 1);
      cur.pop_back();
    }
  };
  rec(rec, p, k);
  return out;
}

}  // namespace

std::optional<int> MatchingIndex::find(const std::vector<int>& parts, int beta) const {
  for (std::size_t i = 0; i < objects.size(); ++i) {
    if (objects[i].beta == beta && objects[i].parts == parts) return static_cast<int>(i);
  }
  return std::nullopt;
}

LatchingIndex latching_index(const Groupement& g, int z) {
  if (g.is_unit(z)) throw DomainError("latching index at a unit 1-cell");
  LatchingIndex idx;
  idx.z = z;
  for (int a : g.into(z)) {
    if (g.two_cell(a).cls == reedy2::CellClass::Direct) idx.objects.push_back(a);
  }
  for (int o : idx.objects) idx.category.add_object(tn(g, o));
  std::map<std::tuple<int, int, int>, int> arrow_of;
  for (std::size_t i = 0; i < idx.objects.size(); ++i) {
    for (std::size_t j = 0; j < idx.objects.size(); ++j) {
      const int a = idx.objects[i];
      const int a2 = idx.objects[j];
      for (int gamma : g.between(g.two_cell(a).src, g.two_cell(a2).src)) {
        if (!g.direct_or_identity(gamma)) continue;
        if (g.vcomp(gamma, a2) != a) continue;
        idx.morphisms.push_back({static_cast<int>(i), static_cast<int>(j), gamma});
        const int id = g.is_identity2(gamma) ? idx.category.identity(static_cast<int>(i))
                                             : idx.category.add_arrow(static_cast<int>(i), static_cast<int>(j), tn(g, gamma));
        arrow_of[{static_cast<int>(i), static_cast<int>(j), gamma}] = id;
      }
    }
  }
  for (const auto& m1 : idx.morphisms) {
    for (const auto& m2 : idx.morphisms) {
      if (m1.to != m2.from || g.is_identity2(m1.gamma) || g.is_identity2(m2.gamma)) continue;
      auto c = g.vcomp(m1.gamma, m2.gamma);
      if (!c) continue;
      auto it = arrow_of.find({m1.from, m2.to, *c});
      if (it == arrow_of.end()) continue;
      idx.category.set_compose(arrow_of.at({m1.from, m1.to, m1.gamma}), arrow_of.at({m2.from, m2.to, m2.gamma}), it->second);
    }
  }
  return idx;
}

MatchingIndex matching_index(const Groupement& g, int z) {
  if (g.is_unit(z)) throw DomainError("matching index at a unit 1-cell");
  MatchingIndex idx;
  idx.z = z;
  for (int beta : g.out_of(z)) {
    if (!g.inverse_or_identity(beta)) continue;
    const int target = g.two_cell(beta).dst;
    if (g.is_unit(target)) continue;
    for (auto& parts : g.decompositions(target)) {
      if (parts.size() == 1 && g.is_identity2(beta)) continue;
      idx.objects.push_back({std::move(parts), beta});
    }
  }
  for (const auto& o : idx.objects) idx.category.add_object(object_name(g, o));

  using Key = std::tuple<int, int, std::vector<int>, std::vector<int>>;
  std::map<Key, int> arrow_of;
  for (std::size_t i = 0; i < idx.objects.size(); ++i) {
    const auto& o = idx.objects[i];
    const int k = static_cast<int>(o.parts.size());
    for (std::size_t j = 0; j < idx.objects.size(); ++j) {
      const auto& o2 = idx.objects[j];
      const int p = static_cast<int>(o2.parts.size());
      if (k > p) continue;
      for (const auto& blocks : compositions(p, k)) {
        std::vector<int> ys;
        std::vector<std::vector<int>> cands;
        int pos = 0;
        bool ok = true;
        for (int b = 0; b < k && ok; ++b) {
          const std::vector<int> block(o2.parts.begin() + pos, o2.parts.begin() + pos + blocks[static_cast<std::size_t>(b)]);
          pos += blocks[static_cast<std::size_t>(b)];
          auto y = g.hcomp1(block);
          if (!y || g.one_cell(*y).src != g.one_cell(o.parts[static_cast<std::size_t>(b)]).src ||
              g.one_cell(*y).dst != g.one_cell(o.parts[static_cast<std::size_t>(b)]).dst) {
            ok = false;
            break;
          }
          std::vector<int> c;
          for (int u : g.between(o.parts[static_cast<std::size_t>(b)], *y)) {
            if (g.inverse_or_identity(u)) c.push_back(u);
          }
          if (c.empty()) ok = false;
          cands.push_back(std::move(c));
        }
        if (!ok) continue;
        std::vector<int> u(static_cast<std::size_t>(k));
        auto rec = [&](auto&& self, int b) -> void {
          if (b == k) {
            auto tu = g.hcomp2(u);
            if (!tu) return;
            if (g.two_cell(*tu).src != g.two_cell(o.beta).dst) return;
            if (g.vcomp(o.beta, *tu) != o2.beta) return;
            const bool identity = i == j && std::all_of(u.begin(), u.end(), [&](int x) { return g.is_identity2(x); });
            const int id = identity ? idx.category.identity(static_cast<int>(i))
                                    : idx.category.add_arrow(static_cast<int>(i), static_cast<int>(j),
                                                             object_name(g, o) + "=>" + object_name(g, o2));
            idx.morphisms.push_back({static_cast<int>(i), static_cast<int>(j), blocks, u});
            arrow_of[{static_cast<int>(i), static_cast<int>(j), blocks, u}] = id;
            return;
          }
          for (int x : cands[static_cast<std::size_t>(b)]) {
            u[static_cast<std::size_t>(b)] = x;
            self(self, b + 1);
          }
        };
        rec(rec, 0);
      }
    }
  }
  // Composition: group the finer blocks and compose the inverse parts.
  for (const auto& m1 : idx.morphisms) {
    for (const auto& m2 : idx.morphisms) {
      if (m1.to != m2.from) continue;
      const int id1 = arrow_of.at({m1.from, m1.to, m1.blocks, m1.u});
      const int id2 = arrow_of.at({m2.from, m2.to, m2.blocks, m2.u});
      if (idx.category.is_identity(id1) || idx.category.is_identity(id2)) continue;
      std::vector<int> blocks;
      std::vector<int> u;
      int pos = 0;
      bool ok = true;
      for (std::size_t b = 0; b < m1.blocks.size() && ok; ++b) {
        int size = 0;
        std::vector<int> inner;
        for (int t = 0; t < m1.blocks[b]; ++t) {
          size += m2.blocks[static_cast<std::size_t>(pos)];
          inner.push_back(m2.u[static_cast<std::size_t>(pos)]);
          ++pos;
        }
        blocks.push_back(size);
        auto ti = g.hcomp2(inner);
        if (!ti) {
          ok = false;
          break;
        }
        auto c = g.vcomp(m1.u[b], *ti);
        if (!c) {
          ok = false;
          break;
        }
        u.push_back(*c);
      }
      if (!ok) continue;
      auto it = arrow_of.find({m1.from, m2.to, blocks, u});
      if (it != arrow_of.end()) idx.category.set_compose(id1, id2, it->second);
    }
  }
  return idx;
}

Arrow matching_arrow(const ColaxDiagram& f, const MatchingIndex& idx, const MatchingIndex::Morphism& m) {
  const Groupement& g = f.groupement();
  const Base& b = f.base();
  const auto& to = idx.objects[static_cast<std::size_t>(m.to)];
  std::vector<Arrow> us;
  std::vector<Arrow> splits;
  int pos = 0;
  for (std::size_t i = 0; i < m.u.size(); ++i) {
    us.push_back(f.action(m.u[i]));
    const std::vector<int> block(to.parts.begin() + pos, to.parts.begin() + pos + m.blocks[i]);
    pos += m.blocks[i];
    splits.push_back(f.iterated_colax(block));
  }
  (void)g;
  return b.compose(b.tensor(us), b.tensor(splits));
}

Arrow matching_leg(const ColaxDiagram& f, const MatchingIndex::Object& o) {
  return f.base().compose(f.action(o.beta), f.iterated_colax(o.parts));
}

LatchingObject colax_latching_object(const ColaxDiagram& f, int z) {
  const Groupement& g = f.groupement();
  LatchingObject out;
  out.index = latching_index(g, z);
  for (int a : out.index.objects) out.diagram.add_node(f.value(g.two_cell(a).src));
  for (const auto& m : out.index.morphisms) {
    if (g.is_identity2(m.gamma)) continue;
    out.diagram.add_edge(m.from, m.to, f.action(m.gamma));
  }
  out.cocone = f.base().colimit(out.diagram);
  if (f.has_value(z)) {
    std::vector<Arrow> legs;
    for (int a : out.index.objects) legs.push_back(f.action(a));
    out.to_value = f.base().colimit_mediator(out.diagram, out.cocone, f.value(z), legs);
  }
  return out;
}

MatchingObject colax_matching_object(const ColaxDiagram& f, int z) {
  const Groupement& g = f.groupement();
  MatchingObject out;
  out.index = matching_index(g, z);
  for (const auto& o : out.index.objects) out.diagram.add_node(f.tensor_values(o.parts));
  for (const auto& m : out.index.morphisms) {
    if (m.from == m.to && std::all_of(m.u.begin(), m.u.end(), [&](int u) { return g.is_identity2(u); })) continue;
    out.diagram.add_edge(m.from, m.to, matching_arrow(f, out.index, m));
  }
  out.cone = f.base().limit(out.diagram);
  if (f.has_value(z)) {
    std::vector<Arrow> legs;
    for (const auto& o : out.index.objects) legs.push_back(matching_leg(f, o));
    out.from_value = f.base().limit_mediator(out.diagram, out.cone, f.value(z), legs);
  }
  return out;
}

Arrow iz_component(const ColaxDiagram& f, int alpha, const MatchingIndex::Object& o) {
  const Groupement& g = f.groupement();
  const Base& b = f.base();
  if (!g.is_identity2(o.beta)) {
    auto u = g.vcomp(alpha, o.beta);
    if (!u) throw ConsistencyError("no composite " + tn(g, o.beta) + " ∘ " + tn(g, alpha));
    return b.compose(f.action(*u), f.iterated_colax(o.parts));
  }
  const std::vector<int> pieces = g.split(alpha, o.parts);
  std::vector<int> sources;
  std::vector<Arrow> acts;
  for (int p : pieces) {
    sources.push_back(g.two_cell(p).src);
    acts.push_back(f.action(p));
  }
  return b.compose(f.iterated_colax(sources), b.tensor(acts));
}

CanonicalMap canonical_map_iz(const ColaxDiagram& f, int z) {
  const Groupement& g = f.groupement();
  const Base& b = f.base();
  CanonicalMap out{colax_latching_object(f, z), colax_matching_object(f, z), Arrow{}, {}};
  const auto& li = out.latching.index;
  const auto& mi = out.matching.index;
  std::vector<Arrow> mediators;
  for (int alpha : li.objects) {
    std::vector<Arrow> comps;
    for (const auto& o : mi.objects) comps.push_back(iz_component(f, alpha, o));
    for (const auto& m : mi.morphisms) {
      const Arrow via = b.compose(comps[static_cast<std::size_t>(m.from)], matching_arrow(f, mi, m));
      if (via != comps[static_cast<std::size_t>(m.to)]) {
        throw ConsistencyError("i_z triangle fails at latching object " + tn(g, alpha) + " and matching morphism " +
                               object_name(g, mi.objects[static_cast<std::size_t>(m.from)]) + " => " +
                               object_name(g, mi.objects[static_cast<std::size_t>(m.to)]));
      }
    }
    mediators.push_back(b.limit_mediator(out.matching.diagram, out.matching.cone, f.value(g.two_cell(alpha).src), comps));
    out.components.push_back(std::move(comps));
  }
  for (const auto& m : li.morphisms) {
    if (g.is_identity2(m.gamma)) continue;
    const Arrow via = b.compose(f.action(m.gamma), mediators[static_cast<std::size_t>(m.to)]);
    if (via != mediators[static_cast<std::size_t>(m.from)]) {
      throw ConsistencyError("i_z cocone fails along " + tn(g, m.gamma) + " into " + tn(g, li.objects[static_cast<std::size_t>(m.to)]));
    }
  }
  out.iz = b.colimit_mediator(out.latching.diagram, out.latching.cocone, out.matching.cone.apex, mediators);
  return out;
}

}  // namespace colax::diagram
