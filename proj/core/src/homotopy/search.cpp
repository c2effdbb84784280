#include "colax/homotopy/search.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <tuple>

#include "colax/error.hpp"

namespace colax::homotopy {

using base::Arrow;
using base::Base;
using reedy2::Groupement;

namespace {

constexpr std::uint64_t kMaxCandidates = std::uint64_t{1} << 16;

std::vector<Arrow> candidates_in(const Base& b, base::Object src, base::Object dst) {
  if (b.hom_count(src, dst) > kMaxCandidates) {
    throw DomainError("search: hom(" + base::to_string(src) + ", " + base::to_string(dst) + ") is too large to enumerate");
  }
  return b.hom(src, dst);
}

// Depth-first search over slots; each check is attached to the last slot it reads.
struct Search {
  int n = 0;
  std::function<std::vector<Arrow>(int)> candidates;
  std::function<void(int, const Arrow&)> assign;
  std::vector<std::vector<std::function<bool()>>> checks;
  std::function<bool()> on_solution;  // false stops the search
  std::mt19937* rng = nullptr;
  std::size_t budget = 0;
  std::size_t visited = 0;

  bool run(int k) {
    if (k == n) return on_solution();
    auto cands = candidates(k);
    if (rng) std::shuffle(cands.begin(), cands.end(), *rng);
    for (const auto& c : cands) {
      if (++visited > budget) return false;
      assign(k, c);
      bool ok = true;
      for (const auto& chk : checks[static_cast<std::size_t>(k)]) {
        if (!chk()) {
          ok = false;
          break;
        }
      }
      if (ok && !run(k + 1)) return false;
    }
    return true;
  }
};

int top_degree2(const Groupement& g, int a) {
  return std::max(g.degree(g.two_cell(a).src), g.degree(g.two_cell(a).dst));
}

// Slots and constraints for diagrams with fixed values.
struct DiagramProblem {
  std::vector<int> actions;                 // 2-cells, in slot order
  std::vector<std::pair<int, int>> colaxes; // pairs, in slot order after the actions of the same degree
  std::vector<std::pair<int, int>> slot;    // (kind 0 action / 1 colax, index)
  std::map<int, int> pos_action;
  std::map<std::pair<int, int>, int> pos_colax;
  std::vector<std::optional<std::pair<int, int>>> forced;  // per slot
};

DiagramProblem layout(const ColaxDiagram& f) {
  const Groupement& g = f.groupement();
  DiagramProblem p;
  std::vector<char> decomposable(static_cast<std::size_t>(g.two_cell_count()), 0);
  for (int c = 0; c < g.two_cell_count(); ++c) {
    if (!f.in_scope2(c) || g.is_identity2(c)) continue;
    for (int x : g.out_of(g.two_cell(c).src)) {
      if (g.is_identity2(x) || !f.in_scope2(x)) continue;
      for (int y : g.between(g.two_cell(x).dst, g.two_cell(c).dst)) {
        if (!g.is_identity2(y) && f.in_scope2(y) && g.vcomp(x, y) == c) decomposable[static_cast<std::size_t>(c)] = 1;
      }
    }
  }
  using Key = std::tuple<int, int, int, int, int>;
  std::vector<std::pair<Key, std::pair<int, int>>> items;
  for (int a = 0; a < g.two_cell_count(); ++a) {
    if (!f.in_scope2(a) || g.is_identity2(a)) continue;
    items.push_back({{top_degree2(g, a), 0, decomposable[static_cast<std::size_t>(a)], a, 0}, {0, a}});
  }
  const auto pairs = f.colax_pairs();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const int z = *g.hcomp1(pairs[i].first, pairs[i].second);
    items.push_back({{g.degree(z), 1, 0, pairs[i].first, pairs[i].second}, {1, static_cast<int>(i)}});
  }
  std::sort(items.begin(), items.end());
  for (const auto& [key, s] : items) {
    const int k = static_cast<int>(p.slot.size());
    p.slot.push_back(s);
    if (s.first == 0) {
      p.actions.push_back(s.second);
      p.pos_action[s.second] = k;
    } else {
      p.colaxes.push_back(pairs[static_cast<std::size_t>(s.second)]);
      p.pos_colax[p.colaxes.back()] = k;
      p.slot.back().second = static_cast<int>(p.colaxes.size()) - 1;
    }
  }
  p.forced.assign(p.slot.size(), std::nullopt);
  for (std::size_t k = 0; k < p.slot.size(); ++k) {
    if (p.slot[k].first != 0) continue;
    const int c = p.slot[k].second;
    for (int x : g.out_of(g.two_cell(c).src)) {
      if (g.is_identity2(x) || !p.pos_action.count(x) || p.pos_action.at(x) >= static_cast<int>(k)) continue;
      for (int y : g.between(g.two_cell(x).dst, g.two_cell(c).dst)) {
        if (g.is_identity2(y) || !p.pos_action.count(y) || p.pos_action.at(y) >= static_cast<int>(k)) continue;
        if (g.vcomp(x, y) == c && !p.forced[k]) p.forced[k] = std::make_pair(x, y);
      }
    }
  }
  return p;
}

void search_diagrams(ColaxDiagram& f, SearchLimits lim, std::mt19937* rng, std::vector<ColaxDiagram>& out,
                     std::size_t& budget_left) {
  const Groupement& g = f.groupement();
  const Base& b = f.base();
  const DiagramProblem p = layout(f);
  Search s;
  s.n = static_cast<int>(p.slot.size());
  s.rng = rng;
  s.budget = budget_left;
  s.checks.assign(p.slot.size(), {});
  auto pos_of_action = [&](int a) { return g.is_identity2(a) ? -1 : p.pos_action.at(a); };
  auto pos_of_colax = [&](int x, int y) { return (g.is_unit(x) || g.is_unit(y)) ? -1 : p.pos_colax.at({x, y}); };
  auto attach = [&](std::initializer_list<int> ps, std::function<bool()> chk) {
    const int last = std::max(ps);
    if (last < 0) {
      if (!chk()) throw ConsistencyError("a constraint without free data fails");
      return;
    }
    s.checks[static_cast<std::size_t>(last)].push_back(std::move(chk));
  };
  for (int x : p.actions) {
    for (int y : g.out_of(g.two_cell(x).dst)) {
      if (g.is_identity2(y) || !f.in_scope2(y)) continue;
      auto c = g.vcomp(x, y);
      if (!c) continue;
      const int cc = *c;
      attach({pos_of_action(x), pos_of_action(y), pos_of_action(cc)},
             [&f, &b, x, y, cc] { return f.action(cc) == b.compose(f.action(x), f.action(y)); });
    }
  }
  for (const auto& [a, bb, c] : g.hcomp2_entries()) {
    if (!f.in_scope2(c)) continue;
    const int s0 = g.two_cell(a).src, s1 = g.two_cell(a).dst, t0 = g.two_cell(bb).src, t1 = g.two_cell(bb).dst;
    const int aa = a, bc = bb, cc = c;
    attach({pos_of_action(a), pos_of_action(bb), pos_of_action(c), pos_of_colax(s0, t0), pos_of_colax(s1, t1)},
           [&f, &b, aa, bc, cc, s0, s1, t0, t1] {
             return b.compose(f.action(cc), f.colax(s1, t1)) ==
                    b.compose(f.colax(s0, t0), b.tensor(f.action(aa), f.action(bc)));
           });
  }
  for (const auto& [x, y] : p.colaxes) {
    const int xy = *g.hcomp1(x, y);
    for (const auto& [y2, w] : f.colax_pairs()) {
      if (y2 != y) continue;
      auto xyw = g.hcomp1(xy, w);
      auto yw = g.hcomp1(y, w);
      if (!xyw || !yw || !f.in_scope(*xyw)) continue;
      const int a = x, c = y, e = w, ac = xy, ce = *yw;
      attach({pos_of_colax(a, c), pos_of_colax(ac, e), pos_of_colax(c, e), pos_of_colax(a, ce)},
             [&f, &b, a, c, e, ac, ce] {
               const Arrow lhs = b.compose(f.colax(ac, e), b.tensor(f.colax(a, c), b.identity(f.value(e))));
               const Arrow rhs = b.compose(f.colax(a, ce), b.tensor(b.identity(f.value(a)), f.colax(c, e)));
               return lhs == rhs;
             });
    }
  }
  s.candidates = [&](int k) -> std::vector<Arrow> {
    const auto [kind, idx] = p.slot[static_cast<std::size_t>(k)];
    if (kind == 0) {
      if (const auto& fo = p.forced[static_cast<std::size_t>(k)]) return {b.compose(f.action(fo->first), f.action(fo->second))};
      const auto& tc = g.two_cell(idx);
      return candidates_in(b, f.value(tc.src), f.value(tc.dst));
    }
    const auto [x, y] = p.colaxes[static_cast<std::size_t>(idx)];
    return candidates_in(b, f.value(*g.hcomp1(x, y)), b.tensor(f.value(x), f.value(y)));
  };
  s.assign = [&](int k, const Arrow& a) {
    const auto [kind, idx] = p.slot[static_cast<std::size_t>(k)];
    if (kind == 0) {
      f.set_action(idx, a);
    } else {
      const auto [x, y] = p.colaxes[static_cast<std::size_t>(idx)];
      f.set_colax(x, y, a);
    }
  };
  s.on_solution = [&] {
    const Report r = diagram::validate_colax(f);
    if (!r.ok()) throw ConsistencyError("diagram search produced an invalid diagram: " + r.first_witness());
    out.push_back(f);
    return out.size() < lim.cap;
  };
  // Constraints are evaluated eagerly above for slot-free checks, which need no data.
  s.run(0);
  budget_left = s.visited >= budget_left ? 0 : budget_left - s.visited;
}

ColaxDiagram with_values(const std::shared_ptr<const Groupement>& g, const Base& b, int level,
                         const std::vector<int>& sizes) {
  ColaxDiagram f(g, b, level);
  for (int c = 0; c < g->one_cell_count(); ++c) {
    if (f.in_scope(c) && !g->is_unit(c)) f.set_value(c, b.object(sizes[static_cast<std::size_t>(c)]));
  }
  return f;
}

std::vector<int> free_cells(const Groupement& g, int level) {
  std::vector<int> out;
  for (int c = 0; c < g.one_cell_count(); ++c) {
    if (g.degree(c) <= level && !g.is_unit(c)) out.push_back(c);
  }
  return out;
}

void search_icons(Icon& s, std::mt19937* rng, SearchLimits lim, std::vector<Icon>& out) {
  const ColaxDiagram& f = s.src;
  const ColaxDiagram& h = s.dst;
  const Groupement& g = f.groupement();
  const Base& b = f.base();
  std::vector<int> cells = free_cells(g, f.level());
  std::stable_sort(cells.begin(), cells.end(), [&](int x, int y) { return g.degree(x) < g.degree(y); });
  std::map<int, int> pos;
  for (std::size_t i = 0; i < cells.size(); ++i) pos[cells[i]] = static_cast<int>(i);
  auto pos_of = [&](int c) { return g.is_unit(c) ? -1 : pos.at(c); };
  Search srch;
  srch.n = static_cast<int>(cells.size());
  srch.rng = rng;
  srch.budget = lim.budget;
  srch.checks.assign(cells.size(), {});
  for (int a = 0; a < g.two_cell_count(); ++a) {
    if (!f.in_scope2(a) || g.is_identity2(a)) continue;
    const int x = g.two_cell(a).src, y = g.two_cell(a).dst;
    const int last = std::max(pos_of(x), pos_of(y));
    if (last < 0) continue;
    srch.checks[static_cast<std::size_t>(last)].push_back([&f, &h, &b, &s, a, x, y] {
      return b.compose(f.action(a), s.component(y)) == b.compose(s.component(x), h.action(a));
    });
  }
  for (const auto& [x, y] : f.colax_pairs()) {
    const int xy = *g.hcomp1(x, y);
    const int last = std::max({pos_of(x), pos_of(y), pos_of(xy)});
    srch.checks[static_cast<std::size_t>(last)].push_back([&f, &h, &b, &s, x, y, xy] {
      return b.compose(f.colax(x, y), b.tensor(s.component(x), s.component(y))) ==
             b.compose(s.component(xy), h.colax(x, y));
    });
  }
  srch.candidates = [&](int k) {
    const int c = cells[static_cast<std::size_t>(k)];
    return candidates_in(b, f.value(c), h.value(c));
  };
  srch.assign = [&](int k, const Arrow& a) { s.set(cells[static_cast<std::size_t>(k)], a); };
  srch.on_solution = [&] {
    out.push_back(s);
    return out.size() < lim.cap;
  };
  srch.run(0);
}

}  // namespace

std::vector<Icon> enumerate_icons(const ColaxDiagram& f, const ColaxDiagram& g, SearchLimits lim) {
  Icon s(f, g);
  std::vector<Icon> out;
  search_icons(s, nullptr, lim, out);
  return out;
}

std::optional<Icon> random_icon(const ColaxDiagram& f, const ColaxDiagram& g, std::mt19937& rng, std::size_t budget) {
  Icon s(f, g);
  std::vector<Icon> out;
  search_icons(s, &rng, {1, budget}, out);
  if (out.empty()) return std::nullopt;
  return out.front();
}

std::vector<ColaxDiagram> enumerate_with_values(const std::shared_ptr<const Groupement>& g, const Base& b, int level,
                                                const std::vector<int>& sizes, SearchLimits lim) {
  ColaxDiagram f = with_values(g, b, level, sizes);
  std::vector<ColaxDiagram> out;
  std::size_t budget = lim.budget;
  search_diagrams(f, lim, nullptr, out, budget);
  return out;
}

std::vector<ColaxDiagram> enumerate_diagrams(const std::shared_ptr<const Groupement>& g, const Base& b, int level,
                                             int min_size, int max_size, SearchLimits lim) {
  const std::vector<int> cells = free_cells(*g, level);
  std::vector<int> sizes(static_cast<std::size_t>(g->one_cell_count()), min_size);
  std::vector<ColaxDiagram> out;
  std::size_t budget = lim.budget;
  while (true) {
    ColaxDiagram f = with_values(g, b, level, sizes);
    search_diagrams(f, lim, nullptr, out, budget);
    if (out.size() >= lim.cap || budget == 0) break;
    std::size_t i = 0;
    for (; i < cells.size(); ++i) {
      int& v = sizes[static_cast<std::size_t>(cells[cells.size() - 1 - i])];
      if (v < max_size) {
        ++v;
        break;
      }
      v = min_size;
    }
    if (i == cells.size()) break;
  }
  return out;
}

std::optional<ColaxDiagram> random_diagram(const std::shared_ptr<const Groupement>& g, const Base& b, int level,
                                           int min_size, int max_size, std::mt19937& rng, int attempts,
                                           std::size_t budget) {
  const std::vector<int> cells = free_cells(*g, level);
  std::uniform_int_distribution<int> size(min_size, max_size);
  for (int t = 0; t < attempts; ++t) {
    std::vector<int> sizes(static_cast<std::size_t>(g->one_cell_count()), 0);
    for (int c : cells) sizes[static_cast<std::size_t>(c)] = size(rng);
    ColaxDiagram f = with_values(g, b, level, sizes);
    std::vector<ColaxDiagram> out;
    std::size_t left = budget;
    search_diagrams(f, {1, budget}, &rng, out, left);
    if (!out.empty()) return out.front();
  }
  return std::nullopt;
}

}  // namespace colax::homotopy
