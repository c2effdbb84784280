#include "colax/homotopy/model.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "colax/error.hpp"
#include "colax/homotopy/classical.hpp"
#include "colax/segal/segal.hpp"

namespace colax::homotopy {

namespace {

struct Flags {
  bool we = false, cof = false, fib = false;
  bool left[3] = {false, false, false};
  bool right[3] = {false, false, false};
};

Flags flags_of(const Classification& c) {
  Flags f;
  f.we = c.we.value;
  f.cof = c.cof.value;
  f.fib = c.fib.value;
  for (System s : {System::TrivCofFib, System::CofTrivFib, System::Ofs}) {
    f.left[static_cast<int>(s)] = c.in_left(s);
    f.right[static_cast<int>(s)] = c.in_right(s);
  }
  return f;
}

bool in_model_left(const Flags& f, System s) { return s == System::TrivCofFib ? f.cof && f.we : f.cof; }
bool in_model_right(const Flags& f, System s) { return s == System::TrivCofFib ? f.fib : f.fib && f.we; }

std::string icon_key(const Icon& s) {
  std::string k;
  const Groupement& g = s.src.groupement();
  for (int z = 0; z < g.one_cell_count(); ++z) {
    if (s.src.in_scope(z) && s.has(z)) k += base::to_string(s.component(z)) + ";";
  }
  return k;
}

struct Indexed {
  std::vector<int> src, dst;
  std::map<std::pair<int, int>, std::vector<int>> between;
  std::map<std::tuple<int, int, std::string>, int> by_key;
};

Indexed index_sample(const ModelSample& s, Report& r) {
  Indexed ix;
  auto find = [&](const ColaxDiagram& f) {
    for (std::size_t i = 0; i < s.diagrams.size(); ++i) {
      if (s.diagrams[i] == f) return static_cast<int>(i);
    }
    return -1;
  };
  for (std::size_t i = 0; i < s.icons.size(); ++i) {
    const int a = find(s.icons[i].src);
    const int b = find(s.icons[i].dst);
    if (a < 0 || b < 0) r.fail("sample", "icon " + std::to_string(i) + " has an endpoint outside the sample", s.name);
    ix.src.push_back(a);
    ix.dst.push_back(b);
    ix.between[{a, b}].push_back(static_cast<int>(i));
    ix.by_key[{a, b, icon_key(s.icons[i])}] = static_cast<int>(i);
  }
  return ix;
}

std::string sys_name(System s) { return std::string(base::system_name(s)); }

}  // namespace

ModelSample enumerated_sample(std::string name, const std::shared_ptr<const Groupement>& g, const Base& b, int level,
                              int min_size, int max_size, SearchLimits icon_limits) {
  ModelSample s;
  s.name = std::move(name);
  s.diagrams = enumerate_diagrams(g, b, level, min_size, max_size);
  for (const auto& x : s.diagrams) {
    for (const auto& y : s.diagrams) {
      for (auto& i : enumerate_icons(x, y, icon_limits)) s.icons.push_back(std::move(i));
    }
  }
  return s;
}

ColaxDiagram rebase(const ColaxDiagram& f, const Base& b) {
  if (b.kind() != f.base().kind() || b.prime() != f.base().prime()) throw DomainError("rebase: bases differ in kind");
  const Groupement& g = f.groupement();
  ColaxDiagram out(f.groupement_ptr(), b, f.level());
  for (int c = 0; c < g.one_cell_count(); ++c) {
    if (f.in_scope(c) && !g.is_unit(c) && f.has_value(c)) out.set_value(c, f.value(c));
  }
  for (int a = 0; a < g.two_cell_count(); ++a) {
    if (f.in_scope2(a) && !g.is_identity2(a) && f.has_action(a)) out.set_action(a, f.action(a));
  }
  for (const auto& [st, arr] : f.colax_table()) out.set_colax(st.first, st.second, arr);
  return out;
}

Icon rebase(const Icon& s, const Base& b) {
  Icon out(rebase(s.src, b), rebase(s.dst, b));
  const Groupement& g = s.src.groupement();
  for (int z = 0; z < g.one_cell_count(); ++z) {
    if (s.src.in_scope(z) && s.has(z)) out.set(z, s.component(z));
  }
  return out;
}

ModelSample rebase(const ModelSample& s, const Base& b) {
  ModelSample out;
  out.name = s.name;
  out.reedy1 = s.reedy1;
  out.presheaves = s.presheaves;
  for (const auto& f : s.diagrams) out.diagrams.push_back(rebase(f, b));
  for (const auto& i : s.icons) out.icons.push_back(rebase(i, b));
  return out;
}

Report verify_model_axioms(const ModelSample& s, const ModelLimits& lim) {
  Report r("model axioms " + s.name);
  const Indexed ix = index_sample(s, r);
  const std::size_t n = s.icons.size();
  std::vector<Flags> flags;
  flags.reserve(n);
  for (const auto& i : s.icons) flags.push_back(flags_of(classify(i, lim.opt)));
  auto id = [](std::size_t i) { return "icon#" + std::to_string(i); };

  // The trivial classes read off the relative maps agree with the intersections.
  for (std::size_t i = 0; i < n; ++i) {
    const Flags& f = flags[i];
    if (f.left[0] != (f.cof && f.we)) r.fail("trivial-cofibrations", "relative latching verdict differs from cof ∧ we", id(i));
    if (f.right[1] != (f.fib && f.we)) r.fail("trivial-fibrations", "relative matching verdict differs from fib ∧ we", id(i));
  }
  r.record("classified", s.name + " (" + std::to_string(n) + " icons)", true);

  // Composable pairs.
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < n && pairs < lim.pairs; ++i) {
    for (auto jt = ix.between.lower_bound({ix.dst[i], -1}); jt != ix.between.end() && jt->first.first == ix.dst[i]; ++jt) {
      for (int j : jt->second) {
        if (pairs >= lim.pairs) break;
        ++pairs;
        const Icon h = diagram::compose(s.icons[i], s.icons[static_cast<std::size_t>(j)]);
        Flags fh;
        auto kt = ix.by_key.find({ix.src[i], jt->first.second, icon_key(h)});
        if (kt != ix.by_key.end()) {
          fh = flags[static_cast<std::size_t>(kt->second)];
        } else {
          fh = flags_of(classify(h, lim.opt));
        }
        const Flags& f = flags[i];
        const Flags& g = flags[static_cast<std::size_t>(j)];
        const std::string inst = id(i) + "," + id(static_cast<std::size_t>(j));
        const int we_count = (f.we ? 1 : 0) + (g.we ? 1 : 0) + (fh.we ? 1 : 0);
        if (we_count == 2) r.fail("two-of-three", "exactly two of f, g, g∘f are weak equivalences", inst);
        auto closed = [&](const char* cls, bool a, bool b, bool c) {
          if (a && b && !c) r.fail(std::string("closure-") + cls, "composite leaves the class", inst);
        };
        closed("we", f.we, g.we, fh.we);
        closed("cof", f.cof, g.cof, fh.cof);
        closed("fib", f.fib, g.fib, fh.fib);
        closed("trivial-cof", f.cof && f.we, g.cof && g.we, fh.cof && fh.we);
        closed("trivial-fib", f.fib && f.we, g.fib && g.we, fh.fib && fh.we);
        closed("ofs-left", f.left[2], g.left[2], fh.left[2]);
        closed("ofs-right", f.right[2], g.right[2], fh.right[2]);
      }
    }
  }
  r.record("composable-pairs", s.name + " (" + std::to_string(pairs) + " pairs)", true);

  // Factorizations.
  for (System sys : {System::TrivCofFib, System::CofTrivFib}) {
    for (std::size_t i = 0; i < n; ++i) {
      const Factorization fz = factor_icon(s.icons[i], sys, lim.opt);
      const std::string inst = sys_name(sys) + " " + id(i);
      if (!same_icon(diagram::compose(fz.left, fz.right), s.icons[i])) r.fail("factorization-composite", "ρ∘λ ≠ σ", inst);
      const Flags fl = flags_of(classify(fz.left, lim.opt));
      const Flags fr = flags_of(classify(fz.right, lim.opt));
      if (!in_model_left(fl, sys)) r.fail("factorization-left", "λ outside the left class", inst);
      if (!in_model_right(fr, sys)) r.fail("factorization-right", "ρ outside the right class", inst);
    }
  }
  r.record("factorizations", s.name, true);

  // Lifting on seeded commuting squares.
  std::mt19937 rng(lim.seed);
  for (System sys : {System::TrivCofFib, System::CofTrivFib}) {
    std::vector<std::size_t> left, right;
    for (std::size_t i = 0; i < n; ++i) {
      if (in_model_left(flags[i], sys)) left.push_back(i);
      if (in_model_right(flags[i], sys)) right.push_back(i);
    }
    std::size_t squares = 0;
    std::size_t failures = 0;
    for (std::size_t t = 0; t < lim.square_tries && squares < lim.squares && !left.empty() && !right.empty(); ++t) {
      const std::size_t l = left[std::uniform_int_distribution<std::size_t>(0, left.size() - 1)(rng)];
      const std::size_t p = right[std::uniform_int_distribution<std::size_t>(0, right.size() - 1)(rng)];
      auto tops = ix.between.find({ix.src[l], ix.src[p]});
      auto bots = ix.between.find({ix.dst[l], ix.dst[p]});
      if (tops == ix.between.end() || bots == ix.between.end()) continue;
      const int top = tops->second[std::uniform_int_distribution<std::size_t>(0, tops->second.size() - 1)(rng)];
      const Icon via_top = diagram::compose(s.icons[static_cast<std::size_t>(top)], s.icons[p]);
      for (int bot : bots->second) {
        if (squares >= lim.squares) break;
        const Icon& bi = s.icons[static_cast<std::size_t>(bot)];
        if (!same_icon(via_top, diagram::compose(s.icons[l], bi))) continue;
        ++squares;
        const LiftResult res = lift_icon(s.icons[l], s.icons[p], s.icons[static_cast<std::size_t>(top)], bi);
        if (!res.lift) {
          if (failures++ < 20) {
            r.fail("lifting", res.obstruction,
                   sys_name(sys) + " λ=" + id(l) + " ρ=" + id(p) + " top=" + id(static_cast<std::size_t>(top)) +
                       " bottom=" + id(static_cast<std::size_t>(bot)));
          }
        }
      }
    }
    r.record("lifting-squares", sys_name(sys) + " " + s.name + " (" + std::to_string(squares) + " squares)", squares > 0 || left.empty() || right.empty(),
             "no commuting square found");
  }

  if (s.reedy1) {
    for (std::size_t i = 0; i < n; ++i) {
      const auto t = classical::from_colax(s.icons[i], s.reedy1);
      const auto v = classical::classify(t);
      const Flags& f = flags[i];
      bool same = v.we == f.we && v.cof == f.cof && v.fib == f.fib;
      for (int k = 0; k < 3; ++k) same = same && v.left[k] == f.left[k] && v.right[k] == f.right[k];
      if (!same) r.fail("classical-agreement", "verdicts differ from the classical Reedy structure", id(i));
    }
    r.record("classical-agreement", s.name, true);
  }

  if (s.presheaves && !s.diagrams.empty()) {
    const Groupement& g = s.diagrams.front().groupement();
    std::vector<std::string> labels;
    for (int o = 0; o < g.object_count(); ++o) labels.push_back(g.object_name(o));
    auto d = std::make_shared<const segal::DeltaX>(labels, s.diagrams.front().level());
    const auto shape = segal::classical_shape(*d);
    for (std::size_t i = 0; i < n; ++i) {
      const auto t = segal::to_classical(segal::to_presheaf(s.icons[i], d), shape);
      const auto v = classical::classify(t);
      const Flags& f = flags[i];
      bool same = v.we == f.we && v.cof == f.cof && v.fib == f.fib;
      for (int k = 0; k < 3; ++k) same = same && v.left[k] == f.left[k] && v.right[k] == f.right[k];
      if (!same) r.fail("presheaf-agreement", "verdicts differ from unital Δ_X-presheaves", id(i));
    }
    r.record("presheaf-agreement", s.name, true);
  }
  return r;
}

}  // namespace colax::homotopy
