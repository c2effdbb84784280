#include "colax/reedy2/fincat.hpp"

#include <map>

#include "colax/error.hpp"
#include "colax/reedy2/monotone.hpp"

namespace colax::reedy2 {

int FinCat::add_object(std::string name) {
  const int o = static_cast<int>(objects_.size());
  objects_.push_back(name);
  arrows_.push_back({o, o, "id_" + name});
  identities_.push_back(static_cast<int>(arrows_.size()) - 1);
  return o;
}

int FinCat::add_arrow(int src, int dst, std::string name) {
  if (src < 0 || dst < 0 || src >= object_count() || dst >= object_count()) {
    throw DomainError("add_arrow: unknown endpoint for '" + name + "'");
  }
  arrows_.push_back({src, dst, std::move(name)});
  return static_cast<int>(arrows_.size()) - 1;
}

void FinCat::set_compose(int f, int g, int h) {
  if (arrow(f).dst != arrow(g).src) throw EndpointError("set_compose: " + arrow(f).name + " then " + arrow(g).name);
  if (arrow(h).src != arrow(f).src || arrow(h).dst != arrow(g).dst) {
    throw EndpointError("set_compose: composite '" + arrow(h).name + "' has wrong endpoints");
  }
  comp_[key(f, g)] = h;
}

bool FinCat::is_identity(int a) const { return identities_[static_cast<std::size_t>(arrow(a).src)] == a; }

std::optional<int> FinCat::find_object(const std::string& name) const {
  for (int i = 0; i < object_count(); ++i)
    if (objects_[static_cast<std::size_t>(i)] == name) return i;
  return std::nullopt;
}

std::optional<int> FinCat::find_arrow(const std::string& name) const {
  for (int i = 0; i < arrow_count(); ++i)
    if (arrows_[static_cast<std::size_t>(i)].name == name) return i;
  return std::nullopt;
}

std::optional<int> FinCat::try_compose(int f, int g) const {
  if (arrow(f).dst != arrow(g).src) throw EndpointError("compose: " + arrow(f).name + " then " + arrow(g).name);
  if (is_identity(f)) return g;
  if (is_identity(g)) return f;
  auto it = comp_.find(key(f, g));
  if (it == comp_.end()) return std::nullopt;
  return it->second;
}

int FinCat::compose(int f, int g) const {
  auto h = try_compose(f, g);
  if (!h) throw DomainError("compose: no composite recorded for " + arrow(f).name + " then " + arrow(g).name);
  return *h;
}

std::vector<int> FinCat::hom(int a, int b) const {
  std::vector<int> out;
  for (int i = 0; i < arrow_count(); ++i)
    if (arrows_[static_cast<std::size_t>(i)].src == a && arrows_[static_cast<std::size_t>(i)].dst == b) out.push_back(i);
  return out;
}

std::vector<int> FinCat::out_of(int a) const {
  std::vector<int> out;
  for (int i = 0; i < arrow_count(); ++i)
    if (arrows_[static_cast<std::size_t>(i)].src == a) out.push_back(i);
  return out;
}

std::vector<int> FinCat::into(int b) const {
  std::vector<int> out;
  for (int i = 0; i < arrow_count(); ++i)
    if (arrows_[static_cast<std::size_t>(i)].dst == b) out.push_back(i);
  return out;
}

Report FinCat::validate() const {
  Report r("fincat");
  for (int f = 0; f < arrow_count(); ++f) {
    for (int g : out_of(arrow(f).dst)) {
      if (!try_compose(f, g)) r.fail("closure", arrow(f).name + " then " + arrow(g).name + " has no composite");
    }
  }
  for (int f = 0; f < arrow_count(); ++f) {
    for (int g : out_of(arrow(f).dst)) {
      auto fg = try_compose(f, g);
      if (!fg) continue;
      for (int h : out_of(arrow(g).dst)) {
        auto gh = try_compose(g, h);
        if (!gh) continue;
        auto left = try_compose(*fg, h);
        auto right = try_compose(f, *gh);
        if (left != right) {
          r.fail("associativity", arrow(f).name + ", " + arrow(g).name + ", " + arrow(h).name);
        }
      }
    }
  }
  if (r.ok()) r.pass("category-laws");
  return r;
}

FinCat FinCat::opposite() const {
  FinCat op;
  op.objects_ = objects_;
  op.identities_ = identities_;
  op.arrows_ = arrows_;
  for (auto& a : op.arrows_) std::swap(a.src, a.dst);
  for (const auto& [k, h] : comp_) {
    const int f = static_cast<int>(k >> 32);
    const int g = static_cast<int>(k & 0xffffffffu);
    op.comp_[key(g, f)] = h;
  }
  return op;
}

std::string class_name(CellClass c) {
  switch (c) {
    case CellClass::Identity: return "identity";
    case CellClass::Direct: return "direct";
    case CellClass::Inverse: return "inverse";
    case CellClass::Mixed: return "mixed";
  }
  return "?";
}

int ReedyCat::add_object(std::string name, int deg) {
  const int o = cat.add_object(std::move(name));
  degree.push_back(deg);
  cls.push_back(CellClass::Identity);
  return o;
}

int ReedyCat::add_arrow(int src, int dst, std::string name, CellClass c) {
  const int a = cat.add_arrow(src, dst, std::move(name));
  cls.push_back(c);
  return a;
}

Report ReedyCat::validate() const {
  Report r("reedy");
  r.merge(cat.validate());
  for (int a = 0; a < cat.arrow_count(); ++a) {
    const auto& ar = cat.arrow(a);
    const CellClass c = cls[static_cast<std::size_t>(a)];
    const int ds = degree[static_cast<std::size_t>(ar.src)];
    const int dt = degree[static_cast<std::size_t>(ar.dst)];
    if ((c == CellClass::Identity) != cat.is_identity(a)) {
      r.fail("identity-class", ar.name + " is classified " + class_name(c));
    }
    if (c == CellClass::Direct && !(dt > ds)) {
      r.fail("degree", ar.name + " is direct but does not raise degree (" + std::to_string(ds) + " -> " + std::to_string(dt) + ")");
    }
    if (c == CellClass::Inverse && !(dt < ds)) {
      r.fail("degree", ar.name + " is inverse but does not lower degree (" + std::to_string(ds) + " -> " + std::to_string(dt) + ")");
    }
    int count = 0;
    for (int i : cat.out_of(ar.src)) {
      if (!inverse_or_identity(i)) continue;
      for (int d : cat.hom(cat.arrow(i).dst, ar.dst)) {
        if (!direct_or_identity(d)) continue;
        if (cat.try_compose(i, d) == a) ++count;
      }
    }
    if (count != 1) {
      r.fail("factorization", ar.name + " has " + std::to_string(count) + " direct∘inverse factorizations");
    }
    if (!cat.is_identity(a)) {
      for (int b : cat.hom(ar.dst, ar.src)) {
        if (cat.try_compose(a, b) == cat.identity(ar.src) && cat.try_compose(b, a) == cat.identity(ar.dst)) {
          r.fail("isomorphism", ar.name + " is a non-identity isomorphism");
        }
      }
    }
  }
  if (r.ok()) r.pass("reedy-axioms");
  return r;
}

std::pair<int, int> ReedyCat::factorize(int a) const {
  const auto& ar = cat.arrow(a);
  for (int i : cat.out_of(ar.src)) {
    if (!inverse_or_identity(i)) continue;
    for (int d : cat.hom(cat.arrow(i).dst, ar.dst)) {
      if (direct_or_identity(d) && cat.try_compose(i, d) == a) return {i, d};
    }
  }
  throw DomainError("factorize: " + ar.name + " has no direct∘inverse factorization");
}

ReedyCat ReedyCat::opposite() const {
  ReedyCat op;
  op.cat = cat.opposite();
  op.degree = degree;
  op.cls = cls;
  for (auto& c : op.cls) {
    if (c == CellClass::Direct) c = CellClass::Inverse;
    else if (c == CellClass::Inverse) c = CellClass::Direct;
  }
  return op;
}

ReedyCat walking_arrow() {
  ReedyCat b;
  const int a = b.add_object("a", 0);
  const int c = b.add_object("b", 1);
  b.add_arrow(a, c, "f", CellClass::Direct);
  return b;
}

ReedyCat walking_cospan_direct() {
  ReedyCat b;
  const int a = b.add_object("a", 0);
  const int bb = b.add_object("b", 0);
  const int c = b.add_object("c", 1);
  b.add_arrow(a, c, "f", CellClass::Direct);
  b.add_arrow(bb, c, "g", CellClass::Direct);
  return b;
}

ReedyCat walking_span_inverse() {
  ReedyCat b;
  const int a = b.add_object("a", 1);
  const int bb = b.add_object("b", 0);
  const int c = b.add_object("c", 0);
  b.add_arrow(a, bb, "f", CellClass::Inverse);
  b.add_arrow(a, c, "g", CellClass::Inverse);
  return b;
}

ReedyCat delta_truncated(int n) {
  ReedyCat d;
  for (int k = 0; k <= n; ++k) d.add_object("[" + std::to_string(k) + "]", k);
  std::map<Monotone, int> id_of;
  for (int k = 0; k <= n; ++k) id_of[Monotone::identity(k + 1)] = d.cat.identity(k);
  for (int a = 0; a <= n; ++a) {
    for (int b = 0; b <= n; ++b) {
      for (auto& m : all_monotone(a + 1, b + 1)) {
        if (m.is_identity()) continue;
        const CellClass c = m.injective() ? CellClass::Direct : m.surjective() ? CellClass::Inverse : CellClass::Mixed;
        id_of[m] = d.add_arrow(a, b, m.str(), c);
      }
    }
  }
  for (const auto& [f, fi] : id_of) {
    for (const auto& [g, gi] : id_of) {
      if (f.to != g.from || f.is_identity() || g.is_identity()) continue;
      d.cat.set_compose(fi, gi, id_of.at(compose(f, g)));
    }
  }
  return d;
}

}  // namespace colax::reedy2
