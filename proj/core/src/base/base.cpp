#include "colax/base/base.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "colax/base/union_find.hpp"
#include "colax/error.hpp"

namespace colax::base {

namespace {

std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  if (b <= 1) return e == 0 ? 1 : b;
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    if (r > kMax / b) return kMax;
    r *= b;
  }
  return r;
}

void require_same(const Object& a, const Object& b, const char* what) {
  if (a != b) {
    throw EndpointError(std::string(what) + ": endpoint mismatch " + to_string(a) + " vs " + to_string(b));
  }
}

}  // namespace

std::string to_string(const Object& o) {
  return (o.kind == Kind::FinSet ? "set(" : "vec(") + std::to_string(o.n) + ")";
}

std::string to_string(const Arrow& f) {
  std::ostringstream os;
  os << to_string(f.src) << "->" << to_string(f.dst) << " ";
  if (f.src.kind == Kind::FinSet) {
    os << "[";
    for (std::size_t i = 0; i < f.data.size(); ++i) os << (i ? "," : "") << f.data[i];
    os << "]";
  } else {
    os << "[";
    for (int r = 0; r < f.dst.n; ++r) {
      os << (r ? "," : "") << "[";
      for (int c = 0; c < f.src.n; ++c) os << (c ? "," : "") << f.data[static_cast<std::size_t>(r * f.src.n + c)];
      os << "]";
    }
    os << "]";
  }
  return os.str();
}

std::string_view system_name(System s) {
  switch (s) {
    case System::TrivCofFib: return "trivcof-fib";
    case System::CofTrivFib: return "cof-trivfib";
    case System::Ofs: return "ofs";
  }
  return "?";
}

System parse_system(std::string_view name) {
  if (name == "trivcof-fib") return System::TrivCofFib;
  if (name == "cof-trivfib") return System::CofTrivFib;
  if (name == "ofs") return System::Ofs;
  throw DomainError("unknown factorization system '" + std::string(name) + "'");
}

Base::Base(Kind k, int p) : kind_(k), p_(p) {
  if (k == Kind::FinSet) {
    model_.we = [](const Arrow& f) {
      if (f.src.n != f.dst.n) return false;
      std::vector<bool> hit(static_cast<std::size_t>(f.dst.n), false);
      for (int v : f.data) {
        if (hit[static_cast<std::size_t>(v)]) return false;
        hit[static_cast<std::size_t>(v)] = true;
      }
      return true;
    };
    model_.cof = [](const Arrow&) { return true; };
    model_.fib = [](const Arrow&) { return true; };
    model_.ofs_left = [](const Arrow& f) {
      std::vector<bool> hit(static_cast<std::size_t>(f.dst.n), false);
      for (int v : f.data) hit[static_cast<std::size_t>(v)] = true;
      return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
    };
    model_.ofs_right = [](const Arrow& f) {
      std::vector<bool> hit(static_cast<std::size_t>(f.dst.n), false);
      for (int v : f.data) {
        if (hit[static_cast<std::size_t>(v)]) return false;
        hit[static_cast<std::size_t>(v)] = true;
      }
      return true;
    };
  } else {
    auto rank_of = [p](const Arrow& f) {
      return colax::base::rank(Matrix(f.dst.n, f.src.n, p, f.data));
    };
    model_.we = [](const Arrow&) { return true; };
    model_.cof = [rank_of](const Arrow& f) { return rank_of(f) == f.src.n; };
    model_.fib = [rank_of](const Arrow& f) { return rank_of(f) == f.dst.n; };
    model_.ofs_left = model_.fib;
    model_.ofs_right = model_.cof;
  }
}

Base Base::finset() { return Base(Kind::FinSet, 0); }

Base Base::finvect(int p) {
  if (p < 2) throw DomainError("finvect needs a prime p >= 2");
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) throw DomainError("finvect needs a prime p, got " + std::to_string(p));
  }
  return Base(Kind::FinVect, p);
}

std::string Base::name() const {
  return kind_ == Kind::FinSet ? std::string("finset") : "finvect(p=" + std::to_string(p_) + ")";
}

Arrow Base::identity(Object a) const {
  Arrow f{a, a, {}};
  if (kind_ == Kind::FinSet) {
    f.data.resize(static_cast<std::size_t>(a.n));
    for (int i = 0; i < a.n; ++i) f.data[static_cast<std::size_t>(i)] = i;
  } else {
    f.data = Matrix::identity(a.n, p_).entries();
  }
  return f;
}

Arrow Base::compose(const Arrow& f, const Arrow& g) const {
  require_same(f.dst, g.src, "compose");
  if (kind_ == Kind::FinSet) {
    Arrow h{f.src, g.dst, std::vector<int>(f.data.size())};
    for (std::size_t i = 0; i < f.data.size(); ++i) h.data[i] = g.data[static_cast<std::size_t>(f.data[i])];
    return h;
  }
  return from_matrix(matrix(g) * matrix(f));
}

Arrow Base::tensor(const Arrow& f, const Arrow& g) const {
  if (kind_ == Kind::FinSet) {
    Arrow h{tensor(f.src, g.src), tensor(f.dst, g.dst), {}};
    h.data.resize(static_cast<std::size_t>(h.src.n));
    for (int a = 0; a < f.src.n; ++a)
      for (int b = 0; b < g.src.n; ++b)
        h.data[static_cast<std::size_t>(a * g.src.n + b)] =
            f.data[static_cast<std::size_t>(a)] * g.dst.n + g.data[static_cast<std::size_t>(b)];
    return h;
  }
  return from_matrix(matrix(f).kronecker(matrix(g)));
}

Object Base::tensor(std::span<const Object> objs) const {
  Object out = unit();
  for (const auto& o : objs) out = tensor(out, o);
  return out;
}

Arrow Base::tensor(std::span<const Arrow> arrows) const {
  Arrow out = identity(unit());
  for (const auto& a : arrows) out = tensor(out, a);
  return out;
}

Arrow Base::from_initial(Object a) const {
  if (kind_ == Kind::FinSet) return Arrow{initial(), a, {}};
  return Arrow{initial(), a, {}};
}

Arrow Base::to_terminal(Object a) const {
  if (kind_ == Kind::FinSet) return Arrow{a, terminal(), std::vector<int>(static_cast<std::size_t>(a.n), 0)};
  return Arrow{a, terminal(), {}};
}

Arrow Base::arrow(Object src, Object dst, std::vector<int> data) const {
  if (src.kind != kind_ || dst.kind != kind_) throw DomainError("arrow: object of the wrong base kind");
  if (kind_ == Kind::FinSet) {
    if (static_cast<int>(data.size()) != src.n) throw DomainError("arrow: table length must equal the source size");
    for (int v : data) {
      if (v < 0 || v >= dst.n) throw DomainError("arrow: table entry out of range");
    }
    return Arrow{src, dst, std::move(data)};
  }
  if (static_cast<int>(data.size()) != src.n * dst.n) throw DomainError("arrow: matrix must be dst x src");
  return from_matrix(Matrix(dst.n, src.n, p_, std::move(data)));
}

Matrix Base::matrix(const Arrow& f) const { return Matrix(f.dst.n, f.src.n, p_, f.data); }

Arrow Base::from_matrix(const Matrix& m) const {
  return Arrow{object(m.cols()), object(m.rows()), m.entries()};
}

bool Base::injective(const Arrow& f) const {
  if (kind_ == Kind::FinVect) return colax::base::rank(matrix(f)) == f.src.n;
  std::vector<bool> hit(static_cast<std::size_t>(f.dst.n), false);
  for (int v : f.data) {
    if (hit[static_cast<std::size_t>(v)]) return false;
    hit[static_cast<std::size_t>(v)] = true;
  }
  return true;
}

bool Base::surjective(const Arrow& f) const {
  if (kind_ == Kind::FinVect) return colax::base::rank(matrix(f)) == f.dst.n;
  std::vector<bool> hit(static_cast<std::size_t>(f.dst.n), false);
  for (int v : f.data) hit[static_cast<std::size_t>(v)] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

std::optional<Arrow> Base::inverse(const Arrow& f) const {
  if (!is_iso(f)) return std::nullopt;
  if (kind_ == Kind::FinSet) {
    Arrow g{f.dst, f.src, std::vector<int>(f.data.size())};
    for (std::size_t i = 0; i < f.data.size(); ++i) g.data[static_cast<std::size_t>(f.data[i])] = static_cast<int>(i);
    return g;
  }
  const int n = f.src.n;
  Matrix m = matrix(f);
  Matrix inv(n, n, p_);
  for (int c = 0; c < n; ++c) {
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(c)] = 1;
    auto x = solve(m, e);
    for (int r = 0; r < n; ++r) inv.set(r, c, (*x)[static_cast<std::size_t>(r)]);
  }
  return from_matrix(inv);
}

bool Base::in_left(const Arrow& f, System s) const {
  switch (s) {
    case System::TrivCofFib: return cof(f) && we(f);
    case System::CofTrivFib: return cof(f);
    case System::Ofs: return model_.ofs_left(f);
  }
  return false;
}

bool Base::in_right(const Arrow& f, System s) const {
  switch (s) {
    case System::TrivCofFib: return fib(f);
    case System::CofTrivFib: return fib(f) && we(f);
    case System::Ofs: return model_.ofs_right(f);
  }
  return false;
}

std::pair<Arrow, Arrow> Base::factorize(const Arrow& f, System s) const {
  if (kind_ == Kind::FinSet) {
    switch (s) {
      case System::TrivCofFib: return {identity(f.src), f};
      case System::CofTrivFib: return {f, identity(f.dst)};
      case System::Ofs: {
        std::vector<int> image(f.data);
        std::sort(image.begin(), image.end());
        image.erase(std::unique(image.begin(), image.end()), image.end());
        const Object mid = object(static_cast<int>(image.size()));
        Arrow i{f.src, mid, std::vector<int>(f.data.size())};
        for (std::size_t a = 0; a < f.data.size(); ++a) {
          i.data[a] = static_cast<int>(std::lower_bound(image.begin(), image.end(), f.data[a]) - image.begin());
        }
        Arrow p{mid, f.dst, image};
        return {i, p};
      }
    }
  }
  if (s == System::Ofs) {
    // Column-row decomposition: f = (pivot columns of f) * (nonzero rows of rref f).
    const Matrix m = matrix(f);
    const Echelon e = rref(m);
    const int r = e.rank();
    Matrix left(r, f.src.n, p_);
    for (int i = 0; i < r; ++i)
      for (int c = 0; c < f.src.n; ++c) left.set(i, c, e.reduced.at(i, c));
    Matrix right(f.dst.n, r, p_);
    for (int j = 0; j < r; ++j)
      for (int row = 0; row < f.dst.n; ++row) right.set(row, j, m.at(row, e.pivots[static_cast<std::size_t>(j)]));
    return {from_matrix(left), from_matrix(right)};
  }
  // Both model systems are (mono, epi) here: V -(id,f)-> V ⊕ W -proj-> W.
  const int n = f.src.n;
  const int m = f.dst.n;
  Matrix i(n + m, n, p_);
  for (int c = 0; c < n; ++c) i.set(c, c, 1);
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < n; ++c) i.set(n + r, c, f.data[static_cast<std::size_t>(r * n + c)]);
  Matrix p(m, n + m, p_);
  for (int r = 0; r < m; ++r) p.set(r, n + r, 1);
  return {from_matrix(i), from_matrix(p)};
}

std::optional<Arrow> Base::find_lift(const Arrow& i, const Arrow& p, const Arrow& top, const Arrow& bottom) const {
  require_same(i.src, top.src, "find_lift");
  require_same(top.dst, p.src, "find_lift");
  require_same(i.dst, bottom.src, "find_lift");
  require_same(bottom.dst, p.dst, "find_lift");
  if (compose(top, p) != compose(i, bottom)) {
    throw PreconditionError("find_lift: square does not commute");
  }
  const Object b = i.dst;
  const Object x = p.src;
  if (kind_ == Kind::FinSet) {
    Arrow h{b, x, std::vector<int>(static_cast<std::size_t>(b.n), -1)};
    for (int a = 0; a < i.src.n; ++a) {
      auto& slot = h.data[static_cast<std::size_t>(i.data[static_cast<std::size_t>(a)])];
      const int want = top.data[static_cast<std::size_t>(a)];
      if (slot >= 0 && slot != want) return std::nullopt;
      slot = want;
    }
    for (int e = 0; e < b.n; ++e) {
      auto& slot = h.data[static_cast<std::size_t>(e)];
      const int target = bottom.data[static_cast<std::size_t>(e)];
      if (slot >= 0) {
        if (p.data[static_cast<std::size_t>(slot)] != target) return std::nullopt;
        continue;
      }
      for (int cand = 0; cand < x.n; ++cand) {
        if (p.data[static_cast<std::size_t>(cand)] == target) {
          slot = cand;
          break;
        }
      }
      if (slot < 0) return std::nullopt;
    }
    return h;
  }
  // Unknown H (x.n × b.n), variable index r*b.n + c.
  const int a_dim = i.src.n;
  const int y_dim = p.dst.n;
  const int vars = x.n * b.n;
  const int eqs = x.n * a_dim + y_dim * b.n;
  Matrix sys(eqs, vars, p_);
  std::vector<int> rhs(static_cast<std::size_t>(eqs), 0);
  int row = 0;
  for (int r = 0; r < x.n; ++r)
    for (int a = 0; a < a_dim; ++a, ++row) {
      for (int c = 0; c < b.n; ++c) sys.set(row, r * b.n + c, i.data[static_cast<std::size_t>(c * a_dim + a)]);
      rhs[static_cast<std::size_t>(row)] = top.data[static_cast<std::size_t>(r * a_dim + a)];
    }
  for (int yy = 0; yy < y_dim; ++yy)
    for (int c = 0; c < b.n; ++c, ++row) {
      for (int r = 0; r < x.n; ++r) sys.set(row, r * b.n + c, p.data[static_cast<std::size_t>(yy * x.n + r)]);
      rhs[static_cast<std::size_t>(row)] = bottom.data[static_cast<std::size_t>(yy * b.n + c)];
    }
  auto sol = solve(sys, rhs);
  if (!sol) return std::nullopt;
  return Arrow{b, x, *sol};
}

Cone Base::limit(const FinDiagram& d) const {
  Cone out;
  const int k = static_cast<int>(d.nodes.size());
  out.offsets.resize(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    out.offsets[static_cast<std::size_t>(i)] = out.total;
    out.total += d.nodes[static_cast<std::size_t>(i)].n;
  }
  for (const auto& e : d.edges) {
    require_same(e.arrow.src, d.nodes[static_cast<std::size_t>(e.from)], "limit edge");
    require_same(e.arrow.dst, d.nodes[static_cast<std::size_t>(e.to)], "limit edge");
  }

  if (kind_ == Kind::FinSet) {
    // Backtracking in lexicographic order; an edge is checked once both endpoints are assigned.
    std::vector<std::vector<const FinDiagram::Edge*>> trigger(static_cast<std::size_t>(k));
    for (const auto& e : d.edges) trigger[static_cast<std::size_t>(std::max(e.from, e.to))].push_back(&e);
    std::vector<int> tuple(static_cast<std::size_t>(k), 0);
    auto rec = [&](auto&& self, int pos) -> void {
      if (pos == k) {
        out.tuples.push_back(tuple);
        return;
      }
      for (int v = 0; v < d.nodes[static_cast<std::size_t>(pos)].n; ++v) {
        tuple[static_cast<std::size_t>(pos)] = v;
        bool ok = true;
        for (const auto* e : trigger[static_cast<std::size_t>(pos)]) {
          if (e->arrow.data[static_cast<std::size_t>(tuple[static_cast<std::size_t>(e->from)])] !=
              tuple[static_cast<std::size_t>(e->to)]) {
            ok = false;
            break;
          }
        }
        if (ok) self(self, pos + 1);
      }
    };
    rec(rec, 0);
    out.apex = object(static_cast<int>(out.tuples.size()));
    for (int i = 0; i < k; ++i) {
      Arrow leg{out.apex, d.nodes[static_cast<std::size_t>(i)], {}};
      leg.data.reserve(out.tuples.size());
      for (const auto& t : out.tuples) leg.data.push_back(t[static_cast<std::size_t>(i)]);
      out.legs.push_back(std::move(leg));
    }
    return out;
  }

  int rows = 0;
  for (const auto& e : d.edges) rows += e.arrow.dst.n;
  Matrix a(rows, out.total, p_);
  int row = 0;
  for (const auto& e : d.edges) {
    const int fo = out.offsets[static_cast<std::size_t>(e.from)];
    const int to = out.offsets[static_cast<std::size_t>(e.to)];
    for (int r = 0; r < e.arrow.dst.n; ++r, ++row) {
      for (int c = 0; c < e.arrow.src.n; ++c) {
        a.set(row, fo + c, a.at(row, fo + c) + e.arrow.data[static_cast<std::size_t>(r * e.arrow.src.n + c)]);
      }
      a.set(row, to + r, a.at(row, to + r) - 1);
    }
  }
  const Echelon ech = rref(a);
  std::vector<bool> pivot(static_cast<std::size_t>(out.total), false);
  for (int c : ech.pivots) pivot[static_cast<std::size_t>(c)] = true;
  for (int c = 0; c < out.total; ++c)
    if (!pivot[static_cast<std::size_t>(c)]) out.columns.push_back(c);
  const Matrix basis = kernel_basis(a);
  out.apex = object(basis.cols());
  for (int i = 0; i < k; ++i) {
    const int dim = d.nodes[static_cast<std::size_t>(i)].n;
    Matrix leg(dim, basis.cols(), p_);
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < basis.cols(); ++c) leg.set(r, c, basis.at(out.offsets[static_cast<std::size_t>(i)] + r, c));
    out.legs.push_back(from_matrix(leg));
  }
  return out;
}

Arrow Base::limit_mediator(const FinDiagram& d, const Cone& lim, Object apex_w, std::span<const Arrow> legs) const {
  if (legs.size() != d.nodes.size()) throw PreconditionError("limit_mediator: one leg per node required");
  for (std::size_t i = 0; i < legs.size(); ++i) {
    require_same(legs[i].src, apex_w, "limit_mediator");
    require_same(legs[i].dst, d.nodes[i], "limit_mediator");
  }
  if (kind_ == Kind::FinSet) {
    Arrow m{apex_w, lim.apex, std::vector<int>(static_cast<std::size_t>(apex_w.n))};
    std::vector<int> t(legs.size());
    for (int w = 0; w < apex_w.n; ++w) {
      for (std::size_t i = 0; i < legs.size(); ++i) t[i] = legs[i].data[static_cast<std::size_t>(w)];
      auto it = std::lower_bound(lim.tuples.begin(), lim.tuples.end(), t);
      if (it == lim.tuples.end() || *it != t) throw PreconditionError("limit_mediator: legs do not form a cone");
      m.data[static_cast<std::size_t>(w)] = static_cast<int>(it - lim.tuples.begin());
    }
    return m;
  }
  // Stack legs into a total x w matrix V; the mediator reads V at the free columns.
  Matrix v(lim.total, apex_w.n, p_);
  for (std::size_t i = 0; i < legs.size(); ++i)
    for (int r = 0; r < d.nodes[i].n; ++r)
      for (int c = 0; c < apex_w.n; ++c)
        v.set(lim.offsets[i] + r, c, legs[i].data[static_cast<std::size_t>(r * apex_w.n + c)]);
  Matrix y(static_cast<int>(lim.columns.size()), apex_w.n, p_);
  for (std::size_t j = 0; j < lim.columns.size(); ++j)
    for (int c = 0; c < apex_w.n; ++c) y.set(static_cast<int>(j), c, v.at(lim.columns[j], c));
  const Arrow med = from_matrix(y);
  for (std::size_t i = 0; i < legs.size(); ++i) {
    if (compose(med, lim.legs[i]) != legs[i]) throw PreconditionError("limit_mediator: legs do not form a cone");
  }
  return Arrow{apex_w, lim.apex, med.data};
}

Cone Base::colimit(const FinDiagram& d) const {
  Cone out;
  const int k = static_cast<int>(d.nodes.size());
  out.offsets.resize(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    out.offsets[static_cast<std::size_t>(i)] = out.total;
    out.total += d.nodes[static_cast<std::size_t>(i)].n;
  }
  for (const auto& e : d.edges) {
    require_same(e.arrow.src, d.nodes[static_cast<std::size_t>(e.from)], "colimit edge");
    require_same(e.arrow.dst, d.nodes[static_cast<std::size_t>(e.to)], "colimit edge");
  }
  if (kind_ == Kind::FinSet) {
    UnionFind uf(static_cast<std::size_t>(out.total));
    for (const auto& e : d.edges) {
      const int fo = out.offsets[static_cast<std::size_t>(e.from)];
      const int to = out.offsets[static_cast<std::size_t>(e.to)];
      for (int x = 0; x < e.arrow.src.n; ++x) {
        uf.unite(static_cast<std::size_t>(fo + x), static_cast<std::size_t>(to + e.arrow.data[static_cast<std::size_t>(x)]));
      }
    }
    std::vector<int> class_of_root(static_cast<std::size_t>(out.total), -1);
    std::vector<int> cls(static_cast<std::size_t>(out.total));
    for (int g = 0; g < out.total; ++g) {
      const auto root = uf.find(static_cast<std::size_t>(g));
      if (class_of_root[root] < 0) {
        class_of_root[root] = static_cast<int>(out.representatives.size());
        out.representatives.push_back(g);
      }
      cls[static_cast<std::size_t>(g)] = class_of_root[root];
    }
    out.apex = object(static_cast<int>(out.representatives.size()));
    for (int i = 0; i < k; ++i) {
      Arrow leg{d.nodes[static_cast<std::size_t>(i)], out.apex, {}};
      for (int x = 0; x < leg.src.n; ++x) leg.data.push_back(cls[static_cast<std::size_t>(out.offsets[static_cast<std::size_t>(i)] + x)]);
      out.legs.push_back(std::move(leg));
    }
    return out;
  }
  // Relations: e_{from, c} - f(e_{from, c}) for each edge and basis vector.
  int rels = 0;
  for (const auto& e : d.edges) rels += e.arrow.src.n;
  Matrix r(rels, out.total, p_);
  int row = 0;
  for (const auto& e : d.edges) {
    const int fo = out.offsets[static_cast<std::size_t>(e.from)];
    const int to = out.offsets[static_cast<std::size_t>(e.to)];
    for (int c = 0; c < e.arrow.src.n; ++c, ++row) {
      r.set(row, fo + c, r.at(row, fo + c) + 1);
      for (int rr = 0; rr < e.arrow.dst.n; ++rr) {
        r.set(row, to + rr, r.at(row, to + rr) - e.arrow.data[static_cast<std::size_t>(rr * e.arrow.src.n + c)]);
      }
    }
  }
  const Echelon ech = rref(r);
  std::vector<int> pivot_row(static_cast<std::size_t>(out.total), -1);
  for (std::size_t i = 0; i < ech.pivots.size(); ++i) pivot_row[static_cast<std::size_t>(ech.pivots[i])] = static_cast<int>(i);
  std::vector<int> quotient_index(static_cast<std::size_t>(out.total), -1);
  for (int c = 0; c < out.total; ++c) {
    if (pivot_row[static_cast<std::size_t>(c)] < 0) {
      quotient_index[static_cast<std::size_t>(c)] = static_cast<int>(out.columns.size());
      out.columns.push_back(c);
    }
  }
  const int dq = static_cast<int>(out.columns.size());
  out.apex = object(dq);
  // Projection of each standard basis vector.
  Matrix proj(dq, out.total, p_);
  for (int c = 0; c < out.total; ++c) {
    const int pr = pivot_row[static_cast<std::size_t>(c)];
    if (pr < 0) {
      proj.set(quotient_index[static_cast<std::size_t>(c)], c, 1);
    } else {
      for (int j = 0; j < dq; ++j) proj.set(j, c, -ech.reduced.at(pr, out.columns[static_cast<std::size_t>(j)]));
    }
  }
  for (int i = 0; i < k; ++i) {
    const int dim = d.nodes[static_cast<std::size_t>(i)].n;
    Matrix leg(dq, dim, p_);
    for (int j = 0; j < dq; ++j)
      for (int c = 0; c < dim; ++c) leg.set(j, c, proj.at(j, out.offsets[static_cast<std::size_t>(i)] + c));
    out.legs.push_back(from_matrix(leg));
  }
  return out;
}

Arrow Base::colimit_mediator(const FinDiagram& d, const Cone& colim, Object apex_w, std::span<const Arrow> legs) const {
  if (legs.size() != d.nodes.size()) throw PreconditionError("colimit_mediator: one leg per node required");
  for (std::size_t i = 0; i < legs.size(); ++i) {
    require_same(legs[i].src, d.nodes[i], "colimit_mediator");
    require_same(legs[i].dst, apex_w, "colimit_mediator");
  }
  auto node_of = [&](int g) {
    int i = 0;
    while (i + 1 < static_cast<int>(colim.offsets.size()) && colim.offsets[static_cast<std::size_t>(i + 1)] <= g) ++i;
    // skip empty nodes sharing the offset
    while (d.nodes[static_cast<std::size_t>(i)].n == 0) ++i;
    return i;
  };
  Arrow med;
  if (kind_ == Kind::FinSet) {
    med = Arrow{colim.apex, apex_w, {}};
    for (int g : colim.representatives) {
      const int i = node_of(g);
      med.data.push_back(legs[static_cast<std::size_t>(i)].data[static_cast<std::size_t>(g - colim.offsets[static_cast<std::size_t>(i)])]);
    }
  } else {
    Matrix m(apex_w.n, colim.apex.n, p_);
    for (std::size_t j = 0; j < colim.columns.size(); ++j) {
      const int g = colim.columns[j];
      const int i = node_of(g);
      const int local = g - colim.offsets[static_cast<std::size_t>(i)];
      const auto& leg = legs[static_cast<std::size_t>(i)];
      for (int r = 0; r < apex_w.n; ++r) m.set(r, static_cast<int>(j), leg.data[static_cast<std::size_t>(r * leg.src.n + local)]);
    }
    med = from_matrix(m);
    med.src = colim.apex;
    med.dst = apex_w;
  }
  for (std::size_t i = 0; i < legs.size(); ++i) {
    if (compose(colim.legs[i], med) != legs[i]) throw PreconditionError("colimit_mediator: legs do not form a cocone");
  }
  return med;
}

std::uint64_t Base::hom_count(Object a, Object b) const {
  if (kind_ == Kind::FinSet) return ipow(static_cast<std::uint64_t>(b.n), static_cast<std::uint64_t>(a.n));
  return ipow(static_cast<std::uint64_t>(p_), static_cast<std::uint64_t>(a.n * b.n));
}

std::vector<Arrow> Base::hom(Object a, Object b) const {
  const int len = kind_ == Kind::FinSet ? a.n : a.n * b.n;
  const int radix = kind_ == Kind::FinSet ? b.n : p_;
  std::vector<Arrow> out;
  if (len > 0 && radix == 0) return out;
  out.reserve(static_cast<std::size_t>(hom_count(a, b)));
  std::vector<int> digits(static_cast<std::size_t>(len), 0);
  while (true) {
    out.push_back(Arrow{a, b, digits});
    int pos = len - 1;
    while (pos >= 0) {
      if (++digits[static_cast<std::size_t>(pos)] < radix) break;
      digits[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return out;
}

Arrow Base::projection(std::span<const Object> factors, int which) const {
  if (kind_ != Kind::FinSet) throw DomainError("projection: only the cartesian base has projections");
  const Object total = tensor(factors);
  int stride = 1;
  for (std::size_t j = static_cast<std::size_t>(which) + 1; j < factors.size(); ++j) stride *= factors[j].n;
  const Object target = factors[static_cast<std::size_t>(which)];
  Arrow f{total, target, std::vector<int>(static_cast<std::size_t>(total.n))};
  for (int idx = 0; idx < total.n; ++idx) f.data[static_cast<std::size_t>(idx)] = (idx / stride) % target.n;
  return f;
}

Pushout pushout(const Base& base, const Arrow& f, const Arrow& g) {
  Pushout po;
  po.diagram.add_node(f.dst);
  po.diagram.add_node(g.dst);
  po.diagram.add_node(f.src);
  po.diagram.add_edge(2, 0, f);
  po.diagram.add_edge(2, 1, g);
  po.cone = base.colimit(po.diagram);
  return po;
}

Pullback pullback(const Base& base, const Arrow& f, const Arrow& g) {
  Pullback pb;
  pb.diagram.add_node(f.src);
  pb.diagram.add_node(g.src);
  pb.diagram.add_node(f.dst);
  pb.diagram.add_edge(0, 2, f);
  pb.diagram.add_edge(1, 2, g);
  pb.cone = base.limit(pb.diagram);
  return pb;
}

Arrow pushout_mediator(const Base& base, const Pushout& po, const Arrow& b, const Arrow& c) {
  const Arrow a = base.compose(po.diagram.edges[0].arrow, b);
  const std::vector<Arrow> legs{b, c, a};
  return base.colimit_mediator(po.diagram, po.cone, b.dst, legs);
}

Arrow pullback_mediator(const Base& base, const Pullback& pb, const Arrow& b, const Arrow& c) {
  const Arrow d = base.compose(b, pb.diagram.edges[0].arrow);
  const std::vector<Arrow> legs{b, c, d};
  return base.limit_mediator(pb.diagram, pb.cone, b.src, legs);
}

}  // namespace colax::base
