#include "support.hpp"

#include <stdexcept>

namespace acceptance {

namespace r2 = colax::reedy2;

void Tally::expect(bool ok, const std::string& what) {
  ++checks_;
  if (ok) return;
  ++failed_;
  if (first_.size() < 5) first_.push_back(what);
}

Outcome Tally::outcome(const std::string& summary) const {
  Outcome o{ok(), summary + ", " + std::to_string(checks_) + " checks"};
  if (!ok()) {
    o.detail += ", " + std::to_string(failed_) + " failed:";
    for (const auto& f : first_) o.detail += " [" + f + "]";
  }
  return o;
}

std::shared_ptr<const Groupement> delta_plus(int m) { return std::make_shared<const Groupement>(r2::build_delta_plus(m)); }

std::shared_ptr<const Groupement> px(const std::vector<std::string>& x, int m) {
  return std::make_shared<const Groupement>(r2::build_px(x, m));
}

int cell(const Groupement& g, const std::string& name) {
  auto c = g.find_one_cell(name);
  if (!c) throw std::logic_error("no 1-cell " + name);
  return *c;
}

int two_cell(const Groupement& g, const std::string& name) {
  auto c = g.find_two_cell(name);
  if (!c) throw std::logic_error("no 2-cell " + name);
  return *c;
}

BasisMonoid cyclic(int n) {
  BasisMonoid m{n, 0, {}};
  m.mult.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) m.mult[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % n;
  return m;
}

BasisMonoid dual_numbers() { return {2, 0, {{0, 1}, {1, -1}}}; }

namespace {

int ipow(int b, int e) {
  int r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

std::vector<int> digits(int x, int base, int len) {
  std::vector<int> d(static_cast<std::size_t>(len));
  for (int i = len - 1; i >= 0; --i) {
    d[static_cast<std::size_t>(i)] = x % base;
    x /= base;
  }
  return d;
}

int undigits(const std::vector<int>& d, int base) {
  int x = 0;
  for (int v : d) x = x * base + v;
  return x;
}

}  // namespace

ColaxDiagram power_diagram(const std::shared_ptr<const Groupement>& g, const Base& base, const BasisMonoid& m, int level) {
  ColaxDiagram f(g, base, level);
  for (int c = 0; c < g->one_cell_count(); ++c) {
    if (g->degree(c) > level || g->is_unit(c)) continue;
    f.set_value(c, base.object(ipow(m.size, g->degree(c))));
  }
  for (int a = 0; a < g->two_cell_count(); ++a) {
    if (!f.in_scope2(a) || g->is_identity2(a)) continue;
    const r2::Monotone& phi = g->label(a);
    const int n = ipow(m.size, phi.from);
    const int k = ipow(m.size, phi.to);
    std::vector<int> data;
    if (base.kind() == colax::base::Kind::FinVect) data.assign(static_cast<std::size_t>(k * n), 0);
    for (int x = 0; x < n; ++x) {
      const auto in = digits(x, m.size, phi.from);
      std::vector<int> out(static_cast<std::size_t>(phi.to), m.e);
      bool zero = false;
      for (int i = 0; i < phi.from && !zero; ++i) {
        auto& slot = out[static_cast<std::size_t>(phi.image[static_cast<std::size_t>(i)])];
        slot = m.mult[static_cast<std::size_t>(slot)][static_cast<std::size_t>(in[static_cast<std::size_t>(i)])];
        zero = slot < 0;
      }
      if (base.kind() == colax::base::Kind::FinSet) {
        data.push_back(undigits(out, m.size));
      } else if (!zero) {
        data[static_cast<std::size_t>(undigits(out, m.size) * n + x)] = 1;
      }
    }
    f.set_action(a, base.arrow(base.object(n), base.object(k), data));
  }
  for (const auto& [s, t] : f.colax_pairs()) f.set_colax(s, t, base.identity(f.value(*g->hcomp1(s, t))));
  return f;
}

colax::segal::UnitalPresheaf nerve(const std::shared_ptr<const colax::segal::DeltaX>& d, int n) {
  const Base b = Base::finset();
  colax::segal::UnitalPresheaf p(d, b);
  for (int o = 0; o < d->object_count(); ++o) p.values[static_cast<std::size_t>(o)] = b.object(ipow(n, d->dim(o)));
  for (int m = 0; m < d->morphism_count(); ++m) {
    const auto& mo = d->morphism(m);
    const int nx = d->dim(mo.dst);
    const int ny = d->dim(mo.src);
    std::vector<int> data(static_cast<std::size_t>(ipow(n, nx)));
    for (int e = 0; e < ipow(n, nx); ++e) {
      const auto dg = digits(e, n, nx);
      int out = 0;
      for (int i = 1; i <= ny; ++i) {
        int s = 0;
        for (int j = mo.phi(i - 1); j < mo.phi(i); ++j) s += dg[static_cast<std::size_t>(j)];
        out = out * n + s % n;
      }
      data[static_cast<std::size_t>(e)] = out;
    }
    p.actions[static_cast<std::size_t>(m)] =
        b.arrow(p.values[static_cast<std::size_t>(mo.dst)], p.values[static_cast<std::size_t>(mo.src)], data);
  }
  return p;
}

}  // namespace acceptance
