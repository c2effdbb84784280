#include "colax/reedy2/monotone.hpp"

#include "colax/error.hpp"

namespace colax::reedy2 {

bool Monotone::valid() const {
  if (from < 0 || to < 0 || static_cast<int>(image.size()) != from) return false;
  for (int i = 0; i < from; ++i) {
    if (image[static_cast<std::size_t>(i)] < 0 || image[static_cast<std::size_t>(i)] >= to) return false;
    if (i > 0 && image[static_cast<std::size_t>(i)] < image[static_cast<std::size_t>(i - 1)]) return false;
  }
  return true;
}

bool Monotone::injective() const {
  for (int i = 1; i < from; ++i)
    if (image[static_cast<std::size_t>(i)] == image[static_cast<std::size_t>(i - 1)]) return false;
  return true;
}

bool Monotone::surjective() const {
  if (from == 0) return to == 0;
  if (image.front() != 0 || image.back() != to - 1) return false;
  for (int i = 1; i < from; ++i)
    if (image[static_cast<std::size_t>(i)] > image[static_cast<std::size_t>(i - 1)] + 1) return false;
  return true;
}

bool Monotone::is_identity() const {
  if (from != to) return false;
  for (int i = 0; i < from; ++i)
    if (image[static_cast<std::size_t>(i)] != i) return false;
  return true;
}

bool Monotone::extremal() const {
  return from > 0 && to > 0 && image.front() == 0 && image.back() == to - 1;
}

std::string Monotone::str() const {
  std::string s = std::to_string(from) + ">" + std::to_string(to) + ":";
  for (int v : image) s += std::to_string(v);
  return s;
}

Monotone Monotone::identity(int n) {
  Monotone m{n, n, std::vector<int>(static_cast<std::size_t>(n))};
  for (int i = 0; i < n; ++i) m.image[static_cast<std::size_t>(i)] = i;
  return m;
}

Monotone compose(const Monotone& f, const Monotone& g) {
  if (f.to != g.from) throw EndpointError("monotone compose: " + f.str() + " then " + g.str());
  Monotone h{f.from, g.to, std::vector<int>(f.image.size())};
  for (std::size_t i = 0; i < f.image.size(); ++i) h.image[i] = g(f.image[i]);
  return h;
}

Monotone ordinal_sum(const Monotone& f, const Monotone& g) {
  Monotone h{f.from + g.from, f.to + g.to, f.image};
  for (int v : g.image) h.image.push_back(f.to + v);
  return h;
}

std::vector<Monotone> all_monotone(int n, int k) {
  std::vector<Monotone> out;
  if (n > 0 && k == 0) return out;
  Monotone cur{n, k, std::vector<int>(static_cast<std::size_t>(n), 0)};
  auto rec = [&](auto&& self, int pos, int lo) -> void {
    if (pos == n) {
      out.push_back(cur);
      return;
    }
    for (int v = lo; v < k; ++v) {
      cur.image[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1, v);
    }
  };
  rec(rec, 0, 0);
  return out;
}

std::vector<Monotone> all_extremal(int k, int n) {
  std::vector<Monotone> out;
  for (auto& m : all_monotone(k + 1, n + 1)) {
    if (m.extremal()) out.push_back(std::move(m));
  }
  return out;
}

Monotone joyal_dual(const Monotone& phi) {
  Monotone psi{phi.to + 1, phi.from + 1, std::vector<int>(static_cast<std::size_t>(phi.to + 1), 0)};
  for (int j = 0; j <= phi.to; ++j) {
    int count = 0;
    for (int v : phi.image) count += v < j ? 1 : 0;
    psi.image[static_cast<std::size_t>(j)] = count;
  }
  return psi;
}

Monotone joyal_undual(const Monotone& psi) {
  if (!psi.extremal()) throw DomainError("joyal_undual: map is not extremity-preserving: " + psi.str());
  const int k = psi.from - 1;
  const int n = psi.to - 1;
  Monotone phi{n, k, std::vector<int>(static_cast<std::size_t>(n), 0)};
  for (int i = 0; i < n; ++i) {
    int count = 0;
    for (int j = 1; j <= k; ++j) count += psi(j) <= i ? 1 : 0;
    phi.image[static_cast<std::size_t>(i)] = count;
  }
  return phi;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

}  // namespace colax::reedy2
