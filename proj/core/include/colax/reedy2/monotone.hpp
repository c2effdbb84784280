#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace colax::reedy2 {

/// A monotone map {0..from-1} -> {0..to-1}.
///
/// Δ⁺ maps n̲ -> k̲ are Monotone{n, k}. Maps [k] -> [n] of Δ or Ω are Monotone{k+1, n+1}.
struct Monotone {
  int from = 0;
  int to = 0;
  std::vector<int> image;

  friend auto operator<=>(const Monotone&, const Monotone&) = default;

  [[nodiscard]] int operator()(int i) const { return image[static_cast<std::size_t>(i)]; }
  [[nodiscard]] bool valid() const;
  [[nodiscard]] bool injective() const;
  [[nodiscard]] bool surjective() const;
  [[nodiscard]] bool is_identity() const;
  /// f(0) = 0 and f(last) = last (Ω maps between nonempty ordinals).
  [[nodiscard]] bool extremal() const;
  [[nodiscard]] std::string str() const;

  static Monotone identity(int n);
};

/// g ∘ f.
Monotone compose(const Monotone& f, const Monotone& g);
/// Ordinal sum: f + g acts as f on the first block and as g (shifted) on the second.
Monotone ordinal_sum(const Monotone& f, const Monotone& g);
/// Every monotone map n -> k, lexicographic by image.
std::vector<Monotone> all_monotone(int n, int k);
/// Every extremity-preserving monotone map [k] -> [n] (k, n >= 0).
std::vector<Monotone> all_extremal(int k, int n);

/// Joyal duality by the closed formula: for φ: n̲ -> k̲ in Δ⁺,
/// T(φ): [k] -> [n], j ↦ #{i : φ(i) < j}.
Monotone joyal_dual(const Monotone& phi);
/// Inverse of joyal_dual: for ψ: [k] -> [n] extremal, φ(i) = #{j >= 1 : ψ(j) <= i}.
Monotone joyal_undual(const Monotone& psi);

std::uint64_t binomial(int n, int k);

}  // namespace colax::reedy2
