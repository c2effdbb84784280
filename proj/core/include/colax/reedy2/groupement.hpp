#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "colax/reedy2/fincat.hpp"
#include "colax/reedy2/monotone.hpp"
#include "colax/report.hpp"

namespace colax::reedy2 {

struct OneCell {
  int src = 0;
  int dst = 0;
  int degree = 0;
  std::string name;
};

struct TwoCell {
  int src = 0;  // 1-cell
  int dst = 0;  // 1-cell
  CellClass cls = CellClass::Identity;
  std::string name;
};

/// A finite truncation of a simple locally Reedy 2-category.
///
/// Horizontal composition s ⊗ t takes s: A -> B and t: B -> C to A -> C and is
/// defined iff deg s + deg t <= bound. Composites with units (and with identity
/// 2-cells of units) are implicit; every other composite is stored in a table.
class Groupement {
 public:
  Groupement(std::string name, int bound) : name_(std::move(name)), bound_(bound) {}

  int add_object(const std::string& name);
  int add_one_cell(int a, int b, int degree, std::string name);
  int add_two_cell(int src, int dst, CellClass cls, std::string name);
  /// b ∘ a = c.
  void set_vcomp(int a, int b, int c);
  void set_hcomp1(int s, int t, int u);
  void set_hcomp2(int a, int b, int c);
  void erase_hcomp2(int a, int b);
  void reclassify(int two_cell, CellClass cls);
  /// Rebuilds the derived indices. Must be called after the last mutation.
  void finalize();

  [[nodiscard]] const std::string& name() const { return name_; }
  [[nodiscard]] int bound() const { return bound_; }

  [[nodiscard]] int object_count() const { return static_cast<int>(objects_.size()); }
  [[nodiscard]] const std::string& object_name(int o) const { return objects_[static_cast<std::size_t>(o)]; }
  [[nodiscard]] int unit(int o) const { return units_[static_cast<std::size_t>(o)]; }
  [[nodiscard]] bool is_unit(int cell) const;

  [[nodiscard]] int one_cell_count() const { return static_cast<int>(cells_.size()); }
  [[nodiscard]] int two_cell_count() const { return static_cast<int>(two_.size()); }
  [[nodiscard]] const OneCell& one_cell(int c) const { return cells_[static_cast<std::size_t>(c)]; }
  [[nodiscard]] const TwoCell& two_cell(int a) const { return two_[static_cast<std::size_t>(a)]; }
  [[nodiscard]] int degree(int cell) const { return one_cell(cell).degree; }
  [[nodiscard]] int identity2(int cell) const { return identity2_[static_cast<std::size_t>(cell)]; }
  [[nodiscard]] bool is_identity2(int a) const { return two_cell(a).cls == CellClass::Identity; }
  [[nodiscard]] bool direct_or_identity(int a) const {
    return two_cell(a).cls == CellClass::Direct || two_cell(a).cls == CellClass::Identity;
  }
  [[nodiscard]] bool inverse_or_identity(int a) const {
    return two_cell(a).cls == CellClass::Inverse || two_cell(a).cls == CellClass::Identity;
  }

  [[nodiscard]] std::optional<int> find_object(const std::string& name) const;
  [[nodiscard]] std::optional<int> find_one_cell(const std::string& name) const;
  [[nodiscard]] std::optional<int> find_two_cell(const std::string& name) const;

  /// b ∘ a (a: x -> y, b: y -> z).
  [[nodiscard]] std::optional<int> vcomp(int a, int b) const;
  [[nodiscard]] std::optional<int> hcomp1(int s, int t) const;
  [[nodiscard]] std::optional<int> hcomp2(int a, int b) const;
  /// Left fold of hcomp1 / hcomp2 over a nonempty list.
  [[nodiscard]] std::optional<int> hcomp1(const std::vector<int>& cells) const;
  [[nodiscard]] std::optional<int> hcomp2(const std::vector<int>& cells) const;

  [[nodiscard]] const std::vector<int>& into(int z) const { return into_[static_cast<std::size_t>(z)]; }
  [[nodiscard]] const std::vector<int>& out_of(int z) const { return out_of_[static_cast<std::size_t>(z)]; }
  [[nodiscard]] std::vector<int> between(int x, int y) const;
  /// Every (s, t) with s, t non-units and s ⊗ t = z.
  [[nodiscard]] const std::vector<std::pair<int, int>>& splits(int z) const { return splits_[static_cast<std::size_t>(z)]; }
  /// Every decomposition z = x_1 ⊗ … ⊗ x_k into non-units (k >= 1, the trivial one first).
  [[nodiscard]] std::vector<std::vector<int>> decompositions(int z) const;
  /// 1-cells of hom(A, B), in id order.
  [[nodiscard]] std::vector<int> hom_cells(int a, int b) const;
  [[nodiscard]] const std::unordered_map<std::uint64_t, int>& hcomp2_table() const { return hcomp2_; }
  /// Stored horizontal composites (a, b, a ⊗ b), sorted.
  [[nodiscard]] const std::vector<std::tuple<int, int, int>>& hcomp2_entries() const { return hcomp2_sorted_; }

  /// Precomputed (inverse, direct) with direct ∘ inverse = u; throws DomainError when absent.
  [[nodiscard]] std::pair<int, int> reedy_factor(int u) const;

  /// Every (β1, β2) with β1, β2 direct-or-identity, β1.dst = s', β2.dst = t', β1 ⊗ β2 = α.
  [[nodiscard]] std::vector<std::pair<int, int>> direct_lifts(int alpha, int s2, int t2) const;
  /// The unique lift of α along s' ⊗ t' = α.dst; throws ConsistencyError when not unique.
  [[nodiscard]] std::pair<int, int> split(int alpha, int s2, int t2) const;
  /// Splits α along a decomposition (x_1 … x_k) of α.dst, left to right.
  [[nodiscard]] std::vector<int> split(int alpha, const std::vector<int>& parts) const;

  // Optional labels for the chain builders: chain of each 1-cell (object ids),
  // underlying Δ⁺ map of each 2-cell.
  [[nodiscard]] bool labelled() const { return !chains_.empty(); }
  [[nodiscard]] const std::vector<int>& chain(int cell) const { return chains_[static_cast<std::size_t>(cell)]; }
  [[nodiscard]] const Monotone& label(int a) const { return labels_[static_cast<std::size_t>(a)]; }
  [[nodiscard]] std::optional<int> find_chain(const std::vector<int>& chain) const;
  /// The 2-cell over φ with the given source chain (unique for chain groupements).
  [[nodiscard]] std::optional<int> find_labelled(int src, const Monotone& phi) const;
  void set_labels(std::vector<std::vector<int>> chains, std::vector<Monotone> labels);

 private:
  static std::uint64_t key(int a, int b) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) | static_cast<std::uint32_t>(b);
  }

  std::string name_;
  int bound_;
  std::vector<std::string> objects_;
  std::vector<int> units_;
  std::vector<OneCell> cells_;
  std::vector<TwoCell> two_;
  std::vector<int> identity2_;
  std::unordered_map<std::uint64_t, int> vcomp_;
  std::unordered_map<std::uint64_t, int> hcomp1_;
  std::unordered_map<std::uint64_t, int> hcomp2_;

  // derived
  std::vector<std::vector<int>> into_;
  std::vector<std::vector<int>> out_of_;
  std::vector<std::vector<std::pair<int, int>>> splits_;
  std::vector<std::pair<int, int>> factor_;
  std::vector<std::tuple<int, int, int>> hcomp2_sorted_;
  std::map<std::tuple<int, int, int>, std::vector<std::pair<int, int>>> lifts_;
  std::unordered_map<std::string, int> cell_by_name_;
  std::unordered_map<std::string, int> two_by_name_;

  std::vector<std::vector<int>> chains_;
  std::vector<Monotone> labels_;
  std::map<std::vector<int>, int> cell_by_chain_;
  std::map<std::pair<int, Monotone>, int> two_by_label_;
};

/// Δ⁺ truncated at m: one object, 1-cells 0̲..m̲, 2-cells the monotone maps.
Groupement build_delta_plus(int m);
/// P_X̄ truncated at m: chains in X of length <= m, 2-cells over Δ⁺ via Joyal duality.
Groupement build_px(const std::vector<std::string>& x, int m);
/// B_{0->1}: objects {0, 1} with hom(0, 1) = B and trivial other homs.
Groupement build_from_reedy1(const ReedyCat& b);

/// Every structural invariant, with witnesses.
Report validate_simple_lr(const Groupement& g);
/// Existence/uniqueness of direct lifts along every decomposition, and functoriality of lifts.
Report check_direct_divisibility(const Groupement& g);
/// (inverse, direct) with direct ∘ inverse = u, computed by search and checked unique.
std::pair<int, int> reedy_factorize(const Groupement& g, int u);

}  // namespace colax::reedy2
