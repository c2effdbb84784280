#pragma once

#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "colax/base/base.hpp"
#include "colax/reedy2/groupement.hpp"
#include "colax/report.hpp"

namespace colax::diagram {

using base::Arrow;
using base::Base;
using base::Object;
using reedy2::Groupement;

/// A normal colax diagram on the truncation of a groupement at `level`.
///
/// Values live on 1-cells of degree <= level; units are fixed to the monoidal unit,
/// identity 2-cells act by identities and colaxity maps with a unit factor are identities.
class ColaxDiagram {
 public:
  ColaxDiagram(std::shared_ptr<const Groupement> g, Base base, int level);

  [[nodiscard]] const Groupement& groupement() const { return *g_; }
  [[nodiscard]] const std::shared_ptr<const Groupement>& groupement_ptr() const { return g_; }
  [[nodiscard]] const Base& base() const { return base_; }
  [[nodiscard]] int level() const { return level_; }
  [[nodiscard]] bool in_scope(int cell) const { return g_->degree(cell) <= level_; }
  [[nodiscard]] bool in_scope2(int two_cell) const;

  void set_value(int cell, Object o);
  void set_action(int two_cell, Arrow a);
  void set_colax(int s, int t, Arrow a);

  [[nodiscard]] bool has_value(int cell) const;
  [[nodiscard]] bool has_action(int two_cell) const;
  [[nodiscard]] bool has_colax(int s, int t) const;
  [[nodiscard]] Object value(int cell) const;
  [[nodiscard]] Arrow action(int two_cell) const;
  /// F(s ⊗ t) -> F s ⊗ F t.
  [[nodiscard]] Arrow colax(int s, int t) const;
  /// F(x_1 ⊗ … ⊗ x_k) -> F x_1 ⊗ … ⊗ F x_k, splitting off x_1 first.
  [[nodiscard]] Arrow iterated_colax(const std::vector<int>& parts) const;
  [[nodiscard]] Object tensor_values(const std::vector<int>& parts) const;

  /// Every non-unit pair (s, t) with s ⊗ t in scope.
  [[nodiscard]] std::vector<std::pair<int, int>> colax_pairs() const;
  [[nodiscard]] const std::map<std::pair<int, int>, Arrow>& colax_table() const { return colax_; }

  friend bool operator==(const ColaxDiagram& a, const ColaxDiagram& b);

 private:
  std::shared_ptr<const Groupement> g_;
  Base base_;
  int level_;
  std::vector<std::optional<Object>> val1_;
  std::vector<std::optional<Arrow>> val2_;
  std::map<std::pair<int, int>, Arrow> colax_;
};

/// A transformation between colax diagrams, identity on objects, with one component per 1-cell.
struct Icon {
  ColaxDiagram src;
  ColaxDiagram dst;
  std::vector<std::optional<Arrow>> comp;

  Icon(ColaxDiagram s, ColaxDiagram d);
  void set(int cell, Arrow a);
  [[nodiscard]] Arrow component(int cell) const;
  [[nodiscard]] bool has(int cell) const;

  static Icon identity(const ColaxDiagram& f);
};

/// Normality, presence, functoriality, naturality and coassociativity.
/// Only constraints whose top 1-cell has degree >= from_degree are checked.
Report validate_colax(const ColaxDiagram& f, int from_degree = 0);
/// Unit components, naturality against 2-cells, compatibility with colaxity.
Report validate_icon(const Icon& s, int from_degree = 0);

/// Restriction to the truncation at k. Throws TruncationError when k > level.
ColaxDiagram truncate(const ColaxDiagram& f, int k);
Icon truncate(const Icon& s, int k);
/// Checks that `candidate` (level m+1) restricts to `f` (level m) and that every
/// constraint touching degree m+1 holds.
Report extend_check(const ColaxDiagram& f, const ColaxDiagram& candidate);

/// σ ∘ τ for τ: F -> G, σ: G -> H.
Icon compose(const Icon& tau, const Icon& sigma);

/// The constant-unit diagram: every value is the unit and every arrow an identity.
ColaxDiagram constant_unit(std::shared_ptr<const Groupement> g, const Base& base, int level);

}  // namespace colax::diagram
