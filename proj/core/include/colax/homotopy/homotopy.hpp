#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "colax/base/base.hpp"
#include "colax/diagram/colax_diagram.hpp"
#include "colax/diagram/latching.hpp"
#include "colax/report.hpp"

namespace colax::homotopy {

using base::Arrow;
using base::Base;
using base::Object;
using base::System;
using diagram::ColaxDiagram;
using diagram::Icon;
using reedy2::Groupement;

/// A diagram of colax diagrams: nodes and generating icons.
struct DiagramFamily {
  struct Edge {
    int from = 0;
    int to = 0;
    Icon icon;
  };
  std::vector<ColaxDiagram> nodes;
  std::vector<Edge> edges;
};

/// Relative latching and matching maps of an icon σ: F -> G at one non-unit 1-cell z.
struct RelativeAt {
  int z = 0;
  base::Pushout latch_pushout;   // F z ∪_{L(F,z)} L(G,z)
  Arrow latch_rel;               // -> G z
  base::Pullback match_pullback; // G z ×_{M(G,z)} M(F,z)
  Arrow match_rel;               // F z ->
};

struct RelativeMaps {
  std::vector<RelativeAt> at;  // non-unit 1-cells in scope, id order
};

struct Flag {
  bool value = true;
  std::string witness;  // first failing 1-cell
};

struct Classification {
  Flag we;
  Flag cof;
  Flag fib;
  /// Membership of the relative maps in the classes of each registered system.
  Flag left_trivcof_fib;
  Flag right_trivcof_fib;
  Flag left_cof_trivfib;
  Flag right_cof_trivfib;
  Flag left_ofs;
  Flag right_ofs;

  [[nodiscard]] bool in_left(System s) const;
  [[nodiscard]] bool in_right(System s) const;
};

struct Options {
  bool parallel = false;
  /// Process the cells of each stage in an order drawn from this seed.
  std::optional<unsigned> shuffle;
};

/// Non-unit 1-cells in scope grouped by degree (index = degree), id order within a degree.
std::vector<std::vector<int>> stages(const ColaxDiagram& f);

/// L(F,z) -> L(G,z) induced by components.
Arrow latching_map(const Groupement& g, const Base& b, const diagram::LatchingObject& from, const diagram::LatchingObject& to,
                   const std::function<Arrow(int)>& comp);
/// M(F,z) -> M(G,z) induced by components.
Arrow matching_map(const Groupement& g, const Base& b, const diagram::MatchingObject& from, const diagram::MatchingObject& to,
                   const std::function<Arrow(int)>& comp);

RelativeAt relative_at(const Icon& s, int z);
RelativeMaps relative_maps(const Icon& s, Options opt = {});
Classification classify(const Icon& s, Options opt = {});
/// Flags from already computed relative maps.
Classification classify(const Icon& s, const RelativeMaps& r);

struct ColimitResult {
  ColaxDiagram apex;
  std::vector<Icon> legs;  // node -> apex
};
struct LimitResult {
  ColaxDiagram apex;
  std::vector<Icon> legs;  // apex -> node
};

/// Level-wise colimits; 2-cells out of a unit contribute one copy of the unit per cell.
ColimitResult colimit_colax(const std::shared_ptr<const Groupement>& g, const Base& b, int level, const DiagramFamily& d);
/// Stage-wise limit: Ẽz is the limit of M(E,z) -> M(X_i,z) <- X_i z over the family.
/// Throws PreconditionError when the groupement is not direct-divisible.
LimitResult limit_colax(const std::shared_ptr<const Groupement>& g, const Base& b, int level, const DiagramFamily& d,
                        Options opt = {});

struct Factorization {
  Icon left;
  ColaxDiagram middle;
  Icon right;
};

/// σ = ρ ∘ λ with the relative latching maps of λ in the left class of `system` and the
/// relative matching maps of ρ in the right class. Every stage is checked with extend_check.
Factorization factor_icon(const Icon& s, System system, Options opt = {});

struct LiftResult {
  std::optional<Icon> lift;
  std::string obstruction;  // 1-cell and reason when absent
};

/// Diagonal h: B -> X with h ∘ λ = top and ρ ∘ h = bottom for λ: A -> B, ρ: X -> Y.
/// Throws PreconditionError when the square does not commute.
LiftResult lift_icon(const Icon& lambda, const Icon& rho, const Icon& top, const Icon& bottom);

/// Component-wise equality of two icons with the same endpoints.
bool same_icon(const Icon& a, const Icon& b);

}  // namespace colax::homotopy
