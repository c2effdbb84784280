#pragma once

#include <optional>
#include <vector>

#include "colax/base/base.hpp"
#include "colax/diagram/colax_diagram.hpp"
#include "colax/reedy2/fincat.hpp"

namespace colax::diagram {

/// Objects: non-identity direct 2-cells α: s -> z. Morphisms α -> α': direct-or-identity γ
/// with α' ∘ γ = α.
struct LatchingIndex {
  struct Morphism {
    int from = 0;
    int to = 0;
    int gamma = 0;
  };
  int z = 0;
  std::vector<int> objects;
  std::vector<Morphism> morphisms;  // identities included
  reedy2::FinCat category;
};

/// Objects: ((x_1 … x_k), β) with β: z -> x_1 ⊗ … ⊗ x_k inverse-or-identity and every x_i
/// a non-unit, excluding (k = 1, β = id). Morphisms go from coarser to finer decompositions:
/// a grouping of the target parts into k consecutive blocks and inverse-or-identity
/// u_i: x_i -> ⊗block_i with (⊗u_i) ∘ β = β'.
struct MatchingIndex {
  struct Object {
    std::vector<int> parts;
    int beta = 0;
  };
  struct Morphism {
    int from = 0;
    int to = 0;
    std::vector<int> blocks;  // block sizes, summing to the target length
    std::vector<int> u;
  };
  int z = 0;
  std::vector<Object> objects;
  std::vector<Morphism> morphisms;  // identities included
  reedy2::FinCat category;

  [[nodiscard]] std::optional<int> find(const std::vector<int>& parts, int beta) const;
};

/// Throws DomainError when z is a unit.
LatchingIndex latching_index(const Groupement& g, int z);
MatchingIndex matching_index(const Groupement& g, int z);

struct LatchingObject {
  LatchingIndex index;
  base::FinDiagram diagram;
  base::Cone cocone;
  /// L(F, z) -> F z, when F has a value at z.
  std::optional<Arrow> to_value;
};

struct MatchingObject {
  MatchingIndex index;
  base::FinDiagram diagram;
  base::Cone cone;
  /// F z -> M(F, z), when F has a value at z.
  std::optional<Arrow> from_value;
};

/// Image of a matching-index morphism: (⊗ iterated colaxity of blocks) ∘ (⊗ F u_i).
Arrow matching_arrow(const ColaxDiagram& f, const MatchingIndex& idx, const MatchingIndex::Morphism& m);
/// Leg F z -> ⊗ F x_i of the canonical cone: iterated colaxity ∘ F β.
Arrow matching_leg(const ColaxDiagram& f, const MatchingIndex::Object& o);

LatchingObject colax_latching_object(const ColaxDiagram& f, int z);
MatchingObject colax_matching_object(const ColaxDiagram& f, int z);

struct CanonicalMap {
  LatchingObject latching;
  MatchingObject matching;
  Arrow iz;
  /// Components F s -> ⊗ F x_i, indexed [latching object][matching object].
  std::vector<std::vector<Arrow>> components;
};

/// i_z: L(F, z) -> M(F, z) built from the values of F below deg z.
/// Throws ConsistencyError naming the failing triangle when the assembled cone is incompatible.
CanonicalMap canonical_map_iz(const ColaxDiagram& f, int z);
/// Component of i_z at (latching object α, matching object (x, β)).
Arrow iz_component(const ColaxDiagram& f, int alpha, const MatchingIndex::Object& o);

}  // namespace colax::diagram
