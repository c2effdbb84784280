#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "colax/base/base.hpp"
#include "colax/diagram/colax_diagram.hpp"
#include "colax/homotopy/classical.hpp"
#include "colax/reedy2/fincat.hpp"
#include "colax/reedy2/groupement.hpp"
#include "colax/reedy2/monotone.hpp"
#include "colax/report.hpp"

namespace colax::segal {

using base::Arrow;
using base::Base;
using base::Object;
using reedy2::Monotone;

/// Δ_X truncated at n_max: sequences (x_0..x_n) and morphisms (φ: [k] -> [n], y -> x) with y_i = x_{φ(i)}.
class DeltaX {
 public:
  struct Morphism {
    int src = 0;
    int dst = 0;
    Monotone phi;  // [k] -> [n] as Monotone{k+1, n+1}
  };

  DeltaX(std::vector<std::string> x, int n_max);

  [[nodiscard]] const std::vector<std::string>& labels() const { return x_; }
  [[nodiscard]] int n_max() const { return n_max_; }
  [[nodiscard]] int object_count() const { return static_cast<int>(objects_.size()); }
  [[nodiscard]] int morphism_count() const { return static_cast<int>(mors_.size()); }
  [[nodiscard]] const std::vector<int>& sequence(int o) const { return objects_[static_cast<std::size_t>(o)]; }
  [[nodiscard]] int dim(int o) const { return static_cast<int>(sequence(o).size()) - 1; }
  [[nodiscard]] const Morphism& morphism(int m) const { return mors_[static_cast<std::size_t>(m)]; }
  [[nodiscard]] std::string name(int o) const;
  [[nodiscard]] std::string morphism_name(int m) const;

  [[nodiscard]] std::optional<int> find(const std::vector<int>& seq) const;
  /// The unique morphism over φ with the given target.
  [[nodiscard]] int lift(const Monotone& phi, int target) const;
  [[nodiscard]] std::optional<int> find_morphism(int src, int dst, const Monotone& phi) const;
  /// g ∘ f for f: a -> b, g: b -> c.
  [[nodiscard]] int compose(int f, int g) const;
  [[nodiscard]] int identity(int o) const;
  [[nodiscard]] const std::vector<int>& into(int o) const { return into_[static_cast<std::size_t>(o)]; }

 private:
  std::vector<std::string> x_;
  int n_max_;
  std::vector<std::vector<int>> objects_;
  std::map<std::vector<int>, int> by_seq_;
  std::vector<Morphism> mors_;
  std::map<std::pair<int, Monotone>, int> by_lift_;  // (target, φ)
  std::vector<std::vector<int>> into_;
};

/// Unique-lifting over Δ, composition over Δ, and the fibre counts.
Report check_fibration(const DeltaX& d);

/// Joyal duality Δ⁺(n̲, k̲) -> Ω([k], [n]) for n, k <= m.
struct JoyalIso {
  int m = 0;
  std::map<Monotone, Monotone> forward;
  std::map<Monotone, Monotone> backward;
};

/// Built from T(μ), T(η) and T(id_1) by ordinal sums and (contravariant) composition.
JoyalIso joyal_T(int m);
/// The image of one Δ⁺ map computed through a generator decomposition.
Monotone joyal_from_generators(const Monotone& phi);
/// Bijectivity per hom-set against enumerated Ω, inverse tables, contravariant functoriality,
/// compatibility with ordinal sums and with the closed formula.
Report check_joyal(const JoyalIso& t);

/// J: P_X̄(x, y)^{≤m} -> Ω(x, y)^op on the chains from x to y.
struct JTable {
  int x = 0;
  int y = 0;
  std::map<int, int> object;    // 1-cell -> Δ_X object
  std::map<int, int> morphism;  // 2-cell c -> d  ->  Δ_X morphism J d -> J c
};
JTable iso_J(const reedy2::Groupement& g, const DeltaX& d, int x, int y);
/// Bijective on objects and on every hom-set, and contravariantly functorial.
Report check_iso_J(const reedy2::Groupement& g, const DeltaX& d, const JTable& j);

/// A presheaf on Δ_X with values in a cartesian base, terminal on singletons.
struct UnitalPresheaf {
  std::shared_ptr<const DeltaX> shape;
  Base base;
  std::vector<Object> values;  // per object
  std::vector<Arrow> actions;  // per morphism y -> x: values[x] -> values[y]

  UnitalPresheaf(std::shared_ptr<const DeltaX> d, Base b);
  friend bool operator==(const UnitalPresheaf& a, const UnitalPresheaf& b) {
    return a.values == b.values && a.actions == b.actions;
  }
};

/// Unitality and contravariant functoriality on all composable pairs.
Report check_presheaf(const UnitalPresheaf& p);

/// Δ_𝓕. Throws DomainError for a non-cartesian base or a chain groupement that does not match the shape.
UnitalPresheaf to_presheaf(const diagram::ColaxDiagram& f, const std::shared_ptr<const DeltaX>& d);
/// Throws DomainError when the presheaf is not unital.
diagram::ColaxDiagram from_presheaf(const UnitalPresheaf& p, const std::shared_ptr<const reedy2::Groupement>& g);

struct PresheafMap {
  UnitalPresheaf src;
  UnitalPresheaf dst;
  std::vector<Arrow> comp;  // per object
};
PresheafMap to_presheaf(const diagram::Icon& s, const std::shared_ptr<const DeltaX>& d);
diagram::Icon from_presheaf(const PresheafMap& t, const std::shared_ptr<const reedy2::Groupement>& g);

/// Δ_X carries degree n with injections direct and surjections inverse; presheaves live on the opposite.
struct ClassicalShape {
  std::shared_ptr<const reedy2::ReedyCat> cat;  // Δ_X^op, objects indexed like Δ_X
  std::vector<int> arrow_of;                    // per Δ_X morphism
};
ClassicalShape classical_shape(const DeltaX& d);
homotopy::classical::Functor to_classical(const UnitalPresheaf& p, const ClassicalShape& s);
homotopy::classical::NatTrans to_classical(const PresheafMap& t, const ClassicalShape& s);

/// For each chain of degree >= 2, whether the total colaxity map onto its edges is a base weak equivalence.
Report check_segal_conditions(const diagram::ColaxDiagram& f);

}  // namespace colax::segal
