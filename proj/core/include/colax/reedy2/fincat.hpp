#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "colax/report.hpp"

namespace colax::reedy2 {

/// A finite category given by explicit tables. Arrows include the identities,
/// which are created together with their objects.
class FinCat {
 public:
  struct Arrow {
    int src = 0;
    int dst = 0;
    std::string name;
  };

  int add_object(std::string name);
  int add_arrow(int src, int dst, std::string name);
  /// Records g ∘ f = h. Composites with identities are implicit.
  void set_compose(int f, int g, int h);

  [[nodiscard]] int object_count() const { return static_cast<int>(objects_.size()); }
  [[nodiscard]] int arrow_count() const { return static_cast<int>(arrows_.size()); }
  [[nodiscard]] const std::string& object_name(int o) const { return objects_[static_cast<std::size_t>(o)]; }
  [[nodiscard]] const Arrow& arrow(int a) const { return arrows_[static_cast<std::size_t>(a)]; }
  [[nodiscard]] int identity(int o) const { return identities_[static_cast<std::size_t>(o)]; }
  [[nodiscard]] bool is_identity(int a) const;
  [[nodiscard]] std::optional<int> find_object(const std::string& name) const;
  [[nodiscard]] std::optional<int> find_arrow(const std::string& name) const;

  /// g ∘ f, or nullopt when not recorded. Throws EndpointError when f.dst != g.src.
  [[nodiscard]] std::optional<int> try_compose(int f, int g) const;
  /// g ∘ f; throws DomainError when the table has no entry.
  [[nodiscard]] int compose(int f, int g) const;

  [[nodiscard]] std::vector<int> hom(int a, int b) const;
  [[nodiscard]] std::vector<int> out_of(int a) const;
  [[nodiscard]] std::vector<int> into(int b) const;

  /// Closure, associativity and unit laws on all composable pairs/triples.
  [[nodiscard]] Report validate() const;

  /// Opposite category (arrow ids and object ids preserved).
  [[nodiscard]] FinCat opposite() const;

 private:
  static std::uint64_t key(int a, int b) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) | static_cast<std::uint32_t>(b);
  }

  std::vector<std::string> objects_;
  std::vector<Arrow> arrows_;
  std::vector<int> identities_;
  std::unordered_map<std::uint64_t, int> comp_;
};

enum class CellClass { Identity, Direct, Inverse, Mixed };

std::string class_name(CellClass c);

/// A Reedy 1-category: degrees on objects and a direct/inverse classification of arrows.
struct ReedyCat {
  FinCat cat;
  std::vector<int> degree;      // per object
  std::vector<CellClass> cls;   // per arrow

  int add_object(std::string name, int deg);
  int add_arrow(int src, int dst, std::string name, CellClass c);

  [[nodiscard]] bool direct_or_identity(int a) const {
    return cls[static_cast<std::size_t>(a)] == CellClass::Direct || cls[static_cast<std::size_t>(a)] == CellClass::Identity;
  }
  [[nodiscard]] bool inverse_or_identity(int a) const {
    return cls[static_cast<std::size_t>(a)] == CellClass::Inverse || cls[static_cast<std::size_t>(a)] == CellClass::Identity;
  }

  /// Category laws, degree conditions, unique direct∘inverse factorization, no nontrivial isos.
  [[nodiscard]] Report validate() const;
  /// (inverse part, direct part) with direct ∘ inverse = a. Throws DomainError when none exists.
  [[nodiscard]] std::pair<int, int> factorize(int a) const;

  /// Opposite Reedy category: direct and inverse swap.
  [[nodiscard]] ReedyCat opposite() const;
};

/// The walking arrow a -> b with deg a = 0, deg b = 1.
ReedyCat walking_arrow();
/// The span-shaped category a -> c <- b with deg a = deg b = 0, deg c = 1 (all direct).
ReedyCat walking_cospan_direct();
/// b <- a -> c with deg a = 1, deg b = deg c = 0 (all inverse).
ReedyCat walking_span_inverse();
/// The truncated simplex category Δ^{≤n}: objects [0..n], all monotone maps,
/// injections direct, surjections inverse.
ReedyCat delta_truncated(int n);

}  // namespace colax::reedy2
