#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "colax/base/field.hpp"

namespace colax::base {

enum class Kind { FinSet, FinVect };

/// An object of a skeletal finite base: a finite set {0..n-1} or the vector space F_p^n.
struct Object {
  Kind kind = Kind::FinSet;
  int n = 0;

  friend auto operator<=>(const Object&, const Object&) = default;
};

/// A morphism. FinSet: `data` is the table src.n -> dst.n.
/// FinVect: `data` is the dst.n x src.n matrix, row-major, entries mod p.
struct Arrow {
  Object src;
  Object dst;
  std::vector<int> data;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

std::string to_string(const Object& o);
std::string to_string(const Arrow& f);

/// The registered factorization systems.
///   TrivCofFib  : (cof ∩ we, fib)
///   CofTrivFib  : (cof, fib ∩ we)
///   Ofs         : the standalone orthogonal system (surj, inj) in FinSet, (epi, mono) in FinVect
enum class System { TrivCofFib, CofTrivFib, Ofs };

std::string_view system_name(System s);
/// Throws DomainError on an unknown name.
System parse_system(std::string_view name);

/// Model data of a base. Defaults follow the base kind; predicates may be replaced
/// (mutation fixtures do this).
struct ModelData {
  std::function<bool(const Arrow&)> we;
  std::function<bool(const Arrow&)> cof;
  std::function<bool(const Arrow&)> fib;
  std::function<bool(const Arrow&)> ofs_left;
  std::function<bool(const Arrow&)> ofs_right;
};

/// Finite diagram in the base: nodes and generating edges. Commutation along the
/// generating edges is all a (co)limit needs to see.
struct FinDiagram {
  struct Edge {
    int from = 0;
    int to = 0;
    Arrow arrow;
  };
  std::vector<Object> nodes;
  std::vector<Edge> edges;

  int add_node(Object o) {
    nodes.push_back(o);
    return static_cast<int>(nodes.size()) - 1;
  }
  void add_edge(int from, int to, Arrow a) { edges.push_back({from, to, std::move(a)}); }
};

/// Limit cone (legs apex -> node) or colimit cocone (legs node -> apex), together with
/// the private data needed to build mediating arrows.
struct Cone {
  Object apex;
  std::vector<Arrow> legs;

  // FinSet limit: the tuples of the apex in lexicographic order.
  std::vector<std::vector<int>> tuples;
  // FinSet colimit: class representative (global index into the disjoint union).
  std::vector<int> representatives;
  // FinVect limit: free column of each basis vector. FinVect colimit: section columns.
  std::vector<int> columns;
  // Offsets of each node in the concatenation of all nodes.
  std::vector<int> offsets;
  int total = 0;
};

class Base {
 public:
  static Base finset();
  static Base finvect(int p = 2);

  [[nodiscard]] Kind kind() const { return kind_; }
  [[nodiscard]] int prime() const { return p_; }
  [[nodiscard]] bool cartesian() const { return kind_ == Kind::FinSet; }
  [[nodiscard]] std::string name() const;

  [[nodiscard]] Object object(int n) const { return {kind_, n}; }
  [[nodiscard]] Object unit() const { return object(1); }
  [[nodiscard]] Object initial() const { return object(0); }
  [[nodiscard]] Object terminal() const { return object(kind_ == Kind::FinSet ? 1 : 0); }

  [[nodiscard]] Arrow identity(Object a) const;
  /// g ∘ f. Throws EndpointError when f.dst != g.src.
  [[nodiscard]] Arrow compose(const Arrow& f, const Arrow& g) const;
  [[nodiscard]] Object tensor(Object a, Object b) const { return object(a.n * b.n); }
  [[nodiscard]] Arrow tensor(const Arrow& f, const Arrow& g) const;
  /// Folded tensor of a list (unit for the empty list).
  [[nodiscard]] Object tensor(std::span<const Object> objs) const;
  [[nodiscard]] Arrow tensor(std::span<const Arrow> arrows) const;

  [[nodiscard]] Arrow from_initial(Object a) const;
  [[nodiscard]] Arrow to_terminal(Object a) const;

  /// Builds an arrow from a literal table / row-major matrix, validating shape and range.
  [[nodiscard]] Arrow arrow(Object src, Object dst, std::vector<int> data) const;
  [[nodiscard]] Matrix matrix(const Arrow& f) const;
  [[nodiscard]] Arrow from_matrix(const Matrix& m) const;

  [[nodiscard]] bool injective(const Arrow& f) const;
  [[nodiscard]] bool surjective(const Arrow& f) const;
  [[nodiscard]] bool is_iso(const Arrow& f) const { return injective(f) && surjective(f); }
  [[nodiscard]] std::optional<Arrow> inverse(const Arrow& f) const;

  [[nodiscard]] const ModelData& model() const { return model_; }
  void set_model(ModelData m) { model_ = std::move(m); }
  [[nodiscard]] bool we(const Arrow& f) const { return model_.we(f); }
  [[nodiscard]] bool cof(const Arrow& f) const { return model_.cof(f); }
  [[nodiscard]] bool fib(const Arrow& f) const { return model_.fib(f); }
  [[nodiscard]] bool in_left(const Arrow& f, System s) const;
  [[nodiscard]] bool in_right(const Arrow& f, System s) const;

  /// f = p ∘ i with i in the left class and p in the right class of `s`.
  [[nodiscard]] std::pair<Arrow, Arrow> factorize(const Arrow& f, System s) const;

  /// Diagonal h with h∘i = top and p∘h = bottom; first in deterministic order.
  /// Throws PreconditionError when p∘top != bottom∘i.
  [[nodiscard]] std::optional<Arrow> find_lift(const Arrow& i, const Arrow& p, const Arrow& top,
                                               const Arrow& bottom) const;

  [[nodiscard]] Cone limit(const FinDiagram& d) const;
  [[nodiscard]] Cone colimit(const FinDiagram& d) const;
  /// Unique arrow apex_w -> limit apex through which `legs` (apex_w -> node) factor.
  /// Throws PreconditionError when the legs do not form a cone.
  [[nodiscard]] Arrow limit_mediator(const FinDiagram& d, const Cone& lim, Object apex_w,
                                     std::span<const Arrow> legs) const;
  /// Unique arrow colimit apex -> apex_w through which `legs` (node -> apex_w) factor.
  [[nodiscard]] Arrow colimit_mediator(const FinDiagram& d, const Cone& colim, Object apex_w,
                                       std::span<const Arrow> legs) const;

  /// Every arrow a -> b, in deterministic (lexicographic) order.
  [[nodiscard]] std::vector<Arrow> hom(Object a, Object b) const;
  /// Saturates at UINT64_MAX.
  [[nodiscard]] std::uint64_t hom_count(Object a, Object b) const;

  /// Row-major pairing / projections for the tensor of a list of finite sets.
  [[nodiscard]] Arrow projection(std::span<const Object> factors, int which) const;

 private:
  Base(Kind k, int p);

  Kind kind_;
  int p_;
  ModelData model_;
};

struct Pushout {
  Cone cone;      // legs: [0] from B, [1] from C, [2] from A
  FinDiagram diagram;
};
struct Pullback {
  Cone cone;      // legs: [0] to B, [1] to C, [2] to D
  FinDiagram diagram;
};

/// Pushout of B <-f- A -g-> C.
Pushout pushout(const Base& base, const Arrow& f, const Arrow& g);
/// Pullback of B -f-> D <-g- C.
Pullback pullback(const Base& base, const Arrow& f, const Arrow& g);
/// Arrow pushout -> W from b: B -> W and c: C -> W.
Arrow pushout_mediator(const Base& base, const Pushout& po, const Arrow& b, const Arrow& c);
/// Arrow W -> pullback from b: W -> B and c: W -> C.
Arrow pullback_mediator(const Base& base, const Pullback& pb, const Arrow& b, const Arrow& c);

}  // namespace colax::base
