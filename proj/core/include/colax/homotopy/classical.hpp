#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "colax/base/base.hpp"
#include "colax/diagram/colax_diagram.hpp"
#include "colax/reedy2/fincat.hpp"

namespace colax::homotopy::classical {

using base::Arrow;
using base::Base;
using base::Object;
using reedy2::ReedyCat;

/// A functor from a Reedy 1-category into a finite base.
struct Functor {
  std::shared_ptr<const ReedyCat> cat;
  Base base;
  std::vector<Object> values;  // per object
  std::vector<Arrow> actions;  // per arrow, identities included

  Functor(std::shared_ptr<const ReedyCat> c, Base b);
  [[nodiscard]] bool operator==(const Functor& o) const { return values == o.values && actions == o.actions; }
};

struct NatTrans {
  Functor src;
  Functor dst;
  std::vector<Arrow> comp;  // per object
};

/// Functoriality of the action table.
bool is_functor(const Functor& f);
bool is_natural(const NatTrans& t);

struct Latching {
  std::vector<int> arrows;  // non-identity direct arrows into the object
  base::FinDiagram diagram;
  base::Cone cocone;
  Arrow to_value;
};
struct Matching {
  std::vector<int> arrows;  // non-identity inverse arrows out of the object
  base::FinDiagram diagram;
  base::Cone cone;
  Arrow from_value;
};

Latching latching(const Functor& f, int object);
Matching matching(const Functor& f, int object);

struct Relative {
  Arrow latch_rel;
  Arrow match_rel;
};
Relative relative(const NatTrans& t, int object);

struct Verdict {
  bool we = true;
  bool cof = true;
  bool fib = true;
  bool left[3] = {true, true, true};   // per System, in enum order
  bool right[3] = {true, true, true};

  friend bool operator==(const Verdict& a, const Verdict& b);
};
Verdict classify(const NatTrans& t);

struct Factorization {
  NatTrans left;
  Functor middle;
  NatTrans right;
};
/// Reedy factorization by induction on degree.
Factorization factorize(const NatTrans& t, base::System s);

/// Colax diagrams on the groupement built from `cat` correspond to functors on `cat`.
diagram::ColaxDiagram to_colax(const Functor& f, const std::shared_ptr<const reedy2::Groupement>& g);
Functor from_colax(const diagram::ColaxDiagram& f, const std::shared_ptr<const ReedyCat>& cat);
diagram::Icon to_colax(const NatTrans& t, const std::shared_ptr<const reedy2::Groupement>& g);
NatTrans from_colax(const diagram::Icon& t, const std::shared_ptr<const ReedyCat>& cat);

/// Every functor with values of size/dimension in [min_size, max_size], by brute force.
std::vector<Functor> enumerate_functors(const std::shared_ptr<const ReedyCat>& cat, const Base& b, int min_size,
                                        int max_size, std::size_t cap = static_cast<std::size_t>(-1));
std::vector<NatTrans> enumerate_nat(const Functor& f, const Functor& g);

}  // namespace colax::homotopy::classical
