#pragma once

#include <memory>
#include <string>
#include <vector>

#include "colax/homotopy/homotopy.hpp"
#include "colax/homotopy/search.hpp"
#include "colax/reedy2/fincat.hpp"
#include "colax/report.hpp"

namespace colax::homotopy {

/// A family of diagrams and icons between them.
struct ModelSample {
  std::string name;
  std::vector<ColaxDiagram> diagrams;
  std::vector<Icon> icons;
  /// Set when the groupement is B_{0->1} of this category: verdicts are compared with the classical ones.
  std::shared_ptr<const reedy2::ReedyCat> reedy1;
  /// For chain groupements over FinSet: verdicts are compared with unital Δ_X-presheaves.
  bool presheaves = false;
};

struct ModelLimits {
  std::size_t squares = 400;      // lifting squares per system
  std::size_t square_tries = 20000;
  std::size_t pairs = static_cast<std::size_t>(-1);  // composable pairs
  unsigned seed = 1;
  Options opt;
};

/// All diagrams with values in [min_size, max_size] and all icons between them.
ModelSample enumerated_sample(std::string name, const std::shared_ptr<const Groupement>& g, const Base& b, int level,
                              int min_size, int max_size, SearchLimits icon_limits = {});

/// The same data over another base with the same objects (e.g. one with mutated predicates).
ModelSample rebase(const ModelSample& s, const Base& b);
ColaxDiagram rebase(const ColaxDiagram& f, const Base& b);
Icon rebase(const Icon& s, const Base& b);

/// 2-of-3, closure of the classes under composition, both factorizations, both lifting properties,
/// and agreement with the classical Reedy structures when the sample asks for it.
Report verify_model_axioms(const ModelSample& s, const ModelLimits& lim = {});

}  // namespace colax::homotopy
