#pragma once

#include <cstddef>
#include <limits>
#include <memory>
#include <optional>
#include <random>
#include <vector>

#include "colax/diagram/colax_diagram.hpp"

namespace colax::homotopy {

using diagram::ColaxDiagram;
using diagram::Icon;

struct SearchLimits {
  std::size_t cap = std::numeric_limits<std::size_t>::max();  // solutions to collect
  std::size_t budget = std::numeric_limits<std::size_t>::max();  // search nodes to visit
};

/// Every icon F -> G, in deterministic order (components ordered by degree, then by 1-cell id,
/// candidates in base hom order).
std::vector<Icon> enumerate_icons(const ColaxDiagram& f, const ColaxDiagram& g, SearchLimits lim = {});

/// Every valid diagram with the given values (one per 1-cell; units and out-of-scope entries ignored).
std::vector<ColaxDiagram> enumerate_with_values(const std::shared_ptr<const reedy2::Groupement>& g, const base::Base& b,
                                                int level, const std::vector<int>& sizes, SearchLimits lim = {});

/// Every valid diagram whose non-unit values have size/dimension in [min_size, max_size].
std::vector<ColaxDiagram> enumerate_diagrams(const std::shared_ptr<const reedy2::Groupement>& g, const base::Base& b,
                                             int level, int min_size, int max_size, SearchLimits lim = {});

/// A random valid diagram: random values, then a randomized backtracking search.
/// Returns nullopt when `attempts` value draws all fail within the node budget.
std::optional<ColaxDiagram> random_diagram(const std::shared_ptr<const reedy2::Groupement>& g, const base::Base& b,
                                           int level, int min_size, int max_size, std::mt19937& rng, int attempts = 50,
                                           std::size_t budget = 200000);

/// A random icon F -> G found by randomized backtracking, or nullopt.
std::optional<Icon> random_icon(const ColaxDiagram& f, const ColaxDiagram& g, std::mt19937& rng,
                                std::size_t budget = 200000);

}  // namespace colax::homotopy
