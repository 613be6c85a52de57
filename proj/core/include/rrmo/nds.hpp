#pragma once

#include <vector>

#include "rrmo/fitness.hpp"

namespace rrmo {

/// Dense ranked partition into non-domination layers. rank[i] is the 0-based
/// layer of input i; layers[k] lists the input indices of layer k in input
/// order. Duplicate fitness vectors always share a layer.
struct SortedLayers {
    std::vector<int> rank;
    std::vector<std::vector<int>> layers;
};

/// Non-dominated sorting. Layer 0 holds the vectors not strictly dominated
/// within the input; layer k the vectors dominated only by layers < k.
/// Throws std::invalid_argument on an empty input or mixed dimensions.
/// Runs on the distinct fitness vectors, so heavy duplication is cheap.
SortedLayers non_dominated_sort(const std::vector<FitnessVector>& points);

}  // namespace rrmo
