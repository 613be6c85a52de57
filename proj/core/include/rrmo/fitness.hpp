#pragma once

#include <cstdint>
#include <vector>

namespace rrmo {

/// Objective values under maximization, one entry per objective.
using FitnessVector = std::vector<std::int64_t>;

enum class DominanceOutcome {
    StrictlyDominates,   // u >= v componentwise and u != v
    StrictlyDominated,   // v strictly dominates u
    Equal,
    Incomparable,
};

/// Pareto-dominance comparison of u against v. Exactly one outcome holds
/// for any ordered pair. Throws std::invalid_argument on length mismatch.
DominanceOutcome compare_dominance(const FitnessVector& u, const FitnessVector& v);

bool strictly_dominates(const FitnessVector& u, const FitnessVector& v);
bool weakly_dominates(const FitnessVector& u, const FitnessVector& v);

struct FitnessVectorHash {
    std::size_t operator()(const FitnessVector& f) const {
        std::uint64_t h = 1469598103934665603ull;
        for (auto v : f) {
            h ^= static_cast<std::uint64_t>(v);
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

}  // namespace rrmo
