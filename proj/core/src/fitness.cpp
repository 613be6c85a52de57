#include "rrmo/fitness.hpp"

#include <stdexcept>

namespace rrmo {

DominanceOutcome compare_dominance(const FitnessVector& u, const FitnessVector& v) {
    if (u.size() != v.size())
        throw std::invalid_argument("compare_dominance: length mismatch");
    bool u_above = false, v_above = false;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] > v[i]) u_above = true;
        else if (u[i] < v[i]) v_above = true;
    }
    if (u_above && v_above) return DominanceOutcome::Incomparable;
    if (u_above) return DominanceOutcome::StrictlyDominates;
    if (v_above) return DominanceOutcome::StrictlyDominated;
    return DominanceOutcome::Equal;
}

bool strictly_dominates(const FitnessVector& u, const FitnessVector& v) {
    return compare_dominance(u, v) == DominanceOutcome::StrictlyDominates;
}

bool weakly_dominates(const FitnessVector& u, const FitnessVector& v) {
    auto r = compare_dominance(u, v);
    return r == DominanceOutcome::StrictlyDominates || r == DominanceOutcome::Equal;
}

}  // namespace rrmo
