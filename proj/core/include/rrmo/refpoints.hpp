#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rrmo/fitness.hpp"
#include "rrmo/random.hpp"

namespace rrmo {

/// A reference point of the simplex lattice R_p, stored by its integer
/// numerators (a_1..a_m), sum = p; the point itself is (a_1/p, ..., a_m/p).
using ReferencePoint = std::vector<std::int32_t>;

struct ReferencePointHash {
    std::size_t operator()(const ReferencePoint& r) const {
        std::uint64_t h = 1469598103934665603ull;
        for (auto v : r) {
            h ^= static_cast<std::uint32_t>(v);
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

/// The simplex lattice R_p, represented implicitly by (m, p). Its point set
/// { (a_1/p,...,a_m/p) : a_i in N_0, sum a_i = p } has C(p+m-1, m-1) members.
struct ReferenceLattice {
    int m = 0;
    std::int64_t p = 0;

    /// C(p+m-1, m-1), saturating at UINT64_MAX on overflow.
    std::uint64_t size() const;
};

inline constexpr std::uint64_t kDefaultLatticeEnumerationCap = 100000;

/// Explicit enumeration of R_p. Throws std::overflow_error when the lattice
/// has more than cap points; callers should switch to the implicit backend
/// (associate_fast) instead.
std::vector<ReferencePoint> generate_reference_points(
    int m, std::int64_t p, std::uint64_t cap = kDefaultLatticeEnumerationCap);

/// Running normalization bounds: y_min/y_max fold in every merged population
/// seen so far; the nadir is max(eps_nad, y_max) per objective and the
/// denominator is clamped below by 1 (objectives are integers).
struct NormalizationState {
    std::int64_t eps_nad = 1;
    std::vector<std::int64_t> y_min, y_max;
    /// Bumped whenever y_min or y_max changes; association caches key on it.
    std::uint64_t version = 0;

    explicit NormalizationState(std::int64_t eps = 1) : eps_nad(eps) {}

    void update(std::span<const FitnessVector> merged);
    void update(const FitnessVector& f);

    bool initialized() const { return !y_min.empty(); }
    std::int64_t y_nad(std::size_t j) const {
        return std::max(eps_nad, y_max[j]);
    }
    std::vector<double> normalize(const FitnessVector& f) const;
};

/// Squared perpendicular distance from fn to the ray through the origin and
/// the reference point (scale-free, so the integer numerators are used
/// directly).
double perpendicular_distance_sq(std::span<const double> fn, const ReferencePoint& r);

/// All rays at minimal perpendicular distance, plus that distance. When
/// whole_lattice is set every lattice point is a minimizer (fn = 0) and
/// the list is left empty.
struct AssociationChoices {
    double dist_sq = 0.0;
    std::vector<ReferencePoint> minimizers;
    bool whole_lattice = false;
};

AssociationChoices associate_choices(std::span<const double> fn,
                                     std::span<const ReferencePoint> points);

/// Implicit-backend variant: scales fn to coordinate sum p, rounds to a
/// lattice point by largest-remainder apportionment, and searches the
/// neighborhood within L1 distance 2*radius of it.
AssociationChoices associate_fast_choices(std::span<const double> fn,
                                          const ReferenceLattice& lattice, int radius);

/// Uniformly random lattice point (used when fn = 0, which lies on every
/// ray). Exact stars-and-bars sampling.
ReferencePoint uniform_lattice_point(const ReferenceLattice& lattice, RandomSource& rng);

struct Association {
    ReferencePoint point;
    double dist_sq = 0.0;
};

/// Exhaustive association: nearest ray among the explicit points, ties
/// broken uniformly at random.
Association associate(std::span<const double> fn, std::span<const ReferencePoint> points,
                      RandomSource& rng);

/// Neighborhood association against the implicit lattice; ties uniform.
Association associate_fast(std::span<const double> fn, const ReferenceLattice& lattice,
                           int radius, RandomSource& rng);

}  // namespace rrmo
