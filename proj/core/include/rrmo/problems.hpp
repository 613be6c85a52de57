#pragma once

#include <optional>
#include <vector>

#include "rrmo/bitstring.hpp"
#include "rrmo/fitness.hpp"
#include "rrmo/problem.hpp"

namespace rrmo {

enum class Region { L, M, N, Zero };

/// Region of a genotype under the one-point family, with K(x) (0-based
/// block indices whose block lies in the A set) when the region is N.
struct RrmoRegion {
    Region region = Region::Zero;
    std::vector<int> k_set;
};

enum class UniSpecialCase {
    PartialRunWithBalancedRight,  // left in P \ {1^h}, right in T
    SolidOnesRightNotC,           // left = 1^h, right not in C
};

/// Region of a genotype under the uniform family. u_set holds the 0-based
/// blocks with left half 1^h and right half in C; at most one block may sit
/// in one of the two special cases.
struct UniRegion {
    Region region = Region::Zero;
    std::vector<int> u_set;
    std::optional<int> special_block;
    std::optional<UniSpecialCase> special_case;
};

RrmoRegion classify_rrmo(const BitString& x, const ProblemSpec& spec);
FitnessVector evaluate_rrmo(const BitString& x, const ProblemSpec& spec);

UniRegion classify_uni(const BitString& x, const ProblemSpec& spec);
FitnessVector evaluate_uni(const BitString& x, const ProblemSpec& spec);

/// Dispatch on spec.family. Throws std::invalid_argument when the genotype
/// length does not match spec.n.
FitnessVector evaluate(const BitString& x, const ProblemSpec& spec);

/// O(n) Pareto-optimality test via the constructive characterizations:
/// rrmo has every block in A; rrmo-uni has every left half 1^{n/m} and
/// every right half in C.
bool is_pareto_optimal(const BitString& x, const ProblemSpec& spec);

inline constexpr std::uint64_t kDefaultParetoCap = 1u << 20;

/// Constructive enumeration of the whole Pareto set, duplicate-free, in a
/// fixed deterministic order. Throws std::overflow_error when the set is
/// larger than max_size.
std::vector<BitString> pareto_set(const ProblemSpec& spec,
                                  std::uint64_t max_size = kDefaultParetoCap);

/// Fitness vectors of the Pareto set (pairwise distinct).
std::vector<FitnessVector> pareto_front_vectors(const ProblemSpec& spec,
                                                std::uint64_t max_size = kDefaultParetoCap);

// Membership tests for the per-block building sets, on standalone strings
// of the appropriate length (block length for A/B, half length for the
// uniform-family sets).
bool in_rrmo_a(const BitString& block, const ProblemSpec& spec);
bool in_rrmo_b(const BitString& block, const ProblemSpec& spec);
bool in_uni_u(const BitString& half, const ProblemSpec& spec);
bool in_uni_p(const BitString& half, const ProblemSpec& spec);
bool in_uni_c(const BitString& half, const ProblemSpec& spec);
bool in_uni_t(const BitString& half, const ProblemSpec& spec);

}  // namespace rrmo
