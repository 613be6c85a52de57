#pragma once

#include <functional>
#include <string>
#include <vector>

#include "rrmo/problems.hpp"

namespace rrmo {

/// Outcome of one machine-checked structural property. Empty violations
/// means pass; checked counts the comparisons/elements examined.
struct LemmaReport {
    std::string lemma;
    std::string instance;
    std::uint64_t checked = 0;
    std::vector<std::string> violations;

    bool pass() const { return violations.empty(); }
    std::string text() const;
    static std::string csv_header();
    std::string csv_row() const;
};

/// All genotypes not strictly dominated by any other, grouped by fitness
/// vector, from full 2^n enumeration. Requires n <= 22.
struct BruteForceFront {
    struct Group {
        FitnessVector fitness;
        std::vector<BitString> genotypes;
    };
    std::vector<Group> groups;  // sorted by fitness vector

    std::vector<BitString> all_genotypes() const;
};

BruteForceFront brute_force_pareto(const ProblemSpec& spec);

/// Exhaustive checks of the one-point family's structural properties:
/// dominance between regions, the constructive witness for M, ordering and
/// incomparability of the N classes, Pareto-set agreement with the
/// constructive enumeration, and the first-layer antichain bound.
std::vector<LemmaReport> verify_rrmo_lemmas(const ProblemSpec& spec);

/// The uniform-family analogues, plus the first-layer antichain bound.
std::vector<LemmaReport> verify_uni_lemmas(const ProblemSpec& spec);

/// Exact minimum Hamming distance between two predicate-defined sets of
/// fixed-length strings (full 2^length enumeration). Throws when either set
/// is empty or length > 22.
int min_hamming(const std::function<bool(const BitString&)>& in_a,
                const std::function<bool(const BitString&)>& in_b, int length);

enum class IncomparableBoundKind {
    PerObjectiveValues,  // |S| <= k^(m-1), k = max distinct values per objective
    TwoObjectiveSpread,  // m = 2, |f1 - f2| <= a everywhere: |S| <= a+1
};

/// Checks the incomparable-set bound on the given fitness vectors. The
/// largest mutually-incomparable subset is computed exactly via minimum
/// chain cover (bipartite matching); at most 2000 distinct vectors.
LemmaReport verify_incomparable_bound(const std::vector<FitnessVector>& vectors,
                                      IncomparableBoundKind kind);

/// Size of the largest antichain in the dominance order over the distinct
/// vectors of the input (exact, Dilworth via Hopcroft-Karp).
std::size_t max_antichain(const std::vector<FitnessVector>& vectors);

/// Full oracle suite for one instance: the family's structural lemmas, the
/// Hamming-separation bounds for the uniform family, and the whole-image
/// antichain bound where the image is small enough.
std::vector<LemmaReport> verify_instance(const ProblemSpec& spec);

}  // namespace rrmo
