#pragma once

#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "rrmo/individual.hpp"
#include "rrmo/nds.hpp"
#include "rrmo/problems.hpp"
#include "rrmo/record.hpp"
#include "rrmo/refpoints.hpp"

namespace rrmo {

struct Nsga3Config {
    ProblemSpec spec;
    int mu = 2;              // >= 2; an odd mu drops the last trial's second child
    double pc = 0.0;         // crossover probability
    CrossoverKind crossover = CrossoverKind::OnePoint;
    std::int64_t p = 1;      // lattice divisions per objective
    std::int64_t eps_nad = 1;
    std::uint64_t seed = 1;
    std::uint64_t budget = 0;  // max fitness evaluations
    bool protection_check = false;
    std::uint64_t assoc_enumeration_cap = kDefaultLatticeEnumerationCap;
    int assoc_radius = 1;

    void validate() const;
};

/// Smallest p satisfying the protection requirement p >= 2 m^(3/2) f_max.
std::int64_t theorem_reference_divisions(const ProblemSpec& spec);

/// Thrown when an instrumented run observes a first-layer fitness vector
/// missing from the next population.
class ProtectionViolation : public std::runtime_error {
public:
    ProtectionViolation(std::uint64_t generation, const FitnessVector& lost);
    std::uint64_t generation;
    FitnessVector lost;
};

/// Survival selection over the critical layer (reference-point niching).
/// selected_assoc holds the reference-point id of every already-selected
/// member (the whole lower layers Y); candidates holds (reference-point id,
/// squared perpendicular distance) per critical-layer member. Points start
/// with rho = association count within Y; each round the active point of
/// minimal rho (ties uniform) either contributes its nearest unselected
/// candidate (distance ties uniform) or is retired. Returns indices into
/// candidates, in selection order, of exactly mu - |Y| members.
/// Only points with at least one associated individual participate; the
/// remainder of R_p can never select anything and is skipped wholesale.
std::vector<int> niching_select(const std::vector<std::uint32_t>& selected_assoc,
                                const std::vector<std::pair<std::uint32_t, double>>& candidates,
                                int mu, RandomSource& rng);

/// One NSGA-III optimization run. Strictly sequential and single-owner;
/// distinct runs with independent seeds may execute concurrently.
class Nsga3 {
public:
    explicit Nsga3(Nsga3Config cfg);

    /// Evaluates the initial population (mu evaluations). Called implicitly
    /// by the first step().
    void initialize();

    /// One generation: mu offspring, merge, sort, niching survival.
    void step();

    const std::vector<Individual>& population() const { return pop_; }
    const NormalizationState& normalization() const { return norm_; }
    const Nsga3Config& config() const { return cfg_; }
    AssociationBackend backend() const { return backend_; }

    std::uint64_t evaluations() const { return evals_; }
    std::uint64_t generations() const { return gens_; }
    /// Engine draw count of the run's random source (instrumentation).
    std::uint64_t rng_draws() const { return rng_.draw_count(); }
    bool covered() const { return covered_count_ == front_.size(); }
    const std::optional<std::uint64_t>& first_pareto_eval() const { return first_pareto_eval_; }
    const std::optional<std::uint64_t>& full_cover_eval() const { return full_cover_eval_; }

    /// Full run: initialize, then iterate until the population carries every
    /// Pareto-optimal fitness vector or the next generation would exceed the
    /// evaluation budget.
    RunRecord run();

private:
    void eval_and_track(Individual& ind);
    void refresh_coverage();
    std::pair<std::uint32_t, double> associate_individual(const FitnessVector& f);
    std::uint32_t intern(const ReferencePoint& r);

    Nsga3Config cfg_;
    RandomSource rng_;
    ReferenceLattice lattice_;
    AssociationBackend backend_;
    std::vector<ReferencePoint> explicit_points_;

    std::vector<Individual> pop_;
    NormalizationState norm_;
    bool initialized_ = false;

    std::unordered_map<FitnessVector, int, FitnessVectorHash> front_;
    std::vector<bool> front_present_;
    std::size_t covered_count_ = 0;

    std::unordered_map<FitnessVector, AssociationChoices, FitnessVectorHash> assoc_cache_;
    std::uint64_t assoc_cache_version_ = ~std::uint64_t{0};
    std::unordered_map<ReferencePoint, std::uint32_t, ReferencePointHash> point_ids_;

    std::uint64_t evals_ = 0;
    std::uint64_t gens_ = 0;
    std::optional<std::uint64_t> first_pareto_eval_;
    std::optional<std::uint64_t> full_cover_eval_;
};

RunRecord nsga3_run(const Nsga3Config& cfg);

}  // namespace rrmo
