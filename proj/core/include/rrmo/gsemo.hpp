#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "rrmo/individual.hpp"
#include "rrmo/problems.hpp"
#include "rrmo/record.hpp"

namespace rrmo {

struct GsemoConfig {
    ProblemSpec spec;
    double pc = 0.0;
    CrossoverKind crossover = CrossoverKind::OnePoint;
    std::uint64_t seed = 1;
    std::uint64_t budget = 0;  // max fitness evaluations; one per iteration

    void validate() const;
};

/// Archive update rule: the offspring is rejected when some member strictly
/// dominates it; otherwise it is inserted and every member it weakly
/// dominates (equal vectors included) is removed. Returns whether the
/// offspring entered the archive. Keeps members mutually incomparable with
/// pairwise-distinct fitness vectors.
bool gsemo_archive_update(std::vector<Individual>& archive, Individual offspring);

/// One GSEMO run: a dynamic archive of mutually incomparable solutions with
/// pairwise-distinct fitness vectors, one offspring (one evaluation) per
/// iteration.
class Gsemo {
public:
    explicit Gsemo(GsemoConfig cfg);

    /// Evaluates the single random initial individual (one evaluation).
    /// Called implicitly by the first step().
    void initialize();

    /// One iteration: pick parents, vary, and fold the offspring into the
    /// archive unless some member strictly dominates it; members it weakly
    /// dominates (equal vectors included) are removed.
    void step();

    const std::vector<Individual>& archive() const { return archive_; }
    std::uint64_t evaluations() const { return evals_; }
    std::uint64_t iterations() const { return iters_; }
    std::size_t peak_archive_size() const { return peak_; }
    bool covered() const { return covered_count_ == front_.size(); }
    const std::optional<std::uint64_t>& first_pareto_eval() const { return first_pareto_eval_; }
    const std::optional<std::uint64_t>& full_cover_eval() const { return full_cover_eval_; }
    const GsemoConfig& config() const { return cfg_; }
    /// Engine draw count of the run's random source (instrumentation).
    std::uint64_t rng_draws() const { return rng_.draw_count(); }

    RunRecord run();

private:
    void eval_and_track(Individual& ind);
    void fold_into_archive(Individual offspring);

    GsemoConfig cfg_;
    RandomSource rng_;
    std::vector<Individual> archive_;
    bool initialized_ = false;

    std::unordered_map<FitnessVector, int, FitnessVectorHash> front_;
    std::vector<bool> front_present_;
    std::size_t covered_count_ = 0;
    std::size_t peak_ = 0;

    std::uint64_t evals_ = 0;
    std::uint64_t iters_ = 0;
    std::optional<std::uint64_t> first_pareto_eval_;
    std::optional<std::uint64_t> full_cover_eval_;
};

RunRecord gsemo_run(const GsemoConfig& cfg);

}  // namespace rrmo
