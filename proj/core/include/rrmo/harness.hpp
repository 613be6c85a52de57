#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rrmo/gsemo.hpp"
#include "rrmo/nsga3.hpp"
#include "rrmo/record.hpp"

namespace rrmo {

/// Batch configuration: one run per seed, all runs sharing one algorithm
/// setup. Seeds are given explicitly or as (master, count), which expands
/// to master, master+1, ..., master+count-1.
struct ExperimentConfig {
    Algo algo = Algo::Nsga3;
    ProblemSpec spec;
    std::uint64_t budget = 0;
    std::vector<std::uint64_t> seeds;
    int parallelism = 0;  // 0 = hardware concurrency

    double pc = 0.0;
    CrossoverKind crossover = CrossoverKind::OnePoint;

    // NSGA-III only. p and eps_nad fall back to the theorem-compliant
    // defaults ceil(2 m^(3/2) f_max) and f_max when left unset.
    int mu = 2;
    std::optional<std::int64_t> p;
    std::optional<std::int64_t> eps_nad;
    bool protection_check = false;
    std::uint64_t assoc_enumeration_cap = kDefaultLatticeEnumerationCap;
    int assoc_radius = 1;

    void validate() const;

    Nsga3Config nsga3_config(std::uint64_t seed) const;
    GsemoConfig gsemo_config(std::uint64_t seed) const;

    static ExperimentConfig from_json_text(const std::string& text);
    static ExperimentConfig from_json_file(const std::string& path);
    std::string to_json_text() const;
};

struct SummaryStats {
    std::size_t runs = 0;
    double cover_rate = 0.0;
    double first_hit_rate = 0.0;
    // Over covering runs only.
    double median_evals = 0.0;
    double mean_evals = 0.0;
    std::uint64_t max_evals = 0;

    std::string text() const;
};

SummaryStats summarize(const std::vector<RunRecord>& records);

/// Executes one run per seed, up to `parallelism` at a time. Each run is a
/// pure function of (config, seed); records come back in seed order, so the
/// worker count can only change wallclock readings.
std::vector<RunRecord> run_experiment(const ExperimentConfig& cfg);

std::string to_csv(const std::vector<RunRecord>& records);
/// CSV without the wallclock column: the bytes that determinism pins down.
std::string to_csv_stable(const std::vector<RunRecord>& records);

}  // namespace rrmo
