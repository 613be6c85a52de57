#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "rrmo/variation.hpp"

namespace rrmo {

enum class Algo { Nsga3, Gsemo };

std::string algo_name(Algo a);
Algo parse_algo(std::string_view s);

enum class AssociationBackend { None, Exhaustive, Fast };

std::string backend_name(AssociationBackend b);

/// Per-run outcome. The budget unit is fitness evaluations throughout, so
/// NSGA-III and GSEMO runs are directly comparable. All fields except
/// wallclock_ms are a pure function of the configuration and seed.
struct RunRecord {
    std::uint64_t seed = 0;
    Algo algo = Algo::Nsga3;
    std::string spec;
    std::int64_t mu = 0;  // population size; peak archive size for GSEMO
    double pc = 0.0;
    CrossoverKind crossover = CrossoverKind::OnePoint;
    std::uint64_t generations = 0;
    std::uint64_t evaluations = 0;
    std::optional<std::uint64_t> first_pareto_eval;
    std::optional<std::uint64_t> full_cover_eval;
    bool covered = false;
    AssociationBackend backend = AssociationBackend::None;
    std::uint64_t wallclock_ms = 0;

    static std::string csv_header();
    std::string csv_row() const;
    /// csv_row with the trailing wallclock field removed; this is the
    /// deterministic payload of the record.
    std::string csv_row_stable() const;
};

}  // namespace rrmo
