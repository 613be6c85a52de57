#include "rrmo/record.hpp"

#include <charconv>
#include <stdexcept>

namespace rrmo {

std::string algo_name(Algo a) { return a == Algo::Nsga3 ? "nsga3" : "gsemo"; }

Algo parse_algo(std::string_view s) {
    if (s == "nsga3") return Algo::Nsga3;
    if (s == "gsemo") return Algo::Gsemo;
    throw std::invalid_argument("unknown algorithm '" + std::string(s) + "'");
}

std::string backend_name(AssociationBackend b) {
    switch (b) {
        case AssociationBackend::None: return "none";
        case AssociationBackend::Exhaustive: return "exhaustive";
        case AssociationBackend::Fast: return "fast";
    }
    return "none";
}

namespace {

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, ptr);
}

std::string opt_str(const std::optional<std::uint64_t>& v) {
    return v ? std::to_string(*v) : std::string();
}

}  // namespace

std::string RunRecord::csv_header() {
    return "seed,algo,spec,mu,pc,crossover,generations,evals,first_pareto_eval,"
           "full_cover_eval,covered,backend,wallclock_ms";
}

std::string RunRecord::csv_row_stable() const {
    std::string out;
    out += std::to_string(seed);
    out += ',';
    out += algo_name(algo);
    out += ',';
    out += spec;
    out += ',';
    out += std::to_string(mu);
    out += ',';
    out += format_double(pc);
    out += ',';
    out += crossover_name(crossover);
    out += ',';
    out += std::to_string(generations);
    out += ',';
    out += std::to_string(evaluations);
    out += ',';
    out += opt_str(first_pareto_eval);
    out += ',';
    out += opt_str(full_cover_eval);
    out += ',';
    out += covered ? "true" : "false";
    out += ',';
    out += backend_name(backend);
    return out;
}

std::string RunRecord::csv_row() const {
    return csv_row_stable() + ',' + std::to_string(wallclock_ms);
}

}  // namespace rrmo
