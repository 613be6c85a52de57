#include "rrmo/harness.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace rrmo {

void ExperimentConfig::validate() const {
    spec.validate();
    if (seeds.empty())
        throw std::invalid_argument("ExperimentConfig: seed list must be non-empty");
    if (parallelism < 0)
        throw std::invalid_argument("ExperimentConfig: parallelism must be >= 0");
    if (algo == Algo::Nsga3)
        nsga3_config(seeds.front()).validate();
    else
        gsemo_config(seeds.front()).validate();
}

Nsga3Config ExperimentConfig::nsga3_config(std::uint64_t seed) const {
    Nsga3Config c;
    c.spec = spec;
    c.mu = mu;
    c.pc = pc;
    c.crossover = crossover;
    c.p = p ? *p : theorem_reference_divisions(spec);
    c.eps_nad = eps_nad ? *eps_nad : spec.f_max();
    c.seed = seed;
    c.budget = budget;
    c.protection_check = protection_check;
    c.assoc_enumeration_cap = assoc_enumeration_cap;
    c.assoc_radius = assoc_radius;
    return c;
}

GsemoConfig ExperimentConfig::gsemo_config(std::uint64_t seed) const {
    GsemoConfig c;
    c.spec = spec;
    c.pc = pc;
    c.crossover = crossover;
    c.seed = seed;
    c.budget = budget;
    return c;
}

namespace {

using nlohmann::json;

std::vector<std::uint64_t> parse_seeds(const json& j) {
    std::vector<std::uint64_t> seeds;
    if (j.is_array()) {
        for (const auto& v : j) seeds.push_back(v.get<std::uint64_t>());
    } else if (j.is_object()) {
        auto master = j.at("master").get<std::uint64_t>();
        auto count = j.at("count").get<std::uint64_t>();
        for (std::uint64_t i = 0; i < count; ++i) seeds.push_back(master + i);
    } else {
        throw std::invalid_argument("config: seeds must be a list or {master, count}");
    }
    return seeds;
}

}  // namespace

ExperimentConfig ExperimentConfig::from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("config: invalid JSON: ") + e.what());
    }
    ExperimentConfig cfg;
    try {
        cfg.algo = parse_algo(j.at("algorithm").get<std::string>());
        cfg.spec = ProblemSpec::parse(j.at("spec").get<std::string>());
        cfg.budget = j.at("budget").get<std::uint64_t>();
        cfg.seeds = parse_seeds(j.at("seeds"));
        cfg.pc = j.at("pc").get<double>();
        cfg.crossover = parse_crossover(j.at("crossover").get<std::string>());
        if (j.contains("parallelism")) cfg.parallelism = j.at("parallelism").get<int>();
        if (j.contains("mu")) cfg.mu = j.at("mu").get<int>();
        else if (cfg.algo == Algo::Nsga3)
            throw std::invalid_argument("config: nsga3 requires mu");
        if (j.contains("p")) cfg.p = j.at("p").get<std::int64_t>();
        if (j.contains("eps_nad")) cfg.eps_nad = j.at("eps_nad").get<std::int64_t>();
        if (j.contains("protection_check"))
            cfg.protection_check = j.at("protection_check").get<bool>();
        if (j.contains("assoc_cap"))
            cfg.assoc_enumeration_cap = j.at("assoc_cap").get<std::uint64_t>();
        if (j.contains("assoc_radius")) cfg.assoc_radius = j.at("assoc_radius").get<int>();
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("config: ") + e.what());
    }
    cfg.validate();
    return cfg;
}

ExperimentConfig ExperimentConfig::from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("config: cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return from_json_text(ss.str());
}

std::string ExperimentConfig::to_json_text() const {
    json j;
    j["algorithm"] = algo_name(algo);
    j["spec"] = spec.str();
    j["budget"] = budget;
    j["seeds"] = seeds;
    j["parallelism"] = parallelism;
    j["pc"] = pc;
    j["crossover"] = crossover_name(crossover);
    if (algo == Algo::Nsga3) {
        j["mu"] = mu;
        if (p) j["p"] = *p;
        if (eps_nad) j["eps_nad"] = *eps_nad;
        j["protection_check"] = protection_check;
        j["assoc_cap"] = assoc_enumeration_cap;
        j["assoc_radius"] = assoc_radius;
    }
    return j.dump(2);
}

SummaryStats summarize(const std::vector<RunRecord>& records) {
    SummaryStats s;
    s.runs = records.size();
    if (records.empty()) return s;
    std::vector<std::uint64_t> cover_evals;
    std::size_t hits = 0;
    for (const auto& r : records) {
        if (r.first_pareto_eval) ++hits;
        if (r.covered && r.full_cover_eval) cover_evals.push_back(*r.full_cover_eval);
    }
    s.cover_rate = static_cast<double>(cover_evals.size()) / static_cast<double>(s.runs);
    s.first_hit_rate = static_cast<double>(hits) / static_cast<double>(s.runs);
    if (!cover_evals.empty()) {
        std::sort(cover_evals.begin(), cover_evals.end());
        std::size_t k = cover_evals.size();
        s.median_evals = k % 2 == 1 ? static_cast<double>(cover_evals[k / 2])
                                    : (static_cast<double>(cover_evals[k / 2 - 1]) +
                                       static_cast<double>(cover_evals[k / 2])) / 2.0;
        double sum = 0.0;
        for (auto v : cover_evals) sum += static_cast<double>(v);
        s.mean_evals = sum / static_cast<double>(k);
        s.max_evals = cover_evals.back();
    }
    return s;
}

std::string SummaryStats::text() const {
    std::ostringstream os;
    os << "runs=" << runs << " cover_rate=" << cover_rate
       << " first_hit_rate=" << first_hit_rate;
    if (cover_rate > 0.0)
        os << " median_evals=" << median_evals << " mean_evals=" << mean_evals
           << " max_evals=" << max_evals;
    return os.str();
}

std::vector<RunRecord> run_experiment(const ExperimentConfig& cfg) {
    cfg.validate();
    const std::size_t total = cfg.seeds.size();
    std::vector<RunRecord> records(total);

    unsigned workers = cfg.parallelism > 0
                           ? static_cast<unsigned>(cfg.parallelism)
                           : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, total));

    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::exception_ptr first_error;
    auto work = [&]() {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= total) return;
            std::uint64_t seed = cfg.seeds[i];
            try {
                records[i] = cfg.algo == Algo::Nsga3 ? nsga3_run(cfg.nsga3_config(seed))
                                                     : gsemo_run(cfg.gsemo_config(seed));
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                next.store(total);  // stop handing out further runs
                return;
            }
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    if (first_error) std::rethrow_exception(first_error);
    return records;
}

std::string to_csv(const std::vector<RunRecord>& records) {
    std::string out = RunRecord::csv_header();
    out += '\n';
    for (const auto& r : records) {
        out += r.csv_row();
        out += '\n';
    }
    return out;
}

std::string to_csv_stable(const std::vector<RunRecord>& records) {
    std::string out;
    for (const auto& r : records) {
        out += r.csv_row_stable();
        out += '\n';
    }
    return out;
}

}  // namespace rrmo
