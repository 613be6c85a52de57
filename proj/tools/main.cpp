#include <charconv>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "rrmo/harness.hpp"
#include "rrmo/oracle.hpp"

namespace {

using namespace rrmo;

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, ptr);
}

int cmd_eval(const std::string& spec_str, const std::string& bits) {
    ProblemSpec spec = ProblemSpec::parse(spec_str);
    BitString x = BitString::parse(bits);
    FitnessVector f = evaluate(x, spec);
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) std::cout << ' ';
        std::cout << f[i];
    }
    std::cout << '\n';
    return 0;
}

int cmd_pareto(const std::string& spec_str, std::uint64_t max_size) {
    ProblemSpec spec = ProblemSpec::parse(spec_str);
    for (const auto& x : pareto_set(spec, max_size)) std::cout << x.str() << '\n';
    return 0;
}

int cmd_refpoints(int m, std::int64_t p, std::uint64_t cap) {
    ReferenceLattice lat{m, p};
    std::cout << "size " << lat.size() << '\n';
    if (lat.size() <= cap) {
        for (const auto& r : generate_reference_points(m, p, cap)) {
            for (std::size_t j = 0; j < r.size(); ++j) {
                if (j) std::cout << ' ';
                std::cout << format_double(static_cast<double>(r[j]) / static_cast<double>(p));
            }
            std::cout << '\n';
        }
    }
    return 0;
}

int cmd_run(const std::string& config_path, std::optional<std::uint64_t> seed,
            bool require_cover) {
    ExperimentConfig cfg = ExperimentConfig::from_json_file(config_path);
    std::uint64_t s = seed ? *seed : cfg.seeds.front();
    RunRecord rec = cfg.algo == Algo::Nsga3 ? nsga3_run(cfg.nsga3_config(s))
                                            : gsemo_run(cfg.gsemo_config(s));
    std::cout << RunRecord::csv_header() << '\n' << rec.csv_row() << '\n';
    return require_cover && !rec.covered ? 1 : 0;
}

int cmd_experiment(const std::string& config_path, const std::string& out_path,
                   bool require_cover) {
    ExperimentConfig cfg = ExperimentConfig::from_json_file(config_path);
    auto records = run_experiment(cfg);
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file '" + out_path + "'");
    out << to_csv(records);
    SummaryStats stats = summarize(records);
    std::cout << stats.text() << '\n';
    return require_cover && stats.cover_rate < 1.0 ? 1 : 0;
}

int cmd_verify(const std::optional<std::string>& spec_str, bool csv) {
    std::vector<ProblemSpec> instances;
    if (spec_str) {
        instances.push_back(ProblemSpec::parse(*spec_str));
    } else {
        instances.push_back(ProblemSpec::parse("rrmo:n=10,m=2"));
        instances.push_back(ProblemSpec::parse("rrmo:n=15,m=2"));
        instances.push_back(ProblemSpec::parse("rrmo:n=20,m=4"));
        instances.push_back(ProblemSpec::parse("rrmo-uni:n=16,m=2"));
    }
    bool all_pass = true;
    if (csv) std::cout << LemmaReport::csv_header() << '\n';
    for (const auto& spec : instances) {
        for (const auto& rep : verify_instance(spec)) {
            std::cout << (csv ? rep.csv_row() : rep.text()) << '\n';
            if (!rep.pass()) all_pass = false;
        }
    }
    if (!csv) std::cout << (all_pass ? "all checks passed" : "violations found") << '\n';
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Royal-road many-objective optimization toolkit"};
    app.require_subcommand(1);

    std::string spec_str, bits, config_path, out_path;
    std::optional<std::string> verify_spec;
    std::optional<std::uint64_t> seed;
    std::uint64_t pareto_max = rrmo::kDefaultParetoCap;
    std::uint64_t ref_cap = rrmo::kDefaultLatticeEnumerationCap;
    int ref_m = 0;
    std::int64_t ref_p = 0;
    bool require_cover = false, csv = false;

    auto* eval = app.add_subcommand("eval", "Evaluate a genotype; prints the fitness vector");
    eval->add_option("spec", spec_str, "Problem spec, e.g. rrmo:n=10,m=2")->required();
    eval->add_option("bitstring", bits, "Genotype as a 0/1 string")->required();

    auto* pareto = app.add_subcommand("pareto", "Print the constructive Pareto set");
    pareto->add_option("spec", spec_str)->required();
    pareto->add_option("--max", pareto_max, "Size cap for the enumeration");

    auto* run = app.add_subcommand("run", "Single run from a JSON config");
    run->add_option("config", config_path)->required()->check(CLI::ExistingFile);
    run->add_option("--seed", seed, "Override the run seed");
    run->add_flag("--require-cover", require_cover, "Exit 1 unless the run covered the front");

    auto* experiment = app.add_subcommand("experiment", "Batch runs over seeds, CSV output");
    experiment->add_option("config", config_path)->required()->check(CLI::ExistingFile);
    experiment->add_option("--out", out_path, "CSV output path")->required();
    experiment->add_flag("--require-cover", require_cover,
                         "Exit 1 unless every run covered the front");

    auto* verify = app.add_subcommand("verify", "Run the structural lemma oracle suite");
    verify->add_option("--spec", verify_spec, "Verify one instance instead of the default set");
    verify->add_flag("--csv", csv, "Emit CSV rows instead of text");

    auto* refpoints = app.add_subcommand("refpoints", "Lattice size and, if enumerable, points");
    refpoints->add_option("m", ref_m)->required();
    refpoints->add_option("p", ref_p)->required();
    refpoints->add_option("--cap", ref_cap, "Enumeration cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*eval) return cmd_eval(spec_str, bits);
        if (*pareto) return cmd_pareto(spec_str, pareto_max);
        if (*run) return cmd_run(config_path, seed, require_cover);
        if (*experiment) return cmd_experiment(config_path, out_path, require_cover);
        if (*verify) return cmd_verify(verify_spec, csv);
        if (*refpoints) return cmd_refpoints(ref_m, ref_p, ref_cap);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
