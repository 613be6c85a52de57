#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

struct CommandResult {
    int exit_code = -1;
    std::string output;
};

CommandResult run_cli(const std::string& args) {
    std::string cmd = std::string(RRMO_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CommandResult r;
    std::array<char, 512> buf{};
    while (fgets(buf.data(), buf.size(), pipe)) r.output += buf.data();
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_CASE("cli: eval prints the fitness vector") {
    auto r = run_cli("eval rrmo:n=10,m=2 1111110000");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "6 10\n");
}

TEST_CASE("cli: pareto prints one genotype per line") {
    auto r = run_cli("pareto rrmo:n=10,m=2");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "1111111100\n0111111110\n0011111111\n");
}

TEST_CASE("cli: refpoints prints the lattice size") {
    auto r = run_cli("refpoints 2 2");
    CHECK(r.exit_code == 0);
    CHECK(r.output.rfind("size 3\n", 0) == 0);
}

TEST_CASE("cli: verify on one instance exits zero") {
    auto r = run_cli("verify --spec rrmo:n=10,m=2");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("all checks passed") != std::string::npos);
    auto csv = run_cli("verify --spec rrmo:n=10,m=2 --csv");
    CHECK(csv.exit_code == 0);
    CHECK(csv.output.rfind("lemma,instance,checked,violations\n", 0) == 0);
}

TEST_CASE("cli: usage and malformed input exit 2") {
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("eval rrmo:n=11,m=2 0").exit_code == 2);
    CHECK(run_cli("eval rrmo:n=10,m=2 0101").exit_code == 2);
    CHECK(run_cli("run /nonexistent.json").exit_code == 2);
}

TEST_CASE("cli: run and experiment round trip") {
    std::string dir = "/tmp/rrmo_cli_test";
    std::system(("mkdir -p " + dir).c_str());
    std::string cfg_path = dir + "/cfg.json";
    {
        std::ofstream cfg(cfg_path);
        cfg << R"({"algorithm":"gsemo","spec":"rrmo:n=10,m=2","budget":200000,
                   "seeds":{"master":1,"count":3},"pc":0.5,"crossover":"one-point",
                   "parallelism":2})";
    }
    auto run1 = run_cli("run " + cfg_path + " --seed 7 --require-cover");
    CHECK(run1.exit_code == 0);
    CHECK(run1.output.find("7,gsemo,rrmo:n=10,m=2,") != std::string::npos);

    std::string csv_a = dir + "/a.csv", csv_b = dir + "/b.csv";
    auto exp1 = run_cli("experiment " + cfg_path + " --out " + csv_a);
    CHECK(exp1.exit_code == 0);
    auto exp2 = run_cli("experiment " + cfg_path + " --out " + csv_b);
    CHECK(exp2.exit_code == 0);

    auto read_stripped = [](const std::string& path) {
        std::ifstream in(path);
        std::string line, all;
        while (std::getline(in, line)) {
            auto cut = line.rfind(',');
            all += line.substr(0, cut);
            all += '\n';
        }
        return all;
    };
    // Byte-identical modulo the trailing wallclock column.
    CHECK(read_stripped(csv_a) == read_stripped(csv_b));
}
