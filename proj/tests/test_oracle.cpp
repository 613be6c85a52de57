#include <doctest.h>

#include <stdexcept>

#include <set>

#include "rrmo/oracle.hpp"

using namespace rrmo;

TEST_CASE("brute-force Pareto sets at the enumerable instances") {
    auto rrmo10 = brute_force_pareto(ProblemSpec::parse("rrmo:n=10,m=2"));
    std::set<std::string> strings;
    for (const auto& x : rrmo10.all_genotypes()) strings.insert(x.str());
    CHECK(strings == std::set<std::string>{"1111111100", "0111111110", "0011111111"});
    CHECK(rrmo10.groups.size() == 3);

    auto uni16 = brute_force_pareto(ProblemSpec::parse("rrmo-uni:n=16,m=2"));
    CHECK(uni16.groups.size() == 16);
    for (const auto& g : uni16.groups) {
        CHECK(g.genotypes.size() == 1);
        CHECK(g.genotypes[0].count_ones(0, 8) == 8);
    }

    auto rrmo20 = brute_force_pareto(ProblemSpec::parse("rrmo:n=20,m=4"));
    CHECK(rrmo20.groups.size() == 9);

    CHECK_THROWS_AS(brute_force_pareto(ProblemSpec{Family::Rrmo, 45, 2}),
                    std::invalid_argument);
}

TEST_CASE("lemma suite passes on the small instances") {
    for (const char* s : {"rrmo:n=10,m=2", "rrmo:n=15,m=2"}) {
        for (const auto& rep : verify_rrmo_lemmas(ProblemSpec::parse(s))) {
            INFO(rep.text());
            CHECK(rep.pass());
            CHECK(rep.checked > 0);
        }
    }
    for (const auto& rep : verify_instance(ProblemSpec::parse("rrmo-uni:n=16,m=2"))) {
        INFO(rep.text());
        CHECK(rep.pass());
    }
}

TEST_CASE("min Hamming separation") {
    auto uni = ProblemSpec::parse("rrmo-uni:n=16,m=2");
    auto u = [&](const BitString& y) { return in_uni_u(y, uni); };
    auto p = [&](const BitString& y) { return in_uni_p(y, uni); };
    auto c = [&](const BitString& y) { return in_uni_c(y, uni); };
    auto t = [&](const BitString& y) { return in_uni_t(y, uni); };
    CHECK(min_hamming(u, p, 8) == 3);  // bound n/(4m) = 2
    CHECK(min_hamming(c, t, 8) == 3);  // bound 3n/(8m) = 3, tight

    auto rrmo = ProblemSpec::parse("rrmo:n=10,m=2");
    auto a = [&](const BitString& y) { return in_rrmo_a(y, rrmo); };
    CHECK(min_hamming(a, a, 10) == 0);

    auto never = [](const BitString&) { return false; };
    CHECK_THROWS_AS(min_hamming(never, a, 10), std::invalid_argument);
}

TEST_CASE("max antichain via matching") {
    CHECK(max_antichain({}) == 0);
    CHECK(max_antichain({{1, 1}, {2, 2}, {3, 3}}) == 1);  // a chain
    CHECK(max_antichain({{0, 3}, {1, 2}, {2, 1}, {3, 0}}) == 4);
    CHECK(max_antichain({{5, 5}, {5, 5}}) == 1);  // duplicates collapse
    // Mixed: two incomparable chains.
    CHECK(max_antichain({{0, 9}, {1, 9}, {9, 0}, {9, 1}}) == 2);
}

TEST_CASE("incomparable-set bounds") {
    // m=2 with |f1-f2| <= 1: antichain at most 2.
    std::vector<FitnessVector> tight{{0, 1}, {1, 0}, {1, 2}, {2, 1}, {3, 3}};
    auto rep = verify_incomparable_bound(tight, IncomparableBoundKind::TwoObjectiveSpread);
    INFO(rep.text());
    CHECK(rep.pass());
    CHECK(max_antichain(tight) == 2);

    auto equal = verify_incomparable_bound({{4, 4}, {4, 4}},
                                           IncomparableBoundKind::TwoObjectiveSpread);
    CHECK(equal.pass());

    // Full fitness image of rrmo n=10, m=2: antichain within (4n/(5m)+1)^(m-1) = 5.
    std::set<FitnessVector> image;
    for (std::uint32_t u = 0; u < (1u << 10); ++u) {
        BitString x(10);
        x.words()[0] = u;
        image.insert(evaluate(x, ProblemSpec::parse("rrmo:n=10,m=2")));
    }
    std::vector<FitnessVector> vecs(image.begin(), image.end());
    CHECK(max_antichain(vecs) <= 5);
    auto per_value = verify_incomparable_bound(vecs, IncomparableBoundKind::PerObjectiveValues);
    INFO(per_value.text());
    CHECK(per_value.pass());

    CHECK_THROWS_AS(verify_incomparable_bound({{1, 2, 3}},
                                              IncomparableBoundKind::TwoObjectiveSpread),
                    std::invalid_argument);
}
