#include <doctest.h>

#include <stdexcept>

#include "reference_impl.hpp"
#include "rrmo/fitness.hpp"
#include "rrmo/random.hpp"

using namespace rrmo;

TEST_CASE("dominance outcomes on the named pairs") {
    CHECK(compare_dominance({2, 3}, {1, 3}) == DominanceOutcome::StrictlyDominates);
    CHECK(compare_dominance({1, 3}, {2, 3}) == DominanceOutcome::StrictlyDominated);
    CHECK(compare_dominance({5, 5}, {5, 5}) == DominanceOutcome::Equal);
    CHECK(compare_dominance({1, 3}, {3, 1}) == DominanceOutcome::Incomparable);
    CHECK_THROWS_AS(compare_dominance({1}, {1, 2}), std::invalid_argument);
}

namespace {

FitnessVector random_vector(RandomSource& rng, int m, int hi) {
    FitnessVector f(static_cast<std::size_t>(m));
    for (auto& v : f) v = static_cast<std::int64_t>(rng.next_below(static_cast<std::uint64_t>(hi)));
    return f;
}

}  // namespace

TEST_CASE("antisymmetry and agreement with the reference on random pairs") {
    RandomSource rng(3);
    for (int trial = 0; trial < 2000; ++trial) {
        int m = 2 + 2 * static_cast<int>(rng.next_below(3));
        auto u = random_vector(rng, m, 6);
        auto v = random_vector(rng, m, 6);
        auto uv = compare_dominance(u, v);
        auto vu = compare_dominance(v, u);
        CHECK((uv == DominanceOutcome::StrictlyDominates) ==
              (vu == DominanceOutcome::StrictlyDominated));
        CHECK((uv == DominanceOutcome::Equal) == (vu == DominanceOutcome::Equal));
        CHECK((uv == DominanceOutcome::Incomparable) == (vu == DominanceOutcome::Incomparable));
        std::vector<long long> ru(u.begin(), u.end()), rv(v.begin(), v.end());
        int expected = ref::dominance(ru, rv);
        switch (uv) {
            case DominanceOutcome::StrictlyDominates: CHECK(expected == 1); break;
            case DominanceOutcome::StrictlyDominated: CHECK(expected == -1); break;
            case DominanceOutcome::Equal: CHECK(expected == 0); break;
            case DominanceOutcome::Incomparable: CHECK(expected == 2); break;
        }
    }
}

TEST_CASE("transitivity on random triples") {
    RandomSource rng(5);
    int found = 0;
    for (int trial = 0; trial < 20000; ++trial) {
        auto u = random_vector(rng, 4, 4);
        auto v = random_vector(rng, 4, 4);
        auto w = random_vector(rng, 4, 4);
        if (strictly_dominates(u, v) && strictly_dominates(v, w)) {
            ++found;
            CHECK(strictly_dominates(u, w));
        }
    }
    CHECK(found > 50);  // the sample actually exercised the property
}
