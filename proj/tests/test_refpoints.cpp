#include <doctest.h>

#include <stdexcept>

#include <set>

#include "rrmo/refpoints.hpp"

using namespace rrmo;

namespace {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    unsigned __int128 r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return static_cast<std::uint64_t>(r);
}

}  // namespace

TEST_CASE("lattice enumeration: small cases") {
    auto pts = generate_reference_points(2, 2);
    std::set<ReferencePoint> got(pts.begin(), pts.end());
    CHECK(got == std::set<ReferencePoint>{{0, 2}, {1, 1}, {2, 0}});

    auto corners = generate_reference_points(3, 1);
    CHECK(corners.size() == 3);
    CHECK(std::set<ReferencePoint>(corners.begin(), corners.end()) ==
          std::set<ReferencePoint>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});

    CHECK(generate_reference_points(3, 2).size() == 6);
}

TEST_CASE("lattice counting matches the binomial formula") {
    for (int m : {2, 3, 4, 5}) {
        for (std::int64_t p : {1, 2, 3, 7, 12}) {
            ReferenceLattice lat{m, p};
            CHECK(lat.size() == binomial(static_cast<std::uint64_t>(p + m - 1),
                                         static_cast<std::uint64_t>(m - 1)));
            auto pts = generate_reference_points(m, p);
            CHECK(pts.size() == lat.size());
            std::set<ReferencePoint> distinct(pts.begin(), pts.end());
            CHECK(distinct.size() == pts.size());
            for (const auto& r : pts) {
                std::int64_t sum = 0;
                for (auto a : r) sum += a;
                CHECK(sum == p);
            }
        }
    }
    CHECK_THROWS_AS(generate_reference_points(4, 600, 100000), std::overflow_error);
    CHECK(ReferenceLattice{4, 576}.size() == 32183329);  // ~3.2e7, implicit backend
}

TEST_CASE("normalization state folds and nadir rule") {
    NormalizationState st(14);
    st.update(FitnessVector{6, 10});
    st.update(FitnessVector{3, 3});
    CHECK(st.y_min == std::vector<std::int64_t>{3, 3});
    CHECK(st.y_nad(0) == 14);
    CHECK(st.y_nad(1) == 14);

    st.update(FitnessVector{20, 1});
    CHECK(st.y_min == std::vector<std::int64_t>{3, 1});
    CHECK(st.y_nad(0) == 20);
    CHECK(st.y_nad(1) == 14);

    // eps_nad above everything attainable keeps the nadir pinned at eps_nad.
    NormalizationState big(1000);
    big.update(FitnessVector{6, 10});
    big.update(FitnessVector{20, 1});
    CHECK(big.y_nad(0) == 1000);
    CHECK(big.y_nad(1) == 1000);
}

TEST_CASE("normalize: direct substitution and clamp") {
    NormalizationState st(56);
    st.update(FitnessVector{0, 0});
    st.update(FitnessVector{56, 56});
    auto fn = st.normalize(FitnessVector{8, 10});
    CHECK(fn[0] == doctest::Approx(1.0 / 7.0));
    CHECK(fn[1] == doctest::Approx(5.0 / 28.0));

    auto zero = st.normalize(FitnessVector{0, 0});
    CHECK(zero[0] == 0.0);
    CHECK(zero[1] == 0.0);

    NormalizationState flat(1);
    flat.update(FitnessVector{5, 5});
    auto f = flat.normalize(FitnessVector{5, 5});  // y_nad == y_min, clamped
    CHECK(f[0] == 0.0);
}

TEST_CASE("association basics") {
    RandomSource rng(9);
    auto pts = generate_reference_points(2, 10);
    std::vector<double> fn{0.3, 0.7};
    auto a = associate(fn, pts, rng);
    CHECK(a.point == ReferencePoint{3, 7});
    CHECK(a.dist_sq == doctest::Approx(0.0));

    std::vector<double> axis{1.0, 0.0};
    CHECK(associate(axis, pts, rng).point == ReferencePoint{10, 0});

    // the zero vector associates uniformly over the whole lattice
    std::vector<double> zero{0.0, 0.0};
    std::set<ReferencePoint> seen;
    for (int i = 0; i < 400; ++i) seen.insert(associate(zero, pts, rng).point);
    CHECK(seen.size() == pts.size());
}

TEST_CASE("associate_fast on a lattice ray and the m=3 rounding example") {
    RandomSource rng(10);
    ReferenceLattice lat{2, 10};
    std::vector<double> fn{0.3, 0.7};
    auto a = associate_fast(fn, lat, 1, rng);
    CHECK(a.point == ReferencePoint{3, 7});
    CHECK(a.dist_sq == doctest::Approx(0.0));

    ReferenceLattice lat3{3, 3};
    std::vector<double> f3{0.34, 0.33, 0.33};
    auto pts3 = generate_reference_points(3, 3);
    auto exact = associate_choices(f3, pts3);
    auto fast = associate_fast(f3, lat3, 1, rng);
    CHECK(fast.dist_sq == doctest::Approx(exact.dist_sq));
}

TEST_CASE("associate_fast agrees with exhaustive association (m=2, p<=50)") {
    RandomSource rng(11);
    for (std::int64_t p : {3, 10, 23, 50}) {
        auto pts = generate_reference_points(2, p);
        ReferenceLattice lat{2, p};
        for (int trial = 0; trial < 2500; ++trial) {
            std::vector<double> fn{rng.next_double(), rng.next_double()};
            auto exact = associate_choices(fn, pts);
            auto fast = associate_fast_choices(fn, lat, 1);
            REQUIRE(!exact.whole_lattice);
            REQUIRE(!fast.whole_lattice);
            CHECK(fast.dist_sq == doctest::Approx(exact.dist_sq).epsilon(1e-12));
        }
    }
}

TEST_CASE("uniform lattice sampling covers the lattice") {
    RandomSource rng(12);
    ReferenceLattice lat{3, 4};
    std::set<ReferencePoint> seen;
    for (int i = 0; i < 3000; ++i) {
        auto r = uniform_lattice_point(lat, rng);
        std::int64_t sum = 0;
        for (auto v : r) sum += v;
        REQUIRE(sum == 4);
        seen.insert(r);
    }
    CHECK(seen.size() == ReferenceLattice{3, 4}.size());
}
