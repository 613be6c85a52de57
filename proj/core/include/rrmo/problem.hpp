#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace rrmo {

enum class Family { Rrmo, RrmoUni };

std::string family_name(Family f);

/// Benchmark identity plus (n, m). Divisibility invariants:
///   rrmo:     m even, n divisible by 5m/2, m <= n
///   rrmo-uni: m even, n divisible by 8m,  m <= n
/// Canonical textual form is "rrmo:n=<n>,m=<m>" / "rrmo-uni:n=<n>,m=<m>".
struct ProblemSpec {
    Family family = Family::Rrmo;
    int n = 0;
    int m = 0;

    /// Throws std::invalid_argument if the invariants do not hold.
    void validate() const;

    int block_length() const { return 2 * n / m; }
    int block_count() const { return m / 2; }

    /// Maximum attainable value in any objective:
    /// rrmo 2n/5 + 2n/m, rrmo-uni 7n/2 + 12n/m.
    std::int64_t f_max() const;

    /// Upper bound on any set of mutually incomparable solutions:
    /// rrmo (4n/(5m)+1)^(m-1), rrmo-uni (2n/m)^(m-1). This is also the
    /// minimum theorem-compliant population size. Throws std::overflow_error
    /// when the value exceeds 64-bit range.
    std::int64_t antichain_bound() const;

    /// Number of Pareto-optimal genotypes (equivalently distinct front
    /// fitness vectors): rrmo (2n/(5m)+1)^(m/2), rrmo-uni (2n/m)^(m/2).
    std::uint64_t pareto_front_size() const;

    std::string str() const;
    static ProblemSpec parse(std::string_view s);

    friend bool operator==(const ProblemSpec& a, const ProblemSpec& b) {
        return a.family == b.family && a.n == b.n && a.m == b.m;
    }
};

}  // namespace rrmo
