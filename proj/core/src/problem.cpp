#include "rrmo/problem.hpp"

#include <charconv>
#include <stdexcept>

namespace rrmo {

namespace {

// x^e with overflow detection.
std::uint64_t checked_pow(std::uint64_t x, int e, bool& overflow) {
    std::uint64_t r = 1;
    for (int i = 0; i < e; ++i) {
        if (x != 0 && r > UINT64_MAX / x) {
            overflow = true;
            return 0;
        }
        r *= x;
    }
    return r;
}

int parse_int(std::string_view s, const char* what) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw std::invalid_argument(std::string("ProblemSpec: bad ") + what);
    return v;
}

}  // namespace

std::string family_name(Family f) {
    return f == Family::Rrmo ? "rrmo" : "rrmo-uni";
}

void ProblemSpec::validate() const {
    if (n <= 0 || m <= 0) throw std::invalid_argument("ProblemSpec: n and m must be positive");
    if (m % 2 != 0) throw std::invalid_argument("ProblemSpec: m must be even");
    if (m > n) throw std::invalid_argument("ProblemSpec: m must not exceed n");
    if (family == Family::Rrmo) {
        // n divisible by 5m/2
        if ((2 * static_cast<std::int64_t>(n)) % (5 * static_cast<std::int64_t>(m)) != 0)
            throw std::invalid_argument("ProblemSpec: rrmo requires n divisible by 5m/2");
    } else {
        if (static_cast<std::int64_t>(n) % (8 * static_cast<std::int64_t>(m)) != 0)
            throw std::invalid_argument("ProblemSpec: rrmo-uni requires n divisible by 8m");
    }
}

std::int64_t ProblemSpec::f_max() const {
    if (family == Family::Rrmo)
        return 2LL * n / 5 + 2LL * n / m;
    return 7LL * n / 2 + 12LL * n / m;
}

std::int64_t ProblemSpec::antichain_bound() const {
    bool overflow = false;
    std::uint64_t base = family == Family::Rrmo
                             ? static_cast<std::uint64_t>(4LL * n / (5 * m) + 1)
                             : static_cast<std::uint64_t>(2LL * n / m);
    std::uint64_t r = checked_pow(base, m - 1, overflow);
    if (overflow || r > static_cast<std::uint64_t>(INT64_MAX))
        throw std::overflow_error("ProblemSpec::antichain_bound: value exceeds 64-bit range");
    return static_cast<std::int64_t>(r);
}

std::uint64_t ProblemSpec::pareto_front_size() const {
    bool overflow = false;
    std::uint64_t base = family == Family::Rrmo
                             ? static_cast<std::uint64_t>(2LL * n / (5 * m) + 1)
                             : static_cast<std::uint64_t>(2LL * n / m);
    std::uint64_t r = checked_pow(base, m / 2, overflow);
    if (overflow)
        throw std::overflow_error("ProblemSpec::pareto_front_size: value exceeds 64-bit range");
    return r;
}

std::string ProblemSpec::str() const {
    return family_name(family) + ":n=" + std::to_string(n) + ",m=" + std::to_string(m);
}

ProblemSpec ProblemSpec::parse(std::string_view s) {
    ProblemSpec spec;
    auto colon = s.find(':');
    if (colon == std::string_view::npos)
        throw std::invalid_argument("ProblemSpec: expected '<family>:n=<n>,m=<m>'");
    std::string_view fam = s.substr(0, colon);
    if (fam == "rrmo") spec.family = Family::Rrmo;
    else if (fam == "rrmo-uni") spec.family = Family::RrmoUni;
    else throw std::invalid_argument("ProblemSpec: unknown family '" + std::string(fam) + "'");
    std::string_view rest = s.substr(colon + 1);
    auto comma = rest.find(',');
    if (comma == std::string_view::npos || rest.substr(0, 2) != "n=" ||
        rest.substr(comma + 1, 2) != "m=")
        throw std::invalid_argument("ProblemSpec: expected '<family>:n=<n>,m=<m>'");
    spec.n = parse_int(rest.substr(2, comma - 2), "n");
    spec.m = parse_int(rest.substr(comma + 3), "m");
    spec.validate();
    return spec;
}

}  // namespace rrmo
