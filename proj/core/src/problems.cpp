#include "rrmo/problems.hpp"

#include <cassert>
#include <stdexcept>

namespace rrmo {

namespace {

void check_input(const BitString& x, const ProblemSpec& spec, Family expected) {
    if (spec.family != expected)
        throw std::invalid_argument("evaluate/classify: wrong family for this operation");
    spec.validate();
    if (x.size() != spec.n)
        throw std::invalid_argument("evaluate/classify: genotype length does not match spec");
}

// ---- one-point family ------------------------------------------------------

struct RrmoBlockStats {
    int ones, lz, tz;
    bool in_a, in_b;
};

struct RrmoThresholds {
    int t2, t4, t6, t8, block;  // 2n/(5m), 4n/(5m), 6n/(5m), 8n/(5m), 2n/m
};

RrmoThresholds rrmo_thresholds(const ProblemSpec& spec) {
    int t2 = 2 * spec.n / (5 * spec.m);
    return {t2, 2 * t2, 3 * t2, 4 * t2, 5 * t2};
}

void rrmo_block_stats(const BitString& x, const ProblemSpec& spec,
                      std::vector<RrmoBlockStats>& out) {
    auto th = rrmo_thresholds(spec);
    int blocks = spec.block_count();
    out.resize(static_cast<std::size_t>(blocks));
    for (int j = 0; j < blocks; ++j) {
        int begin = j * th.block;
        RrmoBlockStats s;
        s.ones = x.count_ones(begin, th.block);
        s.lz = x.leading_zeros(begin, th.block);
        s.tz = x.trailing_zeros(begin, th.block);
        s.in_a = s.ones == th.t8 && s.lz + s.tz == th.t2;
        s.in_b = s.ones == th.t6 && s.lz + s.tz == th.t4;
        out[static_cast<std::size_t>(j)] = s;
    }
}

RrmoRegion rrmo_region_from_stats(const std::vector<RrmoBlockStats>& stats, int t6) {
    bool all_le = true, some_lt = false, all_eq = true, some_not_b = false, all_ab = true;
    for (const auto& s : stats) {
        if (s.ones > t6) all_le = false;
        if (s.ones < t6) some_lt = true;
        if (s.ones != t6) all_eq = false;
        if (!s.in_b) some_not_b = true;
        if (!s.in_a && !s.in_b) all_ab = false;
    }
    RrmoRegion r;
    if (all_le && some_lt) {
        r.region = Region::L;
    } else if (all_eq && some_not_b) {
        r.region = Region::M;
    } else if (all_ab) {
        r.region = Region::N;
        for (int j = 0; j < static_cast<int>(stats.size()); ++j)
            if (stats[static_cast<std::size_t>(j)].in_a) r.k_set.push_back(j);
    } else {
        r.region = Region::Zero;
    }
    return r;
}

// ---- uniform family --------------------------------------------------------

struct UniBlockStats {
    int ones_left;
    bool left_zero, left_ones, left_u, left_p;
    bool right_c, right_t;
    int g_odd, g_even;  // objective pair of this block
};

void uni_block_stats(const BitString& x, const ProblemSpec& spec,
                     std::vector<UniBlockStats>& out) {
    int n = spec.n, m = spec.m;
    int half = n / m;
    int quarter = n / (4 * m);
    int blocks = spec.block_count();
    out.resize(static_cast<std::size_t>(blocks));
    for (int j = 0; j < blocks; ++j) {
        int lbegin = j * 2 * half;
        int rbegin = lbegin + half;
        UniBlockStats s;
        s.ones_left = x.count_ones(lbegin, half);
        s.left_zero = s.ones_left == 0;
        s.left_ones = s.ones_left == half;
        // U: every quarter has n/(12m) <= ones <= n/(6m); the bounds are
        // exact rationals, compared by cross-multiplication.
        s.left_u = true;
        for (int q = 0; q < 4; ++q) {
            int oq = x.count_ones(lbegin + q * quarter, quarter);
            if (12LL * m * oq < n || 6LL * m * oq > n) {
                s.left_u = false;
                break;
            }
        }
        s.left_p = x.leading_ones(lbegin, half) + x.trailing_zeros(lbegin, half) == half;
        int lo_r = x.leading_ones(rbegin, half);
        int tz_r = x.trailing_zeros(rbegin, half);
        int lz_r = x.leading_zeros(rbegin, half);
        int to_r = x.trailing_ones(rbegin, half);
        s.right_c = (lo_r + tz_r == half) || (lz_r + to_r == half);
        s.right_t = true;
        for (int q = 0; q < 4; ++q) {
            int oq = x.count_ones(rbegin + q * quarter, quarter);
            if (2 * oq != quarter) {
                s.right_t = false;
                break;
            }
        }
        if (lo_r != 0) {
            s.g_odd = lo_r;
            s.g_even = half + tz_r;
        } else {
            s.g_odd = half + lz_r;
            s.g_even = to_r;
        }
        out[static_cast<std::size_t>(j)] = s;
    }
}

UniRegion uni_region_from_stats(const std::vector<UniBlockStats>& stats, const ProblemSpec& spec) {
    long long n = spec.n, m = spec.m;
    UniRegion r;
    bool all_left_u = true, some_right_not_c = false;
    bool all_m_cond = true, some_left_nonzero = false;
    for (const auto& s : stats) {
        if (!s.left_u) all_left_u = false;
        if (!s.right_c) some_right_not_c = true;
        // M: ones(left) <= 4n/(6m) and right in C, for every block.
        if (3 * m * s.ones_left > 2 * n || !s.right_c) all_m_cond = false;
        if (!s.left_zero) some_left_nonzero = true;
    }
    if (all_left_u && some_right_not_c) {
        r.region = Region::L;
        return r;
    }
    if (all_m_cond && some_left_nonzero) {
        r.region = Region::M;
        return r;
    }
    // N: at most one special block; all others are either in U(x)
    // (left 1^h, right in C) or ordinary (left 0^h, right in C).
    int specials = 0;
    int special_block = -1;
    UniSpecialCase special_case = UniSpecialCase::SolidOnesRightNotC;
    bool ok = true;
    std::vector<int> u_set;
    for (int j = 0; j < static_cast<int>(stats.size()); ++j) {
        const auto& s = stats[static_cast<std::size_t>(j)];
        if (s.left_ones && s.right_c) {
            u_set.push_back(j);
            continue;
        }
        if (s.left_p && !s.left_ones && s.right_t) {
            ++specials;
            special_block = j;
            special_case = UniSpecialCase::PartialRunWithBalancedRight;
            continue;
        }
        if (s.left_ones && !s.right_c) {
            ++specials;
            special_block = j;
            special_case = UniSpecialCase::SolidOnesRightNotC;
            continue;
        }
        if (s.left_zero && s.right_c) continue;
        ok = false;
        break;
    }
    if (ok && specials <= 1) {
        r.region = Region::N;
        r.u_set = std::move(u_set);
        if (specials == 1) {
            r.special_block = special_block;
            r.special_case = special_case;
        }
        return r;
    }
    r.region = Region::Zero;
    return r;
}

}  // namespace

RrmoRegion classify_rrmo(const BitString& x, const ProblemSpec& spec) {
    check_input(x, spec, Family::Rrmo);
    std::vector<RrmoBlockStats> stats;
    rrmo_block_stats(x, spec, stats);
    return rrmo_region_from_stats(stats, rrmo_thresholds(spec).t6);
}

FitnessVector evaluate_rrmo(const BitString& x, const ProblemSpec& spec) {
    check_input(x, spec, Family::Rrmo);
    std::vector<RrmoBlockStats> stats;
    rrmo_block_stats(x, spec, stats);
    RrmoRegion region = rrmo_region_from_stats(stats, rrmo_thresholds(spec).t6);

    FitnessVector f(static_cast<std::size_t>(spec.m), 0);
    switch (region.region) {
        case Region::L:
            for (int j = 0; j < spec.block_count(); ++j) {
                const auto& s = stats[static_cast<std::size_t>(j)];
                f[static_cast<std::size_t>(2 * j)] = s.ones;
                f[static_cast<std::size_t>(2 * j + 1)] = s.ones;
            }
            break;
        case Region::M:
            for (int j = 0; j < spec.block_count(); ++j) {
                const auto& s = stats[static_cast<std::size_t>(j)];
                f[static_cast<std::size_t>(2 * j)] = s.ones + s.lz;
                f[static_cast<std::size_t>(2 * j + 1)] = s.ones + s.tz;
            }
            break;
        case Region::N: {
            long long num = 4LL * spec.n * static_cast<long long>(region.k_set.size());
            assert(num % (5LL * spec.m) == 0);
            long long base = num / (5LL * spec.m);
            for (int j = 0; j < spec.block_count(); ++j) {
                const auto& s = stats[static_cast<std::size_t>(j)];
                f[static_cast<std::size_t>(2 * j)] = base + s.ones + s.lz;
                f[static_cast<std::size_t>(2 * j + 1)] = base + s.ones + s.tz;
            }
            break;
        }
        case Region::Zero:
            break;
    }
    return f;
}

UniRegion classify_uni(const BitString& x, const ProblemSpec& spec) {
    check_input(x, spec, Family::RrmoUni);
    std::vector<UniBlockStats> stats;
    uni_block_stats(x, spec, stats);
    return uni_region_from_stats(stats, spec);
}

FitnessVector evaluate_uni(const BitString& x, const ProblemSpec& spec) {
    check_input(x, spec, Family::RrmoUni);
    std::vector<UniBlockStats> stats;
    uni_block_stats(x, spec, stats);
    UniRegion region = uni_region_from_stats(stats, spec);

    long long half = spec.n / spec.m;
    FitnessVector f(static_cast<std::size_t>(spec.m), 0);
    switch (region.region) {
        case Region::L:
            for (int j = 0; j < spec.block_count(); ++j) {
                const auto& s = stats[static_cast<std::size_t>(j)];
                f[static_cast<std::size_t>(2 * j)] = s.g_odd;
                f[static_cast<std::size_t>(2 * j + 1)] = s.g_even;
            }
            break;
        case Region::M:
            for (int j = 0; j < spec.block_count(); ++j) {
                const auto& s = stats[static_cast<std::size_t>(j)];
                long long off = 3 * half - s.ones_left;
                f[static_cast<std::size_t>(2 * j)] = s.g_odd + off;
                f[static_cast<std::size_t>(2 * j + 1)] = s.g_even + off;
            }
            break;
        case Region::N: {
            long long u_count = static_cast<long long>(region.u_set.size());
            long long shared = 7 * half * u_count;
            for (int j = 0; j < spec.block_count(); ++j) {
                const auto& s = stats[static_cast<std::size_t>(j)];
                long long off;
                if (s.left_ones) {
                    off = shared + 10 * half;
                } else if (region.special_block && *region.special_block == j) {
                    // left in P \ {1^h}, right in T
                    off = shared + 5 * half + (3 * half - (half - s.ones_left));
                } else {
                    off = shared + 5 * half;
                }
                f[static_cast<std::size_t>(2 * j)] = s.g_odd + off;
                f[static_cast<std::size_t>(2 * j + 1)] = s.g_even + off;
            }
            break;
        }
        case Region::Zero:
            break;
    }
    return f;
}

FitnessVector evaluate(const BitString& x, const ProblemSpec& spec) {
    return spec.family == Family::Rrmo ? evaluate_rrmo(x, spec) : evaluate_uni(x, spec);
}

bool is_pareto_optimal(const BitString& x, const ProblemSpec& spec) {
    spec.validate();
    if (x.size() != spec.n)
        throw std::invalid_argument("is_pareto_optimal: genotype length does not match spec");
    if (spec.family == Family::Rrmo) {
        auto th = rrmo_thresholds(spec);
        for (int j = 0; j < spec.block_count(); ++j) {
            int begin = j * th.block;
            if (x.count_ones(begin, th.block) != th.t8) return false;
            if (x.leading_zeros(begin, th.block) + x.trailing_zeros(begin, th.block) != th.t2)
                return false;
        }
        return true;
    }
    int half = spec.n / spec.m;
    for (int j = 0; j < spec.block_count(); ++j) {
        int lbegin = 2 * j * half;
        int rbegin = lbegin + half;
        if (!x.all_ones(lbegin, half)) return false;
        bool c = (x.leading_ones(rbegin, half) + x.trailing_zeros(rbegin, half) == half) ||
                 (x.leading_zeros(rbegin, half) + x.trailing_ones(rbegin, half) == half);
        if (!c) return false;
    }
    return true;
}

namespace {

// The 2n/m distinct members of C at half length h: solid runs of ones from
// the left (1^a 0^{h-a}) plus solid runs from the right (0^a 1^{h-a}),
// skipping the two strings counted twice.
std::vector<BitString> enumerate_c(int h) {
    std::vector<BitString> out;
    for (int a = 0; a <= h; ++a) {
        BitString y(h);
        for (int i = 0; i < a; ++i) y.set(i, true);
        out.push_back(std::move(y));
    }
    for (int a = 1; a < h; ++a) {
        BitString y(h);
        for (int i = a; i < h; ++i) y.set(i, true);
        out.push_back(std::move(y));
    }
    return out;
}

}  // namespace

std::vector<BitString> pareto_set(const ProblemSpec& spec, std::uint64_t max_size) {
    spec.validate();
    std::uint64_t total = spec.pareto_front_size();
    if (total > max_size)
        throw std::overflow_error("pareto_set: front size " + std::to_string(total) +
                                  " exceeds cap " + std::to_string(max_size));
    int blocks = spec.block_count();
    std::vector<BitString> out;
    out.reserve(total);

    if (spec.family == Family::Rrmo) {
        auto th = rrmo_thresholds(spec);
        int choices = th.t2 + 1;  // per-block shift of the solid run of ones
        std::vector<int> odo(static_cast<std::size_t>(blocks), 0);
        while (true) {
            BitString x(spec.n);
            for (int j = 0; j < blocks; ++j) {
                int a = odo[static_cast<std::size_t>(j)];
                int begin = j * th.block + a;
                for (int i = 0; i < th.t8; ++i) x.set(begin + i, true);
            }
            out.push_back(std::move(x));
            int j = blocks - 1;
            while (j >= 0 && ++odo[static_cast<std::size_t>(j)] == choices) {
                odo[static_cast<std::size_t>(j)] = 0;
                --j;
            }
            if (j < 0) break;
        }
    } else {
        int half = spec.n / spec.m;
        auto c_members = enumerate_c(half);
        std::vector<int> odo(static_cast<std::size_t>(blocks), 0);
        while (true) {
            BitString x(spec.n);
            for (int j = 0; j < blocks; ++j) {
                int lbegin = 2 * j * half;
                for (int i = 0; i < half; ++i) x.set(lbegin + i, true);
                const BitString& c = c_members[static_cast<std::size_t>(odo[static_cast<std::size_t>(j)])];
                for (int i = 0; i < half; ++i)
                    if (c.test(i)) x.set(lbegin + half + i, true);
            }
            out.push_back(std::move(x));
            int j = blocks - 1;
            while (j >= 0 && ++odo[static_cast<std::size_t>(j)] == static_cast<int>(c_members.size())) {
                odo[static_cast<std::size_t>(j)] = 0;
                --j;
            }
            if (j < 0) break;
        }
    }
    assert(out.size() == total);
    return out;
}

std::vector<FitnessVector> pareto_front_vectors(const ProblemSpec& spec, std::uint64_t max_size) {
    auto set = pareto_set(spec, max_size);
    std::vector<FitnessVector> out;
    out.reserve(set.size());
    for (const auto& x : set) out.push_back(evaluate(x, spec));
    return out;
}

bool in_rrmo_a(const BitString& block, const ProblemSpec& spec) {
    auto th = rrmo_thresholds(spec);
    if (block.size() != th.block)
        throw std::invalid_argument("in_rrmo_a: wrong block length");
    return block.count_ones() == th.t8 &&
           block.leading_zeros() + block.trailing_zeros() == th.t2;
}

bool in_rrmo_b(const BitString& block, const ProblemSpec& spec) {
    auto th = rrmo_thresholds(spec);
    if (block.size() != th.block)
        throw std::invalid_argument("in_rrmo_b: wrong block length");
    return block.count_ones() == th.t6 &&
           block.leading_zeros() + block.trailing_zeros() == th.t4;
}

bool in_uni_u(const BitString& half, const ProblemSpec& spec) {
    int h = spec.n / spec.m;
    if (half.size() != h) throw std::invalid_argument("in_uni_u: wrong half length");
    int quarter = h / 4;
    for (int q = 0; q < 4; ++q) {
        int oq = half.count_ones(q * quarter, quarter);
        if (12LL * spec.m * oq < spec.n || 6LL * spec.m * oq > spec.n) return false;
    }
    return true;
}

bool in_uni_p(const BitString& half, const ProblemSpec& spec) {
    int h = spec.n / spec.m;
    if (half.size() != h) throw std::invalid_argument("in_uni_p: wrong half length");
    return half.leading_ones() + half.trailing_zeros() == h;
}

bool in_uni_c(const BitString& half, const ProblemSpec& spec) {
    int h = spec.n / spec.m;
    if (half.size() != h) throw std::invalid_argument("in_uni_c: wrong half length");
    return half.leading_ones() + half.trailing_zeros() == h ||
           half.leading_zeros() + half.trailing_ones() == h;
}

bool in_uni_t(const BitString& half, const ProblemSpec& spec) {
    int h = spec.n / spec.m;
    if (half.size() != h) throw std::invalid_argument("in_uni_t: wrong half length");
    int quarter = h / 4;
    for (int q = 0; q < 4; ++q)
        if (2 * half.count_ones(q * quarter, quarter) != quarter) return false;
    return true;
}

}  // namespace rrmo
