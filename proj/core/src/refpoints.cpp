#include "rrmo/refpoints.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

namespace rrmo {

std::uint64_t ReferenceLattice::size() const {
    // C(p+m-1, m-1), computed exactly; every intermediate value is itself a
    // binomial coefficient so the division is exact.
    unsigned __int128 r = 1;
    for (int i = 1; i <= m - 1; ++i) {
        r = r * static_cast<unsigned __int128>(p + i) / static_cast<unsigned>(i);
        if (r > static_cast<unsigned __int128>(UINT64_MAX)) return UINT64_MAX;
    }
    return static_cast<std::uint64_t>(r);
}

std::vector<ReferencePoint> generate_reference_points(int m, std::int64_t p,
                                                      std::uint64_t cap) {
    if (m < 1 || p < 1)
        throw std::invalid_argument("generate_reference_points: need m >= 1 and p >= 1");
    ReferenceLattice lat{m, p};
    std::uint64_t count = lat.size();
    if (count > cap)
        throw std::overflow_error(
            "generate_reference_points: lattice has " + std::to_string(count) +
            " points, above the enumeration cap " + std::to_string(cap) +
            "; use the implicit backend");
    std::vector<ReferencePoint> out;
    out.reserve(count);
    ReferencePoint cur(static_cast<std::size_t>(m), 0);
    // Lexicographic enumeration of all numerator tuples summing to p.
    auto rec = [&](auto&& self, int idx, std::int64_t rest) -> void {
        if (idx == m - 1) {
            cur[static_cast<std::size_t>(idx)] = static_cast<std::int32_t>(rest);
            out.push_back(cur);
            return;
        }
        for (std::int64_t a = 0; a <= rest; ++a) {
            cur[static_cast<std::size_t>(idx)] = static_cast<std::int32_t>(a);
            self(self, idx + 1, rest - a);
        }
    };
    rec(rec, 0, p);
    return out;
}

void NormalizationState::update(const FitnessVector& f) {
    if (y_min.empty()) {
        y_min.assign(f.begin(), f.end());
        y_max.assign(f.begin(), f.end());
        ++version;
        return;
    }
    bool changed = false;
    for (std::size_t j = 0; j < f.size(); ++j) {
        if (f[j] < y_min[j]) { y_min[j] = f[j]; changed = true; }
        if (f[j] > y_max[j]) { y_max[j] = f[j]; changed = true; }
    }
    if (changed) ++version;
}

void NormalizationState::update(std::span<const FitnessVector> merged) {
    for (const auto& f : merged) update(f);
}

std::vector<double> NormalizationState::normalize(const FitnessVector& f) const {
    std::vector<double> out(f.size());
    for (std::size_t j = 0; j < f.size(); ++j) {
        std::int64_t den = y_nad(j) - y_min[j];
        if (den < 1) den = 1;
        out[j] = static_cast<double>(f[j] - y_min[j]) / static_cast<double>(den);
    }
    return out;
}

double perpendicular_distance_sq(std::span<const double> fn, const ReferencePoint& r) {
    double ff = 0.0, fr = 0.0, rr = 0.0;
    for (std::size_t j = 0; j < fn.size(); ++j) {
        double rj = static_cast<double>(r[j]);
        ff += fn[j] * fn[j];
        fr += fn[j] * rj;
        rr += rj * rj;
    }
    double d = ff - (fr * fr) / rr;
    return d > 0.0 ? d : 0.0;
}

namespace {

bool is_zero(std::span<const double> fn) {
    for (double v : fn)
        if (v != 0.0) return false;
    return true;
}

}  // namespace

AssociationChoices associate_choices(std::span<const double> fn,
                                     std::span<const ReferencePoint> points) {
    if (points.empty())
        throw std::invalid_argument("associate: empty reference point set");
    AssociationChoices out;
    if (is_zero(fn)) {
        out.whole_lattice = true;
        return out;
    }
    double best = std::numeric_limits<double>::infinity();
    for (const auto& r : points) {
        double d = perpendicular_distance_sq(fn, r);
        if (d < best) {
            best = d;
            out.minimizers.clear();
            out.minimizers.push_back(r);
        } else if (d == best) {
            out.minimizers.push_back(r);
        }
    }
    out.dist_sq = best;
    return out;
}

AssociationChoices associate_fast_choices(std::span<const double> fn,
                                          const ReferenceLattice& lattice, int radius) {
    if (radius < 1)
        throw std::invalid_argument("associate_fast: radius must be >= 1");
    AssociationChoices out;
    if (is_zero(fn)) {
        out.whole_lattice = true;
        return out;
    }
    int m = lattice.m;
    std::int64_t p = lattice.p;

    // Scale to coordinate sum p and round by largest remainder.
    double s = 0.0;
    for (double v : fn) s += v;
    std::vector<double> target(fn.size());
    for (std::size_t j = 0; j < fn.size(); ++j)
        target[j] = fn[j] * static_cast<double>(p) / s;
    ReferencePoint base(static_cast<std::size_t>(m), 0);
    std::int64_t assigned = 0;
    for (std::size_t j = 0; j < target.size(); ++j) {
        base[j] = static_cast<std::int32_t>(std::floor(target[j]));
        assigned += base[j];
    }
    std::vector<int> order(static_cast<std::size_t>(m));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        double fa = target[static_cast<std::size_t>(a)] - std::floor(target[static_cast<std::size_t>(a)]);
        double fb = target[static_cast<std::size_t>(b)] - std::floor(target[static_cast<std::size_t>(b)]);
        return fa > fb;
    });
    std::int64_t rest = p - assigned;
    for (std::size_t i = 0; rest > 0; --rest, ++i)
        ++base[static_cast<std::size_t>(order[i % static_cast<std::size_t>(m)])];

    // Enumerate offsets with zero sum and L1 norm at most 2*radius.
    std::vector<std::int32_t> delta(static_cast<std::size_t>(m), 0);
    double best = std::numeric_limits<double>::infinity();
    ReferencePoint cand(static_cast<std::size_t>(m), 0);
    auto consider = [&]() {
        for (int j = 0; j < m; ++j) {
            std::int64_t v = static_cast<std::int64_t>(base[static_cast<std::size_t>(j)]) +
                             delta[static_cast<std::size_t>(j)];
            if (v < 0 || v > p) return;
            cand[static_cast<std::size_t>(j)] = static_cast<std::int32_t>(v);
        }
        double d = perpendicular_distance_sq(fn, cand);
        if (d < best) {
            best = d;
            out.minimizers.clear();
            out.minimizers.push_back(cand);
        } else if (d == best) {
            out.minimizers.push_back(cand);
        }
    };
    int budget = 2 * radius;
    auto rec = [&](auto&& self, int idx, int used, int sum) -> void {
        if (idx == m - 1) {
            int last = -sum;
            if (std::abs(last) + used <= budget) {
                delta[static_cast<std::size_t>(idx)] = last;
                consider();
            }
            return;
        }
        for (int d = -(budget - used); d <= budget - used; ++d) {
            delta[static_cast<std::size_t>(idx)] = d;
            self(self, idx + 1, used + std::abs(d), sum + d);
        }
        delta[static_cast<std::size_t>(idx)] = 0;
    };
    rec(rec, 0, 0, 0);
    out.dist_sq = best;
    return out;
}

ReferencePoint uniform_lattice_point(const ReferenceLattice& lattice, RandomSource& rng) {
    // Stars and bars: choose m-1 distinct dividers from {1..p+m-1} uniformly
    // (Floyd's algorithm), gaps between them are the numerators.
    int m = lattice.m;
    std::int64_t top = lattice.p + m - 1;
    std::set<std::int64_t> dividers;
    for (std::int64_t j = top - (m - 1) + 1; j <= top; ++j) {
        std::int64_t t = 1 + static_cast<std::int64_t>(rng.next_below(static_cast<std::uint64_t>(j)));
        if (!dividers.insert(t).second) dividers.insert(j);
    }
    ReferencePoint out(static_cast<std::size_t>(m), 0);
    std::int64_t prev = 0;
    std::size_t idx = 0;
    for (std::int64_t d : dividers) {
        out[idx++] = static_cast<std::int32_t>(d - prev - 1);
        prev = d;
    }
    out[idx] = static_cast<std::int32_t>(top - prev);
    return out;
}

namespace {

ReferencePoint pick_uniform(const std::vector<ReferencePoint>& choices, RandomSource& rng) {
    if (choices.size() == 1) return choices.front();
    return choices[static_cast<std::size_t>(rng.next_below(choices.size()))];
}

}  // namespace

Association associate(std::span<const double> fn, std::span<const ReferencePoint> points,
                      RandomSource& rng) {
    auto choices = associate_choices(fn, points);
    if (choices.whole_lattice) {
        const auto& r = points[static_cast<std::size_t>(rng.next_below(points.size()))];
        return Association{r, 0.0};
    }
    return Association{pick_uniform(choices.minimizers, rng), choices.dist_sq};
}

Association associate_fast(std::span<const double> fn, const ReferenceLattice& lattice,
                           int radius, RandomSource& rng) {
    auto choices = associate_fast_choices(fn, lattice, radius);
    if (choices.whole_lattice)
        return Association{uniform_lattice_point(lattice, rng), 0.0};
    return Association{pick_uniform(choices.minimizers, rng), choices.dist_sq};
}

}  // namespace rrmo
