#include "rrmo/variation.hpp"

#include <stdexcept>

namespace rrmo {

namespace {

void check_lengths(const BitString& a, const BitString& b, const char* op) {
    if (a.size() != b.size())
        throw std::invalid_argument(std::string(op) + ": length mismatch");
}

}  // namespace

std::string crossover_name(CrossoverKind k) {
    return k == CrossoverKind::OnePoint ? "one-point" : "uniform";
}

CrossoverKind parse_crossover(std::string_view s) {
    if (s == "one-point") return CrossoverKind::OnePoint;
    if (s == "uniform") return CrossoverKind::Uniform;
    throw std::invalid_argument("unknown crossover kind '" + std::string(s) + "'");
}

BitString mutate_with_mask(const BitString& x, const BitString& flip_mask) {
    check_lengths(x, flip_mask, "mutate_with_mask");
    BitString out = x;
    for (std::size_t i = 0; i < out.words().size(); ++i)
        out.words()[i] ^= flip_mask.words()[i];
    return out;
}

BitString one_point_crossover_at(const BitString& y1, const BitString& y2, int cut) {
    check_lengths(y1, y2, "one_point_crossover");
    if (cut < 0 || cut > y1.size())
        throw std::invalid_argument("one_point_crossover: cut out of range");
    BitString out = y2;
    int full = cut >> 6;
    for (int i = 0; i < full; ++i) out.words()[static_cast<std::size_t>(i)] = y1.words()[static_cast<std::size_t>(i)];
    int rem = cut & 63;
    if (rem != 0) {
        std::uint64_t m = (std::uint64_t{1} << rem) - 1;
        auto& w = out.words()[static_cast<std::size_t>(full)];
        w = (y1.words()[static_cast<std::size_t>(full)] & m) | (w & ~m);
    }
    return out;
}

BitString uniform_crossover_with_mask(const BitString& y1, const BitString& y2,
                                      const BitString& take_first) {
    check_lengths(y1, y2, "uniform_crossover");
    check_lengths(y1, take_first, "uniform_crossover");
    BitString out = y1;
    for (std::size_t i = 0; i < out.words().size(); ++i) {
        std::uint64_t m = take_first.words()[i];
        out.words()[i] = (y1.words()[i] & m) | (y2.words()[i] & ~m);
    }
    return out;
}

BitString standard_bit_mutation(const BitString& x, RandomSource& rng) {
    int n = x.size();
    double p = 1.0 / n;
    BitString mask(n);
    for (int i = 0; i < n; ++i)
        if (rng.next_bernoulli(p)) mask.set(i, true);
    return mutate_with_mask(x, mask);
}

BitString one_point_crossover(const BitString& y1, const BitString& y2, RandomSource& rng) {
    check_lengths(y1, y2, "one_point_crossover");
    int cut = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(y1.size()) + 1));
    return one_point_crossover_at(y1, y2, cut);
}

BitString uniform_crossover(const BitString& y1, const BitString& y2, RandomSource& rng) {
    check_lengths(y1, y2, "uniform_crossover");
    return uniform_crossover_with_mask(y1, y2, rng.random_bits(y1.size()));
}

BitString crossover(CrossoverKind kind, const BitString& y1, const BitString& y2,
                    RandomSource& rng) {
    return kind == CrossoverKind::OnePoint ? one_point_crossover(y1, y2, rng)
                                           : uniform_crossover(y1, y2, rng);
}

}  // namespace rrmo
