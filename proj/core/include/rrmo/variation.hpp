#pragma once

#include "rrmo/bitstring.hpp"
#include "rrmo/random.hpp"

namespace rrmo {

enum class CrossoverKind { OnePoint, Uniform };

std::string crossover_name(CrossoverKind k);
CrossoverKind parse_crossover(std::string_view s);

// Deterministic variants. The randomized operators below delegate to these,
// so tests can inject an explicit cut point, flip mask or selection mask.

/// x with the set positions of flip_mask toggled.
BitString mutate_with_mask(const BitString& x, const BitString& flip_mask);

/// Positions [0, cut) from y1, positions [cut, n) from y2; cut in {0..n}.
BitString one_point_crossover_at(const BitString& y1, const BitString& y2, int cut);

/// Positionwise pick: a set bit in take_first copies from y1, else y2.
BitString uniform_crossover_with_mask(const BitString& y1, const BitString& y2,
                                      const BitString& take_first);

// Randomized operators. Parents are never modified.

/// Flips each bit independently with probability 1/n.
BitString standard_bit_mutation(const BitString& x, RandomSource& rng);

/// Cut point drawn uniformly from the n+1 values {0..n}.
BitString one_point_crossover(const BitString& y1, const BitString& y2, RandomSource& rng);

/// Each position copies from either parent with probability 1/2.
BitString uniform_crossover(const BitString& y1, const BitString& y2, RandomSource& rng);

BitString crossover(CrossoverKind kind, const BitString& y1, const BitString& y2,
                    RandomSource& rng);

}  // namespace rrmo
