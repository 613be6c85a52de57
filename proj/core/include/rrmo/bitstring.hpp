#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace rrmo {

/// Fixed-length bit string. Positions are 0-based and run left to right;
/// the textual form prints position 0 first. Length never changes after
/// construction.
class BitString {
public:
    BitString() = default;
    explicit BitString(int n) : n_(n), words_((n + 63) / 64, 0) {}

    static BitString zeros(int n) { return BitString(n); }
    static BitString ones(int n);
    /// Parses a 0/1 character sequence. Throws std::invalid_argument on
    /// any other character or an empty string.
    static BitString parse(std::string_view s);

    int size() const { return n_; }

    bool test(int pos) const { return (words_[pos >> 6] >> (pos & 63)) & 1u; }
    void set(int pos, bool v) {
        std::uint64_t bit = std::uint64_t{1} << (pos & 63);
        if (v) words_[pos >> 6] |= bit; else words_[pos >> 6] &= ~bit;
    }
    void flip(int pos) { words_[pos >> 6] ^= std::uint64_t{1} << (pos & 63); }

    int count_ones() const;
    int count_zeros() const { return n_ - count_ones(); }
    /// Number of ones in the slice [begin, begin+len).
    int count_ones(int begin, int len) const;

    // Longest all-zero / all-one prefix and suffix lengths, on the whole
    // string or on a slice. For 0^n both zero runs equal n (the runs are
    // independent longest-prefix/suffix lengths and may overlap).
    int leading_zeros() const { return leading_zeros(0, n_); }
    int leading_ones() const { return leading_ones(0, n_); }
    int trailing_zeros() const { return trailing_zeros(0, n_); }
    int trailing_ones() const { return trailing_ones(0, n_); }
    int leading_zeros(int begin, int len) const;
    int leading_ones(int begin, int len) const;
    int trailing_zeros(int begin, int len) const;
    int trailing_ones(int begin, int len) const;

    /// True iff the slice [begin, begin+len) is all zeros / all ones.
    bool all_zeros(int begin, int len) const { return count_ones(begin, len) == 0; }
    bool all_ones(int begin, int len) const { return count_ones(begin, len) == len; }

    /// Copy of the slice [begin, begin+len) as a standalone string.
    BitString slice(int begin, int len) const;

    std::string str() const;

    const std::vector<std::uint64_t>& words() const { return words_; }
    std::vector<std::uint64_t>& words() { return words_; }
    /// Clears bits beyond position n-1 in the last word.
    void mask_tail();

    friend bool operator==(const BitString& a, const BitString& b) {
        return a.n_ == b.n_ && a.words_ == b.words_;
    }
    friend bool operator!=(const BitString& a, const BitString& b) { return !(a == b); }
    friend bool operator<(const BitString& a, const BitString& b);

    std::size_t hash() const;

private:
    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

struct BitStringHash {
    std::size_t operator()(const BitString& x) const { return x.hash(); }
};

/// Hamming distance. Throws std::invalid_argument on length mismatch.
int hamming(const BitString& x, const BitString& y);

struct PrefixSuffixRuns {
    int leading_ones;
    int leading_zeros;
    int trailing_ones;
    int trailing_zeros;
};

PrefixSuffixRuns prefix_suffix_runs(const BitString& x);

}  // namespace rrmo
