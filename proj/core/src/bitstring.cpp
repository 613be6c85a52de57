#include "rrmo/bitstring.hpp"

#include <bit>
#include <stdexcept>

namespace rrmo {

namespace {

inline std::uint64_t low_mask(int bits) {
    return bits >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << bits) - 1);
}

}  // namespace

BitString BitString::ones(int n) {
    BitString x(n);
    for (auto& w : x.words_) w = ~std::uint64_t{0};
    x.mask_tail();
    return x;
}

BitString BitString::parse(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("BitString::parse: empty string");
    BitString x(static_cast<int>(s.size()));
    for (int i = 0; i < x.n_; ++i) {
        char c = s[static_cast<std::size_t>(i)];
        if (c == '1') x.set(i, true);
        else if (c != '0') throw std::invalid_argument("BitString::parse: invalid character");
    }
    return x;
}

void BitString::mask_tail() {
    int rem = n_ & 63;
    if (rem != 0 && !words_.empty()) words_.back() &= low_mask(rem);
}

int BitString::count_ones() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
}

int BitString::count_ones(int begin, int len) const {
    if (len <= 0) return 0;
    int end = begin + len;  // exclusive
    int wb = begin >> 6, we = (end - 1) >> 6;
    if (wb == we) {
        std::uint64_t w = words_[wb] >> (begin & 63);
        return std::popcount(w & low_mask(len));
    }
    int c = std::popcount(words_[wb] >> (begin & 63));
    for (int i = wb + 1; i < we; ++i) c += std::popcount(words_[i]);
    c += std::popcount(words_[we] & low_mask(((end - 1) & 63) + 1));
    return c;
}

namespace {

// First position of a set bit of `v(w)` in [begin, begin+len) of string x,
// where v extracts either the raw word (find a one) or its complement
// (find a zero). Returns -1 when absent.
template <typename WordFn>
int first_pos(const std::vector<std::uint64_t>& words, int begin, int len, WordFn v) {
    int end = begin + len;
    int wb = begin >> 6, we = (end - 1) >> 6;
    for (int i = wb; i <= we; ++i) {
        std::uint64_t w = v(words[i]);
        if (i == wb) w &= ~low_mask(begin & 63);
        if (i == we) w &= low_mask(((end - 1) & 63) + 1);
        if (w != 0) return i * 64 + std::countr_zero(w);
    }
    return -1;
}

template <typename WordFn>
int last_pos(const std::vector<std::uint64_t>& words, int begin, int len, WordFn v) {
    int end = begin + len;
    int wb = begin >> 6, we = (end - 1) >> 6;
    for (int i = we; i >= wb; --i) {
        std::uint64_t w = v(words[i]);
        if (i == wb) w &= ~low_mask(begin & 63);
        if (i == we) w &= low_mask(((end - 1) & 63) + 1);
        if (w != 0) return i * 64 + 63 - std::countl_zero(w);
    }
    return -1;
}

inline std::uint64_t ident(std::uint64_t w) { return w; }
inline std::uint64_t inv(std::uint64_t w) { return ~w; }

}  // namespace

int BitString::leading_zeros(int begin, int len) const {
    if (len <= 0) return 0;
    int p = first_pos(words_, begin, len, ident);
    return p < 0 ? len : p - begin;
}

int BitString::leading_ones(int begin, int len) const {
    if (len <= 0) return 0;
    int p = first_pos(words_, begin, len, inv);
    return p < 0 ? len : p - begin;
}

int BitString::trailing_zeros(int begin, int len) const {
    if (len <= 0) return 0;
    int p = last_pos(words_, begin, len, ident);
    return p < 0 ? len : begin + len - 1 - p;
}

int BitString::trailing_ones(int begin, int len) const {
    if (len <= 0) return 0;
    int p = last_pos(words_, begin, len, inv);
    return p < 0 ? len : begin + len - 1 - p;
}

BitString BitString::slice(int begin, int len) const {
    BitString out(len);
    for (int i = 0; i < len; ++i)
        if (test(begin + i)) out.set(i, true);
    return out;
}

std::string BitString::str() const {
    std::string s(static_cast<std::size_t>(n_), '0');
    for (int i = 0; i < n_; ++i)
        if (test(i)) s[static_cast<std::size_t>(i)] = '1';
    return s;
}

bool operator<(const BitString& a, const BitString& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    // Lexicographic on the textual form: position 0 is most significant.
    for (int i = 0; i < a.n_; ++i) {
        bool ba = a.test(i), bb = b.test(i);
        if (ba != bb) return bb;
    }
    return false;
}

std::size_t BitString::hash() const {
    std::uint64_t h = 1469598103934665603ull ^ static_cast<std::uint64_t>(n_);
    for (auto w : words_) {
        h ^= w;
        h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
}

int hamming(const BitString& x, const BitString& y) {
    if (x.size() != y.size())
        throw std::invalid_argument("hamming: length mismatch");
    int c = 0;
    for (std::size_t i = 0; i < x.words().size(); ++i)
        c += std::popcount(x.words()[i] ^ y.words()[i]);
    return c;
}

PrefixSuffixRuns prefix_suffix_runs(const BitString& x) {
    return PrefixSuffixRuns{x.leading_ones(), x.leading_zeros(),
                            x.trailing_ones(), x.trailing_zeros()};
}

}  // namespace rrmo
