#include "rrmo/oracle.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace rrmo {

namespace {

constexpr int kMaxEnumerationBits = 22;
constexpr std::size_t kMaxViolationsKept = 8;

void check_enumerable(int n, const char* what) {
    if (n > kMaxEnumerationBits)
        throw std::invalid_argument(std::string(what) + ": n too large for full enumeration");
}

BitString from_code(std::uint32_t code, int n) {
    BitString x(n);
    x.words()[0] = code;
    return x;
}

void note(LemmaReport& rep, std::string msg) {
    if (rep.violations.size() < kMaxViolationsKept) rep.violations.push_back(std::move(msg));
    else if (rep.violations.size() == kMaxViolationsKept) rep.violations.push_back("...");
}

std::string vec_str(const FitnessVector& f) {
    std::string s = "(";
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(f[i]);
    }
    s += ')';
    return s;
}

}  // namespace

std::string LemmaReport::text() const {
    std::string s = pass() ? "PASS " : "FAIL ";
    s += lemma + " " + instance + " checked=" + std::to_string(checked) +
         " violations=" + std::to_string(violations.size());
    for (const auto& v : violations) s += "\n    " + v;
    return s;
}

std::string LemmaReport::csv_header() { return "lemma,instance,checked,violations"; }

std::string LemmaReport::csv_row() const {
    return lemma + "," + instance + "," + std::to_string(checked) + "," +
           std::to_string(violations.size());
}

std::vector<BitString> BruteForceFront::all_genotypes() const {
    std::vector<BitString> out;
    for (const auto& g : groups)
        out.insert(out.end(), g.genotypes.begin(), g.genotypes.end());
    return out;
}

BruteForceFront brute_force_pareto(const ProblemSpec& spec) {
    spec.validate();
    check_enumerable(spec.n, "brute_force_pareto");
    const std::uint64_t total = std::uint64_t{1} << spec.n;

    // Pass 1: the distinct fitness vectors.
    std::unordered_set<FitnessVector, FitnessVectorHash> seen;
    for (std::uint64_t u = 0; u < total; ++u)
        seen.insert(evaluate(from_code(static_cast<std::uint32_t>(u), spec.n), spec));
    std::vector<FitnessVector> distinct(seen.begin(), seen.end());

    std::vector<bool> dominated(distinct.size(), false);
    for (std::size_t a = 0; a < distinct.size(); ++a)
        for (std::size_t b = 0; b < distinct.size(); ++b)
            if (a != b && strictly_dominates(distinct[b], distinct[a])) {
                dominated[a] = true;
                break;
            }
    std::map<FitnessVector, std::vector<BitString>> groups;
    std::unordered_set<FitnessVector, FitnessVectorHash> front;
    for (std::size_t a = 0; a < distinct.size(); ++a)
        if (!dominated[a]) {
            front.insert(distinct[a]);
            groups[distinct[a]] = {};
        }

    // Pass 2: collect the genotypes of the non-dominated vectors.
    for (std::uint64_t u = 0; u < total; ++u) {
        BitString x = from_code(static_cast<std::uint32_t>(u), spec.n);
        FitnessVector f = evaluate(x, spec);
        if (front.count(f)) groups[f].push_back(std::move(x));
    }

    BruteForceFront out;
    for (auto& [f, genos] : groups) {
        std::sort(genos.begin(), genos.end());
        out.groups.push_back({f, std::move(genos)});
    }
    return out;
}

namespace {

// Pairwise dominance between two families of distinct vectors; every pair
// must satisfy strictly_dominates(upper, lower).
void check_all_dominate(LemmaReport& rep, const std::vector<FitnessVector>& upper,
                        const std::vector<FitnessVector>& lower) {
    for (const auto& hi : upper)
        for (const auto& lo : lower) {
            ++rep.checked;
            if (!strictly_dominates(hi, lo))
                note(rep, vec_str(hi) + " does not dominate " + vec_str(lo));
        }
}

LemmaReport pareto_equality_report(const ProblemSpec& spec, const char* lemma_id) {
    LemmaReport rep{lemma_id, spec.str(), 0, {}};
    auto brute = brute_force_pareto(spec);
    auto brute_set = brute.all_genotypes();
    std::sort(brute_set.begin(), brute_set.end());
    auto constructive = pareto_set(spec);
    std::sort(constructive.begin(), constructive.end());
    rep.checked = static_cast<std::uint64_t>(brute_set.size() + constructive.size());
    if (brute_set != constructive) {
        note(rep, "brute-force Pareto set (" + std::to_string(brute_set.size()) +
                      " genotypes) differs from constructive enumeration (" +
                      std::to_string(constructive.size()) + ")");
    }
    if (static_cast<std::uint64_t>(brute.groups.size()) != spec.pareto_front_size())
        note(rep, "front has " + std::to_string(brute.groups.size()) +
                      " fitness vectors, formula gives " +
                      std::to_string(spec.pareto_front_size()));
    return rep;
}

LemmaReport first_layer_report(const ProblemSpec& spec, std::size_t front_vectors) {
    LemmaReport rep{"first-layer-antichain", spec.str(), front_vectors, {}};
    std::int64_t bound = spec.antichain_bound();
    if (static_cast<std::int64_t>(front_vectors) > bound)
        note(rep, "first layer carries " + std::to_string(front_vectors) +
                      " distinct vectors, above the bound " + std::to_string(bound));
    return rep;
}

LemmaReport image_antichain_report(const ProblemSpec& spec,
                                   const std::vector<FitnessVector>& distinct) {
    LemmaReport rep{"image-antichain", spec.str(), distinct.size(), {}};
    std::size_t width = max_antichain(distinct);
    std::int64_t bound = spec.antichain_bound();
    if (static_cast<std::int64_t>(width) > bound)
        note(rep, "image holds an antichain of " + std::to_string(width) +
                      " vectors, above the bound " + std::to_string(bound));
    return rep;
}

}  // namespace

std::vector<LemmaReport> verify_rrmo_lemmas(const ProblemSpec& spec) {
    spec.validate();
    if (spec.family != Family::Rrmo)
        throw std::invalid_argument("verify_rrmo_lemmas: spec is not an rrmo instance");
    check_enumerable(spec.n, "verify_rrmo_lemmas");
    const std::uint64_t total = std::uint64_t{1} << spec.n;
    const std::string inst = spec.str();

    std::unordered_set<FitnessVector, FitnessVectorHash> l_set, m_set;
    std::map<int, std::unordered_set<FitnessVector, FitnessVectorHash>> n_sets;
    std::unordered_map<FitnessVector, std::uint32_t, FitnessVectorHash> n_genotype_count;
    std::unordered_set<FitnessVector, FitnessVectorHash> image;

    LemmaReport witness{"rrmo.M-witness", inst, 0, {}};
    const int blocks = spec.block_count();
    const int blen = spec.block_length();
    const int t6 = 6 * spec.n / (5 * spec.m);

    for (std::uint64_t u = 0; u < total; ++u) {
        BitString x = from_code(static_cast<std::uint32_t>(u), spec.n);
        RrmoRegion region = classify_rrmo(x, spec);
        FitnessVector f = evaluate_rrmo(x, spec);
        image.insert(f);
        switch (region.region) {
            case Region::L: l_set.insert(f); break;
            case Region::M: {
                m_set.insert(f);
                // The proof's witness: gather each block's interior zeros in
                // front of the run of ones, keeping the trailing zeros.
                BitString w(spec.n);
                for (int j = 0; j < blocks; ++j) {
                    int begin = j * blen;
                    int tz = x.trailing_zeros(begin, blen);
                    int start = begin + blen - t6 - tz;
                    for (int i = 0; i < t6; ++i) w.set(start + i, true);
                }
                ++witness.checked;
                RrmoRegion wr = classify_rrmo(w, spec);
                bool all_b = wr.region == Region::N && wr.k_set.empty();
                if (!all_b || !strictly_dominates(evaluate_rrmo(w, spec), f))
                    note(witness, "no dominating all-B witness for " + x.str());
                break;
            }
            case Region::N: {
                n_sets[static_cast<int>(region.k_set.size())].insert(f);
                ++n_genotype_count[f];
                break;
            }
            case Region::Zero: break;
        }
    }

    std::vector<FitnessVector> l_vec(l_set.begin(), l_set.end());
    std::vector<FitnessVector> m_vec(m_set.begin(), m_set.end());
    std::vector<FitnessVector> mn_vec = m_vec;
    for (const auto& [k, s] : n_sets) mn_vec.insert(mn_vec.end(), s.begin(), s.end());

    LemmaReport l_dom{"rrmo.L-dominated-by-MN", inst, 0, {}};
    check_all_dominate(l_dom, mn_vec, l_vec);

    LemmaReport k_order{"rrmo.K-classes-ordered", inst, 0, {}};
    for (auto hi = n_sets.begin(); hi != n_sets.end(); ++hi)
        for (auto lo = n_sets.begin(); lo != hi; ++lo)
            check_all_dominate(k_order,
                               std::vector<FitnessVector>(hi->second.begin(), hi->second.end()),
                               std::vector<FitnessVector>(lo->second.begin(), lo->second.end()));

    LemmaReport k_incomp{"rrmo.equal-K-incomparable", inst, 0, {}};
    for (const auto& [f, count] : n_genotype_count) {
        ++k_incomp.checked;
        if (count != 1)
            note(k_incomp, std::to_string(count) + " distinct N genotypes share " + vec_str(f));
    }
    for (const auto& [k, s] : n_sets) {
        std::vector<FitnessVector> vs(s.begin(), s.end());
        for (std::size_t a = 0; a < vs.size(); ++a)
            for (std::size_t b = a + 1; b < vs.size(); ++b) {
                ++k_incomp.checked;
                if (compare_dominance(vs[a], vs[b]) != DominanceOutcome::Incomparable)
                    note(k_incomp, vec_str(vs[a]) + " comparable with " + vec_str(vs[b]) +
                                       " in class |K|=" + std::to_string(k));
            }
    }

    LemmaReport pareto = pareto_equality_report(spec, "rrmo.pareto-set");
    std::size_t front_count = n_sets.count(blocks) ? n_sets[blocks].size() : 0;

    std::vector<LemmaReport> out{l_dom, witness, k_order, k_incomp, pareto,
                                 first_layer_report(spec, front_count)};
    if (image.size() <= 2000)
        out.push_back(image_antichain_report(
            spec, std::vector<FitnessVector>(image.begin(), image.end())));
    return out;
}

std::vector<LemmaReport> verify_uni_lemmas(const ProblemSpec& spec) {
    spec.validate();
    if (spec.family != Family::RrmoUni)
        throw std::invalid_argument("verify_uni_lemmas: spec is not an rrmo-uni instance");
    check_enumerable(spec.n, "verify_uni_lemmas");
    const std::uint64_t total = std::uint64_t{1} << spec.n;
    const std::string inst = spec.str();

    std::unordered_set<FitnessVector, FitnessVectorHash> l_set, m_set;
    std::map<int, std::unordered_set<FitnessVector, FitnessVectorHash>> n_sets;
    std::unordered_set<FitnessVector, FitnessVectorHash> image;

    for (std::uint64_t u = 0; u < total; ++u) {
        BitString x = from_code(static_cast<std::uint32_t>(u), spec.n);
        UniRegion region = classify_uni(x, spec);
        FitnessVector f = evaluate_uni(x, spec);
        image.insert(f);
        switch (region.region) {
            case Region::L: l_set.insert(f); break;
            case Region::M: m_set.insert(f); break;
            case Region::N: n_sets[static_cast<int>(region.u_set.size())].insert(f); break;
            case Region::Zero: break;
        }
    }

    LemmaReport l_dom{"uni.L-dominated-by-M", inst, 0, {}};
    check_all_dominate(l_dom, std::vector<FitnessVector>(m_set.begin(), m_set.end()),
                       std::vector<FitnessVector>(l_set.begin(), l_set.end()));

    LemmaReport m_dom{"uni.M-dominated-by-N0", inst, 0, {}};
    if (n_sets.count(0))
        check_all_dominate(m_dom,
                           std::vector<FitnessVector>(n_sets[0].begin(), n_sets[0].end()),
                           std::vector<FitnessVector>(m_set.begin(), m_set.end()));

    LemmaReport u_order{"uni.U-classes-ordered", inst, 0, {}};
    for (auto hi = n_sets.begin(); hi != n_sets.end(); ++hi)
        for (auto lo = n_sets.begin(); lo != hi; ++lo)
            check_all_dominate(u_order,
                               std::vector<FitnessVector>(hi->second.begin(), hi->second.end()),
                               std::vector<FitnessVector>(lo->second.begin(), lo->second.end()));

    LemmaReport pareto = pareto_equality_report(spec, "uni.pareto-set");

    std::size_t front_count = 0;
    if (auto it = n_sets.find(spec.block_count()); it != n_sets.end())
        front_count = it->second.size();

    std::vector<LemmaReport> out{l_dom, m_dom, u_order, pareto,
                                 first_layer_report(spec, front_count)};
    if (image.size() <= 2000)
        out.push_back(image_antichain_report(
            spec, std::vector<FitnessVector>(image.begin(), image.end())));
    return out;
}

int min_hamming(const std::function<bool(const BitString&)>& in_a,
                const std::function<bool(const BitString&)>& in_b, int length) {
    check_enumerable(length, "min_hamming");
    if (length < 1) throw std::invalid_argument("min_hamming: length must be positive");
    std::vector<std::uint32_t> a, b;
    const std::uint64_t total = std::uint64_t{1} << length;
    for (std::uint64_t u = 0; u < total; ++u) {
        BitString x = from_code(static_cast<std::uint32_t>(u), length);
        if (in_a(x)) a.push_back(static_cast<std::uint32_t>(u));
        if (in_b(x)) b.push_back(static_cast<std::uint32_t>(u));
    }
    if (a.empty() || b.empty())
        throw std::invalid_argument("min_hamming: empty set");
    int best = length + 1;
    for (auto u : a)
        for (auto v : b)
            best = std::min(best, std::popcount(u ^ v));
    return best;
}

namespace {

// Hopcroft-Karp maximum bipartite matching.
class BipartiteMatcher {
public:
    BipartiteMatcher(int left, int right) : adj_(static_cast<std::size_t>(left)), right_(right) {}

    void add_edge(int l, int r) { adj_[static_cast<std::size_t>(l)].push_back(r); }

    int solve() {
        int left = static_cast<int>(adj_.size());
        match_l_.assign(static_cast<std::size_t>(left), -1);
        match_r_.assign(static_cast<std::size_t>(right_), -1);
        int matching = 0;
        while (bfs()) {
            for (int l = 0; l < left; ++l)
                if (match_l_[static_cast<std::size_t>(l)] < 0 && dfs(l)) ++matching;
        }
        return matching;
    }

private:
    static constexpr int kInf = INT32_MAX;

    bool bfs() {
        std::queue<int> q;
        dist_.assign(adj_.size(), kInf);
        for (int l = 0; l < static_cast<int>(adj_.size()); ++l)
            if (match_l_[static_cast<std::size_t>(l)] < 0) {
                dist_[static_cast<std::size_t>(l)] = 0;
                q.push(l);
            }
        bool found = false;
        while (!q.empty()) {
            int l = q.front();
            q.pop();
            for (int r : adj_[static_cast<std::size_t>(l)]) {
                int l2 = match_r_[static_cast<std::size_t>(r)];
                if (l2 < 0) found = true;
                else if (dist_[static_cast<std::size_t>(l2)] == kInf) {
                    dist_[static_cast<std::size_t>(l2)] = dist_[static_cast<std::size_t>(l)] + 1;
                    q.push(l2);
                }
            }
        }
        return found;
    }

    bool dfs(int l) {
        for (int r : adj_[static_cast<std::size_t>(l)]) {
            int l2 = match_r_[static_cast<std::size_t>(r)];
            if (l2 < 0 || (dist_[static_cast<std::size_t>(l2)] ==
                               dist_[static_cast<std::size_t>(l)] + 1 &&
                           dfs(l2))) {
                match_l_[static_cast<std::size_t>(l)] = r;
                match_r_[static_cast<std::size_t>(r)] = l;
                return true;
            }
        }
        dist_[static_cast<std::size_t>(l)] = kInf;
        return false;
    }

    std::vector<std::vector<int>> adj_;
    int right_;
    std::vector<int> match_l_, match_r_, dist_;
};

std::vector<FitnessVector> dedupe(const std::vector<FitnessVector>& vectors) {
    std::set<FitnessVector> s(vectors.begin(), vectors.end());
    return std::vector<FitnessVector>(s.begin(), s.end());
}

}  // namespace

std::size_t max_antichain(const std::vector<FitnessVector>& vectors) {
    auto distinct = dedupe(vectors);
    if (distinct.empty()) return 0;
    const int d = static_cast<int>(distinct.size());
    // Dilworth: max antichain = min chain cover = |V| - max matching on the
    // (transitively closed) strict-dominance relation.
    BipartiteMatcher matcher(d, d);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            if (a != b && strictly_dominates(distinct[static_cast<std::size_t>(a)],
                                             distinct[static_cast<std::size_t>(b)]))
                matcher.add_edge(a, b);
    return static_cast<std::size_t>(d - matcher.solve());
}

LemmaReport verify_incomparable_bound(const std::vector<FitnessVector>& vectors,
                                      IncomparableBoundKind kind) {
    if (vectors.empty())
        throw std::invalid_argument("verify_incomparable_bound: empty input");
    auto distinct = dedupe(vectors);
    if (distinct.size() > 2000)
        throw std::invalid_argument("verify_incomparable_bound: too many distinct vectors");
    const std::size_t m = distinct.front().size();
    for (const auto& f : distinct)
        if (f.size() != m)
            throw std::invalid_argument("verify_incomparable_bound: mixed dimensions");

    LemmaReport rep{"incomparable-bound", "", distinct.size(), {}};
    unsigned __int128 bound = 0;
    if (kind == IncomparableBoundKind::PerObjectiveValues) {
        std::size_t k = 0;
        for (std::size_t j = 0; j < m; ++j) {
            std::set<std::int64_t> values;
            for (const auto& f : distinct) values.insert(f[j]);
            k = std::max(k, values.size());
        }
        bound = 1;
        for (std::size_t i = 0; i + 1 < m; ++i) bound *= k;
        rep.instance = "k=" + std::to_string(k) + ",m=" + std::to_string(m);
    } else {
        if (m != 2)
            throw std::invalid_argument("verify_incomparable_bound: spread bound needs m=2");
        std::int64_t a = 0;
        for (const auto& f : distinct) a = std::max(a, std::abs(f[0] - f[1]));
        bound = static_cast<unsigned __int128>(a) + 1;
        rep.instance = "a=" + std::to_string(a) + ",m=2";
    }
    std::size_t width = max_antichain(distinct);
    if (static_cast<unsigned __int128>(width) > bound)
        note(rep, "antichain of size " + std::to_string(width) + " exceeds the bound");
    return rep;
}

std::vector<LemmaReport> verify_instance(const ProblemSpec& spec) {
    if (spec.family == Family::Rrmo) return verify_rrmo_lemmas(spec);

    std::vector<LemmaReport> out = verify_uni_lemmas(spec);
    const int half = spec.n / spec.m;
    auto u = [&](const BitString& y) { return in_uni_u(y, spec); };
    auto p = [&](const BitString& y) { return in_uni_p(y, spec); };
    auto c = [&](const BitString& y) { return in_uni_c(y, spec); };
    auto t = [&](const BitString& y) { return in_uni_t(y, spec); };

    int d_up = min_hamming(u, p, half);
    LemmaReport up{"uni.hamming-U-P", spec.str(), 1, {}};
    // Bound n/(4m), exact rational.
    if (4LL * spec.m * d_up < spec.n)
        note(up, "min Hamming distance " + std::to_string(d_up) + " below n/(4m)");
    up.instance += " min=" + std::to_string(d_up);
    out.push_back(up);

    int d_ct = min_hamming(c, t, half);
    LemmaReport ct{"uni.hamming-C-T", spec.str(), 1, {}};
    if (8LL * spec.m * d_ct < 3LL * spec.n)
        note(ct, "min Hamming distance " + std::to_string(d_ct) + " below 3n/(8m)");
    ct.instance += " min=" + std::to_string(d_ct);
    out.push_back(ct);
    return out;
}

}  // namespace rrmo
