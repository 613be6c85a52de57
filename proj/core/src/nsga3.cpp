#include "rrmo/nsga3.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

namespace rrmo {

void Nsga3Config::validate() const {
    spec.validate();
    if (mu < 2)
        throw std::invalid_argument("Nsga3Config: mu must be >= 2");
    if (!(pc >= 0.0 && pc <= 1.0))
        throw std::invalid_argument("Nsga3Config: pc must lie in [0,1]");
    if (p < 1) throw std::invalid_argument("Nsga3Config: p must be >= 1");
    if (eps_nad < 1) throw std::invalid_argument("Nsga3Config: eps_nad must be positive");
    if (assoc_radius < 1) throw std::invalid_argument("Nsga3Config: assoc_radius must be >= 1");
}

std::int64_t theorem_reference_divisions(const ProblemSpec& spec) {
    double v = 2.0 * std::pow(static_cast<double>(spec.m), 1.5) *
               static_cast<double>(spec.f_max());
    return static_cast<std::int64_t>(std::ceil(v));
}

ProtectionViolation::ProtectionViolation(std::uint64_t gen, const FitnessVector& v)
    : std::runtime_error("protection violation at generation " + std::to_string(gen)),
      generation(gen),
      lost(v) {}

namespace {

struct NichePoint {
    int rho = 0;
    bool active = true;
    // (dist_sq, candidate index), sorted ascending; entries before cursor
    // are already selected.
    std::vector<std::pair<double, int>> cands;
    std::size_t cursor = 0;
};

}  // namespace

std::vector<int> niching_select(const std::vector<std::uint32_t>& selected_assoc,
                                const std::vector<std::pair<std::uint32_t, double>>& candidates,
                                int mu, RandomSource& rng) {
    const std::size_t have = selected_assoc.size();
    if (static_cast<std::size_t>(mu) <= have ||
        static_cast<std::size_t>(mu) > have + candidates.size())
        throw std::invalid_argument("niching_select: need |Y| < mu <= |Y| + |F*|");
    const int need = mu - static_cast<int>(have);

    std::unordered_map<std::uint32_t, int> point_index;
    std::vector<NichePoint> points;
    auto point_of = [&](std::uint32_t id) -> NichePoint& {
        auto [it, inserted] = point_index.try_emplace(id, static_cast<int>(points.size()));
        if (inserted) points.emplace_back();
        return points[static_cast<std::size_t>(it->second)];
    };
    for (std::uint32_t id : selected_assoc) point_of(id).rho += 1;
    for (int i = 0; i < static_cast<int>(candidates.size()); ++i)
        point_of(candidates[static_cast<std::size_t>(i)].first)
            .cands.emplace_back(candidates[static_cast<std::size_t>(i)].second, i);
    for (auto& pt : points)
        std::sort(pt.cands.begin(), pt.cands.end());

    // rho-indexed buckets with lazy deletion; rho never decreases, so the
    // minimum pointer only moves right.
    const int max_rho = mu + 1;
    std::vector<std::vector<int>> buckets(static_cast<std::size_t>(max_rho) + 1);
    for (int i = 0; i < static_cast<int>(points.size()); ++i)
        buckets[static_cast<std::size_t>(points[static_cast<std::size_t>(i)].rho)].push_back(i);

    std::vector<int> selected;
    selected.reserve(static_cast<std::size_t>(need));
    int cur = 0;
    while (static_cast<int>(selected.size()) < need) {
        while (cur <= max_rho) {
            auto& b = buckets[static_cast<std::size_t>(cur)];
            std::erase_if(b, [&](int i) {
                const auto& pt = points[static_cast<std::size_t>(i)];
                return !pt.active || pt.rho != cur;
            });
            if (!b.empty()) break;
            ++cur;
        }
        if (cur > max_rho)
            throw std::logic_error("niching_select: ran out of active reference points");
        auto& bucket = buckets[static_cast<std::size_t>(cur)];
        std::size_t pick = bucket.size() == 1 ? 0 : rng.next_below(bucket.size());
        int pi = bucket[pick];
        auto& pt = points[static_cast<std::size_t>(pi)];
        if (pt.cursor == pt.cands.size()) {
            // No unselected candidate left on this point; retire it.
            pt.active = false;
            bucket[pick] = bucket.back();
            bucket.pop_back();
            continue;
        }
        // Nearest unselected candidate; ties uniform within the equal-distance run.
        std::size_t run_end = pt.cursor + 1;
        while (run_end < pt.cands.size() &&
               pt.cands[run_end].first == pt.cands[pt.cursor].first)
            ++run_end;
        std::size_t run_len = run_end - pt.cursor;
        std::size_t chosen = pt.cursor +
            (run_len == 1 ? 0 : static_cast<std::size_t>(rng.next_below(run_len)));
        std::swap(pt.cands[pt.cursor], pt.cands[chosen]);
        selected.push_back(pt.cands[pt.cursor].second);
        ++pt.cursor;
        pt.rho += 1;
        bucket[pick] = bucket.back();
        bucket.pop_back();
        buckets[static_cast<std::size_t>(pt.rho)].push_back(pi);
    }
    return selected;
}

Nsga3::Nsga3(Nsga3Config cfg)
    : cfg_(std::move(cfg)),
      rng_(cfg_.seed),
      lattice_{cfg_.spec.m, cfg_.p},
      backend_(AssociationBackend::Exhaustive),
      norm_(cfg_.eps_nad) {
    cfg_.validate();
    if (lattice_.size() > cfg_.assoc_enumeration_cap) {
        backend_ = AssociationBackend::Fast;
    } else {
        explicit_points_ = generate_reference_points(cfg_.spec.m, cfg_.p,
                                                     cfg_.assoc_enumeration_cap);
    }
    auto vectors = pareto_front_vectors(cfg_.spec);
    front_.reserve(vectors.size());
    for (auto& v : vectors)
        front_.emplace(std::move(v), static_cast<int>(front_.size()));
    front_present_.assign(front_.size(), false);
}

void Nsga3::eval_and_track(Individual& ind) {
    ind.fitness = evaluate(ind.genes, cfg_.spec);
    ++evals_;
    if (!first_pareto_eval_ && front_.count(ind.fitness))
        first_pareto_eval_ = evals_;
}

void Nsga3::refresh_coverage() {
    std::fill(front_present_.begin(), front_present_.end(), false);
    std::size_t count = 0;
    for (const auto& ind : pop_) {
        auto it = front_.find(ind.fitness);
        if (it != front_.end() && !front_present_[static_cast<std::size_t>(it->second)]) {
            front_present_[static_cast<std::size_t>(it->second)] = true;
            ++count;
        }
    }
    covered_count_ = count;
    if (covered_count_ == front_.size() && !full_cover_eval_)
        full_cover_eval_ = evals_;
}

void Nsga3::initialize() {
    if (initialized_) return;
    pop_.reserve(static_cast<std::size_t>(cfg_.mu));
    for (int i = 0; i < cfg_.mu; ++i) {
        Individual ind;
        ind.genes = rng_.random_bits(cfg_.spec.n);
        eval_and_track(ind);
        pop_.push_back(std::move(ind));
    }
    initialized_ = true;
    refresh_coverage();
}

std::uint32_t Nsga3::intern(const ReferencePoint& r) {
    auto [it, inserted] = point_ids_.try_emplace(r, static_cast<std::uint32_t>(point_ids_.size()));
    return it->second;
}

std::pair<std::uint32_t, double> Nsga3::associate_individual(const FitnessVector& f) {
    if (assoc_cache_version_ != norm_.version) {
        assoc_cache_.clear();
        assoc_cache_version_ = norm_.version;
    }
    auto it = assoc_cache_.find(f);
    if (it == assoc_cache_.end()) {
        auto fn = norm_.normalize(f);
        AssociationChoices choices =
            backend_ == AssociationBackend::Exhaustive
                ? associate_choices(fn, explicit_points_)
                : associate_fast_choices(fn, lattice_, cfg_.assoc_radius);
        it = assoc_cache_.emplace(f, std::move(choices)).first;
    }
    const AssociationChoices& c = it->second;
    if (c.whole_lattice) {
        // The zero vector lies on every ray; pick uniformly over R_p.
        ReferencePoint r = backend_ == AssociationBackend::Exhaustive
                               ? explicit_points_[static_cast<std::size_t>(
                                     rng_.next_below(explicit_points_.size()))]
                               : uniform_lattice_point(lattice_, rng_);
        return {intern(r), 0.0};
    }
    const ReferencePoint& r =
        c.minimizers.size() == 1
            ? c.minimizers.front()
            : c.minimizers[static_cast<std::size_t>(rng_.next_below(c.minimizers.size()))];
    return {intern(r), c.dist_sq};
}

void Nsga3::step() {
    initialize();
    const int mu = cfg_.mu;

    std::vector<Individual> merged = pop_;
    merged.reserve(static_cast<std::size_t>(2 * mu));
    for (int produced = 0; produced < mu; produced += 2) {
        // For odd mu the last trial keeps only its first child, so every
        // generation costs exactly mu evaluations.
        const bool pair = produced + 1 < mu;
        const Individual& p1 = pop_[static_cast<std::size_t>(rng_.next_below(static_cast<std::uint64_t>(mu)))];
        const Individual& p2 = pop_[static_cast<std::size_t>(rng_.next_below(static_cast<std::uint64_t>(mu)))];
        BitString c1, c2;
        if (rng_.next_double() < cfg_.pc) {
            c1 = crossover(cfg_.crossover, p1.genes, p2.genes, rng_);
            if (pair) c2 = crossover(cfg_.crossover, p1.genes, p2.genes, rng_);
        } else {
            c1 = p1.genes;
            if (pair) c2 = p2.genes;
        }
        Individual s1{standard_bit_mutation(c1, rng_), {}};
        eval_and_track(s1);
        merged.push_back(std::move(s1));
        if (pair) {
            Individual s2{standard_bit_mutation(c2, rng_), {}};
            eval_and_track(s2);
            merged.push_back(std::move(s2));
        }
    }

    std::vector<FitnessVector> fitnesses;
    fitnesses.reserve(merged.size());
    for (const auto& ind : merged) fitnesses.push_back(ind.fitness);
    norm_.update(fitnesses);

    SortedLayers layers = non_dominated_sort(fitnesses);

    std::vector<Individual> next;
    next.reserve(static_cast<std::size_t>(mu));
    std::size_t li = 0;
    while (static_cast<int>(next.size() + layers.layers[li].size()) <= mu) {
        for (int idx : layers.layers[li])
            next.push_back(merged[static_cast<std::size_t>(idx)]);
        if (static_cast<int>(next.size()) == mu) break;
        ++li;
    }
    if (static_cast<int>(next.size()) < mu) {
        const auto& critical = layers.layers[li];
        std::vector<std::uint32_t> y_assoc;
        y_assoc.reserve(next.size());
        for (const auto& ind : next)
            y_assoc.push_back(associate_individual(ind.fitness).first);
        std::vector<std::pair<std::uint32_t, double>> cands;
        cands.reserve(critical.size());
        for (int idx : critical)
            cands.push_back(associate_individual(merged[static_cast<std::size_t>(idx)].fitness));
        std::vector<int> picked = niching_select(y_assoc, cands, mu, rng_);
        for (int ci : picked)
            next.push_back(merged[static_cast<std::size_t>(critical[static_cast<std::size_t>(ci)])]);
    }

    if (cfg_.protection_check) {
        std::unordered_set<FitnessVector, FitnessVectorHash> survivors;
        survivors.reserve(next.size());
        for (const auto& ind : next) survivors.insert(ind.fitness);
        for (int idx : layers.layers[0]) {
            const FitnessVector& v = merged[static_cast<std::size_t>(idx)].fitness;
            if (!survivors.count(v)) throw ProtectionViolation(gens_, v);
        }
    }

    pop_ = std::move(next);
    ++gens_;
    refresh_coverage();
}

RunRecord Nsga3::run() {
    auto start = std::chrono::steady_clock::now();
    const auto mu64 = static_cast<std::uint64_t>(cfg_.mu);
    if (mu64 <= cfg_.budget) {
        initialize();
        // A generation that would exceed the budget is not started.
        while (!covered() && evals_ + mu64 <= cfg_.budget) step();
    }
    auto stop = std::chrono::steady_clock::now();

    RunRecord rec;
    rec.seed = cfg_.seed;
    rec.algo = Algo::Nsga3;
    rec.spec = cfg_.spec.str();
    rec.mu = cfg_.mu;
    rec.pc = cfg_.pc;
    rec.crossover = cfg_.crossover;
    rec.generations = gens_;
    rec.evaluations = evals_;
    rec.first_pareto_eval = first_pareto_eval_;
    rec.full_cover_eval = full_cover_eval_;
    rec.covered = covered() && initialized_;
    rec.backend = backend_;
    rec.wallclock_ms = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count());
    return rec;
}

RunRecord nsga3_run(const Nsga3Config& cfg) { return Nsga3(cfg).run(); }

}  // namespace rrmo
