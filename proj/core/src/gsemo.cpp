#include "rrmo/gsemo.hpp"

#include <chrono>
#include <stdexcept>

namespace rrmo {

void GsemoConfig::validate() const {
    spec.validate();
    if (!(pc >= 0.0 && pc <= 1.0))
        throw std::invalid_argument("GsemoConfig: pc must lie in [0,1]");
}

Gsemo::Gsemo(GsemoConfig cfg) : cfg_(cfg), rng_(cfg.seed) {
    cfg_.validate();
    auto vectors = pareto_front_vectors(cfg_.spec);
    front_.reserve(vectors.size());
    for (auto& v : vectors)
        front_.emplace(std::move(v), static_cast<int>(front_.size()));
    front_present_.assign(front_.size(), false);
}

void Gsemo::eval_and_track(Individual& ind) {
    ind.fitness = evaluate(ind.genes, cfg_.spec);
    ++evals_;
    if (!first_pareto_eval_ && front_.count(ind.fitness))
        first_pareto_eval_ = evals_;
}

void Gsemo::initialize() {
    if (initialized_) return;
    Individual ind{rng_.random_bits(cfg_.spec.n), {}};
    eval_and_track(ind);
    fold_into_archive(std::move(ind));
    initialized_ = true;
}

bool gsemo_archive_update(std::vector<Individual>& archive, Individual offspring) {
    for (const auto& member : archive)
        if (strictly_dominates(member.fitness, offspring.fitness)) return false;
    // Keep only members the offspring does not weakly dominate; an
    // equal-fitness member is replaced by the offspring.
    std::size_t out = 0;
    for (std::size_t i = 0; i < archive.size(); ++i) {
        if (!weakly_dominates(offspring.fitness, archive[i].fitness)) {
            if (out != i) archive[out] = std::move(archive[i]);
            ++out;
        }
    }
    archive.resize(out);
    archive.push_back(std::move(offspring));
    return true;
}

void Gsemo::fold_into_archive(Individual offspring) {
    // A front vector, once present, can only be displaced by an offspring
    // with the same vector, so presence is monotone and insertion is the
    // only event the coverage bookkeeping has to watch.
    FitnessVector fitness = offspring.fitness;
    if (!gsemo_archive_update(archive_, std::move(offspring))) return;
    peak_ = std::max(peak_, archive_.size());
    auto it = front_.find(fitness);
    if (it != front_.end() && !front_present_[static_cast<std::size_t>(it->second)]) {
        front_present_[static_cast<std::size_t>(it->second)] = true;
        ++covered_count_;
        if (covered_count_ == front_.size() && !full_cover_eval_)
            full_cover_eval_ = evals_;
    }
}

void Gsemo::step() {
    initialize();
    const std::size_t size = archive_.size();
    const Individual& p1 = archive_[static_cast<std::size_t>(rng_.next_below(size))];
    BitString base;
    if (rng_.next_double() < cfg_.pc) {
        // Second parent drawn without replacement when possible; with a
        // singleton archive crossover degenerates to a copy of p1.
        const Individual* p2 = &p1;
        if (size >= 2) {
            std::size_t i1 = static_cast<std::size_t>(&p1 - archive_.data());
            std::size_t r = static_cast<std::size_t>(rng_.next_below(size - 1));
            p2 = &archive_[r >= i1 ? r + 1 : r];
        }
        base = crossover(cfg_.crossover, p1.genes, p2->genes, rng_);
    } else {
        base = p1.genes;
    }
    Individual offspring{standard_bit_mutation(base, rng_), {}};
    eval_and_track(offspring);
    fold_into_archive(std::move(offspring));
    ++iters_;
}

RunRecord Gsemo::run() {
    auto start = std::chrono::steady_clock::now();
    if (cfg_.budget >= 1) {
        initialize();
        while (!covered() && evals_ < cfg_.budget) step();
    }
    auto stop = std::chrono::steady_clock::now();

    RunRecord rec;
    rec.seed = cfg_.seed;
    rec.algo = Algo::Gsemo;
    rec.spec = cfg_.spec.str();
    rec.mu = static_cast<std::int64_t>(peak_);
    rec.pc = cfg_.pc;
    rec.crossover = cfg_.crossover;
    rec.generations = iters_;
    rec.evaluations = evals_;
    rec.first_pareto_eval = first_pareto_eval_;
    rec.full_cover_eval = full_cover_eval_;
    rec.covered = initialized_ && covered();
    rec.backend = AssociationBackend::None;
    rec.wallclock_ms = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count());
    return rec;
}

RunRecord gsemo_run(const GsemoConfig& cfg) { return Gsemo(cfg).run(); }

}  // namespace rrmo
