#include "rrmo/nds.hpp"

#include <stdexcept>
#include <unordered_map>

namespace rrmo {

SortedLayers non_dominated_sort(const std::vector<FitnessVector>& points) {
    if (points.empty())
        throw std::invalid_argument("non_dominated_sort: empty input");
    const std::size_t dim = points.front().size();
    for (const auto& f : points)
        if (f.size() != dim)
            throw std::invalid_argument("non_dominated_sort: mixed dimensions");

    // Group duplicates: ranks are a function of the fitness vector alone.
    std::unordered_map<FitnessVector, int, FitnessVectorHash> classes;
    std::vector<const FitnessVector*> distinct;
    std::vector<int> class_of(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        auto [it, inserted] = classes.try_emplace(points[i], static_cast<int>(distinct.size()));
        if (inserted) distinct.push_back(&it->first);
        class_of[i] = it->second;
    }

    const int d = static_cast<int>(distinct.size());
    std::vector<std::vector<int>> dominates(static_cast<std::size_t>(d));
    std::vector<int> dominated_by(static_cast<std::size_t>(d), 0);
    for (int a = 0; a < d; ++a) {
        for (int b = a + 1; b < d; ++b) {
            switch (compare_dominance(*distinct[static_cast<std::size_t>(a)],
                                      *distinct[static_cast<std::size_t>(b)])) {
                case DominanceOutcome::StrictlyDominates:
                    dominates[static_cast<std::size_t>(a)].push_back(b);
                    ++dominated_by[static_cast<std::size_t>(b)];
                    break;
                case DominanceOutcome::StrictlyDominated:
                    dominates[static_cast<std::size_t>(b)].push_back(a);
                    ++dominated_by[static_cast<std::size_t>(a)];
                    break;
                default:
                    break;
            }
        }
    }

    std::vector<int> class_rank(static_cast<std::size_t>(d), -1);
    std::vector<int> frontier;
    for (int c = 0; c < d; ++c)
        if (dominated_by[static_cast<std::size_t>(c)] == 0) frontier.push_back(c);
    int rank = 0;
    int assigned = 0;
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int c : frontier) {
            class_rank[static_cast<std::size_t>(c)] = rank;
            ++assigned;
            for (int b : dominates[static_cast<std::size_t>(c)])
                if (--dominated_by[static_cast<std::size_t>(b)] == 0) next.push_back(b);
        }
        frontier = std::move(next);
        ++rank;
    }
    if (assigned != d)
        throw std::logic_error("non_dominated_sort: dominance graph not acyclic");

    SortedLayers out;
    out.rank.resize(points.size());
    out.layers.resize(static_cast<std::size_t>(rank));
    for (std::size_t i = 0; i < points.size(); ++i) {
        int r = class_rank[static_cast<std::size_t>(class_of[i])];
        out.rank[i] = r;
        out.layers[static_cast<std::size_t>(r)].push_back(static_cast<int>(i));
    }
    return out;
}

}  // namespace rrmo
