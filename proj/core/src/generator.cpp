#include "momwb/generator.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace momwb {

namespace {

constexpr int kMaxDisconnectedDraws = 1000;

std::vector<std::vector<std::int64_t>> random_rows(std::size_t k, std::size_t m, std::int64_t weight_max, Rng& rng)
{
    if (weight_max < 1 || weight_max > kMaxWeight) {
        throw std::invalid_argument("weight_max must lie in [1, " + std::to_string(kMaxWeight) + "]");
    }
    std::vector<std::vector<std::int64_t>> rows(k, std::vector<std::int64_t>(m));
    for (auto& row : rows) {
        for (auto& w : row) {
            w = 1 + static_cast<std::int64_t>(uniform_index(rng, static_cast<std::size_t>(weight_max)));
        }
    }
    return rows;
}

}  // namespace

WeightedInstance gen_instance(std::size_t vertex_count, std::size_t edge_count, std::size_t k,
                              std::int64_t weight_max, Rng& rng)
{
    if (vertex_count < 2) {
        throw std::invalid_argument("need at least two vertices");
    }
    auto const pairs_total = vertex_count * (vertex_count - 1) / 2;
    if (edge_count < vertex_count - 1 || edge_count > pairs_total) {
        throw std::invalid_argument("edge count " + std::to_string(edge_count) + " outside [" +
                                    std::to_string(vertex_count - 1) + ", " + std::to_string(pairs_total) + "]");
    }
    std::vector<Edge> pairs;
    pairs.reserve(pairs_total);
    for (std::size_t u = 0; u < vertex_count; ++u) {
        for (std::size_t v = u + 1; v < vertex_count; ++v) {
            pairs.push_back({u, v});
        }
    }
    for (int attempt = 0; attempt < kMaxDisconnectedDraws; ++attempt) {
        // Partial Fisher-Yates: the first edge_count entries form a uniform subset.
        for (std::size_t i = 0; i < edge_count; ++i) {
            auto const j = i + uniform_index(rng, pairs.size() - i);
            std::swap(pairs[i], pairs[j]);
        }
        std::vector<Edge> edges(pairs.begin(), pairs.begin() + static_cast<std::ptrdiff_t>(edge_count));
        auto matroid = Matroid::graphic(vertex_count, std::move(edges));
        if (matroid.full_rank() == vertex_count - 1) {
            auto rows = random_rows(k, edge_count, weight_max, rng);
            return {std::move(matroid), std::move(rows)};
        }
    }
    throw std::runtime_error("gen_instance: " + std::to_string(kMaxDisconnectedDraws) +
                             " consecutive draws were disconnected; use more edges");
}

WeightedInstance gen_uniform_instance(std::size_t m, std::size_t capacity, std::size_t k, std::int64_t weight_max,
                                      Rng& rng)
{
    auto matroid = Matroid::uniform(m, capacity);
    return {std::move(matroid), random_rows(k, m, weight_max, rng)};
}

}  // namespace momwb
