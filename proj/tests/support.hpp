#pragma once

#include <cstdint>
#include <vector>

#include "momwb/evo.hpp"
#include "momwb/generator.hpp"
#include "momwb/matroid.hpp"
#include "momwb/scalarize.hpp"

namespace momwb::testing {

// Three vertices, edges e1 = 12, e2 = 23, e3 = 13.
inline Matroid triangle_matroid()
{
    return Matroid::graphic(3, {{0, 1}, {1, 2}, {0, 2}});
}

// Spanning-tree images (4,4), (3,5), (5,3); the middle one is supported
// but not extreme.
inline WeightedInstance triangle_instance()
{
    return {triangle_matroid(), {{1, 3, 2}, {3, 1, 2}}};
}

inline WeightedInstance uniform_collinear_instance()
{
    return {Matroid::uniform(3, 1), {{1, 2, 3}, {3, 2, 1}}};
}

inline WeightedInstance four_point_3d_instance()
{
    return {Matroid::uniform(4, 1), {{1, 5, 5, 2}, {5, 1, 5, 2}, {5, 5, 1, 2}}};
}

// A random small instance: a connected graph with 4 to 6 vertices or a
// uniform matroid, at most `max_m` elements and weights in [1, weight_max].
inline WeightedInstance random_small_instance(Rng& rng, std::size_t k, std::size_t max_m, std::int64_t weight_max)
{
    if (uniform_index(rng, 2) == 0) {
        std::size_t vertices = 0;
        std::size_t edges = 0;
        do {
            vertices = 3 + uniform_index(rng, 4);
            auto const pairs = vertices * (vertices - 1) / 2;
            auto const hi = std::min(pairs, max_m);
            if (hi < vertices - 1) {
                continue;
            }
            edges = vertices - 1 + uniform_index(rng, hi - (vertices - 1) + 1);
        } while (edges == 0);
        return gen_instance(vertices, edges, k, weight_max, rng);
    }
    auto const m = 2 + uniform_index(rng, max_m - 1);
    auto const capacity = 1 + uniform_index(rng, m - 1);
    return gen_uniform_instance(m, capacity, k, weight_max, rng);
}

}  // namespace momwb::testing
