#pragma once

#include <cstddef>
#include <cstdint>

#include "momwb/evo.hpp"
#include "momwb/scalarize.hpp"

namespace momwb {

/// Random connected simple graph with `edge_count` edges on `vertex_count`
/// vertices and k independent weight rows drawn uniformly from
/// {1, ..., weight_max}. Edge sets are sampled uniformly among all
/// edge_count-subsets of vertex pairs until one is connected; gives up with
/// std::runtime_error after 1000 disconnected draws. Throws
/// std::invalid_argument when edge_count is outside
/// [vertex_count - 1, C(vertex_count, 2)].
[[nodiscard]] WeightedInstance gen_instance(std::size_t vertex_count, std::size_t edge_count, std::size_t k,
                                            std::int64_t weight_max, Rng& rng);

/// Uniform matroid U(capacity, m) with random weights as above.
[[nodiscard]] WeightedInstance gen_uniform_instance(std::size_t m, std::size_t capacity, std::size_t k,
                                                    std::int64_t weight_max, Rng& rng);

}  // namespace momwb
