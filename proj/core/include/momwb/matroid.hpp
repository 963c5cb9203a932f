#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <span>
#include <stdexcept>
#include <variant>
#include <vector>

#include "momwb/solution.hpp"

namespace momwb {

/// Undirected edge with 0-based vertex indices.
struct Edge {
    std::size_t u = 0;
    std::size_t v = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
};

struct GraphicMatroid {
    std::size_t vertex_count = 0;
    std::vector<Edge> edges;
};

struct UniformMatroid {
    std::size_t ground_size = 0;
    std::size_t capacity = 0;
};

/// A matroid given by its rank oracle. Two variants are supported: the
/// graphic matroid of an undirected graph (independent sets are forests) and
/// the uniform matroid U(K, m) (independent sets have at most K elements).
class Matroid {
public:
    using Variant = std::variant<GraphicMatroid, UniformMatroid>;

    /// Throws std::invalid_argument on out-of-range endpoints or self-loops.
    static Matroid graphic(std::size_t vertex_count, std::vector<Edge> edges);
    static Matroid uniform(std::size_t ground_size, std::size_t capacity);

    /// m, the number of ground-set elements.
    [[nodiscard]] std::size_t ground_size() const noexcept { return ground_size_; }
    /// n, the rank of the full ground set (size of every base).
    [[nodiscard]] std::size_t full_rank() const noexcept { return full_rank_; }

    [[nodiscard]] std::size_t rank(const Solution& x) const;
    [[nodiscard]] bool is_base(const Solution& x) const;

    [[nodiscard]] bool is_graphic() const noexcept { return std::holds_alternative<GraphicMatroid>(kind_); }
    [[nodiscard]] const Variant& kind() const noexcept { return kind_; }

private:
    explicit Matroid(Variant kind);

    Variant kind_;
    std::size_t ground_size_ = 0;
    std::size_t full_rank_ = 0;
};

/// Runs Greedy on a fixed element order: scans `order` and keeps an element
/// iff adding it keeps the selection independent. `order` must be a
/// permutation of the ground set.
[[nodiscard]] Solution greedy_on_order(const Matroid& matroid, std::span<const std::size_t> order);

/// Sorts elements by ascending key with ties broken by ascending index.
template <typename Key>
[[nodiscard]] std::vector<std::size_t> sorting_permutation(std::span<const Key> keys)
{
    std::vector<std::size_t> order(keys.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
    return order;
}

/// Minimum-key base. Equal keys are resolved by element index, so the output
/// is fully determined by `keys`.
template <typename Key>
[[nodiscard]] Solution greedy_min_base(const Matroid& matroid, std::span<const Key> keys)
{
    if (keys.size() != matroid.ground_size()) {
        throw std::invalid_argument("greedy_min_base: one key per ground-set element required");
    }
    auto const order = sorting_permutation(keys);
    return greedy_on_order(matroid, order);
}

template <typename Key>
[[nodiscard]] Solution greedy_min_base(const Matroid& matroid, const std::vector<Key>& keys)
{
    return greedy_min_base(matroid, std::span<const Key>(keys));
}

}  // namespace momwb
