#include "momwb/matroid.hpp"

#include <stdexcept>
#include <string>

namespace momwb {

namespace {

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1)
    {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::size_t find(std::size_t a)
    {
        while (parent_[a] != a) {
            parent_[a] = parent_[parent_[a]];
            a = parent_[a];
        }
        return a;
    }

    // Returns false if a and b were already connected.
    bool unite(std::size_t a, std::size_t b)
    {
        a = find(a);
        b = find(b);
        if (a == b) {
            return false;
        }
        if (size_[a] < size_[b]) {
            std::swap(a, b);
        }
        parent_[b] = a;
        size_[a] += size_[b];
        return true;
    }

private:
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> size_;
};

void check_length(const Matroid& matroid, const Solution& x)
{
    if (x.size() != matroid.ground_size()) {
        throw std::invalid_argument("solution length " + std::to_string(x.size()) +
                                    " does not match ground set size " +
                                    std::to_string(matroid.ground_size()));
    }
}

std::size_t graphic_rank(const GraphicMatroid& g, const Solution& x)
{
    DisjointSets sets(g.vertex_count);
    std::size_t r = 0;
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        if (x.test(e) && sets.unite(g.edges[e].u, g.edges[e].v)) {
            ++r;
        }
    }
    return r;
}

}  // namespace

Matroid::Matroid(Variant kind) : kind_(std::move(kind))
{
    if (auto const* g = std::get_if<GraphicMatroid>(&kind_)) {
        ground_size_ = g->edges.size();
        Solution all(ground_size_);
        for (std::size_t e = 0; e < ground_size_; ++e) {
            all.set(e);
        }
        full_rank_ = graphic_rank(*g, all);
    } else {
        auto const& u = std::get<UniformMatroid>(kind_);
        ground_size_ = u.ground_size;
        full_rank_ = u.capacity;
    }
}

Matroid Matroid::graphic(std::size_t vertex_count, std::vector<Edge> edges)
{
    if (vertex_count == 0) {
        throw std::invalid_argument("graphic matroid needs at least one vertex");
    }
    for (std::size_t e = 0; e < edges.size(); ++e) {
        auto const& [u, v] = edges[e];
        if (u >= vertex_count || v >= vertex_count) {
            throw std::invalid_argument("edge " + std::to_string(e) + " has an endpoint outside [0, " +
                                        std::to_string(vertex_count) + ")");
        }
        if (u == v) {
            throw std::invalid_argument("edge " + std::to_string(e) + " is a self-loop");
        }
    }
    return Matroid(GraphicMatroid{vertex_count, std::move(edges)});
}

Matroid Matroid::uniform(std::size_t ground_size, std::size_t capacity)
{
    if (ground_size == 0) {
        throw std::invalid_argument("uniform matroid needs a non-empty ground set");
    }
    if (capacity > ground_size) {
        throw std::invalid_argument("uniform matroid capacity exceeds ground set size");
    }
    return Matroid(UniformMatroid{ground_size, capacity});
}

std::size_t Matroid::rank(const Solution& x) const
{
    check_length(*this, x);
    if (auto const* g = std::get_if<GraphicMatroid>(&kind_)) {
        return graphic_rank(*g, x);
    }
    return std::min(x.count(), std::get<UniformMatroid>(kind_).capacity);
}

bool Matroid::is_base(const Solution& x) const
{
    check_length(*this, x);
    return x.count() == full_rank_ && rank(x) == full_rank_;
}

Solution greedy_on_order(const Matroid& matroid, std::span<const std::size_t> order)
{
    auto const m = matroid.ground_size();
    if (order.size() != m) {
        throw std::invalid_argument("greedy_on_order: order must be a permutation of the ground set");
    }
    for (auto e : order) {
        if (e >= m) {
            throw std::out_of_range("greedy_on_order: element index outside the ground set");
        }
    }
    Solution x(m);
    auto const n = matroid.full_rank();
    std::size_t selected = 0;
    if (auto const* g = std::get_if<GraphicMatroid>(&matroid.kind())) {
        DisjointSets sets(g->vertex_count);
        for (auto e : order) {
            if (selected == n) {
                break;
            }
            if (sets.unite(g->edges[e].u, g->edges[e].v)) {
                x.set(e);
                ++selected;
            }
        }
    } else {
        for (auto e : order) {
            if (selected == n) {
                break;
            }
            x.set(e);
            ++selected;
        }
    }
    return x;
}

}  // namespace momwb
