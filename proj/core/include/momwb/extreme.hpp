#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "momwb/scalarize.hpp"

namespace momwb {

/// A facet of the dominance hull Conv(P) + R^k_{>=0} of a point set P.
/// `normal` is the L1-normalized inward normal (always non-negative);
/// `incident` lists indices of the points lying on the facet.
struct Facet {
    TradeOff normal;
    std::vector<std::size_t> incident;
};

struct ExtremeResult {
    /// One witness base per extreme point, parallel to `images`.
    std::vector<Solution> solutions;
    /// Distinct extreme points of Conv(F), in discovery order.
    std::vector<ObjectivePoint> images;
    /// Every trade-off processed before termination. This is a complete
    /// trade-off set.
    std::vector<TradeOff> tradeoffs;
    /// Facets of the final hull, indices refer to `images`.
    std::vector<Facet> facets;
    std::size_t rounds = 0;
};

struct ExtremeOptions {
    std::size_t max_objectives = 4;
};

/// Dichotomic search for k = 2. Trade-offs are handled as scalars λ with
/// scalarized weight (1 - λ) w_1 + λ w_2, seeded with {0, 1}.
[[nodiscard]] ExtremeResult extreme_biobjective(const WeightedInstance& instance);

/// General k. Each trade-off is solved by Greedy once per objective-priority
/// permutation; new trade-offs are the normals of the current hull facets.
/// Throws std::invalid_argument for k < 2 or k > options.max_objectives.
[[nodiscard]] ExtremeResult extreme_k(const WeightedInstance& instance, ExtremeOptions options = {});

/// extreme_biobjective for k = 2, extreme_k otherwise.
[[nodiscard]] ExtremeResult extreme_points(const WeightedInstance& instance);

/// Facets of Conv(points) + R^k_{>=0}. Points must be pairwise distinct and
/// share one dimension k >= 2. Output is sorted by normal.
[[nodiscard]] std::vector<Facet> lower_hull_facets(std::span<const ObjectivePoint> points);

/// Midpoints of the open intervals between consecutive values of
/// complete ∪ {0, 1}, as bi-objective trade-offs.
[[nodiscard]] std::vector<TradeOff> sufficient_tradeoffs_biobjective(std::span<const TradeOff> complete);

/// One trade-off per extreme point: the L1-normalized average of the normals
/// of all facets incident to it.
[[nodiscard]] std::vector<TradeOff> sufficient_tradeoffs_k(const ExtremeResult& result);

/// Normalized mean of a set of trade-offs of equal dimension.
[[nodiscard]] TradeOff average_normals(std::span<const TradeOff> normals);

/// h m - h (h + 1) / 2 + 1 with h = ceil(sqrt(2 min(n, m - n) - 1)).
/// Requires 1 <= n < m.
[[nodiscard]] std::int64_t extreme_count_bound_2(std::int64_t m, std::int64_t n);

/// Σ_{i=1..k} C(m (m - 1) / 2, i - 1).
[[nodiscard]] boost::multiprecision::cpp_int extreme_count_bound_k(std::int64_t m, std::int64_t k);

}  // namespace momwb
