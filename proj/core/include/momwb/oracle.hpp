#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "momwb/matroid.hpp"
#include "momwb/scalarize.hpp"
#include "momwb/solution.hpp"

namespace momwb {

/// Largest ground set the brute-force routines accept.
inline constexpr std::size_t kOracleMaxGroundSize = 20;
/// Largest absolute coordinate accepted by the hull classification.
inline constexpr std::int64_t kOracleMaxCoordinate = 1'000'000;

/// Position of a point relative to the dominance hull Conv(Q ∪ {p}) + R^k_{>=0}.
enum class HullClass {
    Vertex,     ///< unique minimizer of some trade-off
    Supported,  ///< a minimizer of some trade-off, but never the only one
    Interior,   ///< minimizes no trade-off
};

/// Classifies `point` against the other points `others` (which must not
/// contain it) by solving max over λ in the simplex of min_q λ·(q - point)
/// exactly. Throws std::invalid_argument on dimension mismatch or
/// coordinates beyond kOracleMaxCoordinate.
[[nodiscard]] HullClass classify_point(std::span<const std::int64_t> point, std::span<const ObjectivePoint> others);

/// Exhaustive ground truth for one small instance.
struct FrontOracle {
    /// Every base, in lexicographic order of sorted element lists.
    std::vector<Solution> all_bases;
    /// Images of `all_bases`, parallel to it.
    std::vector<ObjectivePoint> base_images;
    /// Distinct non-dominated images, sorted.
    std::vector<ObjectivePoint> front;
    /// Front points that are vertices of the dominance hull, sorted.
    std::vector<ObjectivePoint> hull_vertices;
    /// Front points on the dominance hull boundary (vertices included), sorted.
    std::vector<ObjectivePoint> supported_images;
    /// First base (in enumeration order) mapping to each front image.
    std::map<ObjectivePoint, Solution> witness;
    /// Every base whose image is supported.
    std::vector<Solution> supported_solutions;
};

/// All bases of `matroid`. Throws std::invalid_argument when the ground set
/// exceeds kOracleMaxGroundSize.
[[nodiscard]] std::vector<Solution> enumerate_bases(const Matroid& matroid);

[[nodiscard]] FrontOracle pareto_front(const WeightedInstance& instance);

/// Whether every base image y has some x in `sufficient` with x <= factor * y
/// coordinatewise. Throws std::invalid_argument if `sufficient` is empty.
[[nodiscard]] bool verify_k_approximation(std::span<const ObjectivePoint> sufficient,
                                          std::span<const ObjectivePoint> base_images, std::int64_t factor);

/// Connectivity of the graph on `solutions` joining pairs at Hamming
/// distance at most 2. Throws std::invalid_argument on empty input.
[[nodiscard]] bool verify_hamming2_connected(std::span<const Solution> solutions);

}  // namespace momwb
