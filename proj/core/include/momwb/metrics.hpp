#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>

#include "momwb/scalarize.hpp"

namespace momwb {

/// ⌈multiplier · |R| · m² · ln(m - n)⌉. Requires m > n >= 1 and |R| >= 1.
[[nodiscard]] std::uint64_t evaluation_budget(std::size_t target_count, std::size_t m, std::size_t n,
                                              double multiplier = 3.0);

/// Mean over targets of the distance from the target to the nearest archive
/// image, counting only coordinates where the image is worse. Returns
/// std::nullopt for an empty archive. Throws std::invalid_argument for an
/// empty target set.
[[nodiscard]] std::optional<double> igd_plus(std::span<const ObjectivePoint> archive,
                                             std::span<const ObjectivePoint> targets);

struct CoverRate {
    std::size_t hit = 0;
    std::size_t total = 0;

    [[nodiscard]] double value() const noexcept
    {
        return total == 0 ? 0.0 : static_cast<double>(hit) / static_cast<double>(total);
    }
    friend bool operator==(const CoverRate&, const CoverRate&) = default;
};

/// Number of targets present in the archive by exact image equality.
[[nodiscard]] CoverRate cover_rate(std::span<const ObjectivePoint> archive, std::span<const ObjectivePoint> targets);

struct Summary {
    double mean = 0.0;
    /// Sample standard deviation (n - 1 denominator); 0 for a single value.
    double sd = 0.0;
    std::size_t count = 0;
};

/// Empty input yields std::nullopt.
[[nodiscard]] std::optional<Summary> summarize(std::span<const double> values);

}  // namespace momwb
