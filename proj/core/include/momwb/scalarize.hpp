#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "momwb/matroid.hpp"
#include "momwb/rational.hpp"
#include "momwb/solution.hpp"

namespace momwb {

/// An objective-space point: the image wx of a solution, or a penalized
/// fitness vector g(x).
using ObjectivePoint = std::vector<std::int64_t>;

/// Limits checked at instance construction. Within them every scalarized
/// quantity fits comfortably in 128-bit intermediates.
inline constexpr std::size_t kMaxGroundSize = 10'000;
inline constexpr std::int64_t kMaxWeight = 1'000'000;
inline constexpr std::size_t kMaxObjectives = 8;

/// A matroid together with a k x m matrix of positive integer weights.
class WeightedInstance {
public:
    /// `rows[i][e]` is the weight of element e in objective i. Throws
    /// std::invalid_argument on shape mismatch, non-positive weights, or sizes
    /// beyond the limits above.
    WeightedInstance(Matroid matroid, std::vector<std::vector<std::int64_t>> rows);

    [[nodiscard]] const Matroid& matroid() const noexcept { return matroid_; }
    [[nodiscard]] std::size_t objectives() const noexcept { return rows_.size(); }
    [[nodiscard]] std::size_t ground_size() const noexcept { return matroid_.ground_size(); }
    [[nodiscard]] std::size_t full_rank() const noexcept { return matroid_.full_rank(); }
    [[nodiscard]] std::int64_t max_weight() const noexcept { return max_weight_; }

    [[nodiscard]] std::int64_t weight(std::size_t objective, std::size_t element) const
    {
        return rows_[objective][element];
    }
    [[nodiscard]] std::span<const std::int64_t> row(std::size_t objective) const { return rows_[objective]; }
    [[nodiscard]] const std::vector<std::vector<std::int64_t>>& rows() const noexcept { return rows_; }

    /// wx, the k-dimensional image of x.
    [[nodiscard]] ObjectivePoint image(const Solution& x) const;

    /// m (n - r) w_max, the infeasibility penalty for a solution of rank r.
    [[nodiscard]] std::int64_t rank_penalty(std::size_t rank) const;

private:
    Matroid matroid_;
    std::vector<std::vector<std::int64_t>> rows_;
    std::int64_t max_weight_ = 0;
};

/// A point of the trade-off simplex {λ >= 0 : Σλ = 1} with rational
/// coordinates numerators[i] / denominator, kept in lowest terms so the
/// denominator equals d_λ (the least a > 0 with aλ integral).
class TradeOff {
public:
    TradeOff() = default;

    /// L1-normalizes a non-negative, not-all-zero integer vector.
    static TradeOff from_weights(std::span<const Int128> weights);
    static TradeOff from_weights(std::initializer_list<std::int64_t> weights);
    static TradeOff unit(std::size_t dimension, std::size_t axis);
    /// (1/k, ..., 1/k).
    static TradeOff centroid(std::size_t dimension);
    /// Bi-objective trade-off (1 - λ, λ) for a scalar λ in [0, 1].
    static TradeOff from_scalar(const Rational& lambda);

    [[nodiscard]] std::size_t dimension() const noexcept { return numerators_.size(); }
    [[nodiscard]] std::span<const std::int64_t> numerators() const noexcept { return numerators_; }
    [[nodiscard]] std::int64_t denominator() const noexcept { return denominator_; }
    [[nodiscard]] Rational component(std::size_t i) const { return {numerators_.at(i), denominator_}; }
    /// Scalar form of a bi-objective trade-off: the weight on the second objective.
    [[nodiscard]] Rational scalar() const;

    /// "n_1 ... n_k / d".
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const TradeOff&, const TradeOff&) = default;
    friend auto operator<=>(const TradeOff&, const TradeOff&) = default;

private:
    std::vector<std::int64_t> numerators_;
    std::int64_t denominator_ = 1;
};

/// Parses the "n_1 ... n_k / d" form produced by TradeOff::to_string.
[[nodiscard]] TradeOff parse_tradeoff(const std::string& text);

/// d_λ · λᵀ p, an exact integer.
[[nodiscard]] Int128 scaled_scalarization(const TradeOff& lambda, std::span<const std::int64_t> point);

/// d_λ · w^(λ)_e for every element e; sorting by these keys sorts w^(λ).
[[nodiscard]] std::vector<Int128> scalarized_keys(const WeightedInstance& instance, const TradeOff& lambda);

/// w^(λ) x = λᵀ w x.
[[nodiscard]] Rational scalarized_weight(const WeightedInstance& instance, const TradeOff& lambda,
                                         const Solution& x);

/// f_λ(x) = m (n - r(x)) w_max + w^(λ) x.
[[nodiscard]] Rational fitness_scalar(const WeightedInstance& instance, const TradeOff& lambda,
                                      const Solution& x);

/// g(x) = m (n - r(x)) w_max 1 + w x.
[[nodiscard]] ObjectivePoint fitness_vector(const WeightedInstance& instance, const Solution& x);

/// Weak Pareto dominance for minimization: v - u is coordinatewise >= 0.
/// Equal points dominate each other.
[[nodiscard]] bool dominates(std::span<const std::int64_t> u, std::span<const std::int64_t> v);

[[nodiscard]] std::string to_string(std::span<const std::int64_t> point);

}  // namespace momwb
