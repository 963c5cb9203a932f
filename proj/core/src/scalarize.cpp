#include "momwb/scalarize.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace momwb {

WeightedInstance::WeightedInstance(Matroid matroid, std::vector<std::vector<std::int64_t>> rows)
    : matroid_(std::move(matroid)), rows_(std::move(rows))
{
    auto const m = matroid_.ground_size();
    if (rows_.empty()) {
        throw std::invalid_argument("weighted instance needs at least one objective");
    }
    if (rows_.size() > kMaxObjectives) {
        throw std::invalid_argument("too many objectives (limit " + std::to_string(kMaxObjectives) + ")");
    }
    if (m > kMaxGroundSize) {
        throw std::invalid_argument("ground set too large (limit " + std::to_string(kMaxGroundSize) + ")");
    }
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i].size() != m) {
            throw std::invalid_argument("weight row " + std::to_string(i) + " has " +
                                        std::to_string(rows_[i].size()) + " entries, expected " +
                                        std::to_string(m));
        }
        for (auto w : rows_[i]) {
            if (w < 1 || w > kMaxWeight) {
                throw std::invalid_argument("weight " + std::to_string(w) + " outside [1, " +
                                            std::to_string(kMaxWeight) + "]");
            }
            max_weight_ = std::max(max_weight_, w);
        }
    }
}

ObjectivePoint WeightedInstance::image(const Solution& x) const
{
    if (x.size() != ground_size()) {
        throw std::invalid_argument("image: solution length does not match ground set size");
    }
    ObjectivePoint out(objectives(), 0);
    for (std::size_t e = 0; e < ground_size(); ++e) {
        if (x.test(e)) {
            for (std::size_t i = 0; i < out.size(); ++i) {
                out[i] += rows_[i][e];
            }
        }
    }
    return out;
}

std::int64_t WeightedInstance::rank_penalty(std::size_t rank) const
{
    auto const m = static_cast<std::int64_t>(ground_size());
    auto const deficit = static_cast<std::int64_t>(full_rank()) - static_cast<std::int64_t>(rank);
    return m * deficit * max_weight_;
}

TradeOff TradeOff::from_weights(std::span<const Int128> weights)
{
    if (weights.empty()) {
        throw std::invalid_argument("trade-off needs at least one coordinate");
    }
    Int128 sum = 0;
    Int128 g = 0;
    for (auto w : weights) {
        if (w < 0) {
            throw std::invalid_argument("trade-off coordinates must be non-negative");
        }
        sum = checked_add(sum, w);
        g = gcd(g, w);
    }
    if (sum == 0) {
        throw std::invalid_argument("trade-off must have a positive coordinate");
    }
    constexpr auto limit = static_cast<Int128>(std::numeric_limits<std::int64_t>::max());
    TradeOff t;
    if (sum / g > limit) {
        throw std::overflow_error("trade-off denominator exceeds 64 bits");
    }
    t.denominator_ = static_cast<std::int64_t>(sum / g);
    t.numerators_.reserve(weights.size());
    for (auto w : weights) {
        t.numerators_.push_back(static_cast<std::int64_t>(w / g));
    }
    return t;
}

TradeOff TradeOff::from_weights(std::initializer_list<std::int64_t> weights)
{
    std::vector<Int128> wide(weights.begin(), weights.end());
    return from_weights(wide);
}

TradeOff TradeOff::unit(std::size_t dimension, std::size_t axis)
{
    if (axis >= dimension) {
        throw std::out_of_range("unit trade-off axis out of range");
    }
    std::vector<Int128> w(dimension, 0);
    w[axis] = 1;
    return from_weights(w);
}

TradeOff TradeOff::centroid(std::size_t dimension)
{
    std::vector<Int128> w(dimension, 1);
    return from_weights(w);
}

TradeOff TradeOff::from_scalar(const Rational& lambda)
{
    if (lambda < Rational(0) || lambda > Rational(1)) {
        throw std::invalid_argument("scalar trade-off must lie in [0, 1]");
    }
    std::vector<Int128> w{lambda.denominator() - lambda.numerator(), lambda.numerator()};
    return from_weights(w);
}

Rational TradeOff::scalar() const
{
    if (dimension() != 2) {
        throw std::logic_error("scalar(): trade-off is not bi-objective");
    }
    return component(1);
}

std::string TradeOff::to_string() const
{
    std::ostringstream out;
    for (auto v : numerators_) {
        out << v << ' ';
    }
    out << "/ " << denominator_;
    return out.str();
}

TradeOff parse_tradeoff(const std::string& text)
{
    std::istringstream in(text);
    std::vector<Int128> nums;
    std::string token;
    bool saw_slash = false;
    std::int64_t den = 0;
    while (in >> token) {
        if (token == "/") {
            saw_slash = true;
            if (!(in >> den)) {
                throw std::invalid_argument("trade-off: missing denominator");
            }
            break;
        }
        std::size_t used = 0;
        auto const v = std::stoll(token, &used);
        if (used != token.size()) {
            throw std::invalid_argument("trade-off: bad numerator '" + token + "'");
        }
        nums.push_back(v);
    }
    if (!saw_slash || nums.empty() || (in >> token)) {
        throw std::invalid_argument("trade-off must read 'n_1 ... n_k / d'");
    }
    Int128 sum = 0;
    for (auto v : nums) {
        sum += v;
    }
    if (sum != den) {
        throw std::invalid_argument("trade-off numerators must sum to the denominator");
    }
    auto t = TradeOff::from_weights(nums);
    if (t.denominator() != den) {
        throw std::invalid_argument("trade-off is not in lowest terms");
    }
    return t;
}

Int128 scaled_scalarization(const TradeOff& lambda, std::span<const std::int64_t> point)
{
    if (point.size() != lambda.dimension()) {
        throw std::invalid_argument("trade-off and point have different dimensions");
    }
    Int128 acc = 0;
    auto const nums = lambda.numerators();
    for (std::size_t i = 0; i < point.size(); ++i) {
        acc += static_cast<Int128>(nums[i]) * point[i];
    }
    return acc;
}

std::vector<Int128> scalarized_keys(const WeightedInstance& instance, const TradeOff& lambda)
{
    if (lambda.dimension() != instance.objectives()) {
        throw std::invalid_argument("trade-off dimension does not match the number of objectives");
    }
    std::vector<Int128> keys(instance.ground_size(), 0);
    auto const nums = lambda.numerators();
    for (std::size_t i = 0; i < instance.objectives(); ++i) {
        auto const row = instance.row(i);
        for (std::size_t e = 0; e < keys.size(); ++e) {
            keys[e] += static_cast<Int128>(nums[i]) * row[e];
        }
    }
    return keys;
}

Rational scalarized_weight(const WeightedInstance& instance, const TradeOff& lambda, const Solution& x)
{
    if (lambda.dimension() != instance.objectives()) {
        throw std::invalid_argument("trade-off dimension does not match the number of objectives");
    }
    return {scaled_scalarization(lambda, instance.image(x)), lambda.denominator()};
}

Rational fitness_scalar(const WeightedInstance& instance, const TradeOff& lambda, const Solution& x)
{
    auto const penalty = instance.rank_penalty(instance.matroid().rank(x));
    return Rational(penalty) + scalarized_weight(instance, lambda, x);
}

ObjectivePoint fitness_vector(const WeightedInstance& instance, const Solution& x)
{
    auto point = instance.image(x);
    auto const penalty = instance.rank_penalty(instance.matroid().rank(x));
    for (auto& c : point) {
        c += penalty;
    }
    return point;
}

bool dominates(std::span<const std::int64_t> u, std::span<const std::int64_t> v)
{
    if (u.size() != v.size()) {
        throw std::invalid_argument("dominates: points have different dimensions");
    }
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] > v[i]) {
            return false;
        }
    }
    return true;
}

std::string to_string(std::span<const std::int64_t> point)
{
    std::string out = "(";
    for (std::size_t i = 0; i < point.size(); ++i) {
        if (i > 0) {
            out += ",";
        }
        out += std::to_string(point[i]);
    }
    return out + ")";
}

}  // namespace momwb
