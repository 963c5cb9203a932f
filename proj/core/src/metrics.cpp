#include "momwb/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

namespace momwb {

std::uint64_t evaluation_budget(std::size_t target_count, std::size_t m, std::size_t n, double multiplier)
{
    if (n < 1 || m <= n) {
        throw std::invalid_argument("budget needs m > n >= 1");
    }
    if (target_count < 1) {
        throw std::invalid_argument("budget needs at least one target");
    }
    if (!(multiplier > 0.0)) {
        throw std::invalid_argument("budget multiplier must be positive");
    }
    auto const mm = static_cast<long double>(m);
    long double const value = static_cast<long double>(multiplier) * static_cast<long double>(target_count) * mm *
                              mm * std::log(static_cast<long double>(m - n));
    return static_cast<std::uint64_t>(std::ceil(value));
}

std::optional<double> igd_plus(std::span<const ObjectivePoint> archive, std::span<const ObjectivePoint> targets)
{
    if (targets.empty()) {
        throw std::invalid_argument("igd_plus: empty target set");
    }
    if (archive.empty()) {
        return std::nullopt;
    }
    double total = 0.0;
    for (auto const& y : targets) {
        double best = std::numeric_limits<double>::infinity();
        for (auto const& x : archive) {
            if (x.size() != y.size()) {
                throw std::invalid_argument("igd_plus: dimension mismatch");
            }
            double sq = 0.0;
            for (std::size_t i = 0; i < y.size(); ++i) {
                auto const gap = static_cast<double>(std::max<std::int64_t>(x[i] - y[i], 0));
                sq += gap * gap;
            }
            best = std::min(best, std::sqrt(sq));
        }
        total += best;
    }
    return total / static_cast<double>(targets.size());
}

CoverRate cover_rate(std::span<const ObjectivePoint> archive, std::span<const ObjectivePoint> targets)
{
    std::set<ObjectivePoint> const present(archive.begin(), archive.end());
    CoverRate rate;
    rate.total = targets.size();
    rate.hit = static_cast<std::size_t>(
        std::count_if(targets.begin(), targets.end(), [&](const ObjectivePoint& t) { return present.contains(t); }));
    return rate;
}

std::optional<Summary> summarize(std::span<const double> values)
{
    if (values.empty()) {
        return std::nullopt;
    }
    Summary s;
    s.count = values.size();
    double sum = 0.0;
    for (auto v : values) {
        sum += v;
    }
    s.mean = sum / static_cast<double>(s.count);
    if (s.count > 1) {
        double sq = 0.0;
        for (auto v : values) {
            sq += (v - s.mean) * (v - s.mean);
        }
        s.sd = std::sqrt(sq / static_cast<double>(s.count - 1));
    }
    return s;
}

}  // namespace momwb
