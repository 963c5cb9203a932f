#include "momwb/extreme.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace momwb {

namespace {

// Collects distinct images, keeping the first witness found for each.
class ImageCollector {
public:
    bool add(const WeightedInstance& instance, Solution x)
    {
        auto image = instance.image(x);
        if (!seen_.insert(image).second) {
            return false;
        }
        result_.images.push_back(std::move(image));
        result_.solutions.push_back(std::move(x));
        return true;
    }

    ExtremeResult& result() noexcept { return result_; }

private:
    std::set<ObjectivePoint> seen_;
    ExtremeResult result_;
};

// Elements sorted by (d_λ w^(λ)_e, w_{p_0,e}, ..., w_{p_{k-1},e}, e).
std::vector<std::size_t> priority_order(const WeightedInstance& instance, const TradeOff& lambda,
                                        std::span<const std::size_t> priority)
{
    auto const keys = scalarized_keys(instance, lambda);
    std::vector<std::size_t> order(instance.ground_size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (keys[a] != keys[b]) {
            return keys[a] < keys[b];
        }
        for (auto obj : priority) {
            auto const wa = instance.weight(obj, a);
            auto const wb = instance.weight(obj, b);
            if (wa != wb) {
                return wa < wb;
            }
        }
        return a < b;
    });
    return order;
}

Int128 determinant(std::vector<std::vector<Int128>> a)
{
    // Laplace expansion; matrices here are at most (k-1) x (k-1) with k <= 8.
    auto const n = a.size();
    if (n == 0) {
        return 1;
    }
    if (n == 1) {
        return a[0][0];
    }
    if (n == 2) {
        return checked_add(checked_mul(a[0][0], a[1][1]), -checked_mul(a[0][1], a[1][0]));
    }
    Int128 det = 0;
    for (std::size_t col = 0; col < n; ++col) {
        if (a[0][col] == 0) {
            continue;
        }
        std::vector<std::vector<Int128>> minor;
        minor.reserve(n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Int128> row;
            row.reserve(n - 1);
            for (std::size_t c = 0; c < n; ++c) {
                if (c != col) {
                    row.push_back(a[r][c]);
                }
            }
            minor.push_back(std::move(row));
        }
        auto term = checked_mul(a[0][col], determinant(std::move(minor)));
        det = checked_add(det, (col % 2 == 0) ? term : -term);
    }
    return det;
}

// Vector orthogonal to the k-1 rows of a (k-1) x k matrix, via signed
// maximal minors.
std::vector<Int128> orthogonal_complement(const std::vector<std::vector<Int128>>& rows, std::size_t k)
{
    std::vector<Int128> normal(k, 0);
    for (std::size_t drop = 0; drop < k; ++drop) {
        std::vector<std::vector<Int128>> minor;
        minor.reserve(rows.size());
        for (auto const& r : rows) {
            std::vector<Int128> row;
            row.reserve(k - 1);
            for (std::size_t c = 0; c < k; ++c) {
                if (c != drop) {
                    row.push_back(r[c]);
                }
            }
            minor.push_back(std::move(row));
        }
        auto const d = determinant(std::move(minor));
        normal[drop] = (drop % 2 == 0) ? d : -d;
    }
    return normal;
}

void for_each_combination(std::size_t n, std::size_t r,
                          const std::function<void(const std::vector<std::size_t>&)>& visit)
{
    if (r > n) {
        return;
    }
    std::vector<std::size_t> idx(r);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    while (true) {
        visit(idx);
        std::size_t i = r;
        while (i > 0 && idx[i - 1] == n - r + i - 1) {
            --i;
        }
        if (i == 0) {
            return;
        }
        ++idx[i - 1];
        for (std::size_t j = i; j < r; ++j) {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

Int128 dot(std::span<const Int128> normal, std::span<const std::int64_t> point)
{
    Int128 acc = 0;
    for (std::size_t i = 0; i < point.size(); ++i) {
        acc = checked_add(acc, checked_mul(normal[i], point[i]));
    }
    return acc;
}

}  // namespace

std::vector<Facet> lower_hull_facets(std::span<const ObjectivePoint> points)
{
    if (points.empty()) {
        return {};
    }
    auto const k = points.front().size();
    if (k < 2) {
        throw std::invalid_argument("lower_hull_facets: dimension must be at least 2");
    }
    for (auto const& p : points) {
        if (p.size() != k) {
            throw std::invalid_argument("lower_hull_facets: points have mixed dimensions");
        }
    }

    // A facet is spanned by j affinely independent points and k - j recession
    // directions e_d; its normal is orthogonal to both.
    std::map<TradeOff, Facet> found;
    for (std::size_t j = 1; j <= std::min(k, points.size()); ++j) {
        for_each_combination(points.size(), j, [&](const std::vector<std::size_t>& chosen) {
            auto const& base = points[chosen.front()];
            for_each_combination(k, k - j, [&](const std::vector<std::size_t>& dirs) {
                std::vector<std::vector<Int128>> rows;
                rows.reserve(k - 1);
                for (std::size_t a = 1; a < chosen.size(); ++a) {
                    std::vector<Int128> row(k);
                    for (std::size_t c = 0; c < k; ++c) {
                        row[c] = static_cast<Int128>(points[chosen[a]][c]) - base[c];
                    }
                    rows.push_back(std::move(row));
                }
                for (auto d : dirs) {
                    std::vector<Int128> row(k, 0);
                    row[d] = 1;
                    rows.push_back(std::move(row));
                }
                auto normal = orthogonal_complement(rows, k);
                bool const any_pos = std::any_of(normal.begin(), normal.end(), [](Int128 v) { return v > 0; });
                bool const any_neg = std::any_of(normal.begin(), normal.end(), [](Int128 v) { return v < 0; });
                if (any_pos == any_neg) {
                    return;  // zero (dependent rows) or mixed signs
                }
                if (any_neg) {
                    for (auto& v : normal) {
                        v = -v;
                    }
                }
                auto const level = dot(normal, base);
                std::vector<std::size_t> incident;
                for (std::size_t q = 0; q < points.size(); ++q) {
                    auto const value = dot(normal, points[q]);
                    if (value < level) {
                        return;
                    }
                    if (value == level) {
                        incident.push_back(q);
                    }
                }
                auto key = TradeOff::from_weights(normal);
                if (!found.contains(key)) {
                    found.emplace(key, Facet{key, std::move(incident)});
                }
            });
        });
    }
    std::vector<Facet> facets;
    facets.reserve(found.size());
    for (auto& [key, facet] : found) {
        facets.push_back(std::move(facet));
    }
    return facets;
}

ExtremeResult extreme_biobjective(const WeightedInstance& instance)
{
    if (instance.objectives() != 2) {
        throw std::invalid_argument("extreme_biobjective requires exactly two objectives");
    }
    ImageCollector collector;
    std::set<Rational> processed;
    std::vector<Rational> pending{Rational(0), Rational(1)};
    std::array<std::size_t, 2> const first_then_second{0, 1};
    std::array<std::size_t, 2> const second_then_first{1, 0};

    auto& result = collector.result();
    while (!pending.empty()) {
        ++result.rounds;
        bool added = false;
        for (auto const& lambda : pending) {
            auto const t = TradeOff::from_scalar(lambda);
            added |= collector.add(instance, greedy_on_order(instance.matroid(),
                                                             priority_order(instance, t, first_then_second)));
            added |= collector.add(instance, greedy_on_order(instance.matroid(),
                                                             priority_order(instance, t, second_then_first)));
            processed.insert(lambda);
            result.tradeoffs.push_back(t);
        }
        std::vector<std::size_t> by_first(result.images.size());
        std::iota(by_first.begin(), by_first.end(), std::size_t{0});
        std::sort(by_first.begin(), by_first.end(),
                  [&](std::size_t a, std::size_t b) { return result.images[a] < result.images[b]; });
        std::set<Rational> next;
        for (std::size_t i = 0; i + 1 < by_first.size(); ++i) {
            auto const& left = result.images[by_first[i]];
            auto const& right = result.images[by_first[i + 1]];
            auto const d1 = right[0] - left[0];
            auto const d2 = left[1] - right[1];
            if (d1 <= 0 || d2 <= 0) {
                throw std::logic_error("extreme_biobjective: collected images are not mutually non-dominated");
            }
            Rational lambda(d1, d1 + d2);
            if (!processed.contains(lambda)) {
                next.insert(lambda);
            }
        }
        // A round that finds no new point leaves the hull edges, and so the
        // candidate trade-offs, unchanged.
        if (result.rounds > 1 && !added && !next.empty()) {
            throw std::logic_error("extreme_biobjective: round without progress produced new trade-offs");
        }
        pending.assign(next.begin(), next.end());
    }
    result.facets = lower_hull_facets(result.images);
    return std::move(result);
}

ExtremeResult extreme_k(const WeightedInstance& instance, ExtremeOptions options)
{
    auto const k = instance.objectives();
    if (k < 2) {
        throw std::invalid_argument("extreme_k: single-objective instances are solved by Greedy directly");
    }
    if (k > options.max_objectives) {
        throw std::invalid_argument("extreme_k: " + std::to_string(k) + " objectives unsupported (max " +
                                    std::to_string(options.max_objectives) + ")");
    }
    std::vector<std::vector<std::size_t>> priorities;
    std::vector<std::size_t> p(k);
    std::iota(p.begin(), p.end(), std::size_t{0});
    do {
        priorities.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));

    ImageCollector collector;
    auto& result = collector.result();
    std::set<TradeOff> processed;
    std::vector<TradeOff> pending;
    for (std::size_t i = 0; i < k; ++i) {
        pending.push_back(TradeOff::unit(k, i));
    }
    while (!pending.empty()) {
        ++result.rounds;
        for (auto const& lambda : pending) {
            for (auto const& priority : priorities) {
                collector.add(instance, greedy_on_order(instance.matroid(), priority_order(instance, lambda, priority)));
            }
            processed.insert(lambda);
            result.tradeoffs.push_back(lambda);
        }
        result.facets = lower_hull_facets(result.images);
        pending.clear();
        for (auto const& facet : result.facets) {
            if (!processed.contains(facet.normal)) {
                pending.push_back(facet.normal);
            }
        }
    }
    return std::move(result);
}

ExtremeResult extreme_points(const WeightedInstance& instance)
{
    if (instance.objectives() == 2) {
        return extreme_biobjective(instance);
    }
    return extreme_k(instance);
}

std::vector<TradeOff> sufficient_tradeoffs_biobjective(std::span<const TradeOff> complete)
{
    if (complete.empty()) {
        throw std::invalid_argument("sufficient_tradeoffs_biobjective: empty trade-off set");
    }
    std::set<Rational> values{Rational(0), Rational(1)};
    for (auto const& t : complete) {
        values.insert(t.scalar());
    }
    std::vector<TradeOff> out;
    for (auto it = values.begin(); std::next(it) != values.end(); ++it) {
        auto const mid = (*it + *std::next(it)) / Rational(2);
        out.push_back(TradeOff::from_scalar(mid));
    }
    return out;
}

TradeOff average_normals(std::span<const TradeOff> normals)
{
    if (normals.empty()) {
        throw std::invalid_argument("average_normals: no normals given");
    }
    auto const k = normals.front().dimension();
    Int128 common = 1;
    for (auto const& n : normals) {
        if (n.dimension() != k) {
            throw std::invalid_argument("average_normals: mixed dimensions");
        }
        common = checked_mul(common / gcd(common, n.denominator()), n.denominator());
    }
    std::vector<Int128> sum(k, 0);
    for (auto const& n : normals) {
        auto const scale = common / n.denominator();
        for (std::size_t i = 0; i < k; ++i) {
            sum[i] = checked_add(sum[i], checked_mul(n.numerators()[i], scale));
        }
    }
    return TradeOff::from_weights(sum);
}

std::vector<TradeOff> sufficient_tradeoffs_k(const ExtremeResult& result)
{
    if (result.images.empty()) {
        throw std::invalid_argument("sufficient_tradeoffs_k: no extreme points");
    }
    std::vector<TradeOff> out;
    std::set<TradeOff> seen;
    for (std::size_t v = 0; v < result.images.size(); ++v) {
        std::vector<TradeOff> incident;
        for (auto const& facet : result.facets) {
            if (std::find(facet.incident.begin(), facet.incident.end(), v) != facet.incident.end()) {
                incident.push_back(facet.normal);
            }
        }
        if (incident.empty()) {
            throw std::logic_error("sufficient_tradeoffs_k: extreme point without incident facets");
        }
        auto t = average_normals(incident);
        if (seen.insert(t).second) {
            out.push_back(std::move(t));
        }
    }
    return out;
}

std::int64_t extreme_count_bound_2(std::int64_t m, std::int64_t n)
{
    if (n < 1 || n >= m) {
        throw std::invalid_argument("extreme_count_bound_2 requires 1 <= n < m");
    }
    auto const t = 2 * std::min(n, m - n) - 1;
    std::int64_t h = 0;
    while (h * h < t) {
        ++h;
    }
    return h * m - h * (h + 1) / 2 + 1;
}

boost::multiprecision::cpp_int extreme_count_bound_k(std::int64_t m, std::int64_t k)
{
    using boost::multiprecision::cpp_int;
    if (m < 1 || k < 1) {
        throw std::invalid_argument("extreme_count_bound_k requires m >= 1 and k >= 1");
    }
    cpp_int const hyperplanes = cpp_int(m) * (m - 1) / 2;
    cpp_int total = 0;
    cpp_int binom = 1;  // C(hyperplanes, 0)
    for (std::int64_t j = 0; j < k; ++j) {
        total += binom;
        binom = binom * (hyperplanes - j) / (j + 1);
    }
    return total;
}

}  // namespace momwb
