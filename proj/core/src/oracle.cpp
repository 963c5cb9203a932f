#include "momwb/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace momwb {

namespace {

using Matrix = std::vector<std::vector<Int128>>;

// Fraction-free Gaussian elimination. Every intermediate pivot is itself a
// minor of the input, so the divisions below are exact.
Int128 bareiss_determinant(Matrix a)
{
    auto const n = a.size();
    Int128 sign = 1;
    Int128 previous = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t swap = k + 1;
            while (swap < n && a[swap][k] == 0) {
                ++swap;
            }
            if (swap == n) {
                return 0;
            }
            std::swap(a[k], a[swap]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                auto const lhs = checked_mul(a[i][j], a[k][k]);
                auto const rhs = checked_mul(a[i][k], a[k][j]);
                a[i][j] = checked_add(lhs, -rhs) / previous;
            }
            a[i][k] = 0;
        }
        previous = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

template <typename Visit>
void for_each_subset(std::size_t n, std::size_t r, Visit&& visit)
{
    if (r > n) {
        return;
    }
    std::vector<std::size_t> pick(r);
    std::iota(pick.begin(), pick.end(), std::size_t{0});
    while (true) {
        visit(pick);
        std::size_t i = r;
        while (i > 0 && pick[i - 1] == n - r + i - 1) {
            --i;
        }
        if (i == 0) {
            return;
        }
        ++pick[i - 1];
        for (std::size_t j = i; j < r; ++j) {
            pick[j] = pick[j - 1] + 1;
        }
    }
}

void collect_bases(const Matroid& matroid, std::size_t next, Solution& current, std::size_t chosen,
                   std::vector<Solution>& out)
{
    auto const m = matroid.ground_size();
    auto const n = matroid.full_rank();
    if (chosen == n) {
        out.push_back(current);
        return;
    }
    for (std::size_t e = next; e + (n - chosen) <= m; ++e) {
        current.set(e);
        if (matroid.rank(current) == chosen + 1) {
            collect_bases(matroid, e + 1, current, chosen + 1, out);
        }
        current.set(e, false);
    }
}

}  // namespace

HullClass classify_point(std::span<const std::int64_t> point, std::span<const ObjectivePoint> others)
{
    auto const k = point.size();
    auto check = [&](std::span<const std::int64_t> v) {
        if (v.size() != k) {
            throw std::invalid_argument("classify_point: dimension mismatch");
        }
        for (auto c : v) {
            if (std::llabs(c) > kOracleMaxCoordinate) {
                throw std::invalid_argument("classify_point: coordinate " + std::to_string(c) + " too large");
            }
        }
    };
    check(point);
    for (auto const& q : others) {
        check(q);
    }
    if (others.empty()) {
        return HullClass::Vertex;
    }

    // Variables (λ_1..λ_k, t). Inequalities: λ_i >= 0 for each i, and
    // λ·(q - p) - t >= 0 for each q. The optimum of max t is attained where
    // the simplex equation and k independent inequalities are tight.
    std::vector<std::vector<Int128>> rows;
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<Int128> r(k + 1, 0);
        r[i] = 1;
        rows.push_back(std::move(r));
    }
    for (auto const& q : others) {
        std::vector<Int128> r(k + 1, 0);
        for (std::size_t i = 0; i < k; ++i) {
            r[i] = static_cast<Int128>(q[i]) - point[i];
        }
        r[k] = -1;
        rows.push_back(std::move(r));
    }

    int best = -1;  // sign of the best feasible objective found so far
    for_each_subset(rows.size(), k, [&](const std::vector<std::size_t>& active) {
        if (best == 1) {
            return;
        }
        Matrix a;
        std::vector<Int128> b;
        a.emplace_back(k + 1, 1);
        a[0][k] = 0;
        b.push_back(1);
        for (auto idx : active) {
            a.push_back(rows[idx]);
            b.push_back(0);
        }
        auto det = bareiss_determinant(a);
        if (det == 0) {
            return;
        }
        std::vector<Int128> z(k + 1);
        for (std::size_t col = 0; col <= k; ++col) {
            Matrix replaced = a;
            for (std::size_t r = 0; r <= k; ++r) {
                replaced[r][col] = b[r];
            }
            z[col] = bareiss_determinant(std::move(replaced));
        }
        if (det < 0) {
            det = -det;
            for (auto& v : z) {
                v = -v;
            }
        }
        for (auto const& r : rows) {
            Int128 value = 0;
            for (std::size_t i = 0; i <= k; ++i) {
                value = checked_add(value, checked_mul(r[i], z[i]));
            }
            if (value < 0) {
                return;
            }
        }
        int const sign = (z[k] > 0) - (z[k] < 0);
        best = std::max(best, sign);
    });
    if (best > 0) {
        return HullClass::Vertex;
    }
    return best == 0 ? HullClass::Supported : HullClass::Interior;
}

std::vector<Solution> enumerate_bases(const Matroid& matroid)
{
    if (matroid.ground_size() > kOracleMaxGroundSize) {
        throw std::invalid_argument("enumerate_bases: ground set of " + std::to_string(matroid.ground_size()) +
                                    " elements exceeds the limit of " + std::to_string(kOracleMaxGroundSize));
    }
    std::vector<Solution> out;
    Solution current(matroid.ground_size());
    collect_bases(matroid, 0, current, 0, out);
    return out;
}

FrontOracle pareto_front(const WeightedInstance& instance)
{
    FrontOracle oracle;
    oracle.all_bases = enumerate_bases(instance.matroid());
    std::set<ObjectivePoint> distinct;
    for (auto const& b : oracle.all_bases) {
        oracle.base_images.push_back(instance.image(b));
        distinct.insert(oracle.base_images.back());
    }
    for (auto const& p : distinct) {
        bool const dominated = std::any_of(distinct.begin(), distinct.end(),
                                           [&](const ObjectivePoint& q) { return q != p && dominates(q, p); });
        if (!dominated) {
            oracle.front.push_back(p);
        }
    }
    std::set<ObjectivePoint> supported;
    for (std::size_t i = 0; i < oracle.front.size(); ++i) {
        std::vector<ObjectivePoint> rest;
        for (std::size_t j = 0; j < oracle.front.size(); ++j) {
            if (j != i) {
                rest.push_back(oracle.front[j]);
            }
        }
        auto const cls = classify_point(oracle.front[i], rest);
        if (cls == HullClass::Vertex) {
            oracle.hull_vertices.push_back(oracle.front[i]);
        }
        if (cls != HullClass::Interior) {
            oracle.supported_images.push_back(oracle.front[i]);
            supported.insert(oracle.front[i]);
        }
    }
    std::set<ObjectivePoint> const front_set(oracle.front.begin(), oracle.front.end());
    for (std::size_t i = 0; i < oracle.all_bases.size(); ++i) {
        auto const& img = oracle.base_images[i];
        if (front_set.contains(img)) {
            oracle.witness.try_emplace(img, oracle.all_bases[i]);
        }
        if (supported.contains(img)) {
            oracle.supported_solutions.push_back(oracle.all_bases[i]);
        }
    }
    return oracle;
}

bool verify_k_approximation(std::span<const ObjectivePoint> sufficient, std::span<const ObjectivePoint> base_images,
                            std::int64_t factor)
{
    if (sufficient.empty()) {
        throw std::invalid_argument("verify_k_approximation: empty approximation set");
    }
    return std::all_of(base_images.begin(), base_images.end(), [&](const ObjectivePoint& y) {
        return std::any_of(sufficient.begin(), sufficient.end(), [&](const ObjectivePoint& x) {
            if (x.size() != y.size()) {
                throw std::invalid_argument("verify_k_approximation: dimension mismatch");
            }
            for (std::size_t i = 0; i < x.size(); ++i) {
                if (static_cast<Int128>(x[i]) > static_cast<Int128>(factor) * y[i]) {
                    return false;
                }
            }
            return true;
        });
    });
}

bool verify_hamming2_connected(std::span<const Solution> solutions)
{
    if (solutions.empty()) {
        throw std::invalid_argument("verify_hamming2_connected: no solutions");
    }
    std::vector<bool> seen(solutions.size(), false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        auto const u = stack.back();
        stack.pop_back();
        for (std::size_t v = 0; v < solutions.size(); ++v) {
            if (!seen[v] && solutions[u].hamming_distance(solutions[v]) <= 2) {
                seen[v] = true;
                ++reached;
                stack.push_back(v);
            }
        }
    }
    return reached == solutions.size();
}

}  // namespace momwb
