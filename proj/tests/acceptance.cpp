// Acceptance suite: prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails. With arguments, runs only the listed
// criterion numbers.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "momwb/evo.hpp"
#include "momwb/experiment.hpp"
#include "momwb/extreme.hpp"
#include "momwb/generator.hpp"
#include "momwb/metrics.hpp"
#include "momwb/oracle.hpp"

using namespace momwb;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

struct SmallCase {
    WeightedInstance instance;
    ExtremeResult extreme;
    FrontOracle oracle;
};

WeightedInstance random_instance(Rng& rng, std::size_t k, std::size_t max_m, bool graphic, std::int64_t weight_max)
{
    if (graphic) {
        while (true) {
            auto const vertices = 3 + uniform_index(rng, 5);
            auto const pairs = vertices * (vertices - 1) / 2;
            auto const hi = std::min(pairs, max_m);
            if (hi < vertices - 1) {
                continue;
            }
            auto const edges = vertices - 1 + uniform_index(rng, hi - (vertices - 1) + 1);
            return gen_instance(vertices, edges, k, weight_max, rng);
        }
    }
    auto const m = 2 + uniform_index(rng, max_m - 1);
    auto const capacity = 1 + uniform_index(rng, m - 1);
    return gen_uniform_instance(m, capacity, k, weight_max, rng);
}

// Instances shared by criteria 2 and 4 to 6. Weight ranges alternate between
// wide and narrow so that ties and collinear fronts are well represented.
std::vector<SmallCase> build_small_cases()
{
    std::vector<SmallCase> cases;
    Rng rng(0x5eed0002);
    std::array<std::int64_t, 4> const ranges{100, 20, 5, 3};
    auto add = [&](std::size_t k, std::size_t max_m, std::size_t count) {
        for (std::size_t i = 0; i < count; ++i) {
            auto inst = random_instance(rng, k, max_m, i % 2 == 0, ranges[i % ranges.size()]);
            auto extreme = extreme_points(inst);
            auto oracle = pareto_front(inst);
            cases.push_back({std::move(inst), std::move(extreme), std::move(oracle)});
        }
    };
    add(2, 12, 300);
    add(3, 8, 80);
    return cases;
}

Outcome criterion_budget()
{
    struct Row {
        std::size_t r, m, n;
        std::uint64_t expected;
    };
    std::array<Row, 12> const rows{{{39, 150, 25, 12710536},
                                    {31, 150, 25, 10103247},
                                    {45, 150, 50, 13988205},
                                    {45, 150, 50, 13988205},
                                    {35, 150, 100, 9242155},
                                    {36, 150, 100, 9506216},
                                    {45, 300, 25, 68243769},
                                    {49, 300, 25, 74309882},
                                    {66, 300, 50, 98392434},
                                    {63, 300, 50, 93920051},
                                    {79, 300, 100, 113013110},
                                    {80, 300, 100, 114443656}}};
    std::size_t ok = 0;
    std::string mismatch;
    for (auto const& row : rows) {
        auto const got = evaluation_budget(row.r, row.m, row.n);
        if (got == row.expected) {
            ++ok;
        } else {
            mismatch += " (" + std::to_string(row.r) + "," + std::to_string(row.m) + "," + std::to_string(row.n) +
                        ")->" + std::to_string(got);
        }
    }
    return {ok == rows.size(), std::to_string(ok) + "/12 rows exact" + mismatch};
}

Outcome criterion_oracle_equivalence(const std::vector<SmallCase>& cases)
{
    std::size_t k2 = 0;
    std::size_t k3 = 0;
    std::size_t bad = 0;
    for (auto const& c : cases) {
        std::set<ObjectivePoint> const got(c.extreme.images.begin(), c.extreme.images.end());
        std::set<ObjectivePoint> const want(c.oracle.hull_vertices.begin(), c.oracle.hull_vertices.end());
        bool const distinct = got.size() == c.extreme.images.size();
        if (got != want || !distinct) {
            ++bad;
        }
        (c.instance.objectives() == 2 ? k2 : k3) += 1;
    }
    std::ostringstream d;
    d << k2 << " instances with k=2 (m<=12), " << k3 << " with k=3 (m<=8), " << bad << " mismatches";
    return {bad == 0 && k2 >= 200 && k3 >= 50, d.str()};
}

Outcome criterion_greedy()
{
    Rng rng(0x5eed0003);
    std::size_t pairs = 0;
    std::size_t bad = 0;
    while (pairs < 1200) {
        auto const k = 2 + uniform_index(rng, 2);
        auto const inst = random_instance(rng, k, 12, pairs % 2 == 0, pairs % 3 == 0 ? 5 : 100);
        auto const bases = enumerate_bases(inst.matroid());
        for (int j = 0; j < 4; ++j, ++pairs) {
            std::vector<Int128> raw(k);
            for (auto& r : raw) {
                r = static_cast<Int128>(uniform_index(rng, 1000));
            }
            raw[uniform_index(rng, k)] += 1;
            auto const lambda = TradeOff::from_weights(raw);
            auto const keys = scalarized_keys(inst, lambda);
            auto const greedy = scalarized_weight(inst, lambda, greedy_min_base(inst.matroid(), keys));
            auto best = scalarized_weight(inst, lambda, bases.front());
            for (auto const& b : bases) {
                best = std::min(best, scalarized_weight(inst, lambda, b));
            }
            bad += greedy != best;
        }
    }
    return {bad == 0, std::to_string(pairs) + " (instance, rational trade-off) pairs, " + std::to_string(bad) +
                          " mismatches"};
}

Outcome criterion_approximation(const std::vector<SmallCase>& cases)
{
    std::size_t bad = 0;
    for (auto const& c : cases) {
        bad += !verify_k_approximation(c.oracle.hull_vertices, c.oracle.base_images,
                                       static_cast<std::int64_t>(c.instance.objectives()));
    }
    return {bad == 0, std::to_string(cases.size()) + " instances, " + std::to_string(bad) + " violations"};
}

Outcome criterion_connectivity(const std::vector<SmallCase>& cases)
{
    std::size_t bad = 0;
    std::size_t solutions = 0;
    for (auto const& c : cases) {
        solutions += c.oracle.supported_solutions.size();
        bad += !verify_hamming2_connected(c.oracle.supported_solutions);
    }
    return {bad == 0, std::to_string(cases.size()) + " instances, " + std::to_string(solutions) +
                          " supported bases in total, " + std::to_string(bad) + " disconnected"};
}

Outcome criterion_bounds(const std::vector<SmallCase>& cases)
{
    std::size_t bad = 0;
    std::size_t checked2 = 0;
    for (auto const& c : cases) {
        auto const m = static_cast<std::int64_t>(c.instance.ground_size());
        auto const n = static_cast<std::int64_t>(c.instance.full_rank());
        auto const count = c.extreme.images.size();
        if (c.instance.objectives() == 2 && n >= 1 && n < m) {
            ++checked2;
            bad += static_cast<std::int64_t>(count) > extreme_count_bound_2(m, n);
        }
        bad += boost::multiprecision::cpp_int(count) >
               extreme_count_bound_k(m, static_cast<std::int64_t>(c.instance.objectives()));
    }
    return {bad == 0, std::to_string(cases.size()) + " instances (" + std::to_string(checked2) +
                          " against the k=2 bound), " + std::to_string(bad) + " violations"};
}

std::size_t worker_count()
{
    return std::max(1U, std::thread::hardware_concurrency());
}

Outcome criterion_desk_replication()
{
    struct Shape {
        std::size_t vertices, edges;
        std::uint64_t seed;
    };
    std::array<Shape, 4> const shapes{{{11, 30, 7001}, {12, 36, 7002}, {14, 42, 7003}, {16, 50, 7004}}};
    std::vector<PreparedInstance> instances;
    for (auto const& s : shapes) {
        Rng rng(s.seed);
        auto inst = gen_instance(s.vertices, s.edges, 2, 100, rng);
        instances.push_back(prepare_instance("V" + std::to_string(s.vertices) + "E" + std::to_string(s.edges),
                                             std::move(inst)));
    }
    ExperimentConfig config;
    config.seed_base = 0x7ab1e1;
    config.jobs = worker_count();
    auto const rows = run_experiment(instances, config);
    std::cout << format_table(rows);

    bool pass = true;
    std::ostringstream d;
    for (auto const& row : rows) {
        if (row.algorithm != Algorithm::Moead) {
            continue;
        }
        bool const ok = row.successes == row.repetitions && row.cover.mean == 1.0 && row.igd &&
                        row.igd->mean == 0.0;
        pass = pass && ok;
        d << row.instance << " moead " << row.successes << "/" << row.repetitions << "; ";
    }
    for (std::size_t i = 2; i < instances.size(); ++i) {
        auto const& moead = rows[2 * i];
        auto const& gsemo = rows[2 * i + 1];
        bool const below = gsemo.cover.mean < moead.cover.mean;
        pass = pass && below;
        char buf[160];
        std::snprintf(buf, sizeof buf, "%s cover gsemo %.4f vs moead %.4f; ", gsemo.instance.c_str(),
                      gsemo.cover.mean, moead.cover.mean);
        d << buf;
    }
    return {pass, d.str()};
}

Outcome criterion_convf()
{
    Rng rng(0x5eed0008);
    std::size_t instances = 0;
    std::size_t failed_runs = 0;
    std::size_t extra_points = 0;
    std::uint64_t worst = 0;
    std::size_t draws = 0;
    while (instances < 20) {
        ++draws;
        auto const inst = random_instance(rng, 2, 10, draws % 2 == 0, 3 + static_cast<std::int64_t>(draws % 4));
        auto const oracle = pareto_front(inst);
        if (oracle.supported_images.size() == oracle.hull_vertices.size()) {
            continue;
        }
        ++instances;
        extra_points += oracle.supported_images.size() - oracle.hull_vertices.size();
        auto const complete = extreme_biobjective(inst).tradeoffs;
        RunOptions options;
        options.budget = 1'000'000;
        options.targets = oracle.supported_images;
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            auto const r = convf_enumeration_mode(inst, complete, complete.size(), options, seed);
            if (!r.success()) {
                ++failed_runs;
            } else {
                worst = std::max(worst, *r.hitting_time());
            }
        }
    }
    return {failed_runs == 0, std::to_string(instances) + " instances with " + std::to_string(extra_points) +
                                  " non-vertex supported images, " + std::to_string(failed_runs) +
                                  " of 100 runs incomplete, slowest completion " + std::to_string(worst) +
                                  " evaluations"};
}

Outcome criterion_invariants()
{
    std::size_t runs = 0;
    std::size_t violations = 0;
    std::size_t nondeterministic = 0;
    std::string first_error;
    Rng rng(0x5eed0009);
    for (int i = 0; i < 12; ++i) {
        auto const inst = i < 8 ? random_instance(rng, 2, 12, i % 2 == 0, i % 3 == 0 ? 4 : 100)
                                : gen_instance(10 + static_cast<std::size_t>(i), 30, 2, 100, rng);
        if (inst.full_rank() == inst.ground_size()) {
            continue;  // a single base leaves nothing to search for
        }
        auto const prepared = prepare_instance("inv", inst, 0.5);
        RunOptions options;
        options.budget = prepared.budget;
        options.targets = prepared.targets();
        options.check_invariants = true;
        for (std::uint64_t seed = 0; seed < 3; ++seed) {
            try {
                auto const n = std::max<std::size_t>(1, prepared.sufficient.size() / 2);
                auto const a = moead_run(inst, prepared.sufficient, n, options, seed);
                auto const b = moead_run(inst, prepared.sufficient, n, options, seed);
                auto const c = gsemo_run(inst, options, seed);
                auto const d = gsemo_run(inst, options, seed);
                auto const complete = prepared.extreme.tradeoffs;
                auto const e = convf_enumeration_mode(inst, complete, complete.size(), options, seed);
                runs += 5;
                nondeterministic += (a != b) + (c != d);
                (void)e;
            } catch (const std::logic_error& err) {
                ++violations;
                if (first_error.empty()) {
                    first_error = err.what();
                }
            }
        }
    }
    std::string detail = std::to_string(runs) + " checked runs, " + std::to_string(violations) +
                         " invariant violations, " + std::to_string(nondeterministic) + " seeded replays differed";
    if (!first_error.empty()) {
        detail += " (first: " + first_error + ")";
    }
    return {violations == 0 && nondeterministic == 0, detail};
}

}  // namespace

int main(int argc, char** argv)
{
    std::vector<SmallCase> cases;
    auto shared_cases = [&]() -> const std::vector<SmallCase>& {
        if (cases.empty()) {
            cases = build_small_cases();
        }
        return cases;
    };
    std::vector<std::pair<std::string, std::function<Outcome()>>> const criteria{
        {"budget formula reproduces all 12 max-eval values", criterion_budget},
        {"extreme points equal brute-force hull vertices", [&] { return criterion_oracle_equivalence(shared_cases()); }},
        {"Greedy matches brute-force scalarized minimum", criterion_greedy},
        {"hull vertices k-approximate every base", [&] { return criterion_approximation(shared_cases()); }},
        {"supported bases are 2-Hamming connected", [&] { return criterion_connectivity(shared_cases()); }},
        {"extreme point counts respect both bounds", [&] { return criterion_bounds(shared_cases()); }},
        {"desk-scale replication: MOEA/D 10/10, GSEMO covers less", criterion_desk_replication},
        {"Conv(F) enumeration collects every supported image", criterion_convf},
        {"algorithm-state invariants and seeded determinism", criterion_invariants},
    };
    std::vector<std::size_t> selected;
    for (int a = 1; a < argc; ++a) {
        auto const n = std::stoul(argv[a]);
        if (n < 1 || n > criteria.size()) {
            std::cerr << "no criterion " << argv[a] << "\n";
            return 2;
        }
        selected.push_back(n - 1);
    }
    if (selected.empty()) {
        for (std::size_t i = 0; i < criteria.size(); ++i) {
            selected.push_back(i);
        }
    }
    int failures = 0;
    for (auto i : selected) {
        auto const start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = criteria[i].second();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        auto const secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failures += !out.pass;
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.1fs", secs);
        std::cout << "criterion " << i + 1 << ": " << (out.pass ? "PASS" : "FAIL") << " | " << criteria[i].first
                  << " | " << out.detail << " | " << timing << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
