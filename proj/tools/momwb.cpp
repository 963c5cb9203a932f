#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "momwb/evo.hpp"
#include "momwb/experiment.hpp"
#include "momwb/extreme.hpp"
#include "momwb/generator.hpp"
#include "momwb/instance_io.hpp"
#include "momwb/metrics.hpp"
#include "momwb/oracle.hpp"

using namespace momwb;

namespace {

std::optional<std::size_t> parse_neighborhood(const std::string& text)
{
    if (text == "all") {
        return std::nullopt;
    }
    std::size_t used = 0;
    auto const n = std::stoull(text, &used);
    if (used != text.size() || n == 0) {
        throw CLI::ValidationError("--neighborhood", "expected 'all' or a positive integer");
    }
    return static_cast<std::size_t>(n);
}

void print_points(std::ostream& out, const char* label, const std::vector<ObjectivePoint>& points)
{
    for (auto const& p : points) {
        out << label;
        for (auto c : p) {
            out << ' ' << c;
        }
        out << '\n';
    }
}

void print_run(std::ostream& out, const PreparedInstance& prepared, const RunResult& r)
{
    auto const cover = cover_rate(r.archive_images, prepared.targets());
    auto const igd = igd_plus(r.archive_images, prepared.targets());
    out << "budget " << prepared.budget << '\n';
    out << "evaluations " << r.evaluations_used << '\n';
    out << "terminated " << (r.success() ? "all-targets-hit" : "budget-exhausted") << '\n';
    out << "cover " << cover.hit << '/' << cover.total << '\n';
    out << "igd_plus " << (igd ? std::to_string(*igd) : std::string("inf")) << '\n';
    for (std::size_t i = 0; i < prepared.targets().size(); ++i) {
        out << "target " << to_string(prepared.targets()[i]) << ' '
            << (r.first_hit[i] ? std::to_string(*r.first_hit[i]) : std::string("miss")) << '\n';
    }
    for (std::size_t i = 0; i < r.archive_images.size(); ++i) {
        out << "archive " << to_string(r.archive_images[i]) << ' ' << r.archive_solutions[i].to_string() << '\n';
    }
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Multi-objective minimum weight base toolkit"};
    app.require_subcommand(1);

    std::uint64_t seed = 1;
    double multiplier = 3.0;
    std::string neighborhood = "all";
    std::string instance_path;

    // gen
    auto* gen = app.add_subcommand("gen", "Generate a random instance");
    std::size_t vertices = 11;
    std::size_t edges = 30;
    std::size_t objectives = 2;
    std::int64_t weight_max = 100;
    std::vector<std::size_t> uniform_shape;
    std::string gen_out;
    gen->add_option("--vertices", vertices, "Vertex count")->capture_default_str();
    gen->add_option("--edges", edges, "Edge count")->capture_default_str();
    gen->add_option("-k,--objectives", objectives, "Number of objectives")->capture_default_str();
    gen->add_option("--weight-max", weight_max, "Weights are drawn from 1..weight-max")->capture_default_str();
    gen->add_option("--uniform", uniform_shape, "Uniform matroid instead: m K")->expected(2);
    gen->add_option("--seed", seed, "Random seed")->capture_default_str();
    gen->add_option("--out", gen_out, "Output file (default stdout)");

    // extreme / tradeoffs / oracle take one instance
    auto* extreme = app.add_subcommand("extreme", "Extreme points and the complete trade-off set");
    extreme->add_option("instance", instance_path, "Instance file")->required()->check(CLI::ExistingFile);
    auto* tradeoffs = app.add_subcommand("tradeoffs", "Sufficient trade-off set for MOEA/D");
    tradeoffs->add_option("instance", instance_path, "Instance file")->required()->check(CLI::ExistingFile);
    auto* oracle = app.add_subcommand("oracle", "Brute-force front and structural checks (m <= 20)");
    oracle->add_option("instance", instance_path, "Instance file")->required()->check(CLI::ExistingFile);

    // single runs
    std::optional<std::uint64_t> fixed_budget;
    bool check = false;
    auto add_run_options = [&](CLI::App* sub) {
        sub->add_option("instance", instance_path, "Instance file")->required()->check(CLI::ExistingFile);
        sub->add_option("--seed", seed, "Random seed")->capture_default_str();
        sub->add_option("--budget-multiplier", multiplier, "Budget is multiplier * |R| m^2 ln(m - n)")
            ->capture_default_str();
        sub->add_option("--budget", fixed_budget, "Explicit evaluation budget");
        sub->add_flag("--check-invariants", check, "Assert algorithm-state invariants every generation");
    };
    auto* moead = app.add_subcommand("moead", "One MOEA/D run on the extreme-point targets");
    add_run_options(moead);
    moead->add_option("--neighborhood", neighborhood, "'all' or a neighborhood size")->capture_default_str();
    bool convf = false;
    moead->add_flag("--convf", convf, "Complete trade-off set and every supported image as targets (m <= 20)");
    auto* gsemo = app.add_subcommand("gsemo", "One GSEMO run on the extreme-point targets");
    add_run_options(gsemo);

    // bench
    auto* bench = app.add_subcommand("bench", "Repeated runs with summary statistics");
    std::vector<std::string> bench_paths;
    std::size_t reps = 10;
    std::vector<std::string> algorithms{"moead", "gsemo"};
    std::string format = "table";
    std::string csv_out;
    std::size_t jobs = 1;
    bench->add_option("instances", bench_paths, "Instance files")->required()->check(CLI::ExistingFile);
    bench->add_option("--seed", seed, "Seed base; trial i uses seed XOR i")->capture_default_str();
    bench->add_option("--reps", reps, "Repetitions per algorithm")->capture_default_str()->check(CLI::PositiveNumber);
    bench->add_option("--budget-multiplier", multiplier, "Budget multiplier")->capture_default_str();
    bench->add_option("--neighborhood", neighborhood, "'all' or a neighborhood size")->capture_default_str();
    bench->add_option("--algorithms", algorithms, "Algorithms to run")
        ->capture_default_str()
        ->check(CLI::IsMember({"moead", "gsemo"}));
    bench->add_option("--format", format, "Output format")->capture_default_str()->check(CLI::IsMember({"table", "csv"}));
    bench->add_option("--out", csv_out, "Also write CSV to this file");
    bench->add_option("--jobs", jobs, "Concurrent trials")->capture_default_str()->check(CLI::PositiveNumber);
    bench->add_flag("--check-invariants", check, "Assert algorithm-state invariants every generation");

    // bounds
    auto* bounds = app.add_subcommand("bounds", "Extreme point count bounds");
    std::int64_t bound_m = 0;
    std::int64_t bound_n = 0;
    std::int64_t bound_k = 2;
    bounds->add_option("-m", bound_m, "Ground set size")->required();
    bounds->add_option("-n", bound_n, "Rank (for the k = 2 bound)");
    bounds->add_option("-k", bound_k, "Number of objectives")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            Rng rng(seed);
            auto const inst = uniform_shape.empty()
                                  ? gen_instance(vertices, edges, objectives, weight_max, rng)
                                  : gen_uniform_instance(uniform_shape[0], uniform_shape[1], objectives, weight_max, rng);
            if (gen_out.empty()) {
                write_instance(std::cout, inst);
            } else {
                save_instance(gen_out, inst);
            }
        } else if (extreme->parsed()) {
            auto const inst = load_instance(instance_path);
            auto const r = extreme_points(inst);
            for (std::size_t i = 0; i < r.images.size(); ++i) {
                std::cout << "point";
                for (auto c : r.images[i]) {
                    std::cout << ' ' << c;
                }
                std::cout << ' ' << r.solutions[i].to_string() << '\n';
            }
            for (auto const& t : r.tradeoffs) {
                std::cout << "tradeoff " << t.to_string() << '\n';
            }
        } else if (tradeoffs->parsed()) {
            auto const prepared = prepare_instance(instance_path, load_instance(instance_path));
            for (auto const& t : prepared.sufficient) {
                std::cout << "tradeoff " << t.to_string() << '\n';
            }
        } else if (oracle->parsed()) {
            auto const inst = load_instance(instance_path);
            auto const o = pareto_front(inst);
            auto const r = extreme_points(inst);
            std::cout << "bases " << o.all_bases.size() << '\n';
            print_points(std::cout, "front", o.front);
            print_points(std::cout, "vertex", o.hull_vertices);
            print_points(std::cout, "supported", o.supported_images);
            std::set<ObjectivePoint> const got(r.images.begin(), r.images.end());
            std::set<ObjectivePoint> const want(o.hull_vertices.begin(), o.hull_vertices.end());
            auto const k = static_cast<std::int64_t>(inst.objectives());
            std::cout << "check extreme-equals-vertices " << (got == want ? "ok" : "FAIL") << '\n';
            std::cout << "check k-approximation "
                      << (verify_k_approximation(o.hull_vertices, o.base_images, k) ? "ok" : "FAIL") << '\n';
            std::cout << "check hamming2-connected "
                      << (verify_hamming2_connected(o.supported_solutions) ? "ok" : "FAIL") << '\n';
            return got == want ? 0 : 1;
        } else if (moead->parsed() || gsemo->parsed()) {
            auto prepared = prepare_instance(instance_path, load_instance(instance_path), multiplier);
            if (fixed_budget) {
                prepared.budget = *fixed_budget;
            }
            RunOptions options;
            options.budget = prepared.budget;
            options.check_invariants = check;
            RunResult r;
            if (moead->parsed() && convf) {
                prepared.extreme.images = pareto_front(prepared.instance).supported_images;
                options.targets = prepared.targets();
                auto const& complete = prepared.extreme.tradeoffs;
                auto const n = parse_neighborhood(neighborhood).value_or(complete.size());
                r = convf_enumeration_mode(prepared.instance, complete, n, options, seed);
            } else if (moead->parsed()) {
                options.targets = prepared.targets();
                auto const n = parse_neighborhood(neighborhood).value_or(prepared.sufficient.size());
                r = moead_run(prepared.instance, prepared.sufficient, n, options, seed);
            } else {
                options.targets = prepared.targets();
                r = gsemo_run(prepared.instance, options, seed);
            }
            print_run(std::cout, prepared, r);
        } else if (bench->parsed()) {
            std::vector<PreparedInstance> prepared;
            for (auto const& path : bench_paths) {
                prepared.push_back(prepare_instance(path, load_instance(path), multiplier));
            }
            ExperimentConfig config;
            config.algorithms.clear();
            for (auto const& a : algorithms) {
                config.algorithms.push_back(parse_algorithm(a));
            }
            config.repetitions = reps;
            config.seed_base = seed;
            config.neighborhood = parse_neighborhood(neighborhood);
            config.jobs = jobs;
            config.check_invariants = check;
            auto const rows = run_experiment(prepared, config);
            std::cout << (format == "csv" ? format_csv(rows) : format_table(rows));
            if (!csv_out.empty()) {
                std::ofstream out(csv_out);
                if (!out) {
                    throw std::runtime_error("cannot write " + csv_out);
                }
                out << format_csv(rows);
            }
        } else if (bounds->parsed()) {
            if (bound_k == 2 && bound_n > 0) {
                std::cout << "bound_2 " << extreme_count_bound_2(bound_m, bound_n) << '\n';
            }
            std::cout << "bound_k " << extreme_count_bound_k(bound_m, bound_k) << '\n';
        }
    } catch (const std::exception& e) {
        std::cerr << "momwb: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
