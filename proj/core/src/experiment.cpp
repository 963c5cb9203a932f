#include "momwb/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace momwb {

namespace {

struct Job {
    std::size_t row = 0;
    std::size_t trial = 0;
};

TrialRecord run_trial(const PreparedInstance& prepared, Algorithm algorithm, const ExperimentConfig& config,
                      std::size_t index)
{
    TrialRecord record;
    record.index = index;
    record.seed = trial_seed(config.seed_base, index);
    RunOptions options;
    options.budget = prepared.budget;
    options.targets = prepared.targets();
    options.check_invariants = config.check_invariants;
    if (algorithm == Algorithm::Moead) {
        auto const n = config.neighborhood.value_or(prepared.sufficient.size());
        record.result = moead_run(prepared.instance, prepared.sufficient, n, options, record.seed);
    } else {
        record.result = gsemo_run(prepared.instance, options, record.seed);
    }
    record.cover = cover_rate(record.result.archive_images, prepared.targets());
    record.igd = igd_plus(record.result.archive_images, prepared.targets());
    bool const full = record.cover.hit == record.cover.total;
    bool const zero = record.igd && *record.igd == 0.0;
    if (full != zero) {
        throw std::logic_error("IGD+ and cover rate disagree on " + prepared.name + " (" + to_string(algorithm) +
                               ", trial " + std::to_string(index) + ")");
    }
    return record;
}

void finish_row(ExperimentRow& row)
{
    std::vector<double> covers;
    std::vector<double> igds;
    std::vector<double> ratios;
    for (auto const& t : row.trials) {
        covers.push_back(t.cover.value());
        if (t.igd) {
            igds.push_back(*t.igd);
        }
        if (auto h = t.result.hitting_time()) {
            ++row.successes;
            ratios.push_back(static_cast<double>(*h) / static_cast<double>(row.budget));
        }
    }
    row.cover = summarize(covers).value_or(Summary{});
    row.igd = summarize(igds);
    row.time_ratio = summarize(ratios);
}

std::string fixed(double v, int digits)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

std::string significant(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string pad(const std::string& s, std::size_t width)
{
    return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

}  // namespace

std::string to_string(Algorithm algorithm)
{
    return algorithm == Algorithm::Moead ? "moead" : "gsemo";
}

Algorithm parse_algorithm(const std::string& name)
{
    if (name == "moead") {
        return Algorithm::Moead;
    }
    if (name == "gsemo") {
        return Algorithm::Gsemo;
    }
    throw std::invalid_argument("unknown algorithm '" + name + "'");
}

std::uint64_t trial_seed(std::uint64_t seed_base, std::size_t index) noexcept
{
    return seed_base ^ static_cast<std::uint64_t>(index);
}

PreparedInstance prepare_instance(std::string name, WeightedInstance instance, double budget_multiplier)
{
    auto extreme = extreme_points(instance);
    auto sufficient = instance.objectives() == 2 ? sufficient_tradeoffs_biobjective(extreme.tradeoffs)
                                                 : sufficient_tradeoffs_k(extreme);
    auto const budget = std::max(kMinimumBudget, evaluation_budget(extreme.images.size(), instance.ground_size(),
                                                                   instance.full_rank(), budget_multiplier));
    return {std::move(name), std::move(instance), std::move(extreme), std::move(sufficient), budget};
}

std::vector<ExperimentRow> run_experiment(const std::vector<PreparedInstance>& instances,
                                          const ExperimentConfig& config)
{
    if (config.repetitions < 1) {
        throw std::invalid_argument("repetitions must be at least 1");
    }
    std::vector<ExperimentRow> rows;
    std::vector<Job> jobs;
    std::vector<std::pair<const PreparedInstance*, Algorithm>> row_source;
    for (auto const& prepared : instances) {
        for (auto algorithm : config.algorithms) {
            ExperimentRow row;
            row.instance = prepared.name;
            row.algorithm = algorithm;
            row.m = prepared.instance.ground_size();
            row.n = prepared.instance.full_rank();
            row.targets = prepared.targets().size();
            row.budget = prepared.budget;
            row.repetitions = config.repetitions;
            row.seed_base = config.seed_base;
            row.trials.resize(config.repetitions);
            for (std::size_t t = 0; t < config.repetitions; ++t) {
                jobs.push_back({rows.size(), t});
            }
            rows.push_back(std::move(row));
            row_source.emplace_back(&prepared, algorithm);
        }
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (auto i = next.fetch_add(1); i < jobs.size(); i = next.fetch_add(1)) {
            auto const [row, trial] = jobs[i];
            try {
                rows[row].trials[trial] = run_trial(*row_source[row].first, row_source[row].second, config, trial);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
                next = jobs.size();
            }
        }
    };
    auto const threads = std::max<std::size_t>(1, std::min(config.jobs, jobs.size()));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < threads; ++t) {
            pool.emplace_back(worker);
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    for (auto& row : rows) {
        finish_row(row);
    }
    return rows;
}

std::string format_table(const std::vector<ExperimentRow>& rows)
{
    std::ostringstream out;
    out << "# sd is the sample standard deviation over trials; T/max-eval uses successful runs only\n";
    out << "# trial i runs with seed (seed base XOR i)\n";
    std::vector<std::vector<std::string>> cells;
    cells.push_back({"instance", "algorithm", "m", "n", "|R|", "max-eval", "success", "cover (%)", "IGD+",
                     "T/max-eval", "seed base"});
    for (auto const& r : rows) {
        auto ms = [](const std::optional<Summary>& s, auto fmt) {
            return s ? fmt(s->mean) + " ± " + fmt(s->sd) : std::string("N/A");
        };
        cells.push_back({r.instance, to_string(r.algorithm), std::to_string(r.m), std::to_string(r.n),
                         std::to_string(r.targets), std::to_string(r.budget),
                         std::to_string(r.successes) + "/" + std::to_string(r.repetitions),
                         fixed(100.0 * r.cover.mean, 2) + " ± " + fixed(100.0 * r.cover.sd, 2),
                         ms(r.igd, significant), ms(r.time_ratio, significant), std::to_string(r.seed_base)});
    }
    std::vector<std::size_t> width(cells[0].size(), 0);
    auto display_width = [](const std::string& s) {
        // Count code points so the two-byte '±' lines up.
        std::size_t w = 0;
        for (unsigned char c : s) {
            w += (c & 0xC0) != 0x80;
        }
        return w;
    };
    for (auto const& line : cells) {
        for (std::size_t c = 0; c < line.size(); ++c) {
            width[c] = std::max(width[c], display_width(line[c]));
        }
    }
    for (auto const& line : cells) {
        for (std::size_t c = 0; c < line.size(); ++c) {
            auto const extra = line[c].size() - display_width(line[c]);
            out << (c == 0 ? "" : "  ") << pad(line[c], width[c] + extra);
        }
        out << '\n';
    }
    return out.str();
}

std::string format_csv(const std::vector<ExperimentRow>& rows)
{
    std::ostringstream out;
    out << "instance,algorithm,m,n,targets,max_eval,successes,repetitions,cover_mean,cover_sd,igd_plus_mean,"
           "igd_plus_sd,t_ratio_mean,t_ratio_sd,seed_base\n";
    auto pair = [](const std::optional<Summary>& s) {
        return s ? significant(s->mean) + "," + significant(s->sd) : std::string("N/A,N/A");
    };
    for (auto const& r : rows) {
        out << r.instance << ',' << to_string(r.algorithm) << ',' << r.m << ',' << r.n << ',' << r.targets << ','
            << r.budget << ',' << r.successes << ',' << r.repetitions << ',' << significant(r.cover.mean) << ','
            << significant(r.cover.sd) << ',' << pair(r.igd) << ',' << pair(r.time_ratio) << ',' << r.seed_base
            << '\n';
    }
    return out.str();
}

}  // namespace momwb
