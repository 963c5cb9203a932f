#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "momwb/evo.hpp"
#include "momwb/extreme.hpp"
#include "momwb/metrics.hpp"
#include "momwb/scalarize.hpp"

namespace momwb {

enum class Algorithm { Moead, Gsemo };

[[nodiscard]] std::string to_string(Algorithm algorithm);
/// Accepts "moead" or "gsemo"; throws std::invalid_argument otherwise.
[[nodiscard]] Algorithm parse_algorithm(const std::string& name);

/// An instance with everything a run needs: the extreme points as targets,
/// the sufficient trade-off set, and the evaluation budget.
struct PreparedInstance {
    std::string name;
    WeightedInstance instance;
    ExtremeResult extreme;
    std::vector<TradeOff> sufficient;
    std::uint64_t budget = 0;

    [[nodiscard]] const std::vector<ObjectivePoint>& targets() const noexcept { return extreme.images; }
};

/// Smallest budget prepare_instance hands out. The formula collapses to zero
/// when m - n = 1 and stays tiny for m - n = 2.
inline constexpr std::uint64_t kMinimumBudget = 1000;

/// Budget is max(evaluation_budget(|R|, m, n, multiplier), kMinimumBudget).
[[nodiscard]] PreparedInstance prepare_instance(std::string name, WeightedInstance instance,
                                                double budget_multiplier = 3.0);

struct ExperimentConfig {
    std::vector<Algorithm> algorithms{Algorithm::Moead, Algorithm::Gsemo};
    std::size_t repetitions = 10;
    std::uint64_t seed_base = 0;
    /// MOEA/D neighborhood size; unset means N = |Λ|.
    std::optional<std::size_t> neighborhood;
    /// Worker threads for independent trials.
    std::size_t jobs = 1;
    bool check_invariants = false;
};

/// Seed of trial `index`: seed_base XOR index.
[[nodiscard]] std::uint64_t trial_seed(std::uint64_t seed_base, std::size_t index) noexcept;

struct TrialRecord {
    std::size_t index = 0;
    std::uint64_t seed = 0;
    RunResult result;
    CoverRate cover;
    std::optional<double> igd;
};

struct ExperimentRow {
    std::string instance;
    Algorithm algorithm = Algorithm::Moead;
    std::size_t m = 0;
    std::size_t n = 0;
    std::size_t targets = 0;
    std::uint64_t budget = 0;
    std::size_t successes = 0;
    std::size_t repetitions = 0;
    std::uint64_t seed_base = 0;
    Summary cover;
    std::optional<Summary> igd;
    /// Hitting time divided by budget, over successful runs only.
    std::optional<Summary> time_ratio;
    std::vector<TrialRecord> trials;
};

/// Runs every configured algorithm on every instance. Rows come out in
/// (instance, algorithm) order and do not depend on `jobs`. Throws
/// std::logic_error if a run reports IGD+ = 0 without full cover or the
/// reverse.
[[nodiscard]] std::vector<ExperimentRow> run_experiment(const std::vector<PreparedInstance>& instances,
                                                        const ExperimentConfig& config);

[[nodiscard]] std::string format_table(const std::vector<ExperimentRow>& rows);
[[nodiscard]] std::string format_csv(const std::vector<ExperimentRow>& rows);

}  // namespace momwb
