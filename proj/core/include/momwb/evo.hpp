#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "momwb/scalarize.hpp"
#include "momwb/solution.hpp"

namespace momwb {

using Rng = std::mt19937_64;

/// Uniform integer in [0, bound) from raw generator output (Lemire's
/// multiply-shift with rejection), so sequences do not depend on the
/// standard library's distribution implementations.
[[nodiscard]] std::size_t uniform_index(Rng& rng, std::size_t bound);

/// Each bit set independently with probability 1/2.
[[nodiscard]] Solution random_solution(std::size_t size, Rng& rng);

/// Flips every bit independently with probability 1/m. Flipping nothing is
/// a legal outcome.
[[nodiscard]] Solution standard_bit_mutation(const Solution& x, Rng& rng);

/// An evaluated search point. `fitness` is g(x); `image` is wx.
struct Individual {
    Solution bits;
    ObjectivePoint image;
    ObjectivePoint fitness;
    std::size_t rank = 0;
};

[[nodiscard]] Individual evaluate(const WeightedInstance& instance, Solution x);

/// d_λ f_λ(x) as an exact integer. Values for one λ compare like f_λ.
[[nodiscard]] Int128 scaled_fitness(const WeightedInstance& instance, const TradeOff& lambda,
                                    const Individual& individual);

/// Mutually non-dominated set under weak dominance of `fitness`. A candidate
/// is rejected if any member weakly dominates it (equal fitness included);
/// otherwise members it dominates are evicted and it is appended.
class NondominatedArchive {
public:
    /// Returns true if the candidate entered the archive.
    bool insert(const Individual& candidate);

    [[nodiscard]] const std::vector<Individual>& members() const noexcept { return members_; }
    [[nodiscard]] std::size_t size() const noexcept { return members_.size(); }
    [[nodiscard]] std::vector<ObjectivePoint> fitness_points() const;

private:
    std::vector<Individual> members_;
};

/// For each trade-off, the indices of its N nearest trade-offs by exact
/// Euclidean distance; the trade-off itself always comes first and further
/// ties are broken by index.
[[nodiscard]] std::vector<std::vector<std::size_t>> nearest_neighbors(std::span<const TradeOff> tradeoffs,
                                                                      std::size_t neighborhood);

enum class Termination { AllTargetsHit, BudgetExhausted };

struct RunOptions {
    /// Maximum number of offspring evaluations.
    std::uint64_t budget = 0;
    /// Images whose discovery is tracked; the run stops once all are hit.
    std::vector<ObjectivePoint> targets;
    /// Verify algorithm-state invariants after every generation and throw
    /// std::logic_error on violation.
    bool check_invariants = false;
};

struct RunResult {
    std::uint64_t evaluations_used = 0;
    /// Per target: evaluation count at which it first entered the archive.
    std::vector<std::optional<std::uint64_t>> first_hit;
    std::vector<ObjectivePoint> archive_images;
    std::vector<Solution> archive_solutions;
    Termination reason = Termination::BudgetExhausted;

    [[nodiscard]] bool success() const noexcept { return reason == Termination::AllTargetsHit; }
    [[nodiscard]] std::size_t targets_hit() const noexcept;
    /// Evaluations until the last target was hit, if all were.
    [[nodiscard]] std::optional<std::uint64_t> hitting_time() const;

    friend bool operator==(const RunResult&, const RunResult&) = default;
};

/// State of the decomposition EA: one tie-keeping population per trade-off,
/// neighborhoods, the output archive, and the evaluation counter.
class MoeadState {
public:
    MoeadState(const WeightedInstance& instance, std::vector<TradeOff> tradeoffs, std::size_t neighborhood,
               std::uint64_t seed);

    /// One offspring for subproblem `index`; updates neighbor populations
    /// and the archive. Returns the offspring.
    const Individual& evolve(std::size_t index);

    /// One generation: evolve() for every trade-off in order.
    void step();

    /// Throws std::logic_error if tie-pool purity, archive non-dominance,
    /// archive soundness or per-subproblem elitism is violated.
    void check_invariants() const;

    [[nodiscard]] std::size_t subproblems() const noexcept { return tradeoffs_.size(); }
    [[nodiscard]] const std::vector<TradeOff>& tradeoffs() const noexcept { return tradeoffs_; }
    [[nodiscard]] const std::vector<std::vector<std::size_t>>& neighborhoods() const noexcept { return neighbors_; }
    [[nodiscard]] const std::vector<Individual>& population(std::size_t index) const { return populations_.at(index); }
    /// Common d_λ f_λ value of every member of population `index`.
    [[nodiscard]] Int128 population_fitness(std::size_t index) const { return pool_fitness_.at(index); }
    [[nodiscard]] const NondominatedArchive& archive() const noexcept { return archive_; }
    [[nodiscard]] std::uint64_t evaluations() const noexcept { return evaluations_; }
    /// Whether the most recent offspring was accepted by the archive.
    [[nodiscard]] bool last_entered_archive() const noexcept { return last_entered_archive_; }

private:
    const WeightedInstance* instance_;
    std::vector<TradeOff> tradeoffs_;
    std::vector<std::vector<std::size_t>> neighbors_;
    std::vector<std::vector<Individual>> populations_;
    std::vector<Int128> pool_fitness_;
    mutable std::vector<Int128> best_seen_;
    NondominatedArchive archive_;
    Individual last_;
    std::uint64_t evaluations_ = 0;
    bool last_entered_archive_ = false;
    Rng rng_;
};

/// Runs MOEA/D until every target is in the archive or the budget is spent.
/// Throws std::invalid_argument for an empty trade-off set, N outside
/// [1, |Λ|], or a budget smaller than |Λ|.
[[nodiscard]] RunResult moead_run(const WeightedInstance& instance, std::vector<TradeOff> tradeoffs,
                                  std::size_t neighborhood, const RunOptions& options, std::uint64_t seed);

/// GSEMO with fitness g: a single non-dominated population, uniform parent
/// selection and standard bit mutation.
[[nodiscard]] RunResult gsemo_run(const WeightedInstance& instance, const RunOptions& options, std::uint64_t seed);

/// MOEA/D on a complete trade-off set with all Conv(F) points as targets.
/// Tie retention in each population lets 2-bit moves walk along the faces
/// of Conv(F).
[[nodiscard]] RunResult convf_enumeration_mode(const WeightedInstance& instance,
                                               std::vector<TradeOff> complete_tradeoffs, std::size_t neighborhood,
                                               const RunOptions& options, std::uint64_t seed);

}  // namespace momwb
