#include "momwb/evo.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace momwb {

namespace {

__extension__ typedef unsigned __int128 UInt128;

class TargetTracker {
public:
    explicit TargetTracker(const std::vector<ObjectivePoint>& targets) : first_hit_(targets.size())
    {
        for (std::size_t i = 0; i < targets.size(); ++i) {
            index_.emplace(targets[i], i);
        }
        remaining_ = index_.size();
        // Duplicate targets share one slot; mark the copies as resolved
        // together with it.
        duplicates_.resize(targets.size());
        for (std::size_t i = 0; i < targets.size(); ++i) {
            duplicates_[index_.at(targets[i])].push_back(i);
        }
    }

    void observe(const ObjectivePoint& image, std::uint64_t evaluation)
    {
        auto it = index_.find(image);
        if (it == index_.end() || first_hit_[it->second]) {
            return;
        }
        for (auto i : duplicates_[it->second]) {
            first_hit_[i] = evaluation;
        }
        --remaining_;
    }

    [[nodiscard]] bool all_hit() const noexcept { return remaining_ == 0; }

    void check_retained(const NondominatedArchive& archive) const
    {
        for (auto const& [image, slot] : index_) {
            if (!first_hit_[slot]) {
                continue;
            }
            bool const present = std::any_of(archive.members().begin(), archive.members().end(),
                                             [&](const Individual& m) { return m.fitness == image; });
            if (!present) {
                throw std::logic_error("target image " + to_string(image) + " left the archive");
            }
        }
    }

    [[nodiscard]] std::vector<std::optional<std::uint64_t>> first_hit() const { return first_hit_; }

private:
    std::map<ObjectivePoint, std::size_t> index_;
    std::vector<std::vector<std::size_t>> duplicates_;
    std::vector<std::optional<std::uint64_t>> first_hit_;
    std::size_t remaining_ = 0;
};

void check_archive(const WeightedInstance& instance, const NondominatedArchive& archive)
{
    auto const& members = archive.members();
    for (std::size_t a = 0; a < members.size(); ++a) {
        if (members[a].fitness != fitness_vector(instance, members[a].bits)) {
            throw std::logic_error("archive member image does not match its witness");
        }
        for (std::size_t b = 0; b < members.size(); ++b) {
            if (a != b && dominates(members[a].fitness, members[b].fitness)) {
                throw std::logic_error("archive members " + to_string(members[a].fitness) + " and " +
                                       to_string(members[b].fitness) + " are comparable");
            }
        }
    }
}

RunResult finish(const NondominatedArchive& archive, const TargetTracker& tracker, std::uint64_t evaluations)
{
    RunResult result;
    result.evaluations_used = evaluations;
    result.first_hit = tracker.first_hit();
    result.reason = tracker.all_hit() ? Termination::AllTargetsHit : Termination::BudgetExhausted;
    for (auto const& m : archive.members()) {
        result.archive_images.push_back(m.fitness);
        result.archive_solutions.push_back(m.bits);
    }
    return result;
}

}  // namespace

std::size_t uniform_index(Rng& rng, std::size_t bound)
{
    if (bound == 0) {
        throw std::invalid_argument("uniform_index: empty range");
    }
    auto const range = static_cast<std::uint64_t>(bound);
    UInt128 product = static_cast<UInt128>(rng()) * range;
    auto low = static_cast<std::uint64_t>(product);
    if (low < range) {
        auto const threshold = (0 - range) % range;
        while (low < threshold) {
            product = static_cast<UInt128>(rng()) * range;
            low = static_cast<std::uint64_t>(product);
        }
    }
    return static_cast<std::size_t>(product >> 64);
}

Solution random_solution(std::size_t size, Rng& rng)
{
    Solution x(size);
    auto words = x.words();
    for (auto& w : words) {
        w = rng();
    }
    if (auto const tail = size % 64; tail != 0 && !words.empty()) {
        words.back() &= (std::uint64_t{1} << tail) - 1;
    }
    return x;
}

Solution standard_bit_mutation(const Solution& x, Rng& rng)
{
    Solution y = x;
    auto const m = x.size();
    if (m == 0) {
        return y;
    }
    if (m == 1) {
        y.flip(0);
        return y;
    }
    // Gaps between flipped positions are geometric with success probability
    // 1/m; sample them by inversion instead of drawing once per bit.
    double const log_keep = std::log1p(-1.0 / static_cast<double>(m));
    std::size_t pos = 0;
    while (true) {
        double const u = static_cast<double>((rng() >> 11) + 1) * 0x1.0p-53;  // (0, 1]
        double const gap = std::floor(std::log(u) / log_keep);
        if (gap >= static_cast<double>(m - pos)) {
            break;
        }
        pos += static_cast<std::size_t>(gap);
        y.flip(pos);
        ++pos;
        if (pos >= m) {
            break;
        }
    }
    return y;
}

Individual evaluate(const WeightedInstance& instance, Solution x)
{
    Individual ind;
    ind.rank = instance.matroid().rank(x);
    ind.image = instance.image(x);
    ind.fitness = ind.image;
    auto const penalty = instance.rank_penalty(ind.rank);
    for (auto& c : ind.fitness) {
        c += penalty;
    }
    ind.bits = std::move(x);
    return ind;
}

Int128 scaled_fitness(const WeightedInstance& instance, const TradeOff& lambda, const Individual& individual)
{
    auto const penalty = static_cast<Int128>(instance.rank_penalty(individual.rank)) * lambda.denominator();
    return penalty + scaled_scalarization(lambda, individual.image);
}

bool NondominatedArchive::insert(const Individual& candidate)
{
    for (auto const& m : members_) {
        if (dominates(m.fitness, candidate.fitness)) {
            return false;
        }
    }
    std::erase_if(members_, [&](const Individual& m) { return dominates(candidate.fitness, m.fitness); });
    members_.push_back(candidate);
    return true;
}

std::vector<ObjectivePoint> NondominatedArchive::fitness_points() const
{
    std::vector<ObjectivePoint> out;
    out.reserve(members_.size());
    for (auto const& m : members_) {
        out.push_back(m.fitness);
    }
    return out;
}

std::vector<std::vector<std::size_t>> nearest_neighbors(std::span<const TradeOff> tradeoffs, std::size_t neighborhood)
{
    using boost::multiprecision::cpp_rational;
    auto const count = tradeoffs.size();
    if (neighborhood < 1 || neighborhood > count) {
        throw std::invalid_argument("neighborhood size must lie in [1, |trade-offs|]");
    }
    std::vector<std::vector<cpp_rational>> coords(count);
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t c = 0; c < tradeoffs[i].dimension(); ++c) {
            coords[i].emplace_back(tradeoffs[i].numerators()[c], tradeoffs[i].denominator());
        }
    }
    std::vector<std::vector<std::size_t>> out(count);
    for (std::size_t i = 0; i < count; ++i) {
        std::vector<cpp_rational> dist(count);
        for (std::size_t j = 0; j < count; ++j) {
            cpp_rational acc = 0;
            for (std::size_t c = 0; c < coords[i].size(); ++c) {
                cpp_rational const d = coords[i][c] - coords[j][c];
                acc += d * d;
            }
            dist[j] = acc;
        }
        std::vector<std::size_t> others;
        for (std::size_t j = 0; j < count; ++j) {
            if (j != i) {
                others.push_back(j);
            }
        }
        std::stable_sort(others.begin(), others.end(),
                         [&](std::size_t a, std::size_t b) { return dist[a] < dist[b]; });
        out[i].push_back(i);
        out[i].insert(out[i].end(), others.begin(), others.begin() + static_cast<std::ptrdiff_t>(neighborhood - 1));
    }
    return out;
}

std::size_t RunResult::targets_hit() const noexcept
{
    return static_cast<std::size_t>(
        std::count_if(first_hit.begin(), first_hit.end(), [](const auto& h) { return h.has_value(); }));
}

std::optional<std::uint64_t> RunResult::hitting_time() const
{
    if (!success()) {
        return std::nullopt;
    }
    std::uint64_t latest = 0;
    for (auto const& h : first_hit) {
        latest = std::max(latest, h.value_or(0));
    }
    return latest;
}

MoeadState::MoeadState(const WeightedInstance& instance, std::vector<TradeOff> tradeoffs, std::size_t neighborhood,
                       std::uint64_t seed)
    : instance_(&instance), tradeoffs_(std::move(tradeoffs)), rng_(seed)
{
    if (tradeoffs_.empty()) {
        throw std::invalid_argument("MOEA/D needs at least one trade-off");
    }
    for (auto const& t : tradeoffs_) {
        if (t.dimension() != instance.objectives()) {
            throw std::invalid_argument("trade-off dimension does not match the number of objectives");
        }
    }
    neighbors_ = nearest_neighbors(tradeoffs_, neighborhood);
    populations_.reserve(tradeoffs_.size());
    for (std::size_t i = 0; i < tradeoffs_.size(); ++i) {
        auto ind = evaluate(instance, random_solution(instance.ground_size(), rng_));
        pool_fitness_.push_back(scaled_fitness(instance, tradeoffs_[i], ind));
        populations_.push_back({std::move(ind)});
    }
    best_seen_ = pool_fitness_;
}

const Individual& MoeadState::evolve(std::size_t index)
{
    auto const& pool = populations_.at(index);
    auto mutated = standard_bit_mutation(pool[uniform_index(rng_, pool.size())].bits, rng_);
    last_ = evaluate(*instance_, std::move(mutated));
    ++evaluations_;
    for (auto l : neighbors_[index]) {
        auto const f = scaled_fitness(*instance_, tradeoffs_[l], last_);
        auto& target = populations_[l];
        if (f < pool_fitness_[l]) {
            target.assign(1, last_);
            pool_fitness_[l] = f;
        } else if (f == pool_fitness_[l]) {
            bool const duplicate = std::any_of(target.begin(), target.end(),
                                               [&](const Individual& z) { return z.fitness == last_.fitness; });
            if (!duplicate) {
                target.push_back(last_);
            }
        }
    }
    last_entered_archive_ = archive_.insert(last_);
    return last_;
}

void MoeadState::step()
{
    for (std::size_t i = 0; i < tradeoffs_.size(); ++i) {
        evolve(i);
    }
}

void MoeadState::check_invariants() const
{
    for (std::size_t l = 0; l < populations_.size(); ++l) {
        auto const& pool = populations_[l];
        if (pool.empty()) {
            throw std::logic_error("population " + std::to_string(l) + " is empty");
        }
        for (std::size_t a = 0; a < pool.size(); ++a) {
            if (scaled_fitness(*instance_, tradeoffs_[l], pool[a]) != pool_fitness_[l]) {
                throw std::logic_error("population " + std::to_string(l) + " mixes scalarized fitness values");
            }
            for (std::size_t b = a + 1; b < pool.size(); ++b) {
                if (pool[a].fitness == pool[b].fitness) {
                    throw std::logic_error("population " + std::to_string(l) + " holds duplicate images");
                }
            }
        }
        if (pool_fitness_[l] > best_seen_[l]) {
            throw std::logic_error("best scalarized fitness of population " + std::to_string(l) + " got worse");
        }
        best_seen_[l] = pool_fitness_[l];
    }
    check_archive(*instance_, archive_);
}

RunResult moead_run(const WeightedInstance& instance, std::vector<TradeOff> tradeoffs, std::size_t neighborhood,
                    const RunOptions& options, std::uint64_t seed)
{
    if (tradeoffs.empty()) {
        throw std::invalid_argument("MOEA/D needs at least one trade-off");
    }
    if (options.budget < tradeoffs.size()) {
        throw std::invalid_argument("evaluation budget is smaller than the number of trade-offs");
    }
    MoeadState state(instance, std::move(tradeoffs), neighborhood, seed);
    TargetTracker tracker(options.targets);
    while (!tracker.all_hit() && state.evaluations() < options.budget) {
        for (std::size_t i = 0; i < state.subproblems() && state.evaluations() < options.budget; ++i) {
            auto const& y = state.evolve(i);
            if (state.last_entered_archive()) {
                tracker.observe(y.fitness, state.evaluations());
                if (tracker.all_hit()) {
                    break;
                }
            }
        }
        if (options.check_invariants) {
            state.check_invariants();
            tracker.check_retained(state.archive());
        }
    }
    return finish(state.archive(), tracker, state.evaluations());
}

RunResult gsemo_run(const WeightedInstance& instance, const RunOptions& options, std::uint64_t seed)
{
    if (options.budget < 1) {
        throw std::invalid_argument("GSEMO needs a positive evaluation budget");
    }
    Rng rng(seed);
    NondominatedArchive population;
    TargetTracker tracker(options.targets);
    auto first = evaluate(instance, random_solution(instance.ground_size(), rng));
    population.insert(first);
    tracker.observe(first.fitness, 0);

    std::uint64_t evaluations = 0;
    while (!tracker.all_hit() && evaluations < options.budget) {
        auto const& members = population.members();
        auto offspring = evaluate(instance, standard_bit_mutation(members[uniform_index(rng, members.size())].bits, rng));
        ++evaluations;
        if (population.insert(offspring)) {
            tracker.observe(offspring.fitness, evaluations);
        }
        if (options.check_invariants && (evaluations % 256 == 0 || tracker.all_hit())) {
            check_archive(instance, population);
            tracker.check_retained(population);
        }
    }
    return finish(population, tracker, evaluations);
}

RunResult convf_enumeration_mode(const WeightedInstance& instance, std::vector<TradeOff> complete_tradeoffs,
                                 std::size_t neighborhood, const RunOptions& options, std::uint64_t seed)
{
    return moead_run(instance, std::move(complete_tradeoffs), neighborhood, options, seed);
}

}  // namespace momwb
