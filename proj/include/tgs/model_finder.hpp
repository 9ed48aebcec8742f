#pragma once

#include "tgs/axioms.hpp"
#include "tgs/system.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace tgs {

// Parameters for table search. Budget counts cell-assignment attempts;
// seed only matters for sampling.
struct search_spec {
    std::uint32_t states = 1;
    std::uint32_t mediators = 1;
    std::uint64_t budget = 100'000'000;
    std::uint64_t seed = 0;
};

// Tracks a partially assigned operation table and reports, after each
// assignment, an axiom instance that is fully evaluable and violated.
// Pruning on such instances is admissible: every completion of the table
// keeps the violation. Instances whose outer application only becomes
// evaluable through later, unrelated assignments are not re-found here;
// complete tables are therefore re-verified by a full sweep before being
// accepted.
class incremental_axiom_checker {
public:
    static constexpr state_id unset = 0xffffffffu;

    incremental_axiom_checker(std::uint32_t states, std::uint32_t mediators);

    struct violation {
        axiom_id axiom;
        axiom_instance at;
        state_id lhs;
        state_id rhs;
    };

    // Writes value into the cell and checks the affected instances.
    // Returns the first violation found (the cell stays assigned either
    // way; use unassign to take it back).
    std::optional<violation> assign(std::size_t cell, state_id value);
    void unassign(std::size_t cell);

    const std::vector<state_id>& table() const { return table_; }
    std::size_t cell_count() const { return table_.size(); }

private:
    std::optional<state_id> lookup(state_id a, mediator_id x, state_id b, mediator_id y,
                                   state_id c) const;

    std::uint32_t n_;
    std::uint32_t m_;
    std::vector<state_id> table_;
};

// Every table over the given sizes that satisfies the axioms, visited in
// lexicographic cell order. The visitor may return false to stop early.
// Throws budget_error when the node budget runs out first.
void for_each_model(const search_spec& spec, const std::function<bool(const finite_tgs&)>& visit);

std::vector<finite_tgs> enumerate_models(const search_spec& spec);
std::uint64_t count_models(const search_spec& spec);

// First model found by seeded randomized backtracking (restarts with
// fresh value orders until the budget runs out). Deterministic for a
// fixed (seed, budget); nullopt when the budget is exhausted first.
std::optional<finite_tgs> sample_model(const search_spec& spec);

struct search_stats {
    std::uint64_t nodes = 0;
    std::uint64_t prunes = 0;
    std::uint64_t leaves = 0;
    std::uint64_t models = 0;
};

// As for_each_model, with search statistics and an optional observer for
// pruning events (partial table, number of assigned cells, violation).
using prune_observer = std::function<void(const std::vector<state_id>&, std::size_t,
                                          const incremental_axiom_checker::violation&)>;
search_stats for_each_model_traced(const search_spec& spec,
                                   const std::function<bool(const finite_tgs&)>& visit,
                                   const prune_observer& on_prune);

// State and mediator names used for found models: S0..S{n-1}, G0..G{m-1}.
std::vector<std::string> model_state_names(std::uint32_t n);
std::vector<std::string> model_mediator_names(std::uint32_t m);

} // namespace tgs
