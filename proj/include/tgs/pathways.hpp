#pragma once

#include "tgs/subset.hpp"
#include "tgs/system.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace tgs {

// Where the previous state sits in the application producing the next one.
enum class pred_slot { left, middle, right };

const char* pred_slot_name(pred_slot slot);

// One mediated step: the predecessor goes into `slot`, the two companion
// states fill the remaining state slots in reading order.
struct pathway_step {
    pred_slot slot;
    state_id companion1;
    state_id companion2;
    mediator_id med1;
    mediator_id med2;
    state_id result;

    // The full application with `prev` placed in this step's slot.
    op_tuple application(state_id prev) const;
};

// A witnessed chain of steps; step k starts from step k-1's result (step 0
// from source) and target is the last result.
struct pathway {
    state_id source;
    std::vector<pathway_step> steps;
    state_id target;
};

// Re-evaluates every step against the table and checks the chaining
// invariants.
bool pathway_valid(const finite_tgs& sys, const pathway& p);

// All states producible from x in one step, with x in any of the three
// slots and companions/mediators ranging freely.
state_subset successors(const finite_tgs& sys, state_id x);

// Least superset of sources closed under successors.
state_subset reachable(const finite_tgs& sys, const state_subset& sources);

// Shortest witnessed pathway from src to tgt in at most max_len steps, or
// nullopt. Deterministic: within a breadth layer, candidate steps are
// tried in ascending (predecessor, slot, application tuple) order and the
// first discovery of each state wins.
std::optional<pathway> find_pathway(const finite_tgs& sys, state_id src, state_id tgt,
                                    std::uint32_t max_len);

struct trapping_result {
    bool holds = true;
    // a member whose reachable set escapes, and the first escaping state
    std::optional<std::pair<state_id, state_id>> witness;
};

// Cross-check of the trapping law: from inside a two-sided gamma-ideal no
// pathway can leave. Requires the set to pass the two-sided check and
// throws predicate_error otherwise. A false result here would mean the
// reachability and ideal machinery disagree.
trapping_result verify_trapping(const finite_tgs& sys, const state_subset& set);

} // namespace tgs
