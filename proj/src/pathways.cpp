#include "tgs/pathways.hpp"

#include "tgs/errors.hpp"
#include "tgs/ideals.hpp"

#include <algorithm>

namespace tgs {

const char* pred_slot_name(pred_slot slot) {
    switch (slot) {
        case pred_slot::left: return "left";
        case pred_slot::middle: return "middle";
        case pred_slot::right: return "right";
    }
    return "?";
}

op_tuple pathway_step::application(state_id prev) const {
    switch (slot) {
        case pred_slot::left: return {prev, med1, companion1, med2, companion2};
        case pred_slot::middle: return {companion1, med1, prev, med2, companion2};
        case pred_slot::right: return {companion1, med1, companion2, med2, prev};
    }
    return {};
}

bool pathway_valid(const finite_tgs& sys, const pathway& p) {
    if (p.steps.empty())
        return false;
    state_id prev = p.source;
    for (const auto& step : p.steps) {
        if (sys.op(step.application(prev)) != step.result)
            return false;
        prev = step.result;
    }
    return prev == p.target;
}

state_subset successors(const finite_tgs& sys, state_id x) {
    const std::uint32_t n = sys.state_count();
    const std::uint32_t m = sys.mediator_count();
    state_subset out(n);
    for (state_id a = 0; a < n; ++a)
        for (mediator_id g1 = 0; g1 < m; ++g1)
            for (state_id b = 0; b < n; ++b)
                for (mediator_id g2 = 0; g2 < m; ++g2) {
                    out.insert(sys.op(x, g1, a, g2, b));
                    out.insert(sys.op(a, g1, x, g2, b));
                    out.insert(sys.op(a, g1, b, g2, x));
                }
    return out;
}

state_subset reachable(const finite_tgs& sys, const state_subset& sources) {
    if (sources.universe() != sys.state_count())
        throw precondition_error("reachable: subset universe does not match carrier size");
    if (sources.empty())
        throw precondition_error("reachable: source set must be nonempty");
    state_subset seen = sources;
    std::vector<state_id> frontier = sources.members();
    while (!frontier.empty()) {
        std::vector<state_id> next;
        for (state_id x : frontier) {
            for (state_id y : successors(sys, x).members())
                if (!seen.contains(y)) {
                    seen.insert(y);
                    next.push_back(y);
                }
        }
        frontier = std::move(next);
    }
    return seen;
}

namespace {

// Visits the candidate steps out of `prev` in the canonical order: slot
// left, then middle, then right; within each slot the application tuple is
// enumerated lexicographically in reading order (the predecessor's slot is
// fixed). Stops early when visit returns false.
template <typename Visit>
void for_each_step(const finite_tgs& sys, state_id prev, Visit&& visit) {
    const std::uint32_t n = sys.state_count();
    const std::uint32_t m = sys.mediator_count();
    for (mediator_id g1 = 0; g1 < m; ++g1)
        for (state_id a = 0; a < n; ++a)
            for (mediator_id g2 = 0; g2 < m; ++g2)
                for (state_id b = 0; b < n; ++b)
                    if (!visit(pathway_step{pred_slot::left, a, b, g1, g2,
                                            sys.op(prev, g1, a, g2, b)}))
                        return;
    for (state_id a = 0; a < n; ++a)
        for (mediator_id g1 = 0; g1 < m; ++g1)
            for (mediator_id g2 = 0; g2 < m; ++g2)
                for (state_id b = 0; b < n; ++b)
                    if (!visit(pathway_step{pred_slot::middle, a, b, g1, g2,
                                            sys.op(a, g1, prev, g2, b)}))
                        return;
    for (state_id a = 0; a < n; ++a)
        for (mediator_id g1 = 0; g1 < m; ++g1)
            for (state_id b = 0; b < n; ++b)
                for (mediator_id g2 = 0; g2 < m; ++g2)
                    if (!visit(pathway_step{pred_slot::right, a, b, g1, g2,
                                            sys.op(a, g1, b, g2, prev)}))
                        return;
}

} // namespace

std::optional<pathway> find_pathway(const finite_tgs& sys, state_id src, state_id tgt,
                                    std::uint32_t max_len) {
    if (max_len == 0)
        throw precondition_error("find_pathway: max_len must be at least 1");
    const std::uint32_t n = sys.state_count();

    // src itself only counts as reached through a step, so it starts
    // unmarked and may be rediscovered by a self-step.
    std::vector<bool> reached(n, false);
    std::vector<state_id> parent(n, 0);
    std::vector<pathway_step> via(n);
    std::vector<state_id> frontier{src};

    for (std::uint32_t layer = 0; layer < max_len && !frontier.empty(); ++layer) {
        std::vector<state_id> next;
        for (state_id prev : frontier) {
            for_each_step(sys, prev, [&](const pathway_step& step) {
                if (!reached[step.result]) {
                    reached[step.result] = true;
                    parent[step.result] = prev;
                    via[step.result] = step;
                    next.push_back(step.result);
                }
                return true;
            });
        }
        if (reached[tgt]) {
            // A parent equal to src can only mean distance 1: re-processing
            // a rediscovered source finds nothing new, so nothing later
            // ever records src as its parent.
            pathway p{src, {}, tgt};
            state_id cur = tgt;
            while (true) {
                p.steps.push_back(via[cur]);
                const state_id back = parent[cur];
                if (back == src)
                    break;
                cur = back;
            }
            std::reverse(p.steps.begin(), p.steps.end());
            return p;
        }
        std::sort(next.begin(), next.end());
        frontier = std::move(next);
    }
    return std::nullopt;
}

trapping_result verify_trapping(const finite_tgs& sys, const state_subset& set) {
    auto gamma = is_gamma_ideal(sys, set, ideal_kind::two_sided_gamma);
    if (!gamma.holds)
        throw predicate_error("verify_trapping: set is not a two-sided gamma-ideal (" +
                              std::string(ideal_kind_name(*gamma.failed_part)) +
                              " absorption fails)");
    for (state_id x : set.members()) {
        state_subset from(sys.state_count());
        from.insert(x);
        const state_subset reach = reachable(sys, from);
        if (!set.includes(reach)) {
            for (state_id e : reach.members())
                if (!set.contains(e))
                    return {false, std::make_pair(x, e)};
        }
    }
    return {};
}

} // namespace tgs
