#include "tgs/model_finder.hpp"

#include "tgs/errors.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

namespace tgs {

std::vector<std::string> model_state_names(std::uint32_t n) {
    std::vector<std::string> names;
    names.reserve(n);
    for (std::uint32_t i = 0; i < n; ++i)
        names.push_back("S" + std::to_string(i));
    return names;
}

std::vector<std::string> model_mediator_names(std::uint32_t m) {
    std::vector<std::string> names;
    names.reserve(m);
    for (std::uint32_t i = 0; i < m; ++i)
        names.push_back("G" + std::to_string(i));
    return names;
}

incremental_axiom_checker::incremental_axiom_checker(std::uint32_t states, std::uint32_t mediators)
    : n_(states), m_(mediators),
      table_(static_cast<std::size_t>(states) * states * states * mediators * mediators, unset) {
    if (states < 1 || mediators < 1)
        throw std::invalid_argument("incremental_axiom_checker: sizes must be at least 1");
}

std::optional<state_id> incremental_axiom_checker::lookup(state_id a, mediator_id x, state_id b,
                                                          mediator_id y, state_id c) const {
    const std::size_t idx =
        (((static_cast<std::size_t>(a) * m_ + x) * n_ + b) * m_ + y) * n_ + c;
    const state_id v = table_[idx];
    if (v == unset)
        return std::nullopt;
    return v;
}

std::optional<incremental_axiom_checker::violation>
incremental_axiom_checker::assign(std::size_t cell, state_id value) {
    table_[cell] = value;
    const op_tuple t = finite_tgs::unflatten(cell, n_, m_);

    // Evaluates both sides of an instance; inconclusive (nullopt) while
    // any referenced cell is unassigned.
    const auto try_instance = [&](axiom_id id,
                                  const axiom_instance& inst) -> std::optional<violation> {
        const auto& s = inst.state;
        const auto& g = inst.med;
        const auto left_nest = lookup(s[0], g[0], s[1], g[1], s[2]);
        if (!left_nest)
            return std::nullopt;
        const auto rhs = lookup(*left_nest, g[2], s[3], g[3], s[4]);
        if (!rhs)
            return std::nullopt;
        std::optional<state_id> lhs;
        if (id == axiom_id::t1) {
            const auto mid_nest = lookup(s[1], g[1], s[2], g[2], s[3]);
            if (!mid_nest)
                return std::nullopt;
            lhs = lookup(s[0], g[0], *mid_nest, g[3], s[4]);
        } else {
            const auto right_nest = lookup(s[2], g[2], s[3], g[3], s[4]);
            if (!right_nest)
                return std::nullopt;
            lhs = lookup(s[0], g[0], s[1], g[1], *right_nest);
        }
        if (!lhs)
            return std::nullopt;
        if (*lhs != *rhs)
            return violation{id, inst, *lhs, *rhs};
        return std::nullopt;
    };

    // The assigned cell can be the left-nested inner application of
    // either identity, the middle-nested inner of t1, or the right-nested
    // inner of t3a. Each placement leaves four free coordinates.
    for (state_id a = 0; a < n_; ++a)
        for (mediator_id x = 0; x < m_; ++x)
            for (mediator_id y = 0; y < m_; ++y)
                for (state_id b = 0; b < n_; ++b) {
                    // cell = (state1,med1,state2,med2,state3), free (s0,g0,g3,s4)
                    if (auto v = try_instance(
                            axiom_id::t1,
                            {{a, t.left, t.mid, t.right, b}, {x, t.med1, t.med2, y}}))
                        return v;
                    // cell = (state0,med0,state1,med1,state2), free (g2,s3,g3,s4)
                    if (auto v = try_instance(
                            axiom_id::t1,
                            {{t.left, t.mid, t.right, a, b}, {t.med1, t.med2, x, y}}))
                        return v;
                    if (auto v = try_instance(
                            axiom_id::t3a,
                            {{t.left, t.mid, t.right, a, b}, {t.med1, t.med2, x, y}}))
                        return v;
                    // cell = (state2,med2,state3,med3,state4), free (s0,g0,s1,g1)
                    if (auto v = try_instance(
                            axiom_id::t3a,
                            {{a, b, t.left, t.mid, t.right}, {x, y, t.med1, t.med2}}))
                        return v;
                }
    return std::nullopt;
}

void incremental_axiom_checker::unassign(std::size_t cell) {
    table_[cell] = unset;
}

namespace {

// Value order per cell: identity for enumeration, seeded shuffles for
// sampling.
using value_order_fn = std::function<const std::vector<state_id>&(std::size_t cell)>;

struct table_search {
    const search_spec& spec;
    const std::function<bool(const finite_tgs&)>& visit;
    prune_observer on_prune; // held by value: callers may pass a temporary
    const value_order_fn& order;
    incremental_axiom_checker checker;
    search_stats stats;
    bool stopped = false;

    table_search(const search_spec& spec, const std::function<bool(const finite_tgs&)>& visit,
                 prune_observer on_prune, const value_order_fn& order)
        : spec(spec), visit(visit), on_prune(std::move(on_prune)), order(order),
          checker(spec.states, spec.mediators) {}

    void run(std::size_t cell) {
        if (stopped)
            return;
        if (cell == checker.cell_count()) {
            ++stats.leaves;
            finite_tgs candidate(model_state_names(spec.states),
                                 model_mediator_names(spec.mediators), checker.table());
            // Incremental checks are sound but not complete; the full
            // sweep is what admits a table as a model.
            if (all_hold(check_all(candidate, 0))) {
                ++stats.models;
                if (!visit(candidate))
                    stopped = true;
            }
            return;
        }
        for (state_id v : order(cell)) {
            if (stopped)
                return;
            if (++stats.nodes > spec.budget)
                throw budget_error("model search: node budget of " + std::to_string(spec.budget) +
                                       " exceeded after finding " + std::to_string(stats.models) +
                                       " models",
                                   stats.nodes, stats.models);
            auto viol = checker.assign(cell, v);
            if (viol) {
                ++stats.prunes;
                if (on_prune)
                    on_prune(checker.table(), cell + 1, *viol);
            } else {
                run(cell + 1);
            }
            checker.unassign(cell);
        }
    }
};

void validate_spec(const search_spec& spec) {
    if (spec.states < 1 || spec.mediators < 1)
        throw std::invalid_argument("search_spec: states and mediators must be at least 1");
    if (spec.budget == 0)
        throw std::invalid_argument("search_spec: budget must be positive");
}

} // namespace

search_stats for_each_model_traced(const search_spec& spec,
                                   const std::function<bool(const finite_tgs&)>& visit,
                                   const prune_observer& on_prune) {
    validate_spec(spec);
    std::vector<state_id> ascending(spec.states);
    std::iota(ascending.begin(), ascending.end(), 0);
    const value_order_fn order = [&](std::size_t) -> const std::vector<state_id>& {
        return ascending;
    };
    table_search search(spec, visit, on_prune, order);
    search.run(0);
    return search.stats;
}

void for_each_model(const search_spec& spec, const std::function<bool(const finite_tgs&)>& visit) {
    for_each_model_traced(spec, visit, nullptr);
}

std::vector<finite_tgs> enumerate_models(const search_spec& spec) {
    std::vector<finite_tgs> out;
    for_each_model(spec, [&](const finite_tgs& model) {
        out.push_back(model);
        return true;
    });
    return out;
}

std::uint64_t count_models(const search_spec& spec) {
    std::uint64_t count = 0;
    for_each_model(spec, [&](const finite_tgs&) {
        ++count;
        return true;
    });
    return count;
}

std::optional<finite_tgs> sample_model(const search_spec& spec) {
    validate_spec(spec);
    std::mt19937_64 rng(spec.seed);
    const std::size_t cells = static_cast<std::size_t>(spec.states) * spec.states * spec.states *
                              spec.mediators * spec.mediators;

    std::uint64_t remaining = spec.budget;
    while (remaining > 0) {
        // Fresh value orders per restart; a restart gets a slice of the
        // budget so an unlucky prefix cannot eat all of it.
        std::vector<std::vector<state_id>> orders(cells);
        for (auto& ord : orders) {
            ord.resize(spec.states);
            std::iota(ord.begin(), ord.end(), 0);
            for (std::size_t i = ord.size(); i > 1; --i)
                std::swap(ord[i - 1], ord[rng() % i]);
        }
        const value_order_fn order = [&](std::size_t cell) -> const std::vector<state_id>& {
            return orders[cell];
        };

        search_spec attempt = spec;
        attempt.budget = std::min<std::uint64_t>(remaining,
                                                 std::max<std::uint64_t>(spec.budget / 8 + 1, 1000));

        std::optional<finite_tgs> found;
        const std::function<bool(const finite_tgs&)> take = [&](const finite_tgs& model) {
            found = model;
            return false;
        };
        try {
            table_search search(attempt, take, nullptr, order);
            search.run(0);
            if (found)
                return found;
            // Whole space explored without finding a model.
            return std::nullopt;
        } catch (const budget_error& e) {
            remaining -= std::min<std::uint64_t>(e.nodes_visited, remaining);
        }
    }
    return std::nullopt;
}

} // namespace tgs
