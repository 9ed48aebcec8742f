#include "tgs/ideals.hpp"

#include "tgs/errors.hpp"

#include <stdexcept>
#include <string>

namespace tgs {

const char* ideal_kind_name(ideal_kind kind) {
    switch (kind) {
        case ideal_kind::reaction_closed: return "reaction-closed";
        case ideal_kind::chemical: return "chemical";
        case ideal_kind::left_gamma: return "left";
        case ideal_kind::right_gamma: return "right";
        case ideal_kind::middle_gamma: return "middle";
        case ideal_kind::two_sided_gamma: return "two-sided";
    }
    return "?";
}

std::optional<ideal_kind> ideal_kind_from_name(std::string_view name) {
    if (name == "reaction-closed") return ideal_kind::reaction_closed;
    if (name == "chemical") return ideal_kind::chemical;
    if (name == "left") return ideal_kind::left_gamma;
    if (name == "right") return ideal_kind::right_gamma;
    if (name == "middle") return ideal_kind::middle_gamma;
    if (name == "two-sided") return ideal_kind::two_sided_gamma;
    return std::nullopt;
}

namespace {

void require_usable(const finite_tgs& sys, const state_subset& set, const char* who) {
    if (set.universe() != sys.state_count())
        throw precondition_error(std::string(who) + ": subset universe size " +
                                 std::to_string(set.universe()) + " does not match carrier size " +
                                 std::to_string(sys.state_count()));
    if (set.empty())
        throw precondition_error(std::string(who) + ": subset must be nonempty");
}

// Which of the three state slots are constrained to the set's members.
struct slot_pattern {
    bool left, mid, right;
};

// Sweeps every application whose constrained slots lie in the set, in
// lexicographic reading order, and reports the first result that escapes.
predicate_result absorption_check(const finite_tgs& sys, const state_subset& set, slot_pattern p) {
    const std::uint32_t n = sys.state_count();
    const std::uint32_t m = sys.mediator_count();
    const auto in = [&](bool constrained, state_id s) { return !constrained || set.contains(s); };
    for (state_id a = 0; a < n; ++a) {
        if (!in(p.left, a))
            continue;
        for (mediator_id x = 0; x < m; ++x)
            for (state_id b = 0; b < n; ++b) {
                if (!in(p.mid, b))
                    continue;
                for (mediator_id y = 0; y < m; ++y)
                    for (state_id c = 0; c < n; ++c) {
                        if (!in(p.right, c))
                            continue;
                        const state_id r = sys.op(a, x, b, y, c);
                        if (!set.contains(r))
                            return {false, closure_violation{{a, x, b, y, c}, r}, std::nullopt};
                    }
            }
    }
    return {};
}

slot_pattern pattern_for(ideal_kind kind) {
    switch (kind) {
        case ideal_kind::reaction_closed: return {true, true, true};
        case ideal_kind::chemical: return {true, false, true};
        case ideal_kind::left_gamma: return {true, false, false};
        case ideal_kind::middle_gamma: return {false, true, false};
        case ideal_kind::right_gamma: return {false, false, true};
        case ideal_kind::two_sided_gamma: break;
    }
    throw std::invalid_argument("no single slot pattern for two-sided kind");
}

} // namespace

predicate_result is_reaction_closed(const finite_tgs& sys, const state_subset& set) {
    require_usable(sys, set, "is_reaction_closed");
    return absorption_check(sys, set, pattern_for(ideal_kind::reaction_closed));
}

predicate_result is_chemical_ideal(const finite_tgs& sys, const state_subset& set) {
    require_usable(sys, set, "is_chemical_ideal");
    return absorption_check(sys, set, pattern_for(ideal_kind::chemical));
}

predicate_result is_gamma_ideal(const finite_tgs& sys, const state_subset& set, ideal_kind kind) {
    require_usable(sys, set, "is_gamma_ideal");
    switch (kind) {
        case ideal_kind::left_gamma:
        case ideal_kind::middle_gamma:
        case ideal_kind::right_gamma: {
            auto r = absorption_check(sys, set, pattern_for(kind));
            if (!r.holds)
                r.failed_part = kind;
            return r;
        }
        case ideal_kind::two_sided_gamma: {
            for (ideal_kind part :
                 {ideal_kind::left_gamma, ideal_kind::right_gamma, ideal_kind::middle_gamma}) {
                auto r = absorption_check(sys, set, pattern_for(part));
                if (!r.holds) {
                    r.failed_part = part;
                    return r;
                }
            }
            return {};
        }
        default:
            throw std::invalid_argument("is_gamma_ideal: kind must be a gamma-ideal kind");
    }
}

predicate_result check_kind(const finite_tgs& sys, const state_subset& set, ideal_kind kind) {
    switch (kind) {
        case ideal_kind::reaction_closed: return is_reaction_closed(sys, set);
        case ideal_kind::chemical: return is_chemical_ideal(sys, set);
        default: return is_gamma_ideal(sys, set, kind);
    }
}

namespace {

// One fixpoint round: insert the result of every application the kind's
// law requires to stay inside. Returns whether anything was added.
bool closure_round(const finite_tgs& sys, state_subset& set, slot_pattern p) {
    const std::uint32_t n = sys.state_count();
    const std::uint32_t m = sys.mediator_count();
    const auto in = [&](bool constrained, state_id s) { return !constrained || set.contains(s); };
    bool grew = false;
    for (state_id a = 0; a < n; ++a) {
        if (!in(p.left, a))
            continue;
        for (mediator_id x = 0; x < m; ++x)
            for (state_id b = 0; b < n; ++b) {
                if (!in(p.mid, b))
                    continue;
                for (mediator_id y = 0; y < m; ++y)
                    for (state_id c = 0; c < n; ++c) {
                        if (!in(p.right, c))
                            continue;
                        const state_id r = sys.op(a, x, b, y, c);
                        if (!set.contains(r)) {
                            set.insert(r);
                            grew = true;
                        }
                    }
            }
    }
    return grew;
}

} // namespace

state_subset generate_ideal(const finite_tgs& sys, const state_subset& seed, ideal_kind kind) {
    require_usable(sys, seed, "generate_ideal");
    state_subset set = seed;
    bool grew = true;
    while (grew) {
        grew = false;
        if (kind == ideal_kind::two_sided_gamma) {
            for (ideal_kind part :
                 {ideal_kind::left_gamma, ideal_kind::right_gamma, ideal_kind::middle_gamma})
                grew |= closure_round(sys, set, pattern_for(part));
        } else {
            grew = closure_round(sys, set, pattern_for(kind));
        }
    }
    return set;
}

std::vector<state_subset> enumerate_ideals(const finite_tgs& sys, ideal_kind kind,
                                           std::uint32_t max_states) {
    const std::uint32_t n = sys.state_count();
    if (n > max_states)
        throw size_error("enumerate_ideals: carrier has " + std::to_string(n) +
                         " states, above the enumeration bound of " + std::to_string(max_states) +
                         " (use generate_ideal for specific seeds instead)");
    std::vector<state_subset> out;
    // Counting k upward with state 0 as the most significant bit yields
    // lexicographic order of the membership vector.
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t k = 1; k < limit; ++k) {
        state_subset set(n);
        for (state_id i = 0; i < n; ++i)
            if ((k >> (n - 1 - i)) & 1u)
                set.insert(i);
        if (check_kind(sys, set, kind).holds)
            out.push_back(std::move(set));
    }
    return out;
}

prime_result is_prime(const finite_tgs& sys, const state_subset& set) {
    require_usable(sys, set, "is_prime");
    prime_result res;
    auto ideal = is_chemical_ideal(sys, set);
    if (!ideal.holds) {
        res.failure = prime_failure::not_chemical_ideal;
        res.ideal_violation = ideal.witness;
        return res;
    }
    if (set.count() == sys.state_count()) {
        res.failure = prime_failure::not_proper;
        return res;
    }
    const std::uint32_t n = sys.state_count();
    const std::uint32_t m = sys.mediator_count();
    for (state_id a = 0; a < n; ++a)
        for (mediator_id x = 0; x < m; ++x)
            for (state_id b = 0; b < n; ++b)
                for (mediator_id y = 0; y < m; ++y)
                    for (state_id c = 0; c < n; ++c) {
                        const state_id r = sys.op(a, x, b, y, c);
                        if (set.contains(r) && !set.contains(a) && !set.contains(b) &&
                            !set.contains(c)) {
                            res.failure = prime_failure::implication_fails;
                            res.implication_witness = closure_violation{{a, x, b, y, c}, r};
                            return res;
                        }
                    }
    res.prime = true;
    return res;
}

semiprime_result is_semiprime(const finite_tgs& sys, const state_subset& set) {
    require_usable(sys, set, "is_semiprime");
    auto ideal = is_chemical_ideal(sys, set);
    if (!ideal.holds) {
        const auto& w = *ideal.witness;
        throw predicate_error(
            "is_semiprime: set is not a chemical ideal; absorption fails at (" +
            sys.state_name(w.at.left) + "," + sys.mediator_name(w.at.med1) + "," +
            sys.state_name(w.at.mid) + "," + sys.mediator_name(w.at.med2) + "," +
            sys.state_name(w.at.right) + ") -> " + sys.state_name(w.result));
    }
    const std::uint32_t n = sys.state_count();
    const std::uint32_t m = sys.mediator_count();
    for (state_id a = 0; a < n; ++a) {
        if (set.contains(a))
            continue;
        bool all_inside = true;
        for (mediator_id x = 0; x < m && all_inside; ++x)
            for (mediator_id y = 0; y < m && all_inside; ++y)
                if (!set.contains(sys.op(a, x, a, y, a)))
                    all_inside = false;
        if (all_inside)
            return {false, a};
    }
    return {};
}

} // namespace tgs
