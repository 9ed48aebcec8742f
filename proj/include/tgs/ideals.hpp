#pragma once

#include "tgs/subset.hpp"
#include "tgs/system.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace tgs {

enum class ideal_kind {
    reaction_closed,
    chemical,
    left_gamma,
    right_gamma,
    middle_gamma,
    two_sided_gamma,
};

const char* ideal_kind_name(ideal_kind kind);
std::optional<ideal_kind> ideal_kind_from_name(std::string_view name);

// An application that lands outside the set it was supposed to stay in.
struct closure_violation {
    op_tuple at;
    state_id result;
};

// Verdict of a closure/absorption predicate. On failure, witness is the
// lexicographically first violating application (tuples ordered in reading
// order, with the constrained slots ranging over the set's members in
// ascending index order). For two-sided checks, failed_part names the
// positional law (left, right, or middle, checked in that order) the
// witness violates.
struct predicate_result {
    bool holds = true;
    std::optional<closure_violation> witness;
    std::optional<ideal_kind> failed_part;
};

// Closure of a nonempty subset under internal applications:
// all three state slots range over the subset.
predicate_result is_reaction_closed(const finite_tgs& sys, const state_subset& set);

// Boundary absorption: outer slots range over the subset, the middle slot
// over the whole carrier. This subsumes internal closure, so it alone
// decides chemical-ideal membership.
predicate_result is_chemical_ideal(const finite_tgs& sys, const state_subset& set);

// Positional absorption: a member in the named slot(s), everything else
// free. kind must be one of the four gamma kinds.
predicate_result is_gamma_ideal(const finite_tgs& sys, const state_subset& set, ideal_kind kind);

// Dispatch on any kind tag; used by enumeration and image analysis.
predicate_result check_kind(const finite_tgs& sys, const state_subset& set, ideal_kind kind);

// Least superset of seed satisfying the kind's law, by round-based
// fixpoint: each round inserts every required application result; at most
// |S| rounds are needed.
state_subset generate_ideal(const finite_tgs& sys, const state_subset& seed, ideal_kind kind);

// All nonempty subsets satisfying the kind's law, in lexicographic order
// of the membership bit vector read from state 0 upward. Scans 2^|S|
// subsets, so the carrier must not exceed max_states.
std::vector<state_subset> enumerate_ideals(const finite_tgs& sys, ideal_kind kind,
                                           std::uint32_t max_states = 16);

enum class prime_failure { not_chemical_ideal, not_proper, implication_fails };

// Verdict of the primeness test. The chemical-ideal and properness
// requirements are part of the predicate, so a single result carries the
// whole story: either prime, or the reason with a witness.
struct prime_result {
    bool prime = false;
    std::optional<prime_failure> failure;
    // set when failure == not_chemical_ideal
    std::optional<closure_violation> ideal_violation;
    // set when failure == implication_fails: an application landing in the
    // set with all three state arguments outside it
    std::optional<closure_violation> implication_witness;
};

// A proper chemical ideal is prime when every application landing inside
// it has at least one state argument inside it.
prime_result is_prime(const finite_tgs& sys, const state_subset& set);

struct semiprime_result {
    bool semiprime = true;
    // a state outside the set whose every self-application [a,x,a,y,a]
    // lands inside it
    std::optional<state_id> witness;
};

// Requires set to be a chemical ideal; throws predicate_error naming the
// absorption violation otherwise.
semiprime_result is_semiprime(const finite_tgs& sys, const state_subset& set);

} // namespace tgs
