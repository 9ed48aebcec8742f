#pragma once

#include "tgs/system.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace tgs {

// The identities verified over a system. t1 is the nesting-coherence law
//   [s0,g0,[s1,g1,s2,g2,s3],g3,s4] == [[s0,g0,s1,g1,s2],g2,s3,g3,s4];
// t3a and t3b are the self-distributivity chain split into two pairwise
// equations so that each counterexample pins exactly one of them:
//   t3a: [s0,g0,s1,g1,[s2,g2,s3,g3,s4]] == [[s0,g0,s1,g1,s2],g2,s3,g3,s4]
//   t3b: [[s0,g0,s1,g1,s2],g2,s3,g3,s4] == [s0,g0,[s1,g1,s2,g2,s3],g3,s4]
// t3b is syntactically t1 with the sides swapped; it is still swept
// independently so each report stands on its own.
enum class axiom_id { t1, t3a, t3b };

const char* axiom_name(axiom_id id);

// The nine free coordinates of a doubly nested application, in reading
// order (state[0], med[0], state[1], med[1], ..., state[4]).
struct axiom_instance {
    std::array<state_id, 5> state;
    std::array<mediator_id, 4> med;

    auto operator<=>(const axiom_instance&) const = default;
};

struct axiom_counterexample {
    axiom_instance at;
    state_id lhs;
    state_id rhs;

    auto operator<=>(const axiom_counterexample&) const = default;
};

// Outcome of one exhaustive sweep. holds is exact (the sweep is never cut
// short); counterexamples are the lexicographically first ones, at most
// the caller's cap.
struct axiom_report {
    axiom_id axiom;
    bool holds;
    std::uint64_t violations;
    std::vector<axiom_counterexample> counterexamples;
};

// Both sides of an axiom instance under a given identity; exposed so
// reported counterexamples can be re-evaluated.
std::pair<state_id, state_id> axiom_sides(const finite_tgs& sys, axiom_id id, const axiom_instance& inst);

axiom_report check_t1(const finite_tgs& sys, std::size_t cap);

struct t3_reports {
    axiom_report t3a;
    axiom_report t3b;
};
t3_reports check_t3(const finite_tgs& sys, std::size_t cap);

// All three sweeps, in order {t1, t3a, t3b}.
std::vector<axiom_report> check_all(const finite_tgs& sys, std::size_t cap);

bool all_hold(const std::vector<axiom_report>& reports);

} // namespace tgs
