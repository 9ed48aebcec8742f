#pragma once

#include "tgs/axioms.hpp"
#include "tgs/homomorphism.hpp"
#include "tgs/ideals.hpp"
#include "tgs/pathways.hpp"
#include "tgs/subset.hpp"
#include "tgs/system.hpp"

#include <string>
#include <string_view>

namespace tgs {

// Line-oriented system format, version line "tgs v1":
//
//   tgs v1
//   states: S0 S1
//   mediators: G0
//   op:
//   S0 G0 S0 G0 S0 -> S0
//   ...
//
// '#' starts a comment, blank lines are ignored, tokens are separated by
// whitespace. The op body may list tuples in any order but must cover
// every tuple exactly once. Serialization is canonical: body sorted in
// flatten order, one space between tokens, trailing newline.
finite_tgs parse_tgs(std::string_view text);
std::string serialize_tgs(const finite_tgs& sys);

// Map format: one "name -> name" line per domain state, same comment and
// whitespace rules; every domain state must be assigned exactly once.
state_map parse_state_map(std::string_view text, const finite_tgs& domain,
                          const finite_tgs& codomain);
std::string serialize_state_map(const state_map& map);

// Subsets print as "{S0,S2}" with members in index order.
std::string format_subset(const finite_tgs& sys, const state_subset& set);

// Parses "S0,S2" (comma-separated state names) into a subset.
state_subset parse_subset(const finite_tgs& sys, std::string_view csv);

// Application tuples print as "(S0,G0,S1,G0,S2)".
std::string format_tuple(const finite_tgs& sys, const op_tuple& t);

// Nine-coordinate instances print as "(S0,G0,S0,G0,S0,G0,S1,G0,S0)".
std::string format_instance(const finite_tgs& sys, const axiom_instance& inst);

// DOT digraph of the one-step successor relation restricted to the states
// reachable from `from`.
std::string successor_dot(const finite_tgs& sys, state_id from);

// Canonical text form of an image-preservation counterexample; used for
// golden comparisons. "absent\n" when there is none.
std::string format_image_counterexample(const std::optional<image_counterexample>& ce);

} // namespace tgs
