#pragma once

#include "tgs/system.hpp"

#include <cstdint>

namespace tgs {
namespace fixtures {

enum class projection_slot { left, middle, right };

// Operation returns the state in the chosen slot. Left and right satisfy
// the axioms; middle violates them as soon as there are two states, which
// makes it the standard failing probe.
finite_tgs projection_model(std::uint32_t states, std::uint32_t mediators, projection_slot slot);

// Every application returns the same state.
finite_tgs constant_model(std::uint32_t states, std::uint32_t mediators, state_id value);

// States and mediators are both the residues mod k, and an application
// multiplies all five arguments mod k. The nine-factor products of the
// nested forms coincide, so the axioms hold for every k.
finite_tgs modular_product_model(std::uint32_t k);

// Residues mod 4 with two named mediators acting as the factors 1 (uncat)
// and 3 (cat): the same three states give different products under
// different mediators.
finite_tgs catalysis_toy();

// Residues mod 3 with phase-named states and two condition mediators
// acting as the factors 1 and 2.
finite_tgs thermo_toy();

// Residues mod 4 with two field mediators acting as the factors 1
// (lowfreq) and 3 (highfreq).
finite_tgs field_toy();

} // namespace fixtures
} // namespace tgs
