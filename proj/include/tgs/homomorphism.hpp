#pragma once

#include "tgs/ideals.hpp"
#include "tgs/subset.hpp"
#include "tgs/system.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace tgs {

// A total map between the carriers of two systems sharing one mediator
// list (same names, same order). Holds non-owning references to both
// systems; they must outlive the map.
class state_map {
public:
    state_map(const finite_tgs& domain, const finite_tgs& codomain, std::vector<state_id> mapping);

    const finite_tgs& domain() const { return *domain_; }
    const finite_tgs& codomain() const { return *codomain_; }
    const std::vector<state_id>& mapping() const { return mapping_; }

    state_id operator()(state_id s) const {
        assert(s < mapping_.size());
        return mapping_[s];
    }

    bool surjective() const;
    state_subset image_of(const state_subset& set) const;

    // g(f(x)) for f: S -> S', g: S' -> S''.
    static state_map compose(const state_map& f, const state_map& g);

private:
    const finite_tgs* domain_;
    const finite_tgs* codomain_;
    std::vector<state_id> mapping_;
};

struct hom_violation {
    op_tuple at;       // tuple in the domain
    state_id mapped;   // f(result of the domain application)
    state_id direct;   // codomain application of the mapped arguments
};

struct hom_result {
    bool holds = true;
    std::optional<hom_violation> witness;
};

// Does the map commute with the operation on every tuple? The witness is
// the lexicographically first violating tuple.
hom_result is_homomorphism(const state_map& f);

// All homomorphisms domain -> codomain, in lexicographic order of the
// mapping array. Backtracking assigns states in index order and tries
// codomain candidates in index order; each assignment is checked against
// every tuple whose referenced states are all assigned. Throws size_error
// once more than budget prefix nodes have been visited.
std::vector<state_map> enumerate_homomorphisms(const finite_tgs& domain, const finite_tgs& codomain,
                                               std::uint64_t budget = 10'000'000);

// Measures (rather than asserts) how an ideal-kind predicate transports
// along a map: evaluates it on the input set and on its image, and reports
// whether the map is surjective.
struct image_report {
    bool input_kind_holds;
    bool image_kind_holds;
    bool surjective;
    state_subset image;
};

image_report check_image_preservation(const state_map& f, const state_subset& set, ideal_kind kind);

struct image_search_bounds {
    std::uint32_t max_states = 3;
    std::uint32_t max_mediators = 1;
    bool surjective_only = false;
    std::uint64_t model_budget = 100'000'000;
    std::uint64_t hom_budget = 10'000'000;
};

// A homomorphism whose image of a chemical ideal fails the chemical-ideal
// law, together with the failing absorption application in the codomain.
struct image_counterexample {
    finite_tgs domain;
    finite_tgs codomain;
    std::vector<state_id> mapping;
    state_subset ideal;
    closure_violation violation; // in the codomain, against the image
};

// Searches all model pairs within the bounds (sizes ascending, models in
// finder order, homomorphisms and ideals in lexicographic order) for a
// chemical ideal whose image is not one. Absence is a result, not an
// error.
std::optional<image_counterexample> find_image_counterexample(const image_search_bounds& bounds);

} // namespace tgs
