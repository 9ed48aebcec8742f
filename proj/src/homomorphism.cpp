#include "tgs/homomorphism.hpp"

#include "tgs/errors.hpp"
#include "tgs/model_finder.hpp"

#include <stdexcept>
#include <string>

namespace tgs {

state_map::state_map(const finite_tgs& domain, const finite_tgs& codomain,
                     std::vector<state_id> mapping)
    : domain_(&domain), codomain_(&codomain), mapping_(std::move(mapping)) {
    if (!domain.same_mediators(codomain))
        throw structure_error("state_map: domain and codomain mediator lists differ");
    if (mapping_.size() != domain.state_count())
        throw structure_error("state_map: mapping has " + std::to_string(mapping_.size()) +
                              " entries, expected " + std::to_string(domain.state_count()));
    for (state_id v : mapping_)
        if (v >= codomain.state_count())
            throw structure_error("state_map: mapping entry " + std::to_string(v) +
                                  " is not a codomain state");
}

bool state_map::surjective() const {
    state_subset hit(codomain_->state_count());
    for (state_id v : mapping_)
        hit.insert(v);
    return hit.count() == codomain_->state_count();
}

state_subset state_map::image_of(const state_subset& set) const {
    assert(set.universe() == domain_->state_count());
    state_subset out(codomain_->state_count());
    for (state_id s : set.members())
        out.insert(mapping_[s]);
    return out;
}

state_map state_map::compose(const state_map& f, const state_map& g) {
    if (&f.codomain() != &g.domain())
        throw structure_error("compose: inner codomain and outer domain must be the same system");
    std::vector<state_id> mapping(f.mapping().size());
    for (std::size_t i = 0; i < mapping.size(); ++i)
        mapping[i] = g(f.mapping()[i]);
    return state_map(f.domain(), g.codomain(), std::move(mapping));
}

hom_result is_homomorphism(const state_map& f) {
    const finite_tgs& dom = f.domain();
    const finite_tgs& cod = f.codomain();
    const std::uint32_t n = dom.state_count();
    const std::uint32_t m = dom.mediator_count();
    for (state_id a = 0; a < n; ++a)
        for (mediator_id x = 0; x < m; ++x)
            for (state_id b = 0; b < n; ++b)
                for (mediator_id y = 0; y < m; ++y)
                    for (state_id c = 0; c < n; ++c) {
                        const state_id mapped = f(dom.op(a, x, b, y, c));
                        const state_id direct = cod.op(f(a), x, f(b), y, f(c));
                        if (mapped != direct)
                            return {false, hom_violation{{a, x, b, y, c}, mapped, direct}};
                    }
    return {};
}

namespace {

// One operation tuple with its domain result, bucketed under the largest
// state index it references so it can be checked as soon as that state is
// assigned.
struct hom_constraint {
    op_tuple at;
    state_id result;
};

struct hom_search {
    const finite_tgs& dom;
    const finite_tgs& cod;
    std::vector<std::vector<hom_constraint>> by_max_state;
    std::vector<state_id> assignment;
    std::vector<state_map> found;
    std::uint64_t budget;
    std::uint64_t nodes = 0;

    hom_search(const finite_tgs& dom, const finite_tgs& cod, std::uint64_t budget)
        : dom(dom), cod(cod), by_max_state(dom.state_count()),
          assignment(dom.state_count(), 0), budget(budget) {
        const std::uint32_t n = dom.state_count();
        const std::uint32_t m = dom.mediator_count();
        for (state_id a = 0; a < n; ++a)
            for (mediator_id x = 0; x < m; ++x)
                for (state_id b = 0; b < n; ++b)
                    for (mediator_id y = 0; y < m; ++y)
                        for (state_id c = 0; c < n; ++c) {
                            const state_id d = dom.op(a, x, b, y, c);
                            const state_id key = std::max(std::max(a, b), std::max(c, d));
                            by_max_state[key].push_back({{a, x, b, y, c}, d});
                        }
    }

    bool consistent_at(state_id k) const {
        for (const auto& cons : by_max_state[k]) {
            const auto& t = cons.at;
            if (cod.op(assignment[t.left], t.med1, assignment[t.mid], t.med2,
                       assignment[t.right]) != assignment[cons.result])
                return false;
        }
        return true;
    }

    void run(state_id k) {
        if (k == dom.state_count()) {
            found.emplace_back(dom, cod, assignment);
            return;
        }
        for (state_id v = 0; v < cod.state_count(); ++v) {
            if (++nodes > budget)
                throw size_error("enumerate_homomorphisms: node budget of " +
                                 std::to_string(budget) + " exceeded");
            assignment[k] = v;
            if (consistent_at(k))
                run(k + 1);
        }
    }
};

} // namespace

std::vector<state_map> enumerate_homomorphisms(const finite_tgs& domain, const finite_tgs& codomain,
                                               std::uint64_t budget) {
    if (!domain.same_mediators(codomain))
        throw structure_error("enumerate_homomorphisms: mediator lists differ");
    hom_search search(domain, codomain, budget);
    search.run(0);
    return std::move(search.found);
}

image_report check_image_preservation(const state_map& f, const state_subset& set, ideal_kind kind) {
    if (set.universe() != f.domain().state_count())
        throw precondition_error("check_image_preservation: set does not fit the domain carrier");
    if (set.empty())
        throw precondition_error("check_image_preservation: set must be nonempty");
    state_subset image = f.image_of(set);
    const bool input_holds = check_kind(f.domain(), set, kind).holds;
    const bool image_holds = check_kind(f.codomain(), image, kind).holds;
    return {input_holds, image_holds, f.surjective(), std::move(image)};
}

namespace {

// All nonempty subsets of an n-state carrier in lexicographic bit-vector
// order (state 0 as the most significant position).
std::vector<state_subset> all_nonempty_subsets(std::uint32_t n) {
    std::vector<state_subset> out;
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t k = 1; k < limit; ++k) {
        state_subset set(n);
        for (state_id i = 0; i < n; ++i)
            if ((k >> (n - 1 - i)) & 1u)
                set.insert(i);
        out.push_back(std::move(set));
    }
    return out;
}

} // namespace

std::optional<image_counterexample> find_image_counterexample(const image_search_bounds& bounds) {
    // Scan order, first hit wins: mediator count ascending, then domain
    // size, then codomain size; within a size pair domain models in finder
    // order, codomain models in finder order, homomorphisms in mapping
    // order, ideals in subset order.
    std::optional<image_counterexample> hit;
    for (std::uint32_t m = 1; m <= bounds.max_mediators && !hit; ++m) {
        for (std::uint32_t n_dom = 1; n_dom <= bounds.max_states && !hit; ++n_dom) {
            const std::vector<finite_tgs> doms = enumerate_models({n_dom, m, bounds.model_budget});
            for (std::uint32_t n_cod = 1; n_cod <= bounds.max_states && !hit; ++n_cod) {
                for (const finite_tgs& dom : doms) {
                    for_each_model({n_cod, m, bounds.model_budget}, [&](const finite_tgs& cod) {
                        for (const state_map& f :
                             enumerate_homomorphisms(dom, cod, bounds.hom_budget)) {
                            if (bounds.surjective_only && !f.surjective())
                                continue;
                            for (const state_subset& ideal : all_nonempty_subsets(n_dom)) {
                                if (!is_chemical_ideal(dom, ideal).holds)
                                    continue;
                                const state_subset image = f.image_of(ideal);
                                auto verdict = is_chemical_ideal(cod, image);
                                if (!verdict.holds) {
                                    hit = image_counterexample{dom, cod, f.mapping(), ideal,
                                                               *verdict.witness};
                                    return false;
                                }
                            }
                        }
                        return true;
                    });
                    if (hit)
                        break;
                }
            }
        }
    }
    return hit;
}

} // namespace tgs
