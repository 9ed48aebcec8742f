#include "tgs/axioms.hpp"

namespace tgs {

const char* axiom_name(axiom_id id) {
    switch (id) {
        case axiom_id::t1: return "T1";
        case axiom_id::t3a: return "T3a";
        case axiom_id::t3b: return "T3b";
    }
    return "?";
}

std::pair<state_id, state_id> axiom_sides(const finite_tgs& sys, axiom_id id, const axiom_instance& inst) {
    const auto& s = inst.state;
    const auto& g = inst.med;
    const state_id left_nest = sys.op(s[0], g[0], s[1], g[1], s[2]);
    const state_id mid_nest = sys.op(s[1], g[1], s[2], g[2], s[3]);
    const state_id right_nest = sys.op(s[2], g[2], s[3], g[3], s[4]);
    const state_id outer_left = sys.op(left_nest, g[2], s[3], g[3], s[4]);
    const state_id outer_mid = sys.op(s[0], g[0], mid_nest, g[3], s[4]);
    const state_id outer_right = sys.op(s[0], g[0], s[1], g[1], right_nest);
    switch (id) {
        case axiom_id::t1: return {outer_mid, outer_left};
        case axiom_id::t3a: return {outer_right, outer_left};
        case axiom_id::t3b: return {outer_left, outer_mid};
    }
    return {0, 0};
}

namespace {

// One exhaustive sweep over all n^5 * m^4 instances, in lexicographic
// order of (state0, med0, state1, med1, state2, med2, state3, med3,
// state4). Shared sub-applications are hoisted to the outermost loop that
// fixes their arguments.
template <axiom_id ID>
axiom_report sweep(const finite_tgs& sys, std::size_t cap) {
    const std::uint32_t n = sys.state_count();
    const std::uint32_t m = sys.mediator_count();
    axiom_report rep{ID, true, 0, {}};

    for (state_id s0 = 0; s0 < n; ++s0)
        for (mediator_id g0 = 0; g0 < m; ++g0)
            for (state_id s1 = 0; s1 < n; ++s1)
                for (mediator_id g1 = 0; g1 < m; ++g1)
                    for (state_id s2 = 0; s2 < n; ++s2) {
                        const state_id left_nest = sys.op(s0, g0, s1, g1, s2);
                        for (mediator_id g2 = 0; g2 < m; ++g2)
                            for (state_id s3 = 0; s3 < n; ++s3) {
                                state_id mid_nest = 0;
                                if constexpr (ID != axiom_id::t3a)
                                    mid_nest = sys.op(s1, g1, s2, g2, s3);
                                for (mediator_id g3 = 0; g3 < m; ++g3)
                                    for (state_id s4 = 0; s4 < n; ++s4) {
                                        state_id lhs, rhs;
                                        if constexpr (ID == axiom_id::t1) {
                                            lhs = sys.op(s0, g0, mid_nest, g3, s4);
                                            rhs = sys.op(left_nest, g2, s3, g3, s4);
                                        } else if constexpr (ID == axiom_id::t3a) {
                                            lhs = sys.op(s0, g0, s1, g1, sys.op(s2, g2, s3, g3, s4));
                                            rhs = sys.op(left_nest, g2, s3, g3, s4);
                                        } else {
                                            lhs = sys.op(left_nest, g2, s3, g3, s4);
                                            rhs = sys.op(s0, g0, mid_nest, g3, s4);
                                        }
                                        if (lhs != rhs) {
                                            rep.holds = false;
                                            ++rep.violations;
                                            if (rep.counterexamples.size() < cap)
                                                rep.counterexamples.push_back(
                                                    {{{s0, s1, s2, s3, s4}, {g0, g1, g2, g3}}, lhs, rhs});
                                        }
                                    }
                            }
                    }
    return rep;
}

} // namespace

axiom_report check_t1(const finite_tgs& sys, std::size_t cap) {
    return sweep<axiom_id::t1>(sys, cap);
}

t3_reports check_t3(const finite_tgs& sys, std::size_t cap) {
    return {sweep<axiom_id::t3a>(sys, cap), sweep<axiom_id::t3b>(sys, cap)};
}

std::vector<axiom_report> check_all(const finite_tgs& sys, std::size_t cap) {
    std::vector<axiom_report> out;
    out.push_back(check_t1(sys, cap));
    auto t3 = check_t3(sys, cap);
    out.push_back(std::move(t3.t3a));
    out.push_back(std::move(t3.t3b));
    return out;
}

bool all_hold(const std::vector<axiom_report>& reports) {
    for (const auto& r : reports)
        if (!r.holds)
            return false;
    return true;
}

} // namespace tgs
