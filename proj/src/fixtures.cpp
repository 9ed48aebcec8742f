#include "tgs/fixtures.hpp"

#include "tgs/model_finder.hpp"

#include <stdexcept>

namespace tgs {
namespace fixtures {

namespace {

std::vector<std::string> numbered(const char* prefix, std::uint32_t count) {
    std::vector<std::string> names;
    names.reserve(count);
    for (std::uint32_t i = 0; i < count; ++i)
        names.push_back(prefix + std::to_string(i));
    return names;
}

// Product of all five arguments mod k, with mediator indices first sent
// through a residue table.
finite_tgs residue_product(std::vector<std::string> states, std::vector<std::string> mediators,
                           std::uint32_t k, const std::vector<std::uint32_t>& mediator_residue) {
    return finite_tgs::build(std::move(states), std::move(mediators), [&](const op_tuple& t) {
        const std::uint64_t p = std::uint64_t{t.left} * mediator_residue[t.med1] % k * t.mid % k *
                                mediator_residue[t.med2] % k * t.right % k;
        return static_cast<state_id>(p);
    });
}

} // namespace

finite_tgs projection_model(std::uint32_t states, std::uint32_t mediators, projection_slot slot) {
    return finite_tgs::build(model_state_names(states), model_mediator_names(mediators),
                             [slot](const op_tuple& t) {
                                 switch (slot) {
                                     case projection_slot::left: return t.left;
                                     case projection_slot::middle: return t.mid;
                                     case projection_slot::right: return t.right;
                                 }
                                 return t.left;
                             });
}

finite_tgs constant_model(std::uint32_t states, std::uint32_t mediators, state_id value) {
    if (value >= states)
        throw std::invalid_argument("constant_model: value must be a state index");
    return finite_tgs::build(model_state_names(states), model_mediator_names(mediators),
                             [value](const op_tuple&) { return value; });
}

finite_tgs modular_product_model(std::uint32_t k) {
    if (k < 1)
        throw std::invalid_argument("modular_product_model: k must be at least 1");
    std::vector<std::uint32_t> identity(k);
    for (std::uint32_t i = 0; i < k; ++i)
        identity[i] = i;
    return residue_product(numbered("S", k), numbered("S", k), k, identity);
}

finite_tgs catalysis_toy() {
    return residue_product(numbered("S", 4), {"uncat", "cat"}, 4, {1, 3});
}

finite_tgs thermo_toy() {
    return residue_product({"solid", "liquid", "gas"}, {"(T1,p1)", "(T2,p2)"}, 3, {1, 2});
}

finite_tgs field_toy() {
    return residue_product(numbered("Q", 4), {"lowfreq", "highfreq"}, 4, {1, 3});
}

} // namespace fixtures
} // namespace tgs
