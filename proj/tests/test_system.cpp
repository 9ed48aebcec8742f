#include "tgs/system.hpp"

#include "tgs/fixtures.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>

using namespace tgs;
using fixtures::constant_model;
using fixtures::modular_product_model;
using fixtures::projection_model;
using fixtures::projection_slot;

TEST_CASE("evaluate on the projection and constant models") {
    const auto left = projection_model(5, 3, projection_slot::left);
    CHECK(evaluate(left, 2, 1, 4, 0, 3) == 2);
    CHECK(evaluate(left, 0, 2, 1, 2, 4) == 0);

    const auto constant = constant_model(4, 2, 3);
    CHECK(evaluate(constant, 0, 0, 0, 0, 0) == 3);
    CHECK(evaluate(constant, 1, 1, 2, 0, 3) == 3);
}

TEST_CASE("evaluate on the mod-6 product model") {
    const auto z6 = modular_product_model(6);
    // 2*3*1*1*1 = 6 = 0 (mod 6)
    CHECK(evaluate(z6, 2, 3, 1, 1, 1) == 0);
    CHECK(evaluate(z6, 1, 1, 1, 1, 1) == 1);
    CHECK(evaluate(z6, 5, 5, 5, 5, 5) == 5); // 5^5 = 3125 = 5 (mod 6)
}

TEST_CASE("evaluate is total: every flat index maps to a valid state") {
    const auto z6 = modular_product_model(6);
    for (std::size_t idx = 0; idx < z6.table_size(); ++idx) {
        const op_tuple t = finite_tgs::unflatten(idx, z6.state_count(), z6.mediator_count());
        CHECK(z6.op(t) < z6.state_count());
    }
}

TEST_CASE("flatten order round-trips for all tuples") {
    const auto sys = projection_model(3, 2, projection_slot::right);
    for (std::size_t idx = 0; idx < sys.table_size(); ++idx) {
        const op_tuple t = finite_tgs::unflatten(idx, sys.state_count(), sys.mediator_count());
        CHECK(sys.flat_index(t) == idx);
    }
}

TEST_CASE("construction validates names and table") {
    CHECK_THROWS_AS(finite_tgs({}, {"G0"}, {}), std::invalid_argument);
    CHECK_THROWS_AS(finite_tgs({"S0"}, {}, {}), std::invalid_argument);
    CHECK_THROWS_AS(finite_tgs({"S0", "S0"}, {"G0"}, {0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(finite_tgs({"a b"}, {"G0"}, {0}), std::invalid_argument);
    CHECK_THROWS_AS(finite_tgs({"S0"}, {"G0"}, {}), std::invalid_argument);
    CHECK_THROWS_AS(finite_tgs({"S0"}, {"G0"}, {1}), std::invalid_argument);
    CHECK_NOTHROW(finite_tgs({"S0"}, {"G0"}, {0}));
}

TEST_CASE("evaluate_term: leaves and single applications") {
    const auto z6 = modular_product_model(6);
    CHECK(evaluate_term(z6, term(4)) == 4);

    // [[1,2,1,1,1],1,1,1,3]: inner product is 2, then 2*1*1*1*3 = 6 = 0.
    term nested(term(term(1), 2, term(1), 1, term(1)), 1, term(1), 1, term(3));
    CHECK(evaluate_term(z6, nested) == 0);
}

TEST_CASE("evaluate_term on depth-1 terms equals evaluate") {
    const auto sys = modular_product_model(5);
    std::mt19937 rng(20240817);
    for (int i = 0; i < 200; ++i) {
        const state_id a = rng() % 5, b = rng() % 5, c = rng() % 5;
        const mediator_id x = rng() % 5, y = rng() % 5;
        term t(term(a), x, term(b), y, term(c));
        CHECK(evaluate_term(sys, t) == evaluate(sys, a, x, b, y, c));
    }
}

namespace {

// Random term over a system; returns the term and its leftmost leaf.
term random_term(std::mt19937& rng, std::uint32_t n, std::uint32_t m, int depth,
                 state_id& leftmost) {
    if (depth == 0 || rng() % 3 == 0) {
        const state_id leaf = rng() % n;
        leftmost = leaf;
        return term(leaf);
    }
    state_id ll = 0, dummy = 0;
    term left = random_term(rng, n, m, depth - 1, ll);
    term mid = random_term(rng, n, m, depth - 1, dummy);
    term right = random_term(rng, n, m, depth - 1, dummy);
    leftmost = ll;
    return term(std::move(left), rng() % m, std::move(mid), rng() % m, std::move(right));
}

} // namespace

TEST_CASE("left projection evaluates any term to its leftmost leaf") {
    const auto sys = projection_model(4, 2, projection_slot::left);
    std::mt19937 rng(7);
    for (int i = 0; i < 100; ++i) {
        state_id leftmost = 0;
        term t = random_term(rng, 4, 2, 3, leftmost);
        CHECK(evaluate_term(sys, t) == leftmost);
    }
}
