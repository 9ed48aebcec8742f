#pragma once

#include <array>
#include <cassert>
#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace tgs {

// Dense handles into a system's carrier and mediator list. Display names
// live in the owning finite_tgs; all algorithms work on the indices.
using state_id = std::uint32_t;
using mediator_id = std::uint32_t;

// One application tuple (left, med1, mid, med2, right) of the 5-ary
// operation, in reading order. Comparison is lexicographic in that order.
struct op_tuple {
    state_id left;
    mediator_id med1;
    state_id mid;
    mediator_id med2;
    state_id right;

    auto operator<=>(const op_tuple&) const = default;
};

// A finite mediated ternary system: a carrier of named states, a list of
// named mediators, and a total 5-ary operation stored as a flat table.
// Immutable after construction; all accessors are pure reads, so shared
// concurrent use is safe.
//
// The table is laid out left-state-major:
//   idx = ((((left*m + med1)*n + mid)*m + med2)*n + right
// with n = state count and m = mediator count. This order is part of the
// on-disk format contract and of every "first counterexample" guarantee,
// so it must not change.
class finite_tgs {
public:
    finite_tgs(std::vector<std::string> states,
               std::vector<std::string> mediators,
               std::vector<state_id> table);

    // Builds the table by evaluating fn on every tuple in flatten order.
    static finite_tgs build(std::vector<std::string> states,
                            std::vector<std::string> mediators,
                            const std::function<state_id(const op_tuple&)>& fn);

    std::uint32_t state_count() const { return n_; }
    std::uint32_t mediator_count() const { return m_; }

    const std::string& state_name(state_id s) const {
        assert(s < n_);
        return states_[s];
    }
    const std::string& mediator_name(mediator_id g) const {
        assert(g < m_);
        return mediators_[g];
    }
    const std::vector<std::string>& state_names() const { return states_; }
    const std::vector<std::string>& mediator_names() const { return mediators_; }

    std::optional<state_id> find_state(std::string_view name) const;
    std::optional<mediator_id> find_mediator(std::string_view name) const;

    bool same_mediators(const finite_tgs& other) const {
        return mediators_ == other.mediators_;
    }

    std::size_t table_size() const { return table_.size(); }
    const std::vector<state_id>& table() const { return table_; }

    std::size_t flat_index(const op_tuple& t) const {
        assert(t.left < n_ && t.mid < n_ && t.right < n_);
        assert(t.med1 < m_ && t.med2 < m_);
        return (((static_cast<std::size_t>(t.left) * m_ + t.med1) * n_ + t.mid) * m_ + t.med2) *
                   n_ +
               t.right;
    }
    static op_tuple unflatten(std::size_t idx, std::uint32_t n, std::uint32_t m);

    // The core operation [left, med1, mid, med2, right] -> state.
    state_id op(state_id a, mediator_id x, state_id b, mediator_id y, state_id c) const {
        return table_[flat_index({a, x, b, y, c})];
    }
    state_id op(const op_tuple& t) const { return table_[flat_index(t)]; }

    bool operator==(const finite_tgs& other) const = default;

private:
    std::uint32_t n_;
    std::uint32_t m_;
    std::vector<std::string> states_;
    std::vector<std::string> mediators_;
    std::vector<state_id> table_;
};

// [OP] evaluate: the typed entry point over a system's operation.
inline state_id evaluate(const finite_tgs& sys, state_id a, mediator_id x, state_id b, mediator_id y, state_id c) {
    return sys.op(a, x, b, y, c);
}

// A finite expression tree over one system: either a single state or an
// application node with three subterms and two mediators. Move-only.
class term {
public:
    /*implicit*/ term(state_id leaf);
    term(term left, mediator_id med1, term mid, mediator_id med2, term right);

    term(term&&) noexcept;
    term& operator=(term&&) noexcept;
    ~term();

    bool is_leaf() const;
    state_id leaf_value() const;

    const term& left() const;
    const term& mid() const;
    const term& right() const;
    mediator_id med1() const;
    mediator_id med2() const;

private:
    struct apply_node;
    std::variant<state_id, std::unique_ptr<apply_node>> node_;
};

// [OP] evaluate_term: bottom-up evaluation; a leaf is its own value.
state_id evaluate_term(const finite_tgs& sys, const term& t);

} // namespace tgs
