#include "tgs/system.hpp"

#include <stdexcept>
#include <unordered_set>

namespace tgs {

namespace {

void validate_names(const std::vector<std::string>& names, const char* what) {
    if (names.empty())
        throw std::invalid_argument(std::string(what) + " list must be nonempty");
    std::unordered_set<std::string_view> seen;
    for (const auto& name : names) {
        if (name.empty())
            throw std::invalid_argument(std::string(what) + " name must be nonempty");
        if (name == "->")
            throw std::invalid_argument(std::string(what) + " name '->' is reserved");
        for (char ch : name)
            if (ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n' || ch == '#')
                throw std::invalid_argument(std::string(what) + " name '" + name +
                                            "' contains whitespace or '#'");
        if (!seen.insert(name).second)
            throw std::invalid_argument(std::string(what) + " name '" + name + "' is duplicated");
    }
}

} // namespace

finite_tgs::finite_tgs(std::vector<std::string> states,
                       std::vector<std::string> mediators,
                       std::vector<state_id> table)
    : n_(static_cast<std::uint32_t>(states.size())),
      m_(static_cast<std::uint32_t>(mediators.size())),
      states_(std::move(states)),
      mediators_(std::move(mediators)),
      table_(std::move(table)) {
    validate_names(states_, "state");
    validate_names(mediators_, "mediator");
    const std::size_t want =
        static_cast<std::size_t>(n_) * n_ * n_ * m_ * m_;
    if (table_.size() != want)
        throw std::invalid_argument("operation table has " + std::to_string(table_.size()) +
                                    " entries, expected " + std::to_string(want));
    for (state_id v : table_)
        if (v >= n_)
            throw std::invalid_argument("operation table entry " + std::to_string(v) +
                                        " is not a valid state index");
}

finite_tgs finite_tgs::build(std::vector<std::string> states,
                             std::vector<std::string> mediators,
                             const std::function<state_id(const op_tuple&)>& fn) {
    const auto n = static_cast<std::uint32_t>(states.size());
    const auto m = static_cast<std::uint32_t>(mediators.size());
    std::vector<state_id> table;
    table.reserve(static_cast<std::size_t>(n) * n * n * m * m);
    for (state_id a = 0; a < n; ++a)
        for (mediator_id x = 0; x < m; ++x)
            for (state_id b = 0; b < n; ++b)
                for (mediator_id y = 0; y < m; ++y)
                    for (state_id c = 0; c < n; ++c)
                        table.push_back(fn({a, x, b, y, c}));
    return finite_tgs(std::move(states), std::move(mediators), std::move(table));
}

std::optional<state_id> finite_tgs::find_state(std::string_view name) const {
    for (state_id i = 0; i < n_; ++i)
        if (states_[i] == name)
            return i;
    return std::nullopt;
}

std::optional<mediator_id> finite_tgs::find_mediator(std::string_view name) const {
    for (mediator_id i = 0; i < m_; ++i)
        if (mediators_[i] == name)
            return i;
    return std::nullopt;
}

op_tuple finite_tgs::unflatten(std::size_t idx, std::uint32_t n, std::uint32_t m) {
    op_tuple t{};
    t.right = static_cast<state_id>(idx % n);
    idx /= n;
    t.med2 = static_cast<mediator_id>(idx % m);
    idx /= m;
    t.mid = static_cast<state_id>(idx % n);
    idx /= n;
    t.med1 = static_cast<mediator_id>(idx % m);
    idx /= m;
    t.left = static_cast<state_id>(idx);
    assert(t.left < n);
    return t;
}

struct term::apply_node {
    term left;
    term mid;
    term right;
    mediator_id med1;
    mediator_id med2;
};

term::term(state_id leaf) : node_(leaf) {}

term::term(term left, mediator_id med1, term mid, mediator_id med2, term right)
    : node_(std::make_unique<apply_node>(
          apply_node{std::move(left), std::move(mid), std::move(right), med1, med2})) {}

term::term(term&&) noexcept = default;
term& term::operator=(term&&) noexcept = default;
term::~term() = default;

bool term::is_leaf() const { return std::holds_alternative<state_id>(node_); }
state_id term::leaf_value() const { return std::get<state_id>(node_); }

const term& term::left() const { return std::get<std::unique_ptr<apply_node>>(node_)->left; }
const term& term::mid() const { return std::get<std::unique_ptr<apply_node>>(node_)->mid; }
const term& term::right() const { return std::get<std::unique_ptr<apply_node>>(node_)->right; }
mediator_id term::med1() const { return std::get<std::unique_ptr<apply_node>>(node_)->med1; }
mediator_id term::med2() const { return std::get<std::unique_ptr<apply_node>>(node_)->med2; }

state_id evaluate_term(const finite_tgs& sys, const term& t) {
    if (t.is_leaf())
        return t.leaf_value();
    return sys.op(evaluate_term(sys, t.left()), t.med1(),
                  evaluate_term(sys, t.mid()), t.med2(),
                  evaluate_term(sys, t.right()));
}

} // namespace tgs
