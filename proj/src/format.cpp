#include "tgs/format.hpp"

#include "tgs/errors.hpp"

#include <sstream>

namespace tgs {

namespace {

struct token_line {
    std::size_t number; // 1-based physical line
    std::vector<std::string> tokens;
};

// Splits into significant lines: comments stripped, blank lines dropped.
std::vector<token_line> tokenize(std::string_view text) {
    std::vector<token_line> lines;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        ++line_no;
        if (const std::size_t hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        token_line tl{line_no, {}};
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
                ++i;
            std::size_t j = i;
            while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r')
                ++j;
            if (j > i)
                tl.tokens.emplace_back(line.substr(i, j - i));
            i = j;
        }
        if (!tl.tokens.empty())
            lines.push_back(std::move(tl));
        if (eol == std::string_view::npos)
            break;
        pos = eol + 1;
    }
    return lines;
}

std::optional<std::uint32_t> find_name(const std::vector<std::string>& names,
                                       const std::string& token) {
    for (std::uint32_t i = 0; i < names.size(); ++i)
        if (names[i] == token)
            return i;
    return std::nullopt;
}

} // namespace

finite_tgs parse_tgs(std::string_view text) {
    const auto lines = tokenize(text);
    if (lines.size() < 4)
        throw parse_error(parse_error_kind::malformed, 0,
                          "document must contain a version line, states, mediators, and an op body");

    const auto& version = lines[0];
    if (version.tokens.size() != 2 || version.tokens[0] != "tgs" || version.tokens[1] != "v1")
        throw parse_error(parse_error_kind::bad_version, version.number,
                          "expected version line 'tgs v1'");

    const auto& states_line = lines[1];
    if (states_line.tokens[0] != "states:")
        throw parse_error(parse_error_kind::malformed, states_line.number,
                          "expected 'states: <name>...'");
    std::vector<std::string> states(states_line.tokens.begin() + 1, states_line.tokens.end());
    if (states.empty())
        throw parse_error(parse_error_kind::malformed, states_line.number,
                          "at least one state is required");

    const auto& mediators_line = lines[2];
    if (mediators_line.tokens[0] != "mediators:")
        throw parse_error(parse_error_kind::malformed, mediators_line.number,
                          "expected 'mediators: <name>...'");
    std::vector<std::string> mediators(mediators_line.tokens.begin() + 1, mediators_line.tokens.end());
    if (mediators.empty())
        throw parse_error(parse_error_kind::malformed, mediators_line.number,
                          "at least one mediator is required");

    for (const auto* list : {&states, &mediators})
        for (std::size_t i = 0; i < list->size(); ++i)
            for (std::size_t j = i + 1; j < list->size(); ++j)
                if ((*list)[i] == (*list)[j])
                    throw parse_error(parse_error_kind::malformed,
                                      list == &states ? states_line.number : mediators_line.number,
                                      "duplicate name '" + (*list)[i] + "'");

    const auto& op_line = lines[3];
    if (op_line.tokens.size() != 1 || op_line.tokens[0] != "op:")
        throw parse_error(parse_error_kind::malformed, op_line.number, "expected 'op:'");

    const auto n = static_cast<std::uint32_t>(states.size());
    const auto m = static_cast<std::uint32_t>(mediators.size());
    const std::size_t cells = static_cast<std::size_t>(n) * n * n * m * m;
    constexpr state_id unset = 0xffffffffu;
    std::vector<state_id> table(cells, unset);

    const auto resolve = [&](const token_line& tl, const std::string& token,
                             const std::vector<std::string>& names, const char* what) {
        auto idx = find_name(names, token);
        if (!idx)
            throw parse_error(parse_error_kind::unknown_name, tl.number,
                              std::string("unknown ") + what + " name '" + token + "'");
        return *idx;
    };

    for (std::size_t li = 4; li < lines.size(); ++li) {
        const auto& tl = lines[li];
        if (tl.tokens.size() != 7 || tl.tokens[5] != "->")
            throw parse_error(parse_error_kind::malformed, tl.number,
                              "expected '<A> <med> <B> <med> <C> -> <D>'");
        op_tuple t{};
        t.left = resolve(tl, tl.tokens[0], states, "state");
        t.med1 = resolve(tl, tl.tokens[1], mediators, "mediator");
        t.mid = resolve(tl, tl.tokens[2], states, "state");
        t.med2 = resolve(tl, tl.tokens[3], mediators, "mediator");
        t.right = resolve(tl, tl.tokens[4], states, "state");
        const state_id result = resolve(tl, tl.tokens[6], states, "state");
        const std::size_t idx =
            (((static_cast<std::size_t>(t.left) * m + t.med1) * n + t.mid) * m + t.med2) * n +
            t.right;
        if (table[idx] != unset)
            throw parse_error(parse_error_kind::duplicate_tuple, tl.number,
                              "tuple (" + tl.tokens[0] + "," + tl.tokens[1] + "," + tl.tokens[2] +
                                  "," + tl.tokens[3] + "," + tl.tokens[4] + ") is already defined");
        table[idx] = result;
    }

    for (std::size_t idx = 0; idx < cells; ++idx)
        if (table[idx] == unset) {
            const op_tuple t = finite_tgs::unflatten(idx, n, m);
            throw parse_error(parse_error_kind::missing_tuple, lines.back().number,
                              "op body ends with no line for (" + states[t.left] + "," +
                                  mediators[t.med1] + "," + states[t.mid] + "," +
                                  mediators[t.med2] + "," + states[t.right] + ")");
        }

    return finite_tgs(std::move(states), std::move(mediators), std::move(table));
}

std::string serialize_tgs(const finite_tgs& sys) {
    std::ostringstream out;
    out << "tgs v1\n";
    out << "states:";
    for (const auto& name : sys.state_names())
        out << ' ' << name;
    out << "\nmediators:";
    for (const auto& name : sys.mediator_names())
        out << ' ' << name;
    out << "\nop:\n";
    for (std::size_t idx = 0; idx < sys.table_size(); ++idx) {
        const op_tuple t = finite_tgs::unflatten(idx, sys.state_count(), sys.mediator_count());
        out << sys.state_name(t.left) << ' ' << sys.mediator_name(t.med1) << ' '
            << sys.state_name(t.mid) << ' ' << sys.mediator_name(t.med2) << ' '
            << sys.state_name(t.right) << " -> " << sys.state_name(sys.table()[idx]) << '\n';
    }
    return out.str();
}

state_map parse_state_map(std::string_view text, const finite_tgs& domain,
                          const finite_tgs& codomain) {
    const auto lines = tokenize(text);
    constexpr state_id unset = 0xffffffffu;
    std::vector<state_id> mapping(domain.state_count(), unset);
    for (const auto& tl : lines) {
        if (tl.tokens.size() != 3 || tl.tokens[1] != "->")
            throw parse_error(parse_error_kind::malformed, tl.number,
                              "expected '<domain state> -> <codomain state>'");
        const auto from = domain.find_state(tl.tokens[0]);
        if (!from)
            throw parse_error(parse_error_kind::unknown_name, tl.number,
                              "unknown domain state '" + tl.tokens[0] + "'");
        const auto to = codomain.find_state(tl.tokens[2]);
        if (!to)
            throw parse_error(parse_error_kind::unknown_name, tl.number,
                              "unknown codomain state '" + tl.tokens[2] + "'");
        if (mapping[*from] != unset)
            throw parse_error(parse_error_kind::duplicate_tuple, tl.number,
                              "state '" + tl.tokens[0] + "' is mapped twice");
        mapping[*from] = *to;
    }
    for (state_id s = 0; s < domain.state_count(); ++s)
        if (mapping[s] == unset)
            throw parse_error(parse_error_kind::missing_tuple, 0,
                              "no mapping for state '" + domain.state_name(s) + "'");
    return state_map(domain, codomain, std::move(mapping));
}

std::string serialize_state_map(const state_map& map) {
    std::ostringstream out;
    for (state_id s = 0; s < map.domain().state_count(); ++s)
        out << map.domain().state_name(s) << " -> " << map.codomain().state_name(map(s)) << '\n';
    return out.str();
}

std::string format_subset(const finite_tgs& sys, const state_subset& set) {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (state_id s : set.members()) {
        if (!first)
            out << ',';
        out << sys.state_name(s);
        first = false;
    }
    out << '}';
    return out.str();
}

state_subset parse_subset(const finite_tgs& sys, std::string_view csv) {
    state_subset set(sys.state_count());
    std::size_t pos = 0;
    while (pos <= csv.size()) {
        std::size_t comma = csv.find(',', pos);
        if (comma == std::string_view::npos)
            comma = csv.size();
        std::string_view name = csv.substr(pos, comma - pos);
        while (!name.empty() && (name.front() == ' ' || name.front() == '\t'))
            name.remove_prefix(1);
        while (!name.empty() && (name.back() == ' ' || name.back() == '\t'))
            name.remove_suffix(1);
        if (name.empty())
            throw parse_error(parse_error_kind::malformed, 0, "empty state name in list");
        const auto s = sys.find_state(name);
        if (!s)
            throw parse_error(parse_error_kind::unknown_name, 0,
                              "unknown state name '" + std::string(name) + "'");
        set.insert(*s);
        if (comma == csv.size())
            break;
        pos = comma + 1;
    }
    return set;
}

std::string format_tuple(const finite_tgs& sys, const op_tuple& t) {
    std::ostringstream out;
    out << '(' << sys.state_name(t.left) << ',' << sys.mediator_name(t.med1) << ','
        << sys.state_name(t.mid) << ',' << sys.mediator_name(t.med2) << ','
        << sys.state_name(t.right) << ')';
    return out.str();
}

std::string format_instance(const finite_tgs& sys, const axiom_instance& inst) {
    std::ostringstream out;
    out << '(' << sys.state_name(inst.state[0]);
    for (std::size_t i = 0; i < 4; ++i)
        out << ',' << sys.mediator_name(inst.med[i]) << ',' << sys.state_name(inst.state[i + 1]);
    out << ')';
    return out.str();
}

namespace {

std::string dot_escape(const std::string& name) {
    std::string out;
    for (char c : name) {
        if (c == '"' || c == '\\')
            out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

} // namespace

std::string successor_dot(const finite_tgs& sys, state_id from) {
    state_subset sources(sys.state_count());
    sources.insert(from);
    const state_subset reach = reachable(sys, sources);
    std::ostringstream out;
    out << "digraph successors {\n";
    for (state_id s : reach.members())
        out << "  \"" << dot_escape(sys.state_name(s)) << "\";\n";
    for (state_id s : reach.members())
        for (state_id t : successors(sys, s).members())
            out << "  \"" << dot_escape(sys.state_name(s)) << "\" -> \""
                << dot_escape(sys.state_name(t)) << "\";\n";
    out << "}\n";
    return out.str();
}

std::string format_image_counterexample(const std::optional<image_counterexample>& ce) {
    if (!ce)
        return "absent\n";
    std::ostringstream out;
    out << "domain:\n" << serialize_tgs(ce->domain);
    out << "codomain:\n" << serialize_tgs(ce->codomain);
    out << "map:\n";
    for (state_id s = 0; s < ce->domain.state_count(); ++s)
        out << ce->domain.state_name(s) << " -> " << ce->codomain.state_name(ce->mapping[s])
            << '\n';
    out << "ideal: " << format_subset(ce->domain, ce->ideal) << '\n';
    out << "image violation: " << format_tuple(ce->codomain, ce->violation.at) << " -> "
        << ce->codomain.state_name(ce->violation.result) << '\n';
    return out.str();
}

} // namespace tgs
