#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tgs {

// Base class for all data- and usage-level failures raised by the library.
// Programming bugs (out-of-range dense indices handed to evaluate and
// friends) are asserts, not exceptions.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// A precondition stated by an operation does not hold for the given data
// (e.g. an empty subset handed to an ideal predicate).
class precondition_error : public error {
public:
    using error::error;
};

// An operation whose contract requires another predicate to hold first was
// called on data that fails that predicate (e.g. semiprimeness of a set
// that is not a chemical ideal).
class predicate_error : public error {
public:
    using error::error;
};

// Two systems that must agree structurally do not (mediator lists differ).
class structure_error : public error {
public:
    using error::error;
};

// A request exceeds a configured size bound (subset enumeration on a
// carrier that is too large, homomorphism search past its node budget).
class size_error : public error {
public:
    using error::error;
};

// A search ran out of node budget before finishing; carries progress.
class budget_error : public error {
public:
    budget_error(const std::string& what, std::uint64_t nodes_visited, std::uint64_t models_found)
        : error(what), nodes_visited(nodes_visited), models_found(models_found) {}

    std::uint64_t nodes_visited;
    std::uint64_t models_found;
};

enum class parse_error_kind {
    bad_version,
    malformed,
    unknown_name,
    duplicate_tuple,
    missing_tuple,
};

// A text document failed to parse; carries the 1-based physical line the
// failure was detected on (0 when no single line is at fault, e.g. a
// truncated document).
class parse_error : public error {
public:
    parse_error(parse_error_kind kind, std::size_t line, const std::string& what)
        : error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
          kind(kind),
          line(line) {}

    parse_error_kind kind;
    std::size_t line;
};

} // namespace tgs
