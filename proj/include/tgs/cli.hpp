#pragma once

namespace tgs {

// Entry point behind the command-line tool. Exit codes: 0 for a passing
// verdict or completed query, 1 for a failing verdict (axiom violation,
// absent pathway, non-homomorphism, non-prime set) or an exhausted search
// budget, 2 for usage and parse errors.
int cli_main(int argc, const char* const* argv);

} // namespace tgs
