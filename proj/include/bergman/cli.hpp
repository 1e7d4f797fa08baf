#pragma once

#include <ostream>
#include <string>

#include "bergman/quadrature.hpp"

namespace bergman {

// Entry point of the `bergman` tool. Data goes to `out` (or --out), warnings and
// diagnostics to `err`. Returns 0 on success, 1 when `verify` finds a failing
// identity, 2 on invalid input.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// "one", "power:s" or "gaussian:a[:s]" (exp(-a t) (1-t)^s). The class defaults to
// L1 when s > d, L2 when s > d/2, bounded otherwise.
RadialProfile parse_radial_profile(const std::string& spec, int d);

} // namespace bergman
