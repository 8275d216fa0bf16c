#pragma once

#include <iosfwd>

namespace xyzlab::cli {

/// Dispatches a subcommand. Exit codes: 0 success, 1 usage/validation error,
/// 2 mathematical verification failure (verify-paper only).
int run(int argc, const char* const* argv);

/// Recomputes the published reference triples and checks every quoted value
/// (exact integer identities exactly, quoted decimals within 1e-3).
/// Returns the number of failed checks.
int verify_paper(std::ostream& out);

}  // namespace xyzlab::cli
