#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "unirow/unimodular.hpp"

namespace unirow::cli {

/// Runs one command line (without the program name). Returns the process
/// exit status: 0 success, 1 domain failure, 2 syntax or usage failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "i,j,lambda; i,j,lambda; ..." with lambda parsed in `ring`.
ElementaryFactorization parse_ops(const std::string& text, const Ring& ring, std::size_t n);

}  // namespace unirow::cli
