/**
 * @file cli.hpp
 * @brief The schemekit command-line front end as a callable function.
 *
 * Exit codes: 0 success, 1 validation failure, 2 parse/IO or usage error,
 * 3 not applicable or over an enumeration cap, 4 method disagreement.
 */
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace schemekit {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int validation = 1;
inline constexpr int parse_io = 2;
inline constexpr int not_applicable = 3;
inline constexpr int disagreement = 4;
}  // namespace exit_code

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace schemekit
