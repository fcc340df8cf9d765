#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "lrskep/verify.hpp"

namespace lrskep::cli {

// One line per report, JSON or table. Returns 1 if any report failed, else 0.
int write_reports(const std::vector<VerifyReport>& reports, bool json, std::ostream& out);

// args excludes the program name. Exit codes: 0 pass, 1 violation, 2 usage
// or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lrskep::cli
