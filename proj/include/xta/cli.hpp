#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace xta {

/// Entry point of the `xta` tool. args excludes the program name.
/// Returns 0 on success, 2 on input errors, 3 on contract violations.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace xta
