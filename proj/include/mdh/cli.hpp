#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mdh {

// Executes one command-line invocation (arguments without the program
// name). Returns 0 on success, 1 on input or usage errors (message on err),
// 2 when an oracle run reports failures. Identical arguments and input
// files produce identical bytes on out.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace mdh
