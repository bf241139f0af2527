#ifndef FANO_COMMANDS_HPP
#define FANO_COMMANDS_HPP

#include <iosfwd>
#include <string>

#include "fano/documents.hpp"

// Command implementations behind the CLI, writing their document to `out`
// and diagnostics to `err`.
//
// Exit codes: 0 success (for verify: composition algebra), 1 valid input
// that is not a composition algebra, 2 parse or geometry error.

namespace fano {

int cmd_verify(const std::string& path, std::ostream& out, std::ostream& err);

// selector: "trivial", "all", "mask:<m>", or a kernel line "a,b,c" in cube
// coordinates.
int cmd_enumerate(const std::string& selector, unsigned workers, std::ostream& out, std::ostream& err);

// input: an arrow file path, or "enc:<factor>[,<norm-selector>]" with the
// selector as for cmd_enumerate (minus "all").
int cmd_export_dot(const std::string& input, std::ostream& out, std::ostream& err);

} // namespace fano

#endif
