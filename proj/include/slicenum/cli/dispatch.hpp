#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace slicenum::cli {

enum ExitStatus : int {
    kOk = 0,
    kInputError = 1,
    kCapacityError = 2,
};

std::string version();

// `args` excludes the program name.  Text goes to `out`, diagnostics and
// usage to `err`; `--json PATH` additionally writes the machine-readable
// document.
int dispatch(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace slicenum::cli
