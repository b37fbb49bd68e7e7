#pragma once

#include <iosfwd>

namespace modinv {

/// Entry point of the modinv command-line tool. Returns 0 when every check
/// passes, 1 on a failing check or engine error, 2 on a usage error.
int cli_main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace modinv
