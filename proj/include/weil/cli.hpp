// Command-line front end.  Exit codes: 0 success, 1 check failure,
// 2 usage or parse error.
#pragma once

namespace weil {

int cli_main(int argc, const char* const* argv);

} // namespace weil
