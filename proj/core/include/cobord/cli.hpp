#pragma once

namespace cobord {

// Command-line entry point: tables | eval | nf | verify | kosniowski.
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 truncation overflow.
int run(int argc, const char* const* argv);

}  // namespace cobord
