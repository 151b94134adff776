#pragma once

namespace starq {

/// Entry point for the command-line driver. Exit codes:
///   0 — all requested checks pass,
///   1 — an exact identity was violated (engine bug),
///   2 — inadmissible or malformed input (parse errors, non-HS kernels,
///       undecidable verdicts, usage errors).
int run_cli(int argc, const char* const argv[]);

}  // namespace starq
