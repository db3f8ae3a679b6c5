#pragma once

namespace tropfw {

/// Parses argv and runs one `tropfw` command. Returns the process exit code:
///   0  success
///   1  a triangle search finished with status Fail
///   2  usage error or malformed/incompatible input
///   3  internal invariant failure (should not happen)
int run_cli(int argc, char** argv);

}
