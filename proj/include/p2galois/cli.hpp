#pragma once

#include <string>

namespace p2g {

/// Range certification output: the human summary table and the structured
/// JSON document. Byte-identical across runs and thread counts.
struct CertifyOutput {
    std::string table;
    std::string json;
};

CertifyOutput certify_range(int from, int to, bool parallel, int table_limit = 16);

/// Command-line entry point. Exit codes: 0 success, 1 usage or input error,
/// 2 internal invariant violation.
int run(int argc, const char* const* argv);

}  // namespace p2g
