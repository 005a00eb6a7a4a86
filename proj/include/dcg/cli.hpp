#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dcg::cli {

/// Exit codes: 0 success, 1 negative result (invalid graph, failed check,
/// exhausted budget), 2 usage or input errors, 3 internal inconsistency.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace dcg::cli
