#pragma once

#include <string>
#include <vector>

namespace bezgw {

/// One CLI invocation: an expression, a field, and the requested outputs.
struct Query {
    std::string expression;
    std::string field_descriptor = "Q";
    std::vector<std::string> outputs;  // subset of the documented keys, or "all"
    std::string roots;                 // "r1:m1,r2:m2,..." or empty
    bool json = false;
};

struct RunResult {
    int exit_code = 0;  // 0 ok, 1 input error, 2 verification failure
    std::string output;
};

RunResult run(const Query& q);

}  // namespace bezgw
