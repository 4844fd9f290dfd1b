#pragma once

#include <functional>
#include <string>
#include <vector>

#include "gradcon/isoclass.hpp"

namespace gradcon {

struct CheckResult {
    std::string id;     // "1".."11"
    std::string label;
    bool pass = false;
    std::string detail;  // failure diagnostics or short summary
    double seconds = 0;
};

struct VerifyOptions {
    int workers = 0;
    std::uint64_t seed = 1;
    // criteria to run; empty = all
    std::vector<std::string> only;
    // extra algebras for the full per-class sweeps of criteria 7 and 8
    // (F always runs; the O spot checks always run)
    std::vector<Hurwitz> extra_structure_algebras;
};

// The verification checklist ("paper" suite of the CLI). Every tolerance is exact equality; each
// entry prints one pass/fail line via the caller.
std::vector<CheckResult> run_suite(const VerifyOptions& opts = {});

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace gradcon
