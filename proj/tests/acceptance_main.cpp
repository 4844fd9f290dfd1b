// Acceptance suite: runs every verification criterion at exact tolerance and
// prints one pass/fail line per criterion. Exit code 0 iff all pass.
#include <cstdio>
#include <cstdlib>
#include <cstring>

#include "gradcon/verify.hpp"

int main(int argc, char** argv) {
    gradcon::VerifyOptions opts;
    opts.workers = 0;
    for (int i = 1; i < argc; i++) {
        if (!std::strcmp(argv[i], "--criterion") && i + 1 < argc) opts.only.push_back(argv[++i]);
        if (!std::strcmp(argv[i], "--workers") && i + 1 < argc) opts.workers = std::atoi(argv[++i]);
        if (!std::strcmp(argv[i], "--seed") && i + 1 < argc) opts.seed = std::strtoull(argv[++i], nullptr, 10);
    }
    auto results = gradcon::run_suite(opts);
    int failed = 0;
    for (const auto& r : results) {
        std::printf("%s criterion %-2s [%6.1fs] %s%s%s\n", r.pass ? "PASS" : "FAIL", r.id.c_str(),
                    r.seconds, r.label.c_str(), r.detail.empty() ? "" : " -- ", r.detail.c_str());
        if (!r.pass) failed++;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(results.size()) - failed, results.size());
    return failed == 0 ? 0 : 1;
}
