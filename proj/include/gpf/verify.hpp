#ifndef GPF_VERIFY_HPP
#define GPF_VERIFY_HPP

#include <string>
#include <vector>

namespace gpf {

struct SuiteResult {
    std::string name;
    bool passed = false;
    std::string detail;  // bound actually used, or the first failure
};

// Runs the cross-checking suites up to k_max.  Oracle suites (exhaustive
// brute-force comparisons) run only when requested and are internally
// capped at the sizes they can exhaust.  Pure and deterministic.
std::vector<SuiteResult> run_verification(int k_max, bool with_oracle, int threads = 1);

}  // namespace gpf

#endif
