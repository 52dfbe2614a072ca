#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nsym/scalar.hpp"

namespace nsym {

// Scale of a verification sweep. Unset fields (empty / -1) take the suite's default.
struct VerifyOptions {
    std::vector<int> Ns;
    int n = -1;      // single weight (det, ...)
    int max_n = -1;  // sweep bound
    int order = -1;  // series order
    std::vector<Scalar> qs;
};

struct SuiteReport {
    std::string suite;
    bool passed = true;
    std::size_t checks = 0;
    std::string counterexample;      // first failure, empty when passed
    std::vector<std::string> notes;  // adopted readings, informational results

    // Counts one check; records the first failure.
    void check(bool ok, const std::string& what);
    void note(std::string text) { notes.push_back(std::move(text)); }
    std::string render() const;
};

const std::vector<std::string>& suite_names();
// Throws InvalidInput for an unknown suite.
SuiteReport run_suite(const std::string& name, const VerifyOptions& options = {});

}  // namespace nsym
