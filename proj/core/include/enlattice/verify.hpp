// Verification suites: every structural identity the library claims, run as
// named executable checks with pass/fail records.  The CLI `verify` command
// and the acceptance harness are thin wrappers around run_suite.
//
// Sampled checks draw from a seeded mt19937_64 so a given (seed, samples)
// pair replays byte-identically; exhaustive upgrades are opt-in because the
// largest ones (full Jacobi at n = 6, the full quadruple scan for f7) cost
// seconds rather than milliseconds.
#pragma once

#include "enlattice/branching.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace enlattice {

struct VerifyOptions {
    int n_max = 8;            // largest rank the suites touch (clamped to [0, 8])
    int64_t samples = 10000;  // budget per sampled identity
    uint64_t seed = 1;        // replayable sampling seed
    bool exhaustive = false;  // upgrade sampled checks to exhaustive where feasible
};

struct SuiteResult {
    std::string suite;
    std::vector<IdentityResult> identities;
    double seconds = 0.0;
    bool ok = false; // all identities ok
};

// Stable list of suite names, in run order.
const std::vector<std::string>& suite_names();

// Run one suite by name; unknown names throw std::domain_error.
SuiteResult run_suite(const std::string& name, const VerifyOptions& opt = {});

// Run every suite in order.
std::vector<SuiteResult> run_suites(const VerifyOptions& opt = {});

} // namespace enlattice
