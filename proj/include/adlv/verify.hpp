#pragma once
// Verification harness: each registered check sweeps a window of inputs on a
// given datum and re-verifies one combinatorial statement used by the
// component-count machinery, with independent oracles where available.
// Reports are deterministic for a fixed config (sweep order lexicographic,
// failures reported from the start of the sweep).

#include <string>

#include "adlv/pi0.hpp"

namespace adlv {

struct VerifyConfig {
    int bound = 3;                // coordinate window for swept cocharacters
    long long two_rho_bound = 8;  // <2rho, lam> cap for swept lambdas
    int random_cases = 500;       // randomized checks (contraction)
    unsigned long long seed = 7;
    long long budget = 400000;    // primitive case budget per check (truncates sweeps)
};

struct LemmaReport {
    std::string lemma_id;
    std::string datum;
    std::string config;
    long long cases_run = 0;
    std::vector<std::string> failures;  // replayable payloads, earliest cases first
    bool vacuous = false;               // premises never satisfied in the window
    bool truncated = false;             // budget exhausted before the window ended
    double wall_time_s = 0.0;
    std::string note;
    std::string status() const { return !failures.empty() ? "FAIL" : (vacuous ? "VACUOUS" : "PASS"); }
};

// Check ids in fixed report order; the last four re-check statements imported
// from cited sources (a failure there indicts our reading of their hypotheses).
const std::vector<std::string>& lemma_registry();

LemmaReport verify(const std::string& lemma_id, const RootDatum& d, const VerifyConfig& cfg);

struct DatumSpec {
    std::string name;
    std::string type;
    int h;
    std::vector<int> sigma;
    VerifyConfig cfg;  // per-datum window overrides
};
std::vector<DatumSpec> profile_data(const std::string& profile);  // "quick" | "full"

std::vector<LemmaReport> verify_all(const std::string& profile);

}  // namespace adlv
