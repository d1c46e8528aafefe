#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace mline {

struct ReportItem {
    std::string key;
    std::string expected;
    std::string computed;
    bool pass = false;
    std::string citation;
};

struct SuiteParams {
    int kmax = -1;   // per-suite default when negative
    int mmax = -1;
    long pmax = -1;
    long qmax = -1;
    int degBound = -1;  // mod-2A degree bound; default 4k+8 per k
    int jobs = 1;
};

struct SuiteReport {
    std::string suite;
    nlohmann::json params;
    std::vector<ReportItem> items;
    double wallSeconds = 0.0;  // not serialized; reports must be byte-deterministic

    int pass_count() const;
    int fail_count() const;
    bool pass() const;
};

extern const std::vector<std::string> kSuiteNames;  // includes "all"

/* Runs one named suite (or every suite for "all").  Item order is ascending in
 * the swept parameter regardless of the job count.  Unknown names throw. */
SuiteReport run_suite(const std::string& name, const SuiteParams& params);

nlohmann::json to_json(const SuiteReport& report);
std::string to_tsv(const SuiteReport& report);

} // namespace mline
