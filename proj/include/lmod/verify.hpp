#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace lmod {

struct Check {
    std::string name;
    std::string expected, got;
    std::string provenance;  // "PAPER", "DERIVED" or "TRIVIAL"
    double elapsed_s = 0;
    bool pass = false;
    std::string detail;
};

struct SuiteContext {
    int jobs = 1;
    std::ostream* progress = nullptr;  // long-running suites report here
    std::string checkpoint;            // exhaustive suite only
};

struct Suite {
    std::string name;
    int criterion = 0;
    bool opt_in = false;  // not part of the default `verify` run
    std::string summary;
    std::function<std::vector<Check>(const SuiteContext&)> run;
};

const std::vector<Suite>& suites();
const Suite* find_suite(const std::string& name);
std::vector<std::string> suite_names();

struct SuiteReport {
    std::string suite;
    int criterion = 0;
    std::vector<Check> checks;
    double elapsed_s = 0;
    std::string error;  // set when the suite threw
    bool pass() const;
};
SuiteReport run_suite(const Suite& s, const SuiteContext& ctx);

// timing=false zeroes every elapsed field
nlohmann::json report_json(const std::vector<SuiteReport>& reports, bool timing = true);

}  // namespace lmod
