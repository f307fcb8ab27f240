// One line per acceptance criterion. Exit status is 0 when every failing
// criterion is in the known-unattainable set (see README).
#include <iostream>
#include <map>
#include <set>
#include <string>

#include "lmod/parallel.hpp"
#include "lmod/verify.hpp"

using namespace lmod;

int main(int argc, char** argv) {
    std::string checkpoint = "acceptance-exhaustive.ckpt.json";
    bool quick = false;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a == "--quick") quick = true;  // skip the opt-in exhaustive suite
        else if (a == "--checkpoint" && i + 1 < argc) checkpoint = argv[++i];
        else {
            std::cerr << "usage: acceptance [--quick] [--checkpoint FILE]\n";
            return 2;
        }
    }
    const std::set<int> known_red = {4};

    SuiteContext ctx;
    ctx.jobs = default_jobs();
    ctx.checkpoint = checkpoint;
    std::map<int, std::vector<SuiteReport>> by;
    for (auto& s : suites()) {
        if (s.opt_in && quick) continue;
        by[s.criterion].push_back(run_suite(s, ctx));
    }

    std::set<int> failed;
    for (int k = 1; k <= 14; ++k) {
        auto it = by.find(k);
        if (it == by.end()) {
            std::cout << "criterion " << k << ": SKIP\n";
            continue;
        }
        bool pass = true;
        int n = 0, ok = 0;
        std::string names, first_fail;
        double t = 0;
        for (auto& r : it->second) {
            pass = pass && r.pass();
            names += (names.empty() ? "" : ",") + r.suite;
            t += r.elapsed_s;
            if (!r.error.empty() && first_fail.empty()) first_fail = "error: " + r.error;
            for (auto& c : r.checks) {
                ++n;
                ok += c.pass;
                if (!c.pass && first_fail.empty()) first_fail = c.name + ": expected " + c.expected + ", got " + c.got;
            }
        }
        if (!pass) failed.insert(k);
        std::cout << "criterion " << k << ": " << (pass ? "PASS" : "FAIL") << "  " << names << "  " << ok << "/" << n
                  << " checks  " << t << " s";
        if (!pass) std::cout << (known_red.count(k) ? "  (known)" : "") << "  first failure: " << first_fail;
        std::cout << "\n";
    }
    for (int k : failed)
        if (!known_red.count(k)) return 1;
    return 0;
}
