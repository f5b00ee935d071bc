// Acceptance suite: runs every verification check at full scale and prints
// one pass/fail line per criterion. Exit code 0 iff everything passes.
#include <cstdio>
#include <set>

#include "quatpoly/verify.hpp"

int main() {
    using namespace qp;

    // manifest cross-check: the "all" run must cover exactly the manifest;
    // adding a criterion without wiring it into the verification is a failure
    auto results = run_verification({"all", 0, false});
    std::set<std::string> ran, listed;
    for (const auto& r : results) ran.insert(r.id);
    for (const auto& [id, scope] : check_manifest()) listed.insert(id);
    bool manifest_ok = ran == listed;

    int failures = 0;
    for (const auto& r : results) {
        if (!r.pass) ++failures;
        std::printf("%s  %-40s [%s]  expected: %s%s%s\n", r.pass ? "PASS" : "FAIL", r.id.c_str(),
                    r.scope.c_str(), r.expected.c_str(), r.pass ? "" : "  actual: ",
                    r.pass ? "" : r.actual.c_str());
    }
    std::printf("%s  %-40s [meta]  expected: run covers the %zu-entry manifest\n",
                manifest_ok ? "PASS" : "FAIL", "manifest/all-criteria-wired",
                check_manifest().size());
    if (!manifest_ok) ++failures;

    std::printf("%zu/%zu passed, %d failed\n", results.size() + 1 - failures, results.size() + 1,
                failures);
    return failures == 0 ? 0 : 1;
}
