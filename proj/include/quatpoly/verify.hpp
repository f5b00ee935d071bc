#pragma once

#include <string>
#include <vector>

namespace qp {

/// One acceptance check row.
struct CheckResult {
    std::string id;
    std::string scope;      // algebra | coxeter | polytope | project3d
    std::string expected;
    std::string actual;
    bool pass = false;
};

struct VerifyOptions {
    std::string scope = "all";   // all or a module name
    int threads = 0;
    bool corrupt_root = false;   // test fixture: perturb a D4 simple root
};

/// Static manifest of every acceptance check (id, scope). The verification
/// run must cover exactly this list for the "all" scope; tests cross-check it
/// so a criterion cannot be added without being wired in here.
const std::vector<std::pair<std::string, std::string>>& check_manifest();

/// Run the acceptance checks in scope. Exceptions inside a check are caught
/// and reported as failures. Throws std::invalid_argument on unknown scope.
std::vector<CheckResult> run_verification(const VerifyOptions& opt = {});

}  // namespace qp
