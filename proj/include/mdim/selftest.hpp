#pragma once

#include <string>
#include <vector>

namespace mdim {

struct SelftestResult {
    std::string name;
    bool ok = false;
    std::string detail;
};

/// Invariant suites over the built-in corpus: graph handshakes, matching
/// oracle cross-checks, root bounds, moment positivity, thermodynamic
/// identities, density sanity. Runs in well under a minute.
std::vector<SelftestResult> run_selftest();

}  // namespace mdim
