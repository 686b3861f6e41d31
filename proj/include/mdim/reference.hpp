#pragma once

#include <string>
#include <vector>

#include "mdim/saw.hpp"

namespace mdim {

/// Published honeycomb matching-measure moments mu_0..mu_44, exact.
/// Read-only comparison data; never an input to the computation paths
/// unless explicitly ingested.
const std::vector<std::string>& hex_reference_moment_strings();
MomentSequence hex_reference_moments();

struct ReferenceRow {
    std::string lattice;   // z2..z7, hex
    double free_energy;    // published lambda-tilde
    double free_energy_err;
    double pressure;       // published p(L, 1)
    double pressure_err;
};

const std::vector<ReferenceRow>& reference_table();
const ReferenceRow* reference_row(const std::string& lattice);

}  // namespace mdim
