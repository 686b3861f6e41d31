#include "mdim/reference.hpp"

namespace mdim {

const std::vector<std::string>& hex_reference_moment_strings() {
    static const std::vector<std::string> moments = {
        "1", "0", "3", "0", "15", "0", "87", "0", "543", "0",
        "3543", "0", "23817", "0", "163551", "0", "1141119", "0", "8060343", "0",
        "57494385", "0", "413383875", "0", "2991896721", "0", "21774730539", "0",
        "159227948055", "0", "1169137211487", "0", "8615182401087", "0",
        "63683991513351", "0", "472072258519041", "0", "3508080146139867", "0",
        "26127841824131313", "0", "194991952493587371", "0", "1457901080870060919", "0",
        "10918612274039599755", "0", "81898043907874542705"};
    return moments;
}

MomentSequence hex_reference_moments() {
    MomentSequence mu;
    mu.degree_bound = 3;
    mu.source = "ingested honeycomb reference list";
    for (const auto& s : hex_reference_moment_strings()) mu.mu.emplace_back(Int(s));
    return mu;
}

const std::vector<ReferenceRow>& reference_table() {
    static const std::vector<ReferenceRow> table = {
        {"z2", 0.6627989725, 3.72e-8, 0.638123105, 5.34e-7},
        {"z3", 0.7859659243, 9.89e-7, 0.684380278, 1.14e-5},
        {"z4", 0.8807178880, 5.92e-6, 0.715846906, 5.86e-5},
        {"z5", 0.9581235802, 4.02e-5, 0.739160383, 3.29e-4},
        {"z6", 1.0237319240, 1.24e-4, 0.757362382, 8.91e-4},
        {"z7", 1.0807591953, 3.04e-4, 0.772099489, 1.95e-3},
        {"hex", 0.58170036638, 1.56e-9, 0.600508638, 2.65e-8},
    };
    return table;
}

const ReferenceRow* reference_row(const std::string& lattice) {
    for (const auto& row : reference_table())
        if (row.lattice == lattice) return &row;
    return nullptr;
}

}  // namespace mdim
