#pragma once

#include <string>
#include <vector>

#include "mdim/approx.hpp"
#include "mdim/graph.hpp"
#include "mdim/saw.hpp"

namespace mdim {

/// Graph JSON: {"n": int, "edges": [[u, v], ...]}
Graph read_graph_json(const std::string& path);
std::string graph_to_json(const Graph& g);

/// Moments JSON: {"lattice": str, "D": int, "moments": [decimal strings]}.
/// Moments are exact integers or rationals ("p/q") serialized as strings.
MomentSequence read_moments_json(const std::string& path);
std::string moments_to_json(const MomentSequence& mu);
void write_moments_json(const std::string& path, const MomentSequence& mu);

/// Mayer CSV: rows "n,a_n". With halved = true the rows carry d_n = a_n/2.
std::vector<Rat> read_mayer_csv(const std::string& path, bool halved);

std::string poly_approx_to_json(const PolyApprox& pa);
PolyApprox read_poly_approx_json(const std::string& path);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace mdim
