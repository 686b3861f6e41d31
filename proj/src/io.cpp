#include "mdim/io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace mdim {

namespace {

using nlohmann::json;

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw input_error(path + ": " + e.what());
    }
    return j;
}

Rat parse_rat(const std::string& s) {
    try {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rat(Int(s));
        return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
    } catch (const std::exception&) {
        throw input_error("malformed rational: " + s);
    }
}

std::string rat_str(const Rat& r) {
    std::ostringstream out;
    out << r;
    return out.str();
}

}  // namespace

Graph read_graph_json(const std::string& path) {
    json j = load_json(path);
    if (!j.contains("n") || !j.contains("edges"))
        throw input_error(path + ": graph JSON needs \"n\" and \"edges\"");
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2)
            throw input_error(path + ": each edge must be a pair");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return make_graph(j["n"].get<int>(), std::move(edges));
}

std::string graph_to_json(const Graph& g) {
    json j;
    j["n"] = g.n;
    j["edges"] = json::array();
    for (auto [u, v] : g.edges) j["edges"].push_back({u, v});
    return j.dump();
}

MomentSequence read_moments_json(const std::string& path) {
    json j = load_json(path);
    if (!j.contains("D") || !j.contains("moments"))
        throw input_error(path + ": moments JSON needs \"D\" and \"moments\"");
    MomentSequence mu;
    mu.degree_bound = j["D"].get<int>();
    mu.source = j.value("lattice", "ingested") + " (" + path + ")";
    for (const auto& m : j["moments"]) mu.mu.push_back(parse_rat(m.get<std::string>()));
    if (mu.mu.empty() || mu.mu[0] != 1)
        throw input_error(path + ": moment list must start with 1");
    return mu;
}

std::string moments_to_json(const MomentSequence& mu) {
    json j;
    j["lattice"] = mu.source;
    j["D"] = mu.degree_bound;
    j["moments"] = json::array();
    for (const auto& m : mu.mu) j["moments"].push_back(rat_str(m));
    return j.dump(2);
}

void write_moments_json(const std::string& path, const MomentSequence& mu) {
    write_text_file(path, moments_to_json(mu));
}

std::vector<Rat> read_mayer_csv(const std::string& path, bool halved) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open " + path);
    std::vector<Rat> a;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        auto comma = line.find(',');
        if (comma == std::string::npos)
            throw input_error(path + ":" + std::to_string(lineno) + ": expected n,value");
        int n;
        Rat v;
        try {
            n = std::stoi(line.substr(0, comma));
            v = parse_rat(line.substr(comma + 1));
        } catch (const std::exception&) {
            throw input_error(path + ":" + std::to_string(lineno) + ": malformed row");
        }
        if (n < 1) throw input_error(path + ":" + std::to_string(lineno) + ": n must be >= 1");
        if (static_cast<size_t>(n) > a.size()) a.resize(n, Rat(0));
        a[n - 1] = halved ? v * 2 : v;
    }
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] == 0)
            throw input_error(path + ": missing Mayer coefficient a_" + std::to_string(i + 1));
    return a;
}

std::string poly_approx_to_json(const PolyApprox& pa) {
    json j;
    j["target"] = target_name(pa.target);
    j["t"] = pa.t;
    j["radius_squared"] = pa.usq;
    j["degree"] = pa.degree;
    j["coefficients"] = pa.coeff;
    j["eps"] = pa.eps;
    j["remez_residual"] = pa.remez_residual;
    j["exchange_converged"] = pa.exchange_converged;
    return j.dump(2);
}

PolyApprox read_poly_approx_json(const std::string& path) {
    json j = load_json(path);
    PolyApprox pa;
    pa.target = parse_target(j.at("target").get<std::string>());
    pa.t = j.at("t").get<double>();
    pa.usq = j.at("radius_squared").get<double>();
    pa.degree = j.at("degree").get<int>();
    pa.coeff = j.at("coefficients").get<std::vector<std::string>>();
    pa.eps = j.at("eps").get<double>();
    pa.remez_residual = j.value("remez_residual", 0.0);
    pa.exchange_converged = j.value("exchange_converged", true);
    return pa;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot write " + path);
    out << content;
    if (!out) throw input_error("write failed: " + path);
}

}  // namespace mdim
