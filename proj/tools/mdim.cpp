#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "mdim/approx.hpp"
#include "mdim/corpus.hpp"
#include "mdim/density.hpp"
#include "mdim/interval.hpp"
#include "mdim/io.hpp"
#include "mdim/matching.hpp"
#include "mdim/reference.hpp"
#include "mdim/saw.hpp"
#include "mdim/selftest.hpp"
#include "mdim/thermo.hpp"

using nlohmann::json;
using namespace mdim;

namespace {

struct GlobalOpts {
    int threads = 1;
    int precision_bits = 256;
    std::uint64_t node_budget = 1'000'000'000;
    std::string out;
};

SawOptions saw_opts(const GlobalOpts& g) {
    SawOptions o;
    o.threads = g.threads;
    o.node_budget = g.node_budget;
    return o;
}

void emit(const GlobalOpts& g, const std::string& text) {
    if (g.out.empty())
        std::cout << text << "\n";
    else
        write_text_file(g.out, text + "\n");
}

json jobspec(const GlobalOpts& g, json params) {
    params["threads"] = g.threads;
    params["precision_bits"] = g.precision_bits;
    params["node_budget"] = g.node_budget;
    params["version"] = version_string();
    return params;
}

Graph load_graph(const std::string& file, const std::string& name) {
    if (!file.empty()) return read_graph_json(file);
    if (!name.empty()) return corpus_graph(name);
    throw input_error("provide --graph FILE or --name NAME");
}

MomentSequence load_moments(const std::string& moments_file, const std::string& mayer_file,
                            bool halved, int mayer_D) {
    if (!moments_file.empty()) return read_moments_json(moments_file);
    if (!mayer_file.empty()) {
        if (mayer_D < 2) throw input_error("--mayer requires --degree-bound D");
        return mayer_to_moments(read_mayer_csv(mayer_file, halved), mayer_D,
                                "Mayer series " + mayer_file);
    }
    throw input_error("provide --moments FILE or --mayer FILE");
}

std::string certified_json(const CertifiedValue& cv, const json& spec) {
    json j;
    j["value"] = cv.value;
    j["eps"] = cv.eps;
    j["provenance"] = cv.provenance;
    j["jobspec"] = spec;
    return j.dump(2);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"matching measures and monomer-dimer thermodynamics"};
    app.require_subcommand(1);
    GlobalOpts g;
    app.add_option("--threads", g.threads, "worker threads for walk enumeration");
    app.add_option("--precision-bits", g.precision_bits, "interval working precision");
    app.add_option("--node-budget", g.node_budget, "walk-tree node budget");
    app.add_option("--out", g.out, "output path (default stdout)");

    // moments
    std::string lattice = "z2";
    int max_order = 12;
    auto* cmd_moments = app.add_subcommand("moments", "lattice matching-measure moments");
    cmd_moments->add_option("--lattice", lattice, "z2..z7, hex, bethe:d")->required();
    cmd_moments->add_option("--max-order", max_order, "highest moment order K");

    // finite
    std::string graph_file, graph_name, finite_what = "counts";
    int finite_K = 12;
    auto* cmd_finite = app.add_subcommand("finite", "exact finite-graph quantities");
    cmd_finite->add_option("--graph", graph_file, "graph JSON path");
    cmd_finite->add_option("--name", graph_name, "built-in graph name");
    cmd_finite->add_option("--what", finite_what, "counts | moments | roots");
    cmd_finite->add_option("--max-order", finite_K, "moment order for --what moments");

    // thermo
    std::string moments_file, mayer_file;
    bool halved = false;
    int mayer_D = 0;
    double opt_t = -1, opt_p = -1;
    auto* cmd_thermo = app.add_subcommand("thermo", "pressure / free energy / entropy");
    cmd_thermo->add_option("--moments", moments_file, "moments JSON");
    cmd_thermo->add_option("--mayer", mayer_file, "Mayer CSV (rows n,a_n)");
    cmd_thermo->add_flag("--halved", halved, "Mayer rows carry d_n = a_n/2");
    cmd_thermo->add_option("--degree-bound", mayer_D, "degree bound D for Mayer input");
    cmd_thermo->add_option("--graph", graph_file, "finite graph JSON");
    cmd_thermo->add_option("--name", graph_name, "built-in graph name");
    cmd_thermo->add_option("--t", opt_t, "activity t");
    cmd_thermo->add_option("--p", opt_p, "dimer density p");

    // approx
    std::string target_str = "halflog", emit_path;
    double approx_t = 1.0;
    int radius_from_degree = 0, approx_N = 16;
    double radius_sq = 0;
    auto* cmd_approx = app.add_subcommand("approx", "minimax polynomial fits");
    cmd_approx->add_option("--target", target_str, "halflog | pressure");
    cmd_approx->add_option("--t", approx_t, "activity parameter");
    cmd_approx->add_option("--radius-from-degree", radius_from_degree,
                           "set radius to 2 sqrt(D-1)");
    cmd_approx->add_option("--radius-squared", radius_sq, "explicit R^2");
    cmd_approx->add_option("--degree", approx_N, "polynomial degree in z");
    cmd_approx->add_option("--emit", emit_path, "output JSON path");

    // density
    std::string mode = "kernel";
    double bandwidth = 0;
    int grid_size = 2001, proj_N = -1;
    auto* cmd_density = app.add_subcommand("density", "density estimates (.dat rows)");
    cmd_density->add_option("--mode", mode, "kernel | l2");
    cmd_density->add_option("--graph", graph_file, "graph JSON (kernel mode)");
    cmd_density->add_option("--name", graph_name, "built-in graph name (kernel mode)");
    cmd_density->add_option("--bandwidth", bandwidth, "kernel bandwidth (0 = default)");
    cmd_density->add_option("--moments", moments_file, "moments JSON (l2 mode)");
    cmd_density->add_option("--degree", proj_N, "projection degree (l2 mode)");
    cmd_density->add_option("--grid", grid_size, "sample count");

    // table
    std::string lattices = "z2,z3,hex", moments_dir = ".";
    bool strict = false;
    auto* cmd_table = app.add_subcommand("table", "free energy and pressure per lattice");
    cmd_table->add_option("--lattices", lattices, "comma-separated lattice names");
    cmd_table->add_option("--moments-dir", moments_dir, "directory of <lattice>.json moments");
    cmd_table->add_flag("--strict", strict, "nonzero exit when a row is unavailable");

    auto* cmd_selftest = app.add_subcommand("selftest", "run the invariant suites");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        Interval::set_default_precision(g.precision_bits);

        if (*cmd_moments) {
            MomentSequence mu = lattice_moments(parse_lattice(lattice), max_order, saw_opts(g));
            json j = json::parse(moments_to_json(mu));
            j["jobspec"] = jobspec(g, {{"subcommand", "moments"},
                                       {"lattice", lattice},
                                       {"max_order", max_order}});
            emit(g, j.dump(2));
        } else if (*cmd_finite) {
            Graph gr = load_graph(graph_file, graph_name);
            MatchingPolynomial mp = matching_counts(gr);
            json j;
            j["n"] = gr.n;
            if (finite_what == "counts") {
                for (const auto& m : mp.m) j["matching_counts"].push_back(m.str());
            } else if (finite_what == "moments") {
                for (const auto& m : finite_moments(mp, finite_K)) {
                    std::ostringstream s;
                    s << m;
                    j["moments"].push_back(s.str());
                }
            } else if (finite_what == "roots") {
                RootMeasure rm = isolate_roots(mp);
                for (const auto& r : rm.roots) {
                    json row;
                    row["lo"] = static_cast<double>(r.lo);
                    row["hi"] = static_cast<double>(r.hi);
                    row["mult"] = r.mult;
                    j["roots"].push_back(row);
                }
            } else {
                throw input_error("unknown --what: " + finite_what);
            }
            j["jobspec"] = jobspec(g, {{"subcommand", "finite"}, {"what", finite_what}});
            emit(g, j.dump(2));
        } else if (*cmd_thermo) {
            ThermoContext ctx;
            if (!graph_file.empty() || !graph_name.empty())
                ctx = make_finite_context(load_graph(graph_file, graph_name));
            else
                ctx = make_lattice_context(load_moments(moments_file, mayer_file, halved, mayer_D));
            json spec = jobspec(g, {{"subcommand", "thermo"}, {"t", opt_t}, {"p", opt_p}});
            if (opt_t >= 0 && opt_p >= 0)
                throw input_error("choose one of --t and --p");
            if (opt_t >= 0) {
                json j;
                CertifiedValue p = pressure(ctx, opt_t);
                CertifiedValue F = free_energy_at(ctx, opt_t);
                j["value"] = F.value;
                j["eps"] = F.eps;
                j["pressure"] = {{"value", p.value}, {"eps", p.eps}};
                j["provenance"] = F.provenance;
                j["jobspec"] = spec;
                emit(g, j.dump(2));
            } else if (opt_p >= 0) {
                emit(g, certified_json(lambda_of_p(ctx, opt_p), spec));
            } else {
                emit(g, certified_json(free_energy(ctx), spec));
            }
        } else if (*cmd_approx) {
            if (radius_from_degree >= 2) radius_sq = 4.0 * (radius_from_degree - 1);
            if (radius_sq <= 0)
                throw input_error("provide --radius-squared or --radius-from-degree");
            PolyApprox pa = minimax_fit(parse_target(target_str), approx_t, radius_sq, approx_N);
            json j = json::parse(poly_approx_to_json(pa));
            j["jobspec"] = jobspec(g, {{"subcommand", "approx"},
                                       {"target", target_str},
                                       {"degree", approx_N}});
            std::string text = j.dump(2);
            if (!emit_path.empty())
                write_text_file(emit_path, text + "\n");
            else
                emit(g, text);
        } else if (*cmd_density) {
            DensitySamples ds;
            json params = {{"subcommand", "density"}, {"mode", mode}, {"grid", grid_size}};
            if (mode == "kernel") {
                Graph gr = load_graph(graph_file, graph_name);
                ds = kernel_smooth(isolate_roots(matching_counts(gr)), bandwidth, grid_size);
            } else if (mode == "l2") {
                MomentSequence mu = load_moments(moments_file, mayer_file, halved, mayer_D);
                int N = proj_N >= 0 ? proj_N : mu.order() - mu.order() % 2;
                ds = l2_projection(mu, N, grid_size);
                params["degree"] = N;
            } else {
                throw input_error("unknown --mode: " + mode);
            }
            std::ostringstream out;
            out << "# " << jobspec(g, params).dump() << "\n";
            out << "# mass " << ds.mass << "\n";
            for (size_t i = 0; i < ds.grid.size(); ++i)
                out << ds.grid[i] << " " << ds.values[i] << "\n";
            emit(g, out.str());
        } else if (*cmd_table) {
            std::ostringstream out;
            out << "# " << jobspec(g, {{"subcommand", "table"}, {"lattices", lattices}}).dump()
                << "\n";
            out << "lattice\tfree_energy\teps\tpressure_t1\teps\treference\n";
            bool missing = false;
            std::istringstream names(lattices);
            std::string name;
            while (std::getline(names, name, ',')) {
                if (name.empty()) continue;
                std::string path = moments_dir + "/" + name + ".json";
                std::ifstream probe(path);
                if (!probe) {
                    out << name << "\tunavailable\t-\t-\t-\t-\n";
                    missing = true;
                    continue;
                }
                ThermoContext ctx = make_lattice_context(read_moments_json(path));
                CertifiedValue F = free_energy(ctx);
                CertifiedValue p = pressure(ctx, 1.0);
                out << name << "\t" << F.value << "\t" << F.eps << "\t" << p.value << "\t"
                    << p.eps;
                if (const ReferenceRow* row = reference_row(name)) {
                    bool inF = std::abs(F.value - row->free_energy) <= F.eps;
                    bool inP = std::abs(p.value - row->pressure) <= p.eps;
                    out << "\t" << (inF && inP ? "in-interval" : "MISMATCH");
                } else {
                    out << "\t-";
                }
                out << "\n";
            }
            emit(g, out.str());
            if (missing && strict) return 4;
        } else if (*cmd_selftest) {
            auto results = run_selftest();
            bool all_ok = true;
            std::ostringstream out;
            for (const auto& r : results) {
                out << (r.ok ? "pass" : "FAIL") << "  " << r.name;
                if (!r.ok && !r.detail.empty()) out << "  (" << r.detail << ")";
                out << "\n";
                all_ok = all_ok && r.ok;
            }
            emit(g, out.str());
            if (!all_ok) return 2;
        }
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 4;
    } catch (const resource_limit_error& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 3;
    } catch (const invariant_error& e) {
        std::cerr << "invariant failure: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
