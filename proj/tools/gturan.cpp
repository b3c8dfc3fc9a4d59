// Command-line surface: reproducible exact experiments over the library.
// Exit codes: 0 success, 2 invalid input, 3 budget exceeded, 4 internal error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "turan/canonical.hpp"
#include "turan/coloring.hpp"
#include "turan/constructions.hpp"
#include "turan/counting.hpp"
#include "turan/errors.hpp"
#include "turan/extremal.hpp"
#include "turan/multipartite.hpp"
#include "turan/report_json.hpp"
#include "turan/spec_io.hpp"
#include "turan/stability.hpp"

namespace {

using turan::ordered_json;

struct GlobalFlags {
    std::uint64_t seed = 1;
    int jobs = 1;
    std::uint64_t max_nodes = 50'000'000;
    bool timings = false;
};

std::chrono::steady_clock::time_point g_start;

double elapsed_ms() {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - g_start).count();
}

void print_report(ordered_json report) {
    std::cout << report.dump(2) << "\n";
}

turan::SearchConfig search_config(const GlobalFlags& g, bool maximal_only) {
    turan::SearchConfig cfg;
    cfg.max_nodes = g.max_nodes;
    cfg.maximal_only = maximal_only;
    cfg.parallelism = g.jobs;
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    g_start = std::chrono::steady_clock::now();

    CLI::App app{"exact counts, extremal search, and stability verdicts for small graphs"};
    app.require_subcommand(1);
    app.fallthrough();
    // --h is a graph option throughout, so help lives on --help alone
    app.set_help_flag("--help", "print help");
    auto add_subcommand = [&](const std::string& name, const std::string& desc) {
        CLI::App* sub = app.add_subcommand(name, desc);
        sub->set_help_flag("--help", "print help");
        return sub;
    };

    GlobalFlags g;
    app.add_option("--seed", g.seed, "seed for all randomized subroutines")->capture_default_str();
    app.add_option("--jobs", g.jobs, "worker threads; output is identical for every value")
        ->capture_default_str();
    app.add_option("--max-nodes", g.max_nodes, "search budget in tree nodes")->capture_default_str();
    app.add_flag("--timings", g.timings, "include wall time in the manifest");

    // count
    auto* cmd_count = add_subcommand("count", "count copies of h in g");
    std::string count_h, count_g;
    bool count_degrees = false;
    cmd_count->add_option("--h", count_h, "pattern graph spec")->required();
    cmd_count->add_option("--g", count_g, "host graph spec")->required();
    cmd_count->add_flag("--degrees", count_degrees, "also report per-vertex copy degrees");
    cmd_count->callback([&] {
        turan::Graph h = turan::parse_graph_spec(count_h);
        turan::Graph host = turan::parse_graph_spec(count_g);
        turan::Count c = turan::count_copies(h, host);
        ordered_json params;
        params["h"] = count_h;
        params["g"] = count_g;
        ordered_json report = turan::report_shell("count", std::move(params), g.timings, elapsed_ms());
        report["count"] = turan::json_count(c);
        if (count_degrees) {
            ordered_json degrees = ordered_json::array();
            for (int v = 0; v < host.n(); ++v)
                degrees.push_back(turan::json_count(turan::copy_degree(h, host, v)));
            report["copyDegrees"] = std::move(degrees);
        }
        print_report(std::move(report));
    });

    // ex
    auto* cmd_ex = add_subcommand("ex", "maximum h-count over f-free graphs on n vertices");
    int ex_n = 0;
    std::string ex_h, ex_f;
    bool ex_maximal = false, ex_witnesses = false, ex_audit = false;
    cmd_ex->add_option("--n", ex_n, "host order")->required();
    cmd_ex->add_option("--h", ex_h, "counted graph spec")->required();
    cmd_ex->add_option("--f", ex_f, "forbidden graph spec")->required();
    cmd_ex->add_flag("--maximal-only", ex_maximal, "search edge-maximal f-free graphs only");
    cmd_ex->add_flag("--witnesses", ex_witnesses, "stream witness graph6 lines instead of JSON");
    cmd_ex->add_flag("--audit", ex_audit, "include the per-vertex copy-degree audit");
    cmd_ex->callback([&] {
        turan::Graph h = turan::parse_graph_spec(ex_h);
        turan::Graph f = turan::parse_graph_spec(ex_f);
        turan::ExtremalReport rep = turan::ex_brute(ex_n, h, f, search_config(g, ex_maximal));
        if (ex_witnesses) {
            for (const std::string& w : rep.witnesses) std::cout << w << "\n";
            return;
        }
        ordered_json params;
        params["n"] = ex_n;
        params["h"] = ex_h;
        params["f"] = ex_f;
        params["maximalOnly"] = ex_maximal;
        params["maxNodes"] = g.max_nodes;
        ordered_json report = turan::report_shell("ex", std::move(params), g.timings, elapsed_ms());
        report["report"] = turan::extremal_report_json(rep);
        if (ex_audit) {
            int k = turan::chromatic_number(f) - 1;
            report["audit"] = turan::audit_json(turan::min_copy_degree_audit(rep, h, k));
        }
        print_report(std::move(report));
    });

    // enumerate
    auto* cmd_enum = add_subcommand("enumerate", "stream f-free isomorphism classes as graph6");
    int enum_n = 0;
    std::string enum_f;
    bool enum_maximal = false;
    cmd_enum->add_option("--n", enum_n, "host order")->required();
    cmd_enum->add_option("--f", enum_f, "forbidden graph spec")->required();
    cmd_enum->add_flag("--maximal-only", enum_maximal, "only edge-maximal f-free graphs");
    cmd_enum->callback([&] {
        turan::Graph f = turan::parse_graph_spec(enum_f);
        turan::enumerate_free(enum_n, f, search_config(g, enum_maximal), [](const turan::Graph& gg) {
            std::cout << turan::canonical_labeling(gg).bytes << "\n";
            return true;
        });
    });

    // classify
    auto* cmd_classify = add_subcommand("classify", "Turán-goodness verdict at this n");
    int cl_n = 0;
    std::string cl_h, cl_f;
    cmd_classify->add_option("--n", cl_n, "host order")->required();
    cmd_classify->add_option("--h", cl_h, "counted graph spec")->required();
    cmd_classify->add_option("--f", cl_f, "forbidden graph spec")->required();
    cmd_classify->callback([&] {
        turan::Graph h = turan::parse_graph_spec(cl_h);
        turan::Graph f = turan::parse_graph_spec(cl_f);
        turan::StabilityVerdict v = turan::classify(cl_n, h, f, search_config(g, false));
        ordered_json params;
        params["n"] = cl_n;
        params["h"] = cl_h;
        params["f"] = cl_f;
        params["maxNodes"] = g.max_nodes;
        ordered_json report = turan::report_shell("classify", std::move(params), g.timings, elapsed_ms());
        report["verdict"] = turan::verdict_json(v);
        print_report(std::move(report));
    });

    // profile
    auto* cmd_profile = add_subcommand("profile", "near-extremal classes with multipartite distances");
    int pr_n = 0;
    std::uint64_t pr_slack = 0;
    std::string pr_h, pr_f, pr_format = "json";
    cmd_profile->add_option("--n", pr_n, "host order")->required();
    cmd_profile->add_option("--h", pr_h, "counted graph spec")->required();
    cmd_profile->add_option("--f", pr_f, "forbidden graph spec")->required();
    cmd_profile->add_option("--slack", pr_slack, "keep classes with count >= optimum - slack")
        ->capture_default_str();
    cmd_profile->add_option("--format", pr_format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    cmd_profile->callback([&] {
        turan::Graph h = turan::parse_graph_spec(pr_h);
        turan::Graph f = turan::parse_graph_spec(pr_f);
        turan::ProfileTable t = turan::near_extremal_profile(pr_n, h, f, pr_slack, search_config(g, false));
        if (pr_format == "csv") {
            std::cout << turan::profile_csv(t);
            return;
        }
        ordered_json params;
        params["n"] = pr_n;
        params["h"] = pr_h;
        params["f"] = pr_f;
        params["slack"] = pr_slack;
        params["maxNodes"] = g.max_nodes;
        ordered_json report = turan::report_shell("profile", std::move(params), g.timings, elapsed_ms());
        report["profile"] = turan::profile_json(t);
        print_report(std::move(report));
    });

    // criticality
    auto* cmd_crit = add_subcommand("criticality", "color-critical structure of f");
    std::string crit_f, crit_h;
    std::vector<int> crit_parts;
    int crit_r = 0;
    auto* crit_h_opt = cmd_crit->add_option("--safety-h", crit_h,
                                            "also check within-part embeddings against this graph");
    auto* crit_parts_opt =
        cmd_crit->add_option("--parts", crit_parts, "host part sizes for the safety check")
            ->delimiter(',')
            ->needs(crit_h_opt);
    crit_h_opt->needs(crit_parts_opt);
    cmd_crit->add_option("--r", crit_r, "max-degree bound override (default: computed r)")
        ->needs(crit_h_opt);
    cmd_crit->add_option("--f", crit_f, "graph spec")->required();
    cmd_crit->callback([&] {
        turan::Graph f = turan::parse_graph_spec(crit_f);
        turan::CriticalRDetail detail = turan::critical_r_detail(f);
        ordered_json params;
        params["f"] = crit_f;
        if (!crit_h.empty()) {
            params["safetyH"] = crit_h;
            params["parts"] = crit_parts;
        }
        ordered_json report = turan::report_shell("criticality", std::move(params), g.timings, elapsed_ms());
        report["criticality"] = turan::criticality_json(turan::criticality(f), detail);
        if (!crit_h.empty()) {
            int r = crit_r > 0 ? crit_r : detail.r.value_or(0);
            if (r <= 0)
                throw turan::InvalidInstance("f has no color-critical vertex; pass --r explicitly");
            turan::Graph h = turan::parse_graph_spec(crit_h);
            report["criticality"]["safety"] =
                turan::safety_json(turan::embedding_safety_check(h, r, crit_parts, g.max_nodes));
        }
        print_report(std::move(report));
    });

    // optimize
    auto* cmd_opt = add_subcommand("optimize", "best complete multipartite host for h");
    std::string opt_h, opt_mode = "exact";
    int opt_n = 0, opt_k = 0, opt_restarts = 8;
    cmd_opt->add_option("--h", opt_h, "counted graph spec")->required();
    cmd_opt->add_option("--n", opt_n, "host order")->required();
    cmd_opt->add_option("--k", opt_k, "number of parts")->required();
    cmd_opt->add_option("--mode", opt_mode, "exact or hillclimb")
        ->check(CLI::IsMember({"exact", "hillclimb"}))
        ->capture_default_str();
    cmd_opt->add_option("--restarts", opt_restarts, "hillclimb restarts")->capture_default_str();
    cmd_opt->callback([&] {
        turan::Graph h = turan::parse_graph_spec(opt_h);
        turan::OptimizeOptions opts;
        opts.restarts = opt_restarts;
        opts.seed = g.seed;
        turan::OptimizeMode mode =
            opt_mode == "exact" ? turan::OptimizeMode::Exact : turan::OptimizeMode::HillClimb;
        turan::OptimizationResult r = turan::optimize_parts(h, opt_n, opt_k, mode, opts);
        ordered_json params;
        params["h"] = opt_h;
        params["n"] = opt_n;
        params["k"] = opt_k;
        params["mode"] = opt_mode;
        if (mode == turan::OptimizeMode::HillClimb) {
            params["restarts"] = opt_restarts;
            params["seed"] = g.seed;
        }
        ordered_json report = turan::report_shell("optimize", std::move(params), g.timings, elapsed_ms());
        report["optimization"] = turan::optimization_json(r);
        print_report(std::move(report));
    });

    // distance
    auto* cmd_dist = add_subcommand("distance", "edit distance to complete multipartite");
    std::string dist_g, dist_mode = "exact";
    int dist_k = 0, dist_restarts = 32;
    cmd_dist->add_option("--g", dist_g, "graph spec")->required();
    cmd_dist->add_option("--k", dist_k, "maximum number of classes")->required();
    cmd_dist->add_option("--mode", dist_mode, "exact or heuristic")
        ->check(CLI::IsMember({"exact", "heuristic"}))
        ->capture_default_str();
    cmd_dist->add_option("--restarts", dist_restarts, "heuristic restarts")->capture_default_str();
    cmd_dist->callback([&] {
        turan::Graph gg = turan::parse_graph_spec(dist_g);
        turan::DistanceOptions opts;
        opts.restarts = dist_restarts;
        opts.seed = g.seed;
        opts.max_nodes = g.max_nodes;
        turan::DistanceMode mode =
            dist_mode == "exact" ? turan::DistanceMode::Exact : turan::DistanceMode::Heuristic;
        turan::PartitionDistance d = turan::multipartite_distance(gg, dist_k, mode, opts);
        ordered_json params;
        params["g"] = dist_g;
        params["k"] = dist_k;
        params["mode"] = dist_mode;
        if (mode == turan::DistanceMode::Heuristic) {
            params["restarts"] = dist_restarts;
            params["seed"] = g.seed;
        } else {
            params["maxNodes"] = g.max_nodes;
        }
        ordered_json report = turan::report_shell("distance", std::move(params), g.timings, elapsed_ms());
        report["distance"] = turan::distance_json(d);
        print_report(std::move(report));
    });

    // symmetrize
    auto* cmd_sym = add_subcommand("symmetrize", "Zykov symmetrization from a seed graph");
    std::string sym_g, sym_h;
    int sym_k = 0, sym_restarts = 32;
    cmd_sym->add_option("--g", sym_g, "seed graph spec (must be K_{k+1}-free)")->required();
    cmd_sym->add_option("--h", sym_h, "counted graph spec")->required();
    cmd_sym->add_option("--k", sym_k, "forbid cliques on k+1 vertices")->required();
    cmd_sym->add_option("--restarts", sym_restarts, "random restarts")->capture_default_str();
    cmd_sym->callback([&] {
        turan::Graph seed_graph = turan::parse_graph_spec(sym_g);
        turan::Graph h = turan::parse_graph_spec(sym_h);
        std::uint64_t steps = 0;
        turan::Graph best = turan::symmetrize_search(
            seed_graph, h, sym_k, sym_restarts, g.seed,
            [&](int, const turan::Graph&, const turan::Count&) { ++steps; });
        ordered_json params;
        params["g"] = sym_g;
        params["h"] = sym_h;
        params["k"] = sym_k;
        params["restarts"] = sym_restarts;
        params["seed"] = g.seed;
        ordered_json report = turan::report_shell("symmetrize", std::move(params), g.timings, elapsed_ms());
        report["best"] = turan::canonical_labeling(best).bytes;
        report["count"] = turan::json_count(turan::count_copies(h, best));
        report["acceptedSteps"] = steps;
        print_report(std::move(report));
    });

    // construct
    auto* cmd_construct = add_subcommand("construct", "build a named family or composite instance");
    std::string con_family, con_json, con_json_file;
    cmd_construct->add_option("--family", con_family, "kind or kind:p1,p2,... (e.g. clique:5, turan:7,3)");
    cmd_construct->add_option("--json", con_json, "inline JSON instance: {\"family\"|\"h2\"|\"h3\": ...}");
    cmd_construct->add_option("--json-file", con_json_file, "path to a JSON instance file");
    cmd_construct->callback([&] {
        int sources = (!con_family.empty()) + (!con_json.empty()) + (!con_json_file.empty());
        if (sources != 1)
            throw turan::InvalidInstance("construct needs exactly one of --family, --json, --json-file");
        ordered_json params;
        ordered_json report;
        if (!con_family.empty()) {
            std::string kind = con_family;
            std::vector<int> ps;
            if (auto colon = con_family.find(':'); colon != std::string::npos) {
                kind = con_family.substr(0, colon);
                std::stringstream ss(con_family.substr(colon + 1));
                std::string item;
                while (std::getline(ss, item, ',')) {
                    try {
                        ps.push_back(std::stoi(item));
                    } catch (const std::exception&) {
                        throw turan::ParseError("family parameter is not a number: " + item);
                    }
                }
            }
            turan::Graph built = turan::build({turan::family_kind_from_string(kind), ps});
            params["family"] = con_family;
            report = turan::report_shell("construct", std::move(params), g.timings, elapsed_ms());
            report["graph6"] = turan::emit_graph6(built);
            report["n"] = built.n();
            report["edges"] = built.edge_count();
        } else {
            std::string text = con_json;
            if (!con_json_file.empty()) {
                std::ifstream in(con_json_file);
                if (!in) throw turan::ParseError("cannot open " + con_json_file);
                std::stringstream buf;
                buf << in.rdbuf();
                text = buf.str();
            }
            nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
            if (j.is_discarded()) throw turan::ParseError("malformed JSON instance");
            params["instance"] = nlohmann::ordered_json::parse(text);
            report = turan::report_shell("construct", std::move(params), g.timings, elapsed_ms());
            if (j.contains("family")) {
                turan::Graph built = turan::build(turan::family_from_json(j["family"]));
                report["graph6"] = turan::emit_graph6(built);
                report["n"] = built.n();
                report["edges"] = built.edge_count();
            } else if (j.contains("h2")) {
                turan::Graph built = turan::build_h2(turan::h2_from_json(j["h2"]));
                report["graph6"] = turan::emit_graph6(built);
                report["n"] = built.n();
                report["edges"] = built.edge_count();
                report["chromaticNumber"] = turan::chromatic_number(built);
            } else if (j.contains("h3")) {
                turan::H3Result r = turan::assemble_h3(turan::h3_from_json(j["h3"]));
                report["graph6"] = turan::emit_graph6(r.graph);
                report["n"] = r.graph.n();
                report["edges"] = r.graph.edge_count();
                report["valid"] = r.valid;
                report["reason"] = r.reason;
                report["chromaticNumber"] = turan::chromatic_number(r.graph);
            } else {
                throw turan::ParseError("JSON instance needs one of family, h2, h3");
            }
        }
        print_report(std::move(report));
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const turan::BudgetExceeded& e) {
        ordered_json out;
        out["schemaVersion"] = turan::kSchemaVersion;
        out["partial"] = true;
        out["error"] = e.what();
        out["nodesProcessed"] = e.nodes_processed;
        out["emitted"] = e.emitted;
        std::cout << out.dump(2) << "\n";
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const turan::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const turan::InvalidInstance& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const turan::UnsupportedScale& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
