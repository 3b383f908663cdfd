// Command-line front end: build tree surfaces, run the geodesic oracle,
// evaluate the distance bounds, and emit tables and the dilatation plot.
//
// Exit codes: 0 success, 2 usage or validation error, 3 computational
// failure.  Outputs are byte-identical for identical flags.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "sysatlas/distance_bounds.hpp"
#include "sysatlas/holonomy.hpp"
#include "sysatlas/hyp_trig.hpp"
#include "sysatlas/pants_graph.hpp"
#include "sysatlas/surface_models.hpp"
#include "sysatlas/text_io.hpp"
#include "sysatlas/wp_bounds.hpp"

using namespace sysatlas;

namespace {

void emit(const std::string& content, const std::string& path) {
    if (path.empty())
        std::fputs(content.c_str(), stdout);
    else
        write_text_file(path, content);
}

bool parse_range(const std::string& s, int& lo, int& hi) {
    auto dots = s.find("..");
    if (dots == std::string::npos) return false;
    try {
        lo = std::stoi(s.substr(0, dots));
        hi = std::stoi(s.substr(dots + 2));
    } catch (...) {
        return false;
    }
    return lo <= hi;
}

std::string bound_csv_header() {
    return csv_join({"name", "g", "value", "kind", "vacuous", "source"});
}

std::string bound_csv_row(const BoundReport& r, int g) {
    return csv_join({r.name, std::to_string(g), format_g15(r.value), r.kind,
                     r.vacuous ? "1" : "0", r.source});
}

int cmd_tree(int n, int genus, const std::string& out) {
    TrivalentTree t = (n > 0) ? build_joined_tree(n) : build_tree_for_genus(genus);
    GluingGraph g = surface_from_tree(t);
    nlohmann::json doc{{"tree", t.to_json()},
                       {"surface", g.to_json()},
                       {"stats",
                        {{"vertices", t.vertex_count()},
                         {"leaves", t.leaf_count()},
                         {"min_center_to_leaf", t.min_center_to_leaf()},
                         {"genus", g.genus()}}}};
    emit(doc.dump(2) + "\n", out);
    return 0;
}

int cmd_systole(const std::string& family, int genus, std::optional<double> cutoff,
                const std::string& param, std::optional<double> c_opt,
                std::optional<double> t_opt, double cuff, const std::string& out,
                bool serial, std::size_t max_nodes) {
    if (family == "tree" && genus < 3)
        throw CLI::ValidationError("--genus", "tree surfaces need genus >= 3");
    FNSurface surface = [&] {
        if (family == "tree") {
            return FNSurface::from_gluing_graph(surface_from_tree(build_tree_for_genus(genus)));
        } else if (family == "rot") {
            double c, t;
            if (c_opt) {
                c = *c_opt;
                t = t_opt.value_or(0.0);
            } else if (param == "c2") {
                C2T2Result s = solve_c2_t2(genus);
                c = s.c2;
                t = s.t2;
            } else { // default: c1
                c = solve_c1(genus);
                t = 0.0;
            }
            return FNSurface::rotation_family(genus, c, t);
        } else {
            return FNSurface::chain_surface(genus, cuff);
        }
    }();

    double co;
    if (cutoff) {
        co = *cutoff;
    } else if (family == "rot") {
        // default: just above the family defining length
        co = surface.edges().front().length + 0.1;
    } else {
        throw CLI::ValidationError("--cutoff", "required for this family");
    }

    HolonomyRep rep(surface);
    EnumOptions opts;
    opts.parallel = !serial;
    opts.max_nodes = max_nodes;
    auto recs = rep.enumerate_geodesics(co, opts);

    std::string csv = csv_join({"word", "length"});
    for (const auto& r : recs) csv += csv_join({r.word, format_g15(r.length)});
    emit(csv, out);
    if (recs.empty()) {
        std::fprintf(stderr, "no geodesic under cutoff %s\n", format_g15(co).c_str());
    } else {
        auto sys = rep.systole_bruteforce(co, opts);
        std::fprintf(stderr, "sys %s count %d\n", format_g15(sys.value).c_str(),
                     sys.minimizers);
    }
    return 0;
}

int cmd_bounds(const std::string& which, const std::string& range, double cuff,
               double eps, std::optional<double> mp_B, std::vector<double> logg,
               const std::string& fmt, const std::string& out,
               const std::string& golden_out) {
    std::string csv;
    nlohmann::json jrows = nlohmann::json::array();
    std::map<int, std::array<double, 3>> small_values; // g -> mid, twist, total
    int ok_rows = 0, failed_rows = 0;

    auto push = [&](const BoundReport& r, int g) {
        csv += bound_csv_row(r, g);
        nlohmann::json j = r.to_json();
        j["g"] = g;
        jrows.push_back(j);
        ++ok_rows;
    };

    if (which == "hole" || which == "small" || which == "large") {
        int lo = 0, hi = 0;
        if (!parse_range(range, lo, hi))
            throw CLI::ValidationError("--genus-range", "expected A..B");
        csv = bound_csv_header();
        for (int g = lo; g <= hi; ++g) {
            try {
                if (which == "hole") {
                    push(thm_hole_bound(g), g);
                    push(hole_bound_exact(g), g);
                } else if (which == "small") {
                    BoundReport mid = dist_s1_mid(g);
                    BoundReport tw = twist_distance_bound_for_genus(g);
                    BoundReport tot = dist_small_total(g);
                    small_values[g] = {mid.value, tw.value, tot.value};
                    push(mid, g);
                    push(tw, g);
                    push(tot, g);
                } else {
                    LargeDistance d = dist_large_lower(g, cuff);
                    push(diam_lower_s3(g, cuff), g);
                    push(diam_upper_s1(g), g);
                    push(d.closed_form, g);
                    push(d.recomputed, g);
                }
            } catch (const std::exception& e) {
                ++failed_rows;
                std::fprintf(stderr, "g=%d failed: %s\n", g, e.what());
            }
        }
        if (which == "large") {
            try {
                std::fprintf(stderr, "closed-form crossover g = %d\n",
                             large_lower_crossover(std::max(hi, 200), cuff));
            } catch (const std::exception& e) {
                std::fprintf(stderr, "crossover scan: %s\n", e.what());
            }
        }
        if (!golden_out.empty() && which == "small") {
            // solved parameters per genus plus the three bound values
            nlohmann::json rows = golden_json(golden_table(lo, hi));
            for (auto& row : rows) {
                auto it = small_values.find(row.at("g").get<int>());
                if (it == small_values.end()) continue;
                row["dist_s1_mid"] = it->second[0];
                row["twist_distance_bound"] = it->second[1];
                row["dist_small_total"] = it->second[2];
            }
            write_text_file(golden_out, rows.dump(2) + "\n");
        }
    } else if (which == "wp") {
        WpConstants consts;
        consts.eps = eps;
        csv = csv_join({"log_g", "teich_threshold", "wp_stated", "wp_recomputed", "eps"});
        for (const auto& row : threshold_table(logg, consts)) {
            csv += csv_join({format_g15(row.log_g), format_g15(row.teich_threshold),
                             format_g15(row.wp_stated), format_g15(row.wp_recomputed),
                             format_g15(consts.eps)});
            jrows.push_back({{"log_g", row.log_g},
                             {"teich_threshold", row.teich_threshold},
                             {"wp_stated", row.wp_stated},
                             {"wp_recomputed", row.wp_recomputed},
                             {"eps", consts.eps}});
            ++ok_rows;
        }
        CoefficientFit fit = leading_coefficients(1e3, 1e6, consts);
        std::fprintf(stderr, "sqrt(log g) coefficient: recomputed %s vs stated %s\n",
                     format_g15(fit.recomputed).c_str(), format_g15(fit.stated).c_str());
    } else if (which == "teich") {
        csv = csv_join({"log_g", "lhs", "rhs", "holds"});
        for (double lg : logg) {
            double llg = std::log(lg);
            double big = lg - 2 * llg, small = llg / 5;
            bool valid = llg > 0 && big > 0;
            double lhs = valid ? 0.25 * std::log(big / small) : 0.0;
            csv += csv_join({format_g15(lg), format_g15(lhs), format_g15(small),
                             (valid && lhs > small) ? "1" : "0"});
            ++ok_rows;
        }
        double cross = teich_threshold_crossover(1e300);
        std::fprintf(stderr, "threshold inequality holds from g = %s on\n",
                     format_g15(cross).c_str());
    } else if (which == "mp") {
        if (!mp_B) throw CLI::ValidationError("--mp-B", "required for --which mp");
        csv = csv_join({"log_g", "c_g", "tail"});
        for (double lg : logg) {
            double cg = std::log(lg);
            csv += csv_join({format_g15(lg), format_g15(cg),
                             format_g15(mp_tail(cg, *mp_B))});
            ++ok_rows;
        }
    } else {
        throw CLI::ValidationError("--which", "unknown table " + which);
    }

    if (fmt == "json")
        emit(jrows.dump(2) + "\n", out);
    else
        emit(csv, out);
    if (ok_rows == 0 && failed_rows > 0) return 3;
    return 0;
}

int cmd_plot(int genus, const std::string& out, std::string csv_path, int grid,
             std::optional<double> t2_override) {
    double t2, theta;
    C2T2Result s = solve_c2_t2(genus);
    t2 = t2_override.value_or(s.t2);
    theta = collar_angle(seam_half(s.c2, genus + 1));

    std::vector<double> phis(grid), ks(grid);
    double lo = M_PI / 2 - theta, hi = M_PI / 2 + theta;
    std::size_t arg = 0;
    for (int i = 0; i < grid; ++i) {
        phis[i] = lo + (hi - lo) * i / (grid - 1);
        ks[i] = twist_dilatation(phis[i], t2, theta);
        if (ks[i] > ks[arg]) arg = i;
    }
    std::string csv = csv_join({"phi", "K"});
    for (int i = 0; i < grid; ++i)
        csv += csv_join({format_g15(phis[i]), format_g15(ks[i])});
    if (csv_path.empty()) {
        csv_path = out;
        auto dot = csv_path.rfind('.');
        if (dot != std::string::npos) csv_path.resize(dot);
        csv_path += ".csv";
    }
    write_text_file(csv_path, csv);
    write_text_file(out, svg_line_plot(phis, ks, arg, "phi", "K"));
    BoundReport b = twist_distance_bound(t2, theta);
    std::fprintf(stderr, "sup K %s, half-log bound %s\n",
                 format_g15(b.inputs[2].second).c_str(), format_g15(b.value).c_str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
#ifdef _OPENMP
    if (const char* th = std::getenv("SYSTOLIC_ATLAS_THREADS")) {
        int n = std::atoi(th);
        if (n > 0) omp_set_num_threads(n);
    }
#endif

    CLI::App app{"hyperbolic surface toolkit: systole oracle and distance bounds"};
    app.require_subcommand(1);

    // tree
    auto* tree = app.add_subcommand("tree", "build a trivalent-tree surface");
    int tree_n = 0, tree_genus = 0;
    std::string tree_out;
    auto* opt_n = tree->add_option("--n", tree_n, "depth of the three joined binary trees")
                      ->check(CLI::PositiveNumber);
    auto* opt_g = tree->add_option("--genus", tree_genus, "target genus (>= 3)")
                      ->check(CLI::Range(3, 1 << 20));
    tree->add_option("--out", tree_out, "write JSON here instead of stdout");
    opt_n->excludes(opt_g);

    // systole
    auto* sys = app.add_subcommand("systole", "enumerate closed geodesics and report the systole");
    std::string family, param = "c1", sys_out;
    int sys_genus = 0;
    double sys_cutoff = -1, sys_cuff = 6.980, sys_c = -1, sys_t = 0;
    bool serial = false;
    std::size_t max_nodes = 20'000'000;
    sys->add_option("--family", family, "tree | rot | chain")
        ->required()
        ->check(CLI::IsMember({"tree", "rot", "chain"}));
    sys->add_option("--genus", sys_genus, "genus")->required()->check(CLI::Range(2, 64));
    auto* opt_cut = sys->add_option("--cutoff", sys_cutoff, "length cutoff")
                        ->check(CLI::PositiveNumber);
    sys->add_option("--param", param, "rot parameter point: c1 | c2")
        ->check(CLI::IsMember({"c1", "c2"}));
    auto* opt_c = sys->add_option("--c", sys_c, "explicit rot cuff length")
                      ->check(CLI::PositiveNumber);
    sys->add_option("--t", sys_t, "explicit rot twist");
    sys->add_option("--cuff", sys_cuff, "chain cuff length")->check(CLI::PositiveNumber);
    sys->add_option("--out", sys_out, "write CSV here instead of stdout");
    sys->add_flag("--serial", serial, "disable the parallel search");
    sys->add_option("--max-nodes", max_nodes, "search budget");

    // bounds
    auto* bounds = app.add_subcommand("bounds", "evaluate distance bounds and threshold tables");
    std::string which, range = "2..10", fmt = "csv", bounds_out, golden_out;
    double bounds_cuff = 6.980, eps = 0.1;
    std::optional<double> mp_B;
    double mp_B_val = -1;
    std::vector<double> logg{100, 1000, 10000, 100000, 1000000};
    bounds->add_option("--which", which, "hole | small | large | wp | teich | mp")
        ->required()
        ->check(CLI::IsMember({"hole", "small", "large", "wp", "teich", "mp"}));
    bounds->add_option("--genus-range", range, "A..B inclusive");
    bounds->add_option("--cuff", bounds_cuff, "chain cuff length")->check(CLI::PositiveNumber);
    bounds->add_option("--eps", eps, "profile slack epsilon")->check(CLI::PositiveNumber);
    auto* opt_mpB = bounds->add_option("--mp-B", mp_B_val, "tail constant B (no default)");
    bounds->add_option("--logg", logg, "log g grid values");
    bounds->add_option("--format", fmt, "csv | json")->check(CLI::IsMember({"csv", "json"}));
    bounds->add_option("--out", bounds_out, "write here instead of stdout");
    bounds->add_option("--golden-out", golden_out, "also write the solved-parameter table");

    // plot-dilatation
    auto* plot = app.add_subcommand("plot-dilatation", "plot the collar twist dilatation");
    int plot_genus = 0, plot_grid = 2001;
    std::string plot_out, plot_csv;
    std::optional<double> t2_over;
    double t2_val = -1;
    plot->add_option("--genus", plot_genus, "genus")->required()->check(CLI::Range(2, 1000));
    plot->add_option("--out", plot_out, "SVG output path")->required();
    plot->add_option("--csv", plot_csv, "companion CSV path");
    plot->add_option("--grid", plot_grid, "grid size")->check(CLI::Range(3, 10'000'000));
    auto* opt_t2 = plot->add_option("--t2", t2_val, "override the twist parameter");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (tree->parsed()) {
            if (tree_n == 0 && tree_genus == 0)
                throw CLI::ValidationError("tree", "one of --n or --genus is required");
            return cmd_tree(tree_n, tree_genus, tree_out);
        }
        if (sys->parsed()) {
            std::optional<double> cut;
            if (*opt_cut) cut = sys_cutoff;
            std::optional<double> c_opt, t_opt;
            if (*opt_c) {
                c_opt = sys_c;
                t_opt = sys_t;
            }
            return cmd_systole(family, sys_genus, cut, param, c_opt, t_opt, sys_cuff,
                               sys_out, serial, max_nodes);
        }
        if (bounds->parsed()) {
            if (*opt_mpB) mp_B = mp_B_val;
            return cmd_bounds(which, range, bounds_cuff, eps, mp_B, logg, fmt, bounds_out,
                              golden_out);
        }
        if (plot->parsed()) {
            if (*opt_t2) t2_over = t2_val;
            return cmd_plot(plot_genus, plot_out, plot_csv, plot_grid, t2_over);
        }
    } catch (const CLI::ValidationError& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    }
    return 2;
}
