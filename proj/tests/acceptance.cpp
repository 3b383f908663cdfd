// Acceptance suite: one pass/fail line per criterion, nonzero exit when
// any fails.  Criteria cover the hexagon fixed point and tree systoles,
// the c1 solver, the center-length pipeline, the small-distance ceilings,
// the chain/diameter formulas, the minimax elimination, and the property
// suites including CLI determinism.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "sysatlas/distance_bounds.hpp"
#include "sysatlas/holonomy.hpp"
#include "sysatlas/hyp_trig.hpp"
#include "sysatlas/pants_graph.hpp"
#include "sysatlas/surface_models.hpp"
#include "sysatlas/text_io.hpp"
#include "sysatlas/wp_bounds.hpp"

using namespace sysatlas;

namespace {

int failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

void report(int criterion, bool ok, const std::string& what, double secs) {
    std::printf("[%s] criterion %d: %s (%.2f s)\n", ok ? "PASS" : "FAIL", criterion,
                what.c_str(), secs);
    if (!ok) ++failures;
}

bool close(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

std::string run_cli(const std::string& args, int& exit_code) {
    const char* cli = std::getenv("SYSATLAS_CLI");
    if (!cli) {
        exit_code = -1;
        return "";
    }
    std::string cmd = std::string(cli) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        exit_code = -1;
        return "";
    }
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    int status = pclose(pipe);
    exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return out;
}

void criterion1() {
    Timer t;
    const double ac2 = std::acosh(2.0);
    bool ok = std::fabs(hexagon_side(ac2, ac2, ac2) - ac2) < 1e-12;
    for (int g : {3, 6}) {
        Timer each;
        HolonomyRep rep(
            FNSurface::from_gluing_graph(surface_from_tree(build_tree_for_genus(g))));
        auto sys = rep.systole_bruteforce(1.4);
        ok = ok && close(sys.value, ac2, 1e-9) && sys.minimizers == g;
        ok = ok && each.seconds() < 60.0;
    }
    report(1, ok, "hexagon fixed point; tree systole (arccosh 2, g minimizers) for g=3,6",
           t.seconds());
}

void criterion2() {
    Timer t;
    bool ok = true;
    for (int g = 2; g <= 100; ++g)
        ok = ok && close(solve_c1(g), closed_form_c1(g), 1e-9);
    for (int g : {2, 3, 5})
        for (double c : {2.0, 3.0, 4.0}) {
            double closed = 4 * std::asinh(std::cos(M_PI / (g + 1)) / std::sinh(c / 4));
            ok = ok && close(l_curve({g, c, 0.0}, {CurveFamily::alpha, 1}), closed, 1e-9);
        }
    ok = ok && t.seconds() < 10.0;
    report(2, ok, "solve_c1 vs closed form, g=2..100; holonomy alpha vs closed form",
           t.seconds());
}

void criterion3() {
    Timer t;
    bool ok = true;
    for (int n = 1; n <= 10; ++n) {
        int g = 3 * (1 << (n - 1));
        GluingGraph surf = surface_from_tree(build_tree_for_genus(g));
        double L = min_length_through_center(surf);
        double v = filling_lower_bound(L, std::acosh(2.0)).value;
        ok = ok && close(v, 0.25 * std::log(static_cast<double>(n)), 1e-12);
    }
    report(3, ok, "tree -> center length -> filling bound equals (1/4) log n, n=1..10",
           t.seconds());
}

void criterion4() {
    Timer t;
    bool ok = true;
    for (int g = 2; g <= 100; ++g) {
        C2T2Result s = solve_c2_t2(g);
        ok = ok && std::fabs(s.residual_alpha) < 1e-8 && std::fabs(s.residual_beta) < 1e-8;
        double mid = dist_s1_mid(g).value;
        double tw = twist_distance_bound_for_genus(g).value;
        ok = ok && mid <= 0.65 && tw <= 1.6450 && mid + tw <= 2.3;
    }
    ok = ok && t.seconds() < 300.0;
    report(4, ok, "ceilings 0.65 / 1.6450 / 2.3 and solver residuals, g=2..100",
           t.seconds());
}

void criterion5() {
    Timer t;
    auto du = diam_upper_s1(2);
    bool ok = close(du.value, 4 * std::acosh(std::sqrt(3.0)), 1e-12);
    ok = ok && du.value < 4 * std::log(12.0 / M_PI);
    double independent = 2 * std::asinh(std::cos(M_PI / 4) / std::sinh(6.980 / 4));
    ok = ok && close(chain_seam(6.980), independent, 1e-6);
    auto d13 = dist_large_lower(13);
    ok = ok && d13.closed_form.value < 0 && d13.closed_form.vacuous;
    int crossover = large_lower_crossover();
    ok = ok && crossover == 66;
    report(5, ok,
           "diam_upper_s1(2) exact; chain seam vs one-line oracle; g=13 vacuous; "
           "crossover g=66",
           t.seconds());
}

void criterion6() {
    Timer t;
    bool ok = true;
    std::mt19937 rng(101);
    std::uniform_real_distribution<double> qd(1e-2, 100.0);
    std::uniform_real_distribution<double> frac(1e-3, 0.999);
    for (int i = 0; i < 100; ++i) {
        double Q = qd(rng), L = 2 * Q * frac(rng);
        auto e = eliminate_sys(Q, L);
        ok = ok && std::fabs(e.numeric - e.closed_form) < 1e-8 && e.slackness < 1e-8;
    }
    auto fit = leading_coefficients();
    std::printf("    sqrt(log g) coefficients: recomputed %.4f, stated %.4f "
                "(discrepancy documented, not asserted)\n",
                fit.recomputed, fit.stated);
    ok = ok && close(fit.recomputed, 0.6437, 0.02);
    report(6, ok, "minimax elimination: closed form vs numeric, slackness, coefficients",
           t.seconds());
}

void criterion7() {
    Timer t;
    bool ok = true;

    // full-twist length-spectrum invariance, rotation family g=2, cutoff 3.0
    double c = closed_form_c1(2);
    FNSurface base = FNSurface::rotation_family(2, c, 0.0);
    auto la = HolonomyRep(base).enumerate_geodesics(3.0);
    auto lb = HolonomyRep(base.with_extra_twist(0, c)).enumerate_geodesics(3.0);
    ok = ok && la.size() == lb.size();
    for (size_t i = 0; ok && i < la.size(); ++i)
        ok = ok && std::fabs(la[i].length - lb[i].length) < 1e-9;

    // Phi' analytic vs finite difference; K >= 1 on the 1e4 grid
    C2T2Result s2 = solve_c2_t2(2);
    double theta = collar_angle(seam_half(s2.c2, 3));
    for (int i = 1; ok && i < 10000; ++i) {
        double phi = (M_PI / 2 - theta) + 2 * theta * i / 10000.0;
        double h = 1e-6;
        double fd = (twist_map_radial(phi + h, s2.t2, theta) -
                     twist_map_radial(phi - h, s2.t2, theta)) /
                    (2 * h);
        double an = twist_map_radial_deriv(phi, s2.t2, theta);
        ok = ok && std::fabs(fd - an) <= 1e-6 * (1 + std::fabs(an));
        ok = ok && twist_dilatation(phi, s2.t2, theta) >= 1.0;
    }

    // filling bound monotonicity on 1e3 random pairs
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> len(1e-3, 100.0);
    for (int i = 0; ok && i < 1000; ++i) {
        double L = len(rng), sy = len(rng), d = 1e-3 + 0.1 * len(rng);
        ok = ok && filling_lower_bound(L + d, sy).value > filling_lower_bound(L, sy).value;
        ok = ok && filling_lower_bound(L, sy + d).value < filling_lower_bound(L, sy).value;
    }

    // CLI determinism: two runs of every command are byte-identical
    bool cli_ok = true;
    for (const std::string& args :
         {std::string("tree --n 2"),
          std::string("systole --family tree --genus 3 --cutoff 1.4"),
          std::string("systole --family rot --genus 2 --param c2"),
          std::string("bounds --which hole --genus-range 3..12"),
          std::string("bounds --which wp --logg 100 10000"),
          std::string("bounds --which small --genus-range 2..4")}) {
        int ca = 0, cb = 0;
        std::string a = run_cli(args, ca), b = run_cli(args, cb);
        cli_ok = cli_ok && ca == 0 && cb == 0 && a == b && !a.empty();
    }
    {
        int c1_ = 0, c2_ = 0;
        run_cli("plot-dilatation --genus 2 --out /tmp/sysatlas_acc1.svg --csv /tmp/sysatlas_acc1.csv", c1_);
        run_cli("plot-dilatation --genus 2 --out /tmp/sysatlas_acc2.svg --csv /tmp/sysatlas_acc2.csv", c2_);
        auto slurp = [](const char* p) {
            std::string s;
            FILE* f = std::fopen(p, "rb");
            if (!f) return s;
            char buf[4096];
            size_t n;
            while ((n = fread(buf, 1, sizeof buf, f)) > 0) s.append(buf, n);
            std::fclose(f);
            return s;
        };
        cli_ok = cli_ok && c1_ == 0 && c2_ == 0 &&
                 slurp("/tmp/sysatlas_acc1.svg") == slurp("/tmp/sysatlas_acc2.svg") &&
                 slurp("/tmp/sysatlas_acc1.csv") == slurp("/tmp/sysatlas_acc2.csv");
    }
    if (!std::getenv("SYSATLAS_CLI")) {
        std::printf("    (SYSATLAS_CLI not set; CLI determinism checks skipped -> FAIL)\n");
        cli_ok = false;
    }
    ok = ok && cli_ok;

    report(7, ok,
           "full-twist invariance; Phi' vs finite differences; K >= 1; filling "
           "monotonicity; CLI determinism",
           t.seconds());
}

} // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    if (failures) {
        std::printf("%d criterion check(s) FAILED\n", failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
