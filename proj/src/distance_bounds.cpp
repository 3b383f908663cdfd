#include "sysatlas/distance_bounds.hpp"

#include <cmath>

#include "sysatlas/hyp_trig.hpp"
#include "sysatlas/surface_models.hpp"

namespace sysatlas {

nlohmann::json BoundReport::to_json() const {
    nlohmann::json in = nlohmann::json::object();
    for (const auto& [k, v] : inputs) in[k] = v;
    return {{"name", name},   {"value", value},   {"kind", kind},
            {"inputs", in},   {"source", source}, {"vacuous", vacuous}};
}

BoundReport filling_lower_bound(double L, double sys) {
    if (!(L > 0) || !(sys > 0)) throw DomainError("lengths must be positive");
    BoundReport r;
    r.name = "filling_lower_bound";
    r.kind = "lower";
    r.value = 0.25 * std::log(L / sys);
    r.inputs = {{"L", L}, {"sys", sys}};
    r.source = "0.25*log(L/sys)";
    r.vacuous = !(r.value > 0);
    return r;
}

double hole_bound_formula(double g) {
    if (!(g > 0)) throw DomainError("genus must be positive");
    return 0.25 * std::log(std::log(g) - std::log(12.0));
}

int tree_parameter_n(int g) {
    if (g < 3) throw DomainError("tree surfaces need genus >= 3");
    int n = 1;
    while (3 * (1 << n) <= g) ++n;
    return n;
}

BoundReport thm_hole_bound(int g) {
    if (g < 3) throw DomainError("tree surfaces need genus >= 3");
    BoundReport r;
    r.name = "hole_bound";
    r.kind = "lower";
    r.inputs = {{"g", static_cast<double>(g)}};
    r.source = "0.25*log(log g - log 12)";
    double arg = std::log(static_cast<double>(g)) - std::log(12.0);
    if (arg <= 0.0) {
        // formula undefined below g = 12; the trivial bound 0 remains true
        r.value = 0.0;
        r.vacuous = true;
    } else {
        r.value = 0.25 * std::log(arg);
        r.vacuous = !(r.value > 0);
    }
    return r;
}

BoundReport hole_bound_exact(int g) {
    int n = tree_parameter_n(g);
    BoundReport r;
    r.name = "hole_bound_exact";
    r.kind = "lower";
    r.value = 0.25 * std::log(static_cast<double>(n));
    r.inputs = {{"g", static_cast<double>(g)}, {"n", static_cast<double>(n)}};
    r.source = "0.25*log(n) for 3*2^(n-1) <= g < 3*2^n";
    r.vacuous = !(r.value > 0);
    return r;
}

double ext_ratio_distance(double ext1, double ext2) {
    if (!(ext1 > 0) || !(ext2 > 0)) throw DomainError("extremal lengths must be positive");
    return 0.5 * std::fabs(std::log(ext1 / ext2));
}

namespace {

struct MidParams {
    double c1, c2, theta;
};

MidParams mid_params(int g) {
    double c1 = solve_c1(g);
    C2T2Result s = solve_c2_t2(g);
    double theta = collar_angle(seam_half(s.c2, g + 1));
    return {c1, s.c2, theta};
}

} // namespace

BoundReport dist_s1_mid(int g) {
    MidParams p = mid_params(g);
    double lower1 = maskit_bounds(p.c1, p.theta).lower;  // c1/pi
    double upper2 = maskit_bounds(p.c2, p.theta).upper;  // c2/(2 theta)
    BoundReport r;
    r.name = "dist_s1_mid";
    r.kind = "upper";
    r.value = ext_ratio_distance(upper2, lower1);
    r.inputs = {{"g", static_cast<double>(g)}, {"c1", p.c1}, {"c2", p.c2}, {"theta", p.theta}};
    r.source = "0.5*log(pi*c2/(2*theta*c1))";
    return r;
}

double twist_map_radial(double phi, double t2, double theta) {
    if (!(t2 >= 0)) throw DomainError("twist must be non-negative");
    if (!(theta > 0) || !(theta < M_PI / 2)) throw DomainError("collar angle out of range");
    if (phi < M_PI / 2 - theta - 1e-12 || phi > M_PI / 2 + theta + 1e-12)
        throw DomainError("phi outside the collar strip");
    double a = std::sinh(t2 / 2) * std::cos(phi) / std::sin(theta);
    return a + std::sqrt(a * a + 1);
}

double twist_map_radial_deriv(double phi, double t2, double theta) {
    double a = std::sinh(t2 / 2) * std::cos(phi) / std::sin(theta);
    double da = -std::sinh(t2 / 2) * std::sin(phi) / std::sin(theta);
    double phi_v = a + std::sqrt(a * a + 1);
    return da * phi_v / std::sqrt(a * a + 1);
}

double twist_dilatation(double phi, double t2, double theta) {
    double f = twist_map_radial(phi, t2, theta);
    double fp = twist_map_radial_deriv(phi, t2, theta);
    double s = std::sqrt(f * f + 0.25 * fp * fp);
    return (s + 0.5 * std::fabs(fp)) / (s - 0.5 * std::fabs(fp));
}

BoundReport twist_distance_bound(double t2, double theta, int grid) {
    if (grid < 3) throw DomainError("grid too small");
    double lo = M_PI / 2 - theta, hi = M_PI / 2 + theta;
    double best = 1.0, best_phi = M_PI / 2;
#ifdef _OPENMP
#pragma omp parallel
    {
        double th_best = 1.0, th_phi = M_PI / 2;
#pragma omp for nowait
        for (int i = 0; i < grid; ++i) {
            double phi = lo + (hi - lo) * i / (grid - 1);
            double k = twist_dilatation(phi, t2, theta);
            if (k > th_best) {
                th_best = k;
                th_phi = phi;
            }
        }
#pragma omp critical
        if (th_best > best || (th_best == best && th_phi < best_phi)) {
            best = th_best;
            best_phi = th_phi;
        }
    }
#else
    for (int i = 0; i < grid; ++i) {
        double phi = lo + (hi - lo) * i / (grid - 1);
        double k = twist_dilatation(phi, t2, theta);
        if (k > best) {
            best = k;
            best_phi = phi;
        }
    }
#endif
    // golden-section refinement around the grid maximum
    double h = (hi - lo) / (grid - 1);
    double a = std::max(lo, best_phi - h), b = std::min(hi, best_phi + h);
    const double gr = (std::sqrt(5.0) - 1) / 2;
    double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
    double f1 = twist_dilatation(x1, t2, theta), f2 = twist_dilatation(x2, t2, theta);
    for (int it = 0; it < 200 && b - a > 1e-14; ++it) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + gr * (b - a);
            f2 = twist_dilatation(x2, t2, theta);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - gr * (b - a);
            f1 = twist_dilatation(x1, t2, theta);
        }
    }
    double sup = std::max(best, std::max(f1, f2));
    BoundReport r;
    r.name = "twist_distance_bound";
    r.kind = "upper";
    r.value = 0.5 * std::log(sup);
    r.inputs = {{"t2", t2}, {"theta", theta}, {"sup_K", sup}, {"arg_phi", best_phi}};
    r.source = "0.5*log(sup K) over the collar radial stretch";
    return r;
}

BoundReport twist_distance_bound_for_genus(int g, int grid) {
    C2T2Result s = solve_c2_t2(g);
    double theta = collar_angle(seam_half(s.c2, g + 1));
    BoundReport r = twist_distance_bound(s.t2, theta, grid);
    r.inputs.emplace_back("g", static_cast<double>(g));
    r.inputs.emplace_back("c2", s.c2);
    return r;
}

BoundReport dist_small_total(int g) {
    BoundReport mid = dist_s1_mid(g);
    BoundReport tw = twist_distance_bound_for_genus(g);
    BoundReport r;
    r.name = "dist_small_total";
    r.kind = "upper";
    r.value = mid.value + tw.value;
    r.inputs = {{"g", static_cast<double>(g)},
                {"mid", mid.value},
                {"twist", tw.value}};
    r.source = "dist_s1_mid + twist_distance_bound";
    return r;
}

BoundReport diam_lower_s3(int g, double cuff) {
    if (g < 5) throw DomainError("chain diameter bound needs genus >= 5");
    double d = chain_seam(cuff);
    double steps = std::floor((g - 1) / 2.0 - 2.0);
    BoundReport r;
    r.name = "diam_lower_s3";
    r.kind = "lower";
    r.value = d * steps;
    // the cuff is an external input constant; report the +-0.01 sensitivity
    r.inputs = {{"g", static_cast<double>(g)},
                {"cuff", cuff},
                {"seam", d},
                {"steps", steps},
                {"variant_0.6_per_step", 0.6 * std::floor((g - 5) / 2.0)},
                {"value_cuff_minus_0.01", chain_seam(cuff - 0.01) * steps},
                {"value_cuff_plus_0.01", chain_seam(cuff + 0.01) * steps}};
    r.source = "chain_seam(cuff)*floor((g-1)/2 - 2) with cuff an input constant";
    r.vacuous = !(r.value > 0);
    return r;
}

BoundReport diam_upper_s1(int g) {
    if (g < 2) throw DomainError("needs genus >= 2");
    double half_diag = right_triangle_hyp(M_PI / 4, M_PI / (2 * g + 2));
    double exact = 4 * half_diag;
    double closed = 4 * std::log((4.0 * g + 4.0) / M_PI);
    BoundReport r;
    r.name = "diam_upper_s1";
    r.kind = "upper";
    r.value = exact;
    r.inputs = {{"g", static_cast<double>(g)}, {"closed_form", closed}};
    r.source = "4*arccosh(cot(pi/(2g+2))) with closed form 4*log((4g+4)/pi)";
    return r;
}

LargeDistance dist_large_lower(int g, double cuff) {
    if (g < 13) throw DomainError("large-distance bound stated for genus >= 13");
    LargeDistance out;

    double lg = std::log(static_cast<double>(g) - 6.0);
    double kk = 0.5 * std::log((40.0 / 3.0) * std::log((4.0 * g + 4.0) / M_PI));
    out.closed_form.name = "dist_large_lower";
    out.closed_form.kind = "lower";
    out.closed_form.value = 0.5 * lg - kk;
    out.closed_form.inputs = {{"g", static_cast<double>(g)}};
    out.closed_form.source = "0.5*log(g-6) - 0.5*log((40/3)*log((4g+4)/pi))";
    out.closed_form.vacuous = !(out.closed_form.value > 0);

    BoundReport lower = diam_lower_s3(g, cuff);
    BoundReport upper = diam_upper_s1(g);
    out.recomputed.name = "dist_large_lower_recomputed";
    out.recomputed.kind = "lower";
    out.recomputed.value =
        (lower.value > 0) ? 0.5 * std::log(lower.value / upper.value) : 0.0;
    auto variant = [&](double c) {
        double v = chain_seam(c) * std::floor((g - 1) / 2.0 - 2.0);
        return (v > 0) ? 0.5 * std::log(v / upper.value) : 0.0;
    };
    out.recomputed.inputs = {{"g", static_cast<double>(g)},
                             {"diam_lower", lower.value},
                             {"diam_upper_exact", upper.value},
                             {"value_cuff_minus_0.01", variant(cuff - 0.01)},
                             {"value_cuff_plus_0.01", variant(cuff + 0.01)}};
    out.recomputed.source = "0.5*log(diam_lower_s3/diam_upper_s1)";
    out.recomputed.vacuous = !(out.recomputed.value > 0);
    return out;
}

int large_lower_crossover(int g_max, double cuff) {
    for (int g = 13; g <= g_max; ++g)
        if (!dist_large_lower(g, cuff).closed_form.vacuous) return g;
    throw DomainError("no positive closed-form bound in the scanned range");
}

} // namespace sysatlas
