#include "sysatlas/surface_models.hpp"

#include <cmath>
#include <cstdio>

#include "sysatlas/hyp_trig.hpp"

namespace sysatlas {

namespace {

void check_spec(const RotFamilySpec& s) {
    if (s.g < 2) throw SolverError("rotation family needs genus >= 2");
    if (!(s.c > 0)) throw SolverError("cuff length must be positive");
}

// alpha = seam(A) * seam(B) crossing cuffs 1 and 2; the frame development
// picks up one full winding of cuff 1 which the trailing w1.1 supplies.
// beta inserts one opposite winding of cuff 2 at its crossing.
double rot_length(int g, double c, double t, CurveFamily fam) {
    if (fam == CurveFamily::gamma) return c;
    FNSurface s = FNSurface::rotation_family(g, c, t);
    Mat2 rq = hyp_rotation(M_PI / 2);
    auto trav = [&](int piece, int slot) {
        return hyp_translation(s.half_cuff(piece, slot)) * rq *
               hyp_translation(s.seam(piece, slot)) * rq;
    };
    auto cross = [&](int e) {
        return hyp_translation(s.edges()[e].twist + s.cross_offset(e)) * hyp_rotation(M_PI);
    };
    Mat2 m = trav(0, 1);
    if (fam == CurveFamily::beta) m = m * hyp_translation(-c);
    m = m * cross(1) * trav(1, 1).inverse() * hyp_translation(c) * cross(0);
    return translation_length(m);
}

} // namespace

double l_curve(const RotFamilySpec& spec, const NamedCurve& curve) {
    check_spec(spec);
    if (curve.index < 1 || curve.index > spec.g + 1)
        throw SolverError("curve index out of range 1..g+1");
    return rot_length(spec.g, spec.c, spec.t, curve.family);
}

std::string rot_curve_word(const RotFamilySpec& spec, CurveFamily family) {
    check_spec(spec);
    switch (family) {
    case CurveFamily::gamma:
        return "w0.1";
    case CurveFamily::alpha:
        return "t0.1 x1 t1.1' w1.1 x0";
    case CurveFamily::beta:
        return "t0.1 w0.2' x1 t1.1' w1.1 x0";
    }
    throw SolverError("unknown curve family");
}

double closed_form_c1(int g) {
    if (g < 2) throw SolverError("rotation family needs genus >= 2");
    return 4 * std::asinh(std::sqrt(std::cos(M_PI / (g + 1))));
}

double solve_c1(int g) {
    if (g < 2) throw SolverError("rotation family needs genus >= 2");
    double lo = 0.1, hi = 10.0;
    auto f = [&](double c) { return rot_length(g, c, 0.0, CurveFamily::alpha) - c; };
    double flo = f(lo);
    if (!(flo > 0) || !(f(hi) < 0)) throw SolverError("c1 bracket [0.1, 10] does not straddle");
    for (int i = 0; i < 200 && hi - lo > 1e-14 * (1 + hi); ++i) {
        double mid = (lo + hi) / 2;
        (f(mid) > 0 ? lo : hi) = mid;
    }
    return (lo + hi) / 2;
}

C2T2Result solve_c2_t2(int g, bool force_t_zero) {
    if (g < 2) throw SolverError("rotation family needs genus >= 2");
    auto la = [&](double c, double t) { return rot_length(g, c, t, CurveFamily::alpha); };
    auto lb = [&](double c, double t) { return rot_length(g, c, t, CurveFamily::beta); };

    if (force_t_zero) {
        double c1 = solve_c1(g);
        return {c1, 0.0, la(c1, 0.0) - c1, lb(c1, 0.0) - c1};
    }

    // inner: balance l_beta(c, t) = l_alpha(c, t) over t in (0, c/2);
    // l_beta decreases and l_alpha increases in t, so the root is simple
    auto t_balance = [&](double c) {
        double lo = 0.0, hi = c / 2;
        double flo = lb(c, lo) - la(c, lo);
        if (!(flo > 0)) return 0.0;
        if (lb(c, hi) - la(c, hi) > 0) return hi;
        for (int i = 0; i < 200 && hi - lo > 1e-14 * (1 + hi); ++i) {
            double mid = (lo + hi) / 2;
            ((lb(c, mid) - la(c, mid) > 0) ? lo : hi) = mid;
        }
        return (lo + hi) / 2;
    };

    // outer: l_alpha(c, t*(c)) = c; alpha excess is positive for small c
    double lo = 0.5, hi = 10.0;
    auto outer = [&](double c) { return la(c, t_balance(c)) - c; };
    if (!(outer(lo) > 0) || !(outer(hi) < 0))
        throw SolverError("c2 bracket [0.5, 10] does not straddle");
    for (int i = 0; i < 200 && hi - lo > 1e-14 * (1 + hi); ++i) {
        double mid = (lo + hi) / 2;
        (outer(mid) > 0 ? lo : hi) = mid;
    }
    double c2 = (lo + hi) / 2, t2 = t_balance(c2);

    // Newton polish on F = (l_alpha - c, l_beta - c) with a finite
    // difference Jacobian; keep the step only when it helps
    for (int it = 0; it < 3; ++it) {
        double f1 = la(c2, t2) - c2, f2 = lb(c2, t2) - c2;
        double r0 = std::hypot(f1, f2);
        if (r0 < 1e-14) break;
        double h = 1e-7;
        double j11 = (la(c2 + h, t2) - la(c2 - h, t2)) / (2 * h) - 1;
        double j12 = (la(c2, t2 + h) - la(c2, t2 - h)) / (2 * h);
        double j21 = (lb(c2 + h, t2) - lb(c2 - h, t2)) / (2 * h) - 1;
        double j22 = (lb(c2, t2 + h) - lb(c2, t2 - h)) / (2 * h);
        double det = j11 * j22 - j12 * j21;
        if (std::fabs(det) < 1e-14) break;
        double dc = (f1 * j22 - f2 * j12) / det;
        double dt = (f2 * j11 - f1 * j21) / det;
        double c_new = c2 - dc, t_new = t2 - dt;
        if (!(c_new > 0) || !(t_new >= 0) || t_new > c_new / 2) break;
        double r1 = std::hypot(la(c_new, t_new) - c_new, lb(c_new, t_new) - c_new);
        if (r1 >= r0) break;
        c2 = c_new;
        t2 = t_new;
    }

    C2T2Result r{c2, t2, la(c2, t2) - c2, lb(c2, t2) - c2};
    if (std::fabs(r.residual_alpha) > 1e-8 || std::fabs(r.residual_beta) > 1e-8)
        throw SolverError("c2/t2 solver failed to reach residual 1e-8");
    return r;
}

double chain_seam(double cuff) {
    if (!(cuff > 0)) throw SolverError("chain cuff must be positive");
    return 2 * std::asinh(std::cos(M_PI / 4) / std::sinh(cuff / 4));
}

double chain_seam(const ChainSpec& spec) { return chain_seam(spec.cuff); }

std::vector<GoldenRow> golden_table(int g_min, int g_max, bool parallel) {
    if (g_min < 2 || g_max < g_min) throw SolverError("bad genus range");
    std::vector<GoldenRow> rows(g_max - g_min + 1);
    std::exception_ptr err;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
    for (int g = g_min; g <= g_max; ++g) {
        try {
            C2T2Result r = solve_c2_t2(g);
            rows[g - g_min] = {g, solve_c1(g), r.c2, r.t2, r.residual_alpha, r.residual_beta};
        } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
            if (!err) err = std::current_exception();
        }
    }
    (void)parallel;
    if (err) std::rethrow_exception(err);
    return rows;
}

nlohmann::json golden_json(const std::vector<GoldenRow>& rows) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& r : rows)
        out.push_back({{"g", r.g},
                       {"c1", r.c1},
                       {"c2", r.c2},
                       {"t2", r.t2},
                       {"residual_alpha", r.residual_alpha},
                       {"residual_beta", r.residual_beta}});
    return out;
}

} // namespace sysatlas
