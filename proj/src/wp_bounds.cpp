#include "sysatlas/wp_bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "sysatlas/hyp_trig.hpp"

namespace sysatlas {

WpValue inj_profile_logg(double log_g, const WpConstants& consts) {
    if (!(log_g > 1.0)) throw DomainError("inj_profile needs g > e");
    double llg = std::log(log_g);
    double q = 0.25 * log_g - (0.75 + consts.eps / 2) * llg;
    return {q, !(q > 0)};
}

WpValue inj_profile(double g, const WpConstants& consts) {
    if (!(g > std::exp(1.0))) throw DomainError("inj_profile needs g > e");
    return inj_profile_logg(std::log(g), consts);
}

EliminateResult eliminate_sys(double Q, double L, const WpConstants& consts) {
    if (!(Q > 0) || !(L > 0)) throw DomainError("eliminate_sys needs Q, L > 0");
    const double a = consts.a_sys, b = consts.b_inj;
    auto branch1 = [&](double s) { return (std::sqrt(s) - std::sqrt(L)) / a; };
    auto branch2 = [&](double s) { return (std::sqrt(Q) - std::sqrt(s / 2)) / b; };
    auto obj = [&](double s) { return std::max(branch1(s), branch2(s)); };

    EliminateResult r;
    r.closed_form = (std::sqrt(2 * Q) - std::sqrt(L)) / (a + std::sqrt(2.0) * b);

    // the objective is a max of an increasing and a decreasing branch, so
    // golden-section minimization is exact up to tolerance
    double lo = 0.0, hi = 4 * std::max(2 * Q, L) + 1.0;
    const double gr = (std::sqrt(5.0) - 1) / 2;
    double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
    double f1 = obj(x1), f2 = obj(x2);
    for (int it = 0; it < 400 && hi - lo > 1e-13 * (1 + hi); ++it) {
        if (f1 > f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + gr * (hi - lo);
            f2 = obj(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - gr * (hi - lo);
            f1 = obj(x1);
        }
    }
    r.balanced_s = (lo + hi) / 2;
    r.numeric = obj(r.balanced_s);
    r.slackness = std::fabs(branch1(r.balanced_s) - branch2(r.balanced_s));
    r.value = std::max(0.0, r.closed_form);
    return r;
}

WpValue stated_wp_threshold_logg(double log_g) {
    if (!(log_g > 1.0)) throw DomainError("threshold needs g > e");
    double llg = std::log(log_g);
    double v = 0.6521 * (std::sqrt(log_g) - std::sqrt(7 * llg));
    return {v, !(v > 0)};
}

WpValue stated_wp_threshold(double g) {
    if (!(g > std::exp(1.0))) throw DomainError("threshold needs g > e");
    return stated_wp_threshold_logg(std::log(g));
}

double teich_threshold_crossover(double search_max) {
    double e = std::exp(1.0);
    if (!(search_max > std::exp(e))) throw DomainError("search range must exceed e^e");
    auto holds = [](double g) {
        double lg = std::log(g), llg = std::log(lg);
        if (!(llg > 0)) return false;
        double big = lg - 2 * llg, small = llg / 5;
        if (!(big > 0) || !(small > 0) || !(big / small > 1)) return false;
        return 0.25 * std::log(big / small) > small;
    };
    // scan a logarithmic grid for the first success, then bisect against
    // the last failure (or the domain edge g = e)
    const int steps = 4000;
    double prev = e * (1 + 1e-12);
    bool prev_ok = holds(prev);
    if (prev_ok) return prev; // inequality already holds at the domain edge
    for (int i = 1; i <= steps; ++i) {
        double g = std::exp(1.0 + (std::log(search_max) - 1.0) * i / steps);
        if (holds(g)) {
            double lo = prev, hi = g;
            for (int it = 0; it < 200 && hi - lo > 1e-12 * hi; ++it) {
                double mid = std::sqrt(lo * hi);
                (holds(mid) ? hi : lo) = mid;
            }
            return hi;
        }
        prev = g;
    }
    throw DomainError("threshold inequality not satisfied in the search range");
}

double mp_tail(double c_g, double B) {
    if (!(c_g > 0) || !(B > 0)) throw DomainError("mp_tail needs c_g, B > 0");
    return B * c_g * std::exp(-c_g);
}

std::vector<ThresholdRow> threshold_table(const std::vector<double>& log_g_values,
                                          const WpConstants& consts) {
    std::vector<ThresholdRow> rows;
    rows.reserve(log_g_values.size());
    for (double lg : log_g_values) {
        if (!(lg > 1)) throw DomainError("threshold table needs log g > 1");
        ThresholdRow row;
        row.log_g = lg;
        row.teich_threshold = std::log(lg) / 5;
        row.wp_stated = stated_wp_threshold_logg(lg).value;
        WpValue q = inj_profile_logg(lg, consts);
        row.wp_recomputed = q.vacuous ? 0.0 : eliminate_sys(q.value, std::log(lg), consts).value;
        rows.push_back(row);
    }
    return rows;
}

CoefficientFit leading_coefficients(double logg_min, double logg_max,
                                    const WpConstants& consts) {
    // least squares fit of threshold(g) = coef * sqrt(log g) over a log grid
    double sxy = 0.0, sxx = 0.0;
    const int pts = 64;
    for (int i = 0; i < pts; ++i) {
        double lg = logg_min * std::pow(logg_max / logg_min, double(i) / (pts - 1));
        double x = std::sqrt(lg);
        WpValue q = inj_profile_logg(lg, consts);
        double y = eliminate_sys(q.value, std::log(lg), consts).value;
        sxy += x * y;
        sxx += x * x;
    }
    return {sxy / sxx, 0.6521};
}

} // namespace sysatlas
