#pragma once

#include <string>
#include <vector>

// Weil-Petersson distance lower bounds built from the square-root
// Lipschitz constants of systole and injectivity radius, plus the
// threshold arithmetic accompanying the random-surface statements.
// Only the deterministic formulas are computed here.

namespace sysatlas {

struct WpConstants {
    double a_sys = 0.5492; // Lipschitz constant of sqrt(sys)
    double b_inj = 0.3884; // Lipschitz constant of sqrt(inj)
    double eps = 0.1;      // slack in the collar-width profile
};

struct WpValue {
    double value = 0.0;
    bool vacuous = false; // non-positive lower bounds carry no information
};

// Q = (1/4) log g - (3/4 + eps/2) log log g  (requires g > e).  The _logg
// variant takes log g directly so tables can reach log g = 1e6 without
// overflowing the genus itself.
WpValue inj_profile(double g, const WpConstants& consts = {});
WpValue inj_profile_logg(double log_g, const WpConstants& consts = {});

// min over s >= 0 of max((sqrt(s)-sqrt(L))/a_sys, (sqrt(Q)-sqrt(s/2))/b_inj),
// computed both by 1-D minimization and by the balanced closed form
// (sqrt(2Q)-sqrt(L))/(a_sys + sqrt(2) b_inj); the two must agree to 1e-8.
// Clamped at zero.
struct EliminateResult {
    double value = 0.0;          // clamped lower bound
    double closed_form = 0.0;    // unclamped closed form
    double numeric = 0.0;        // unclamped numeric minimax
    double balanced_s = 0.0;     // minimizing s
    double slackness = 0.0;      // |branch1 - branch2| at balanced_s
};
EliminateResult eliminate_sys(double Q, double L, const WpConstants& consts = {});

// stated threshold 0.6521 (sqrt(log g) - sqrt(7 log log g))
WpValue stated_wp_threshold(double g);
WpValue stated_wp_threshold_logg(double log_g);

// Smallest g > e at which (1/4) log((log g - 2 log log g)/((1/5) log log g))
// exceeds (1/5) log log g with all sub-expressions positive; log-grid scan
// refined by bisection against the domain edge.
double teich_threshold_crossover(double search_max);

// B * c_g * exp(-c_g): right-hand side of the systole tail bound.  B has
// no default; the caller must supply it.
double mp_tail(double c_g, double B);

// side-by-side threshold table row
struct ThresholdRow {
    double log_g = 0.0;
    double teich_threshold = 0.0; // (1/5) log log g
    double wp_stated = 0.0;
    double wp_recomputed = 0.0;   // eliminate_sys(inj_profile(g), log log g)
};
std::vector<ThresholdRow> threshold_table(const std::vector<double>& log_g_values,
                                          const WpConstants& consts = {});

// asymptotic coefficients of the two thresholds on sqrt(log g), fitted
// over a log g grid: recomputed vs the stated 0.6521
struct CoefficientFit {
    double recomputed = 0.0;
    double stated = 0.6521;
};
CoefficientFit leading_coefficients(double logg_min = 1e3, double logg_max = 1e6,
                                    const WpConstants& consts = {});

} // namespace sysatlas
