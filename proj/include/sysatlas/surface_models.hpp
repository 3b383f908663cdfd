#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "sysatlas/holonomy.hpp"

// The named surface families and the transcendental solvers pinning down
// their parameters: c1 (alpha/gamma length equality at twist 0), (c2, t2)
// (alpha/beta/gamma equality), and the chain-surface seam.

namespace sysatlas {

struct SolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Rotation family S(c, t): two rotationally symmetric (g+1)-holed spheres
// glued along their g+1 cuffs, every cuff carrying (c, t).
struct RotFamilySpec {
    int g = 2;
    double c = 1.0;
    double t = 0.0;
};

// Cyclic chain of g-1 four-holed spheres with order-4 rotation each.
struct ChainSpec {
    int g = 5;
    double cuff = 6.980;
};

enum class CurveFamily { alpha, beta, gamma };

struct NamedCurve {
    CurveFamily family = CurveFamily::alpha;
    int index = 1; // 1..g+1; the rotation makes all indices isometric
};

// Geodesic length of the named curve on S(c, t).  gamma is the cuff (= c
// exactly); alpha crosses two adjacent cuffs along the seams; beta is
// alpha twisted once along the next cuff, with the twist handedness that
// makes l(beta) decrease for small t > 0.
double l_curve(const RotFamilySpec& spec, const NamedCurve& curve);

// move words evaluated by HolonomyRep for the same three curves
std::string rot_curve_word(const RotFamilySpec& spec, CurveFamily family);

// 4 arcsinh sqrt(cos(pi/(g+1)))
double closed_form_c1(int g);

// Root of l_alpha(c, 0) = c by bisection on [0.1, 10].
double solve_c1(int g);

struct C2T2Result {
    double c2 = 0.0;
    double t2 = 0.0;
    double residual_alpha = 0.0; // l_alpha(c2,t2) - c2
    double residual_beta = 0.0;  // l_beta(c2,t2) - c2
};

// Simultaneous root of l_alpha(c,t) = c and l_beta(c,t) = c with
// t2 in (0, c2/2): nested bisection plus a Newton polish.
// force_t_zero collapses the system to the c1 equation.
C2T2Result solve_c2_t2(int g, bool force_t_zero = false);

// Seam of the symmetric four-holed sphere: d = 2 arcsinh(cos(pi/4)/sinh(cuff/4)).
double chain_seam(double cuff);
double chain_seam(const ChainSpec& spec);

// Per-genus solved parameters, emitted as the golden JSON table.
struct GoldenRow {
    int g = 0;
    double c1 = 0.0;
    double c2 = 0.0;
    double t2 = 0.0;
    double residual_alpha = 0.0;
    double residual_beta = 0.0;
};
std::vector<GoldenRow> golden_table(int g_min, int g_max, bool parallel = true);
nlohmann::json golden_json(const std::vector<GoldenRow>& rows);

} // namespace sysatlas
