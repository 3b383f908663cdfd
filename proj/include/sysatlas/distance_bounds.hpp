#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

// Teichmueller / Lipschitz distance bounds and diameter estimates for the
// tree surfaces, the rotation family, and the chain surface.

namespace sysatlas {

struct BoundReport {
    std::string name;
    double value = 0.0;
    std::string kind; // "lower" or "upper"
    std::vector<std::pair<std::string, double>> inputs;
    std::string source; // formula, spelled out
    bool vacuous = false;

    nlohmann::json to_json() const;
};

// (1/4) log(L / sys): Lipschitz-comparison lower bound on the distance to
// the filling-systole locus when every admissible filling set contains a
// curve longer than L.  Negative values are reported vacuous, not errors.
BoundReport filling_lower_bound(double L, double sys);

// (1/4) log(log g - log 12) on real arguments
double hole_bound_formula(double g);
// report for integer genus; vacuous when log g <= 1 + log 12 fails to
// produce a positive value
BoundReport thm_hole_bound(int g);
// exact tree variant (1/4) log n for genus in [3*2^(n-1), 3*2^n)
BoundReport hole_bound_exact(int g);
int tree_parameter_n(int g);

// (1/2) |log(ext1/ext2)|: distance between points of a common Teichmueller
// geodesic expressed through extremal lengths of the core curve
double ext_ratio_distance(double ext1, double ext2);

// Distance from S(c1,0) to S(c2,0) through the extremal-length sandwich:
// (1/2) log(pi c2 / (2 theta c1)), cos theta = 1/cosh(s2/2).
BoundReport dist_s1_mid(int g);

// Radial-stretch dilatation of the collar twist map.
// phi ranges over (pi/2 - theta, pi/2 + theta).
double twist_map_radial(double phi, double t2, double theta);       // Phi
double twist_map_radial_deriv(double phi, double t2, double theta); // dPhi/dphi
double twist_dilatation(double phi, double t2, double theta);       // K >= 1

// (1/2) log sup K over the collar strip; supremum by dense grid plus
// golden-section refinement around the grid maximum.
BoundReport twist_distance_bound(double t2, double theta, int grid = 20001);
BoundReport twist_distance_bound_for_genus(int g, int grid = 20001);

// dist_s1_mid + twist bound
BoundReport dist_small_total(int g);

// chain_seam(cuff) * floor((g-1)/2 - 2); the 0.6 floor((g-5)/2) variant is
// carried in the inputs for comparison
BoundReport diam_lower_s3(int g, double cuff = 6.980);

// exact 4 arccosh(cot(pi/(2g+2))) with the looser 4 log((4g+4)/pi) carried
// in the inputs
BoundReport diam_upper_s1(int g);

// Lipschitz lower bound between the rotation-family surface and the chain
// surface: the closed form (1/2) log(g-6) - (1/2) log((40/3) log((4g+4)/pi))
// plus the recomputed variant (1/2) log(diam_lower / diam_upper_exact).
struct LargeDistance {
    BoundReport closed_form;
    BoundReport recomputed;
};
LargeDistance dist_large_lower(int g, double cuff = 6.980);

// smallest integer genus >= 13 with a positive closed-form bound
int large_lower_crossover(int g_max = 1000, double cuff = 6.980);

} // namespace sysatlas
