#pragma once

#include <stdexcept>

// Scalar kernel of hyperbolic trigonometry identities for right-angled
// polygons (triangle, trirectangle, pentagon, hexagon) plus the collar
// width/angle pair and the extremal-length sandwich bounds.
//
// All lengths are hyperbolic lengths (curvature -1), all angles radians.
// Domain violations throw DomainError so callers can tell "no such
// polygon" apart from numerical failure.

namespace sysatlas {

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Hypotenuse of a right triangle with acute angles alpha, beta:
// cosh c = cot(alpha) * cot(beta).  Requires alpha + beta < pi/2.
double right_triangle_hyp(double alpha, double beta);

// Acute angle of a trirectangle (Lambert quadrilateral) with sides a, b
// adjacent to the opposite right-angled corner: cos(phi) = sinh a sinh b.
// Requires sinh a sinh b < 1.
double trirectangle_angle(double a, double b);

// Side of a right-angled pentagon two steps from the adjacent pair (a, b):
// cosh c = sinh a sinh b.  Requires sinh a sinh b > 1.
double pentagon_side(double a, double b);

// Side of a right-angled hexagon opposite gamma, where the cyclic side
// order is a, gamma, b, ..., c, ...:
// cosh c = sinh a sinh b cosh gamma - cosh a cosh b.
double hexagon_side(double a, double b, double gamma);

// Inverse of hexagon_side: the side between half-cuffs h_a and h_b of the
// hexagon with opposite half-cuff h_opp,
// cosh gamma = (cosh h_opp + cosh h_a cosh h_b) / (sinh h_a sinh h_b).
// This is the seam of a pair of pants with those three half cuff lengths.
double hexagon_seam(double h_a, double h_b, double h_opp);

// Half seam length of the rotationally symmetric n-holed sphere with cuff
// length c: sinh(s/2) sinh(c/4) = cos(pi/n).  The full seam is 2*(s/2).
double seam_half(double c, int n);

// Collar angle of an embedded collar of width w: theta = arccos(1/cosh w),
// and its inverse w = arccosh(1/cos theta).  Mutually inverse bijections
// between w > 0 and theta in (0, pi/2).
double collar_angle(double w);
double collar_width(double theta);

// Sandwich bounds on extremal length of a geodesic of length l whose
// collar has angle theta:  l/pi <= Ext <= l/(2 theta).
struct MaskitBounds {
    double lower;
    double upper;
};
MaskitBounds maskit_bounds(double l, double theta);

} // namespace sysatlas
