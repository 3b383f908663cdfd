#include "sysatlas/hyp_trig.hpp"

#include <cmath>
#include <string>

namespace sysatlas {

namespace {

void require_length(double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v))
        throw DomainError(std::string(name) + " must be a positive finite length");
}

void require_angle(double v, const char* name) {
    if (!(v > 0.0) || !(v < M_PI))
        throw DomainError(std::string(name) + " must lie in (0, pi)");
}

} // namespace

double right_triangle_hyp(double alpha, double beta) {
    require_angle(alpha, "alpha");
    require_angle(beta, "beta");
    if (!(alpha < M_PI / 2) || !(beta < M_PI / 2))
        throw DomainError("right triangle angles must be acute");
    double p = (std::cos(alpha) / std::sin(alpha)) * (std::cos(beta) / std::sin(beta));
    if (!(p > 1.0 + 1e-12))
        throw DomainError("cot(alpha)*cot(beta) <= 1: no hyperbolic right triangle");
    return std::acosh(p);
}

double trirectangle_angle(double a, double b) {
    require_length(a, "a");
    require_length(b, "b");
    double p = std::sinh(a) * std::sinh(b);
    if (!(p < 1.0))
        throw DomainError("sinh(a)*sinh(b) >= 1: no trirectangle");
    return std::acos(p);
}

double pentagon_side(double a, double b) {
    require_length(a, "a");
    require_length(b, "b");
    double p = std::sinh(a) * std::sinh(b);
    if (!(p > 1.0 + 1e-12))
        throw DomainError("sinh(a)*sinh(b) <= 1: no right-angled pentagon");
    return std::acosh(p);
}

double hexagon_side(double a, double b, double gamma) {
    require_length(a, "a");
    require_length(b, "b");
    require_length(gamma, "gamma");
    double rhs = std::sinh(a) * std::sinh(b) * std::cosh(gamma) - std::cosh(a) * std::cosh(b);
    if (!(rhs > 1.0 + 1e-12))
        throw DomainError("right-angled hexagon relation out of range");
    return std::acosh(rhs);
}

double hexagon_seam(double h_a, double h_b, double h_opp) {
    require_length(h_a, "h_a");
    require_length(h_b, "h_b");
    require_length(h_opp, "h_opp");
    double rhs = (std::cosh(h_opp) + std::cosh(h_a) * std::cosh(h_b)) /
                 (std::sinh(h_a) * std::sinh(h_b));
    return std::acosh(rhs);
}

double seam_half(double c, int n) {
    require_length(c, "c");
    if (n < 3) throw DomainError("n-holed sphere needs n >= 3");
    return std::asinh(std::cos(M_PI / n) / std::sinh(c / 4));
}

double collar_angle(double w) {
    require_length(w, "w");
    return std::acos(1.0 / std::cosh(w));
}

double collar_width(double theta) {
    if (!(theta > 0.0) || !(theta < M_PI / 2))
        throw DomainError("collar angle must lie in (0, pi/2)");
    return std::acosh(1.0 / std::cos(theta));
}

MaskitBounds maskit_bounds(double l, double theta) {
    require_length(l, "l");
    if (!(theta > 0.0) || !(theta < M_PI / 2))
        throw DomainError("collar angle must lie in (0, pi/2)");
    return {l / M_PI, l / (2.0 * theta)};
}

} // namespace sysatlas
