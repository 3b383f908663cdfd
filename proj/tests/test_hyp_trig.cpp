#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "sysatlas/hyp_trig.hpp"

using namespace sysatlas;

namespace {
const double acosh2 = std::acosh(2.0);
}

TEST_CASE("right triangle hypotenuse") {
    // cot(pi/4) cot(pi/6) = sqrt(3)
    CHECK(right_triangle_hyp(M_PI / 4, M_PI / 6) ==
          doctest::Approx(std::acosh(std::sqrt(3.0))).epsilon(1e-14));
    CHECK(std::cosh(right_triangle_hyp(M_PI / 4, M_PI / 6)) ==
          doctest::Approx(std::sqrt(3.0)).epsilon(1e-14));
    // degenerate ideal case cot*cot = 1
    CHECK_THROWS_AS(right_triangle_hyp(M_PI / 4, M_PI / 4), DomainError);
    // half-diagonal of the regular right-angled (2g+2)-gon at g = 2 equals
    // the pi/6 case above
    int g = 2;
    CHECK(right_triangle_hyp(M_PI / 4, M_PI / (2 * g + 2)) ==
          doctest::Approx(std::acosh(1.0 / std::tan(M_PI / (2 * g + 2)))).epsilon(1e-14));
    CHECK_THROWS_AS(right_triangle_hyp(2.0, 2.0), DomainError); // obtuse
    CHECK_THROWS_AS(right_triangle_hyp(-0.5, 0.5), DomainError);
}

TEST_CASE("trirectangle angle") {
    CHECK(trirectangle_angle(0.5, 0.5) ==
          doctest::Approx(std::acos(std::sinh(0.5) * std::sinh(0.5))).epsilon(1e-14));
    // degenerate limit: a = arcsinh 1, b -> 0+ gives phi -> pi/2
    CHECK(trirectangle_angle(std::asinh(1.0), 1e-9) == doctest::Approx(M_PI / 2).epsilon(1e-6));
    CHECK_THROWS_AS(trirectangle_angle(std::asinh(1.0), std::asinh(1.0)), DomainError);

    // inverse use: given phi = pi/(g+1) and a = c/4, the solved b is seam_half
    for (int g : {2, 3, 7}) {
        double c = 3.1;
        double b = seam_half(c, g + 1);
        CHECK(trirectangle_angle(c / 4, b) == doctest::Approx(M_PI / (g + 1)).epsilon(1e-12));
    }
}

TEST_CASE("pentagon side") {
    CHECK(pentagon_side(acosh2, acosh2) == doctest::Approx(std::acosh(3.0)).epsilon(1e-14));
    // sinh a sinh b = 1 exactly is degenerate
    CHECK_THROWS_AS(pentagon_side(std::asinh(1.0), std::asinh(1.0)), DomainError);
    // cuff-to-opposite-seam distance in the regular pants (half cuff and
    // seam both arccosh 2) exceeds the seam loop length arccosh 2
    double dist = pentagon_side(acosh2, acosh2);
    CHECK(dist > acosh2);
}

TEST_CASE("hexagon side and seam") {
    // regular fixed point: all sides arccosh 2
    CHECK(std::fabs(hexagon_side(acosh2, acosh2, acosh2) - acosh2) < 1e-12);
    // pants with all cuffs 2 arccosh 2 has seam arccosh 2
    CHECK(hexagon_seam(acosh2, acosh2, acosh2) == doctest::Approx(acosh2).epsilon(1e-14));
    // (1,1,1) fails the domain check
    CHECK_THROWS_AS(hexagon_side(1.0, 1.0, 1.0), DomainError);

    // hexagon_side and hexagon_seam are inverse against random pants
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> len(0.4, 3.0);
    for (int i = 0; i < 200; ++i) {
        double h1 = len(rng), h2 = len(rng), h3 = len(rng);
        double u12 = hexagon_seam(h1, h2, h3);
        CHECK(hexagon_side(h1, h2, u12) == doctest::Approx(h3).epsilon(1e-10));
    }
}

TEST_CASE("seam half") {
    CHECK(seam_half(6.980, 4) ==
          doctest::Approx(std::asinh(std::cos(M_PI / 4) / std::sinh(6.980 / 4)))
              .epsilon(1e-14));
    // at c = c1(g) the half seam is c1/4, i.e. the alpha curve closes at
    // length c1
    for (int g : {2, 3, 10}) {
        double c1 = 4 * std::asinh(std::sqrt(std::cos(M_PI / (g + 1))));
        CHECK(seam_half(c1, g + 1) == doctest::Approx(c1 / 4).epsilon(1e-12));
    }
    // n -> infinity limit
    CHECK(seam_half(2.0, 100000000) ==
          doctest::Approx(std::asinh(1.0 / std::sinh(0.5))).epsilon(1e-7));
    CHECK_THROWS_AS(seam_half(2.0, 2), DomainError);
    CHECK_THROWS_AS(seam_half(-1.0, 4), DomainError);
}

TEST_CASE("collar pair") {
    CHECK(collar_angle(acosh2) == doctest::Approx(M_PI / 3).epsilon(1e-14));
    for (double w : {0.1, 1.0, 5.0}) {
        CHECK(std::fabs(collar_width(collar_angle(w)) - w) < 1e-12);
    }
    double w = seam_half(6.980, 4);
    CHECK(collar_angle(w) == doctest::Approx(std::acos(1.0 / std::cosh(w))).epsilon(1e-14));
    CHECK_THROWS_AS(collar_width(M_PI / 2), DomainError);
    CHECK_THROWS_AS(collar_angle(0.0), DomainError);
}

TEST_CASE("maskit bounds") {
    auto b = maskit_bounds(1.0, M_PI / 6);
    CHECK(b.lower == doctest::Approx(1.0 / M_PI).epsilon(1e-14));
    CHECK(b.upper == doctest::Approx(1.0 / (2 * (M_PI / 6))).epsilon(1e-14));
    // bounds pinch as theta -> pi/2
    auto p = maskit_bounds(M_PI, M_PI / 2 - 1e-9);
    CHECK(p.lower == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(p.upper == doctest::Approx(1.0).epsilon(1e-6));
    // lower <= upper for every theta in (0, pi/2)
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> th(1e-6, M_PI / 2 - 1e-6);
    std::uniform_real_distribution<double> len(1e-3, 50.0);
    for (int i = 0; i < 500; ++i) {
        auto mb = maskit_bounds(len(rng), th(rng));
        CHECK(mb.lower <= mb.upper);
    }
}
