#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "sysatlas/surface_models.hpp"

using namespace sysatlas;

TEST_CASE("l_curve basics") {
    // gamma is the cuff
    CHECK(l_curve({5, 2.7, 0.3}, {CurveFamily::gamma, 2}) == 2.7);
    // alpha at g=2, c=3, t=0 equals the seam closed form
    double closed = 4 * std::asinh(std::cos(M_PI / 3) / std::sinh(0.75));
    CHECK(l_curve({2, 3.0, 0.0}, {CurveFamily::alpha, 1}) ==
          doctest::Approx(closed).epsilon(1e-12));
    // at c1 the alpha and gamma lengths agree
    int g = 2;
    double c1 = closed_form_c1(g);
    CHECK(l_curve({g, c1, 0.0}, {CurveFamily::alpha, 1}) ==
          doctest::Approx(c1).epsilon(1e-10));
    CHECK_THROWS_AS(l_curve({1, 2.0, 0.0}, {CurveFamily::alpha, 1}), SolverError);
    CHECK_THROWS_AS(l_curve({2, 2.0, 0.0}, {CurveFamily::alpha, 9}), SolverError);
}

TEST_CASE("solve_c1 matches the closed form") {
    for (int g = 2; g <= 100; ++g) {
        CHECK(std::fabs(solve_c1(g) - closed_form_c1(g)) < 1e-9);
    }
    // c1(2) = 2 arccosh 2 exactly
    CHECK(closed_form_c1(2) == doctest::Approx(2 * std::acosh(2.0)).epsilon(1e-15));
    // g -> infinity limit is 4 arcsinh 1
    CHECK(closed_form_c1(100000000) ==
          doctest::Approx(4 * std::asinh(1.0)).epsilon(1e-6));
    CHECK_THROWS_AS(solve_c1(1), SolverError);
}

TEST_CASE("solve_c2_t2") {
    for (int g : {2, 3, 5}) {
        C2T2Result r = solve_c2_t2(g);
        CHECK(std::fabs(r.residual_alpha) < 1e-8);
        CHECK(std::fabs(r.residual_beta) < 1e-8);
        CHECK(r.t2 > 0.0);
        CHECK(r.t2 < r.c2 / 2);
        // beta really has length c2 there
        CHECK(l_curve({g, r.c2, r.t2}, {CurveFamily::beta, 1}) ==
              doctest::Approx(r.c2).epsilon(1e-9));
    }
    // frozen solver outputs (oracle: independent nested bisection run)
    C2T2Result r2 = solve_c2_t2(2);
    CHECK(r2.c2 == doctest::Approx(3.0571418390).epsilon(1e-8));
    CHECK(r2.t2 == doctest::Approx(0.9822020382).epsilon(1e-7));
    C2T2Result r3 = solve_c2_t2(3);
    CHECK(r3.c2 == doctest::Approx(3.6477949786).epsilon(1e-8));
    CHECK(r3.t2 == doctest::Approx(1.2346663146).epsilon(1e-7));
    C2T2Result r5 = solve_c2_t2(5);
    CHECK(r5.c2 == doctest::Approx(4.0463801747).epsilon(1e-8));
    CHECK(r5.t2 == doctest::Approx(1.4124643808).epsilon(1e-7));

    // forcing t = 0 collapses to the c1 equation
    C2T2Result rz = solve_c2_t2(2, true);
    CHECK(rz.t2 == 0.0);
    CHECK(rz.c2 == doctest::Approx(closed_form_c1(2)).epsilon(1e-10));
    CHECK(std::fabs(rz.residual_alpha) < 1e-9);
}

TEST_CASE("systole equality at c1 verified by enumeration, g = 2 and 3") {
    // at (c1, 0) the seam loops and cuffs tie: 2(g+1) minimizers
    for (int g : {2, 3}) {
        double c1 = closed_form_c1(g);
        HolonomyRep rep(FNSurface::rotation_family(g, c1, 0.0));
        auto sys = rep.systole_bruteforce(c1 + 0.1);
        CHECK(sys.value == doctest::Approx(c1).epsilon(1e-11));
        CHECK(sys.minimizers == 2 * (g + 1));
    }
}

TEST_CASE("systole at the solved point is attained by the three families") {
    int g = 2;
    C2T2Result r = solve_c2_t2(g);
    HolonomyRep rep(FNSurface::rotation_family(g, r.c2, r.t2));
    auto sys = rep.systole_bruteforce(r.c2 + 0.1);
    CHECK(sys.value == doctest::Approx(r.c2).epsilon(1e-9));
    // alpha, beta, gamma orbits plus their mirror-twisted images
    CHECK(sys.minimizers >= 3 * (g + 1));
    CHECK(sys.minimizers == 12);
}

TEST_CASE("beta length decreases in t near zero") {
    for (int g = 2; g <= 10; ++g) {
        double c = closed_form_c1(g) + 0.2;
        double h = 1e-4;
        double d = (l_curve({g, c, h}, {CurveFamily::beta, 1}) -
                    l_curve({g, c, 0.0}, {CurveFamily::beta, 1})) /
                   h;
        CHECK(d < 0.0);
    }
}

TEST_CASE("chain seam") {
    double want = 2 * std::asinh(std::cos(M_PI / 4) / std::sinh(6.980 / 4));
    CHECK(chain_seam(6.980) == doctest::Approx(want).epsilon(1e-15));
    CHECK(chain_seam(ChainSpec{13, 6.980}) == doctest::Approx(want).epsilon(1e-15));
    CHECK(chain_seam(4.0) ==
          doctest::Approx(2 * std::asinh(std::cos(M_PI / 4) / std::sinh(1.0)))
              .epsilon(1e-15));
    // cuff -> infinity limit and monotonicity
    CHECK(chain_seam(200.0) < 1e-20);
    double prev = chain_seam(1.0);
    for (double c = 1.5; c < 12; c += 0.5) {
        double cur = chain_seam(c);
        CHECK(cur < prev);
        prev = cur;
    }
    CHECK_THROWS_AS(chain_seam(-1.0), SolverError);
}

TEST_CASE("golden table") {
    auto rows = golden_table(2, 6);
    REQUIRE(rows.size() == 5);
    for (const auto& r : rows) {
        CHECK(std::fabs(r.c1 - closed_form_c1(r.g)) < 1e-9);
        CHECK(std::fabs(r.residual_alpha) < 1e-8);
        CHECK(std::fabs(r.residual_beta) < 1e-8);
        CHECK(r.c2 > r.c1);
    }
    auto j = golden_json(rows);
    CHECK(j.is_array());
    CHECK(j.size() == 5);
    CHECK(j[0].contains("c2"));
    // serial and parallel sweeps agree exactly
    auto serial_rows = golden_table(2, 6, false);
    for (size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].c2 == serial_rows[i].c2);
        CHECK(rows[i].t2 == serial_rows[i].t2);
    }
}
