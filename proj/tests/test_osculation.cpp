#include <doctest.h>

#include <cmath>

#include "zf/error.hpp"
#include "zf/osculation.hpp"
#include "zf/parallel.hpp"

using namespace zf;
using doctest::Approx;

namespace {

void check_interpolation(const OsculCoeffs& co, double tol) {
    for (double x : {co.s(), co.t()}) {
        CHECK(std::abs(co.g(x) - co.f(x)) <= tol * std::max(1.0, std::abs(co.f(x))));
        CHECK(std::abs(co.g_prime(x) - co.f_prime(x)) <= tol * std::max(1.0, std::abs(co.f_prime(x))));
    }
}

}  // namespace

TEST_CASE("two-point Hermite interpolation") {
    // Values and first derivative of x^3 at 0 and 1 reproduce x^3.
    const HermitePoly p = hermite_two_point(0, 1, {0, 0}, {1, 3});
    REQUIRE(p.coeffs.size() == 4);
    CHECK(p.coeffs[0] == Approx(0.0));
    CHECK(p.coeffs[1] == Approx(0.0));
    CHECK(p.coeffs[2] == Approx(0.0));
    CHECK(p.coeffs[3] == Approx(1.0));
    CHECK_THROWS_AS(hermite_two_point(1, 1, {0}, {0}), Error);
    try {
        hermite_two_point(1, 1 + 1e-12, {0}, {1});
        FAIL("expected IllConditioned");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::IllConditioned);
    }

    auto rng = instance_rng(41, 0, 0);
    std::uniform_real_distribution<double> u(-2, 2), pos(0.0, 2.0);
    for (int i = 0; i < 50; ++i) {
        const double x0 = u(rng), x1 = x0 + 0.3 + pos(rng);
        std::vector<double> y0(1 + i % 3), y1(1 + (i / 3) % 3);
        for (double& y : y0) y = u(rng);
        for (double& y : y1) y = u(rng);
        const HermitePoly h = hermite_two_point(x0, x1, y0, y1);
        CHECK(h.degree() <= static_cast<int>(y0.size() + y1.size()) - 1);
        for (std::size_t j = 0; j < y0.size(); ++j) CHECK(h.derivative(j, x0) == Approx(y0[j]).epsilon(1e-9));
        for (std::size_t j = 0; j < y1.size(); ++j) CHECK(h.derivative(j, x1) == Approx(y1[j]).epsilon(1e-9));

        // Linearity in the data.
        const HermitePoly a = hermite_two_point(x0, x1, y0, std::vector<double>(y1.size(), 0.0));
        const HermitePoly b = hermite_two_point(x0, x1, std::vector<double>(y0.size(), 0.0), y1);
        for (std::size_t j = 0; j < h.coeffs.size(); ++j)
            CHECK(std::abs(h.coeffs[j] - a.coeffs[j] - b.coeffs[j]) <= 1e-9 * std::max(1.0, std::abs(h.coeffs[j])));

        // Change of variables to the unit interval.
        const double w = x1 - x0;
        std::vector<double> z0(y0), z1(y1);
        for (std::size_t j = 0; j < z0.size(); ++j) z0[j] *= std::pow(w, j);
        for (std::size_t j = 0; j < z1.size(); ++j) z1[j] *= std::pow(w, j);
        const HermitePoly unit = hermite_two_point(0, 1, z0, z1);
        for (double x = x0; x <= x1; x += w / 17) CHECK(h(x) == Approx(unit((x - x0) / w)).epsilon(1e-9));
    }
}

TEST_CASE("Hermite interpolant positivity with alternating right data") {
    auto rng = instance_rng(42, 0, 0);
    std::uniform_real_distribution<double> pos(0.05, 2.0);
    for (int i = 0; i < 30; ++i) {
        const int m = 1 + i % 3;
        std::vector<double> y0(m), y1(m);
        for (double& y : y0) y = pos(rng);
        for (int j = 0; j < m; ++j) y1[j] = (j % 2 ? -1.0 : 1.0) * pos(rng);
        const HermitePoly h = hermite_two_point(0, 1, y0, y1);
        for (int k = 1; k < 100; ++k) CHECK(h(k / 100.0) > 0.0);
    }
}

TEST_CASE("derivative bound regression") {
    // sup |p^(k)| on [x0, x1] scaled by |x1-x0|^k / ||y|| stays bounded by one fitted constant.
    auto rng = instance_rng(43, 0, 0);
    std::uniform_real_distribution<double> u(-1, 1), w(0.2, 3.0);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        const double x0 = u(rng), x1 = x0 + w(rng), len = x1 - x0;
        std::vector<double> y0{u(rng), u(rng)}, y1{u(rng), u(rng)};
        double norm = 0;
        for (double y : y0) norm = std::max(norm, std::abs(y));
        for (double y : y1) norm = std::max(norm, std::abs(y));
        const HermitePoly h = hermite_two_point(x0, x1, y0, y1);
        for (int k = 0; k <= 3; ++k) {
            double sup = 0;
            for (int j = 0; j <= 200; ++j) sup = std::max(sup, std::abs(h.derivative(k, x0 + len * j / 200)));
            worst = std::max(worst, sup * std::pow(len, k) / (norm * std::max(1.0, len)));
        }
    }
    CHECK(worst < 50.0);
}

TEST_CASE("osculatory coefficients at the figure parameters") {
    const OsculCoeffs co = oscul_coeffs(-1.0, 1.5, 2.0 / 3.0);
    CHECK(co.branch == OsculBranch::v_le_abs_r);
    CHECK(co.d == Approx(2197.0 / 1205.0).epsilon(1e-14));
    CHECK(co.s() == Approx(-2.0 / 3.0));
    CHECK(co.t() == Approx(1.5));
    check_interpolation(co, 1e-12);
    const DominanceReport rep = dominance_report(co);
    CHECK(rep.dominates);
    CHECK(rep.strict_off_nodes);
    CHECK(dominance_check(co));
    CHECK(std::abs(co.g(-2.0 / 3.0) - co.f(-2.0 / 3.0)) <= 1e-12);
    CHECK(co.g(0.5) - co.f(0.5) > 1e-3);
}

TEST_CASE("v = 0 collapse") {
    const OsculCoeffs co = oscul_coeffs(-1.0, 2.0, 0.0);
    CHECK(co.a == Approx(1.0));
    CHECK(co.b == Approx(3.0));
    CHECK(co.c == Approx(3.0));
    CHECK(co.d == Approx(1.0));
    check_interpolation(co, 1e-12);
    CHECK(dominance_check(co));
}

TEST_CASE("osculation errors") {
    CHECK_THROWS_AS(oscul_coeffs(0.0, 2.0, 1.0), Error);
    CHECK_THROWS_AS(oscul_coeffs(1.0, 1.0, 1.0), Error);
    CHECK_THROWS_AS(oscul_coeffs(1.0, 1.0, -0.5), Error);
    CHECK_THROWS_AS(recentered_abs3_bound(rademacher(), 1.0, 0.5, 1.0), Error);
}

TEST_CASE("branch continuity at v = |r|") {
    for (double v : {1.0 - 1e-9, 1.0, 1.0 + 1e-9}) {
        const OsculCoeffs a = oscul_coeffs_block(-1.0, 3.0, v, OsculBranch::v_le_abs_r);
        const OsculCoeffs b = oscul_coeffs_block(-1.0, 3.0, v, OsculBranch::v_gt_abs_r);
        CHECK(a.a == Approx(b.a).epsilon(1e-9));
        CHECK(a.b == Approx(b.b).epsilon(1e-9));
        CHECK(a.c == Approx(b.c).epsilon(1e-9));
        CHECK(a.d == Approx(b.d).epsilon(1e-9));
    }
    const OsculCoeffs lo = oscul_coeffs(-1.0, 3.0, 1.0 - 1e-9), hi = oscul_coeffs(-1.0, 3.0, 1.0 + 1e-9);
    CHECK(lo.branch != hi.branch);
    CHECK(std::abs(lo.d - hi.d) <= 1e-8);
}

TEST_CASE("random osculation instances") {
    auto rng = instance_rng(44, 0, 0);
    std::uniform_real_distribution<double> mag(0.1, 3.0), unit(0, 1);
    for (int i = 0; i < 200; ++i) {
        const double r = (i % 2 ? 1.0 : -1.0) * mag(rng);
        const double v = i < 100 ? std::abs(r) * unit(rng) : std::abs(r) * (1 + 2 * unit(rng)) + 1e-3;
        const double u = v + mag(rng);
        const OsculCoeffs co = oscul_coeffs(r, u, v);
        CHECK(co.branch == (i < 100 ? OsculBranch::v_le_abs_r : OsculBranch::v_gt_abs_r));
        check_interpolation(co, 1e-9);
        if (co.branch == OsculBranch::v_le_abs_r) CHECK(co.d >= 0.0);
        CHECK(dominance_check(co));
        // Solving the 4x4 osculation system gives the same d.
        const auto fv = [r](double x) { return std::pow(std::abs(x - r), 3); };
        const auto fp = [r](double x) { return 3 * (x - r) * std::abs(x - r); };
        const auto sol = oscul_solve(fv, fp, co.s(), co.t());
        CHECK(sol[3] == Approx(co.d).epsilon(1e-8));
    }
}

TEST_CASE("cubic osculation criterion") {
    auto rng = instance_rng(45, 0, 0);
    std::uniform_real_distribution<double> u(-3, 3);
    for (int i = 0; i < 300; ++i) {
        const std::array<double, 4> f{u(rng), u(rng), u(rng), u(rng)};
        const double s = u(rng), t = u(rng);
        if (std::abs(std::abs(s) - std::abs(t)) < 0.05) continue;
        const auto g = oscul_cubic(f, s, t);
        auto fx = [&](double x) { return f[0] + f[1] * x + f[2] * x * x + f[3] * x * x * x; };
        auto fd = [&](double x) { return f[1] + 2 * f[2] * x + 3 * f[3] * x * x; };
        auto gx = [&](double x) { return g[0] + g[1] * x + g[2] * x * x + g[3] * std::abs(x) * x * x; };
        auto gd = [&](double x) { return g[1] + 2 * g[2] * x + 3 * g[3] * x * std::abs(x); };
        for (double x : {s, t}) {
            CHECK(gx(x) == Approx(fx(x)).epsilon(1e-9).scale(1));
            CHECK(gd(x) == Approx(fd(x)).epsilon(1e-9).scale(1));
        }
        // f <= g everywhere iff d >= 0 iff D (s + t) >= 0 (D sgn(s) when s, t share a sign).
        const bool d_nonneg = g[3] >= 0;
        const double crit = s * t <= 0 ? f[3] * (s + t) : f[3] * (s > 0 ? 1.0 : -1.0);
        CHECK(d_nonneg == (crit >= 0));
        if (std::abs(f[3]) < 0.05) continue;
        bool below = true;
        for (double x = -8; x <= 8; x += 0.01) below = below && fx(x) <= gx(x) + 1e-7 * (1 + std::abs(gx(x)));
        CHECK(below == d_nonneg);
    }
}

TEST_CASE("osculatory convexity") {
    // f with f(s) = f'(s) = f(t) = f'(t) = 0 and convex f'' is nonnegative: quartics c (x-s)^2 (x-t)^2 + 0.
    auto rng = instance_rng(46, 0, 0);
    std::uniform_real_distribution<double> u(-3, 3), c(0.01, 2);
    for (int i = 0; i < 50; ++i) {
        const double s = u(rng), t = s + 0.1 + std::abs(u(rng)), k = c(rng);
        auto f = [&](double x) { return k * (x - s) * (x - s) * (x - t) * (x - t); };
        auto f2 = [&](double x) { return k * (2 * (x - t) * (x - t) + 8 * (x - s) * (x - t) + 2 * (x - s) * (x - s)); };
        bool convex = true, nonneg = true;
        for (double x = s - 3; x <= t + 3; x += 0.01) {
            convex = convex && f2(x - 0.01) + f2(x + 0.01) - 2 * f2(x) >= -1e-9;
            nonneg = nonneg && f(x) >= -1e-12;
        }
        CHECK(convex);
        CHECK(nonneg);
    }
}

TEST_CASE("recentered third absolute moment") {
    const OsculCoeffs co = oscul_coeffs(-1.0, 1.5, 2.0 / 3.0);
    const DiscreteLaw two = make_discrete({{co.s(), 0.4}, {co.t(), 0.6}});
    const RecenteredBound eq = recentered_abs3_bound(two, -1.0, 1.5, 2.0 / 3.0);
    CHECK(eq.tight);
    CHECK(eq.lhs == Approx(eq.rhs).epsilon(1e-12));

    const RecenteredBound strict = recentered_abs3_bound(rademacher(), -1.0, 1.5, 2.0 / 3.0);
    CHECK_FALSE(strict.tight);
    CHECK(strict.lhs < strict.rhs - 1e-6);

    auto rng = instance_rng(47, 0, 0);
    std::uniform_real_distribution<double> mag(0.1, 3.0), unit(0, 1);
    for (int i = 0; i < 100; ++i) {
        const double r = (i % 2 ? 1.0 : -1.0) * mag(rng), u = mag(rng), v = u * unit(rng) * 0.95;
        const RecenteredBound b = recentered_abs3_bound(random_standardized_law(rng), r, u, v);
        CHECK(b.lhs <= b.rhs + 1e-10 * std::max(1.0, b.rhs));
        CHECK(b.holds);
    }
}
