#pragma once

#include <array>
#include <functional>
#include <vector>

#include "zf/laws.hpp"

namespace zf {

// Two-point Hermite interpolant. y0[j], y1[j] are the prescribed j-th derivatives
// at x0, x1; coefficients are in the local variable x - x0.
struct HermitePoly {
    double x0 = 0.0, x1 = 1.0;
    std::vector<double> y0, y1;
    std::vector<double> coeffs;

    int degree() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
    double operator()(double x) const { return derivative(0, x); }
    double derivative(int k, double x) const;
};

HermitePoly hermite_two_point(double x0, double x1, const std::vector<double>& y0,
                              const std::vector<double>& y1);

enum class OsculBranch { v_le_abs_r, v_gt_abs_r };

// g(x) = a + b x + c x^2 + d |x|^3 touching f(x) = |x - r|^3 at s and t.
struct OsculCoeffs {
    double a = 0.0, b = 0.0, c = 0.0, d = 0.0;
    double r = 0.0, u = 0.0, v = 0.0;
    OsculBranch branch = OsculBranch::v_le_abs_r;

    double s() const noexcept { return r > 0 ? v : -v; }
    double t() const noexcept { return r > 0 ? -u : u; }
    double g(double x) const noexcept;
    double g_prime(double x) const noexcept;
    double f(double x) const noexcept;
    double f_prime(double x) const noexcept;
};

OsculCoeffs oscul_coeffs(double r, double u, double v);
// Evaluates one formula block regardless of which side of |r| v lies on.
OsculCoeffs oscul_coeffs_block(double r, double u, double v, OsculBranch block);

// (a, b, c, d) with a + b x + c x^2 + d |x|^3 osculating A + B x + C x^2 + D x^3 at s, t.
std::array<double, 4> oscul_cubic(const std::array<double, 4>& ABCD, double s, double t);
// Same for an arbitrary differentiable f, by solving the 4x4 system.
std::array<double, 4> oscul_solve(const std::function<double(double)>& f,
                                  const std::function<double(double)>& fprime, double s, double t);

struct DominanceReport {
    bool dominates = true;        // g - f >= -1e-10 on the grid and in both tails
    bool strict_off_nodes = true; // g - f > 1e-8 away from the nodes
    double min_gap = 0.0;
    int touch_count = 0;
};

DominanceReport dominance_report(const OsculCoeffs& co, double lo, double hi, int count);
// Default grid: 10001 points over [min(s,t) - 3|r| - 3, max(s,t) + 3|r| + 3].
DominanceReport dominance_report(const OsculCoeffs& co);
// dominates, and strict off the nodes unless v = 0.
bool dominance_check(const OsculCoeffs& co, double lo, double hi, int count);
bool dominance_check(const OsculCoeffs& co);

struct RecenteredBound {
    double lhs = 0.0;
    double rhs = 0.0;
    bool tight = false;
    bool holds = true;  // lhs <= rhs + 1e-10 * max(1, rhs)
};

RecenteredBound recentered_abs3_bound(const DiscreteLaw& law, double r, double u, double v);

}  // namespace zf
