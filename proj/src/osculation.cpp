#include "zf/osculation.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "zf/error.hpp"
#include "zf/poly.hpp"

namespace zf {

namespace {

double falling(int i, int j) {
    double r = 1.0;
    for (int q = 0; q < j; ++q) r *= i - q;
    return r;
}

double sgn(double x) { return x > 0 ? 1.0 : (x < 0 ? -1.0 : 0.0); }

}  // namespace

double HermitePoly::derivative(int k, double x) const {
    const double u = x - x0;
    double s = 0.0;
    for (int i = static_cast<int>(coeffs.size()) - 1; i >= k; --i) s = s * u + coeffs[i] * falling(i, k);
    return s;
}

// Solved on [0, 1] with z_{i,j} = h^j y_{i,j}, then rescaled to x - x0.
HermitePoly hermite_two_point(double x0, double x1, const std::vector<double>& y0,
                              const std::vector<double>& y1) {
    if (y0.empty() || y1.empty()) throw Error(ErrorCode::BadInput, "need at least one value per node");
    if (x0 == x1) throw Error(ErrorCode::CoincidentNodes, "nodes coincide");
    const double h = x1 - x0;
    if (std::abs(h) < 1e-10 * std::max({1.0, std::abs(x0), std::abs(x1)}))
        throw Error(ErrorCode::IllConditioned, "nodes too close");

    const int n0 = static_cast<int>(y0.size()), n1 = static_cast<int>(y1.size());
    const int N = n0 + n1;
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(N, N);
    Eigen::VectorXd rhs(N);
    for (int j = 0; j < n0; ++j) {
        M(j, j) = falling(j, j);
        rhs(j) = std::pow(h, j) * y0[j];
    }
    for (int j = 0; j < n1; ++j) {
        for (int i = j; i < N; ++i) M(n0 + j, i) = falling(i, j);
        rhs(n0 + j) = std::pow(h, j) * y1[j];
    }
    const Eigen::VectorXd z = M.fullPivLu().solve(rhs);

    HermitePoly p;
    p.x0 = x0;
    p.x1 = x1;
    p.y0 = y0;
    p.y1 = y1;
    p.coeffs.resize(static_cast<std::size_t>(N));
    for (int i = 0; i < N; ++i) p.coeffs[i] = z(i) / std::pow(h, i);
    return p;
}

double OsculCoeffs::g(double x) const noexcept { return a + b * x + c * x * x + d * std::abs(x) * x * x; }
double OsculCoeffs::g_prime(double x) const noexcept { return b + 2.0 * c * x + 3.0 * d * x * std::abs(x); }
double OsculCoeffs::f(double x) const noexcept {
    const double y = std::abs(x - r);
    return y * y * y;
}
double OsculCoeffs::f_prime(double x) const noexcept { return 3.0 * (x - r) * std::abs(x - r); }

OsculCoeffs oscul_coeffs_block(double r, double u, double v, OsculBranch block) {
    if (r == 0.0 || !std::isfinite(r)) throw Error(ErrorCode::BadRange, "r must be nonzero");
    if (!(u > v) || !(v >= 0.0) || !std::isfinite(u))
        throw Error(ErrorCode::BadRange, "need u > v >= 0");
    OsculCoeffs co;
    co.r = r;
    co.u = u;
    co.v = v;
    co.branch = block;
    const double R = std::abs(r), r2 = r * r;
    const double D = u * u + 4.0 * u * v + v * v;
    const double u2 = u * u, v2 = v * v, u3 = u2 * u, v3 = v2 * v;
    if (block == OsculBranch::v_le_abs_r) {
        co.a = R * R * R + 4.0 * u3 * v3 / ((u - v) * D);
        co.b = -sgn(r) * (3.0 * r2 + 6.0 * u2 * v2 / D);
        co.c = 3.0 * R - 12.0 * u2 * v2 / ((u - v) * D);
        co.d = (u + v) * (u + v) * (u + v) / ((u - v) * D);
    } else {
        const double den = (u - v) * (u + v) * D;
        co.a = R *
               (6 * u2 * u2 * v2 + 6 * u2 * v2 * v2 + 12 * u3 * v2 * R - 12 * u2 * v3 * R -
                4 * u3 * v * r2 - 4 * u * v3 * r2 - u2 * u2 * r2 - v2 * v2 * r2 + 6 * u2 * v2 * r2) /
               den;
        co.b = 3 * r *
               (-4 * u2 * v2 - 4 * u3 * v - 4 * u * v3 - 3 * u2 * v * R + 3 * u * v2 * R + u3 * R -
                v3 * R - 4 * u * v * r2) /
               ((u + v) * D);
        co.c = 3 * R *
               (u2 * u2 + v2 * v2 - 6 * u2 * v2 - 4 * u3 * v - 4 * u * v3 + 4 * u3 * R - 4 * v3 * R +
                2 * u2 * r2 + 2 * v2 * r2) /
               den;
        co.d = (u - v + 2 * R) * (u2 + v2 + 4 * u * v - 2 * u * R + 2 * v * R - 2 * r2) / ((u - v) * D);
    }
    return co;
}

OsculCoeffs oscul_coeffs(double r, double u, double v) {
    return oscul_coeffs_block(r, u, v,
                              v <= std::abs(r) ? OsculBranch::v_le_abs_r : OsculBranch::v_gt_abs_r);
}

std::array<double, 4> oscul_cubic(const std::array<double, 4>& ABCD, double s, double t) {
    if (std::abs(s) == std::abs(t)) throw Error(ErrorCode::BadRange, "need |s| != |t|");
    const auto [A, B, C, D] = ABCD;
    double a0 = 0.0, b0 = 0.0, c0 = 0.0, d0;
    if (s * t <= 0.0) {
        const double st = std::abs(s * t);
        const double Q = s * s + 4.0 * st + t * t;
        a0 = 4.0 * st * st * st / ((s + t) * Q);
        b0 = 6.0 * s * s * t * t / Q;
        c0 = -12.0 * s * s * t * t / ((s + t) * Q);
        const double m = std::abs(s) + std::abs(t);
        d0 = m * m * m / ((s + t) * Q);
    } else {
        d0 = sgn(s);
    }
    return {A + D * a0, B + D * b0, C + D * c0, D * d0};
}

std::array<double, 4> oscul_solve(const std::function<double(double)>& f,
                                  const std::function<double(double)>& fprime, double s, double t) {
    if (std::abs(s) == std::abs(t)) throw Error(ErrorCode::BadRange, "need |s| != |t|");
    Eigen::Matrix4d M;
    Eigen::Vector4d y;
    int row = 0;
    for (double x : {s, t}) {
        M.row(row) << 1.0, x, x * x, std::abs(x) * x * x;
        y(row++) = f(x);
        M.row(row) << 0.0, 1.0, 2.0 * x, 3.0 * x * std::abs(x);
        y(row++) = fprime(x);
    }
    const Eigen::Vector4d sol = M.fullPivLu().solve(y);
    return {sol(0), sol(1), sol(2), sol(3)};
}

namespace {

// g - f on a half-line beyond the grid is a cubic; it must stay >= 0.
// poly is in w = |x - edge| >= 0.
bool nonneg_halfline(Cubic poly, double tol) {
    const double scale = 1.0 + std::abs(poly.c[0]) + std::abs(poly.c[1]) + std::abs(poly.c[2]) +
                         std::abs(poly.c[3]);
    for (double& ci : poly.c)
        if (std::abs(ci) <= 1e-9 * scale) ci = 0.0;
    int lead = 3;
    while (lead > 0 && poly.c[lead] == 0.0) --lead;
    if (poly.c[lead] < 0.0) return false;
    double far = 1.0;
    for (double ci : poly.c) far = std::max(far, std::abs(ci));
    return min_on(poly, 0.0, 1e6 * far) >= -tol;
}

// Taylor shift of a cubic in x to the variable w = sigma (x - x_e).
Cubic shift(const std::array<double, 4>& p, double xe, double sigma) {
    Cubic q;
    // p(xe + sigma w) expanded in w.
    const double a = p[0], b = p[1], c = p[2], d = p[3];
    q.c[0] = a + b * xe + c * xe * xe + d * xe * xe * xe;
    q.c[1] = sigma * (b + 2 * c * xe + 3 * d * xe * xe);
    q.c[2] = c + 3 * d * xe;
    q.c[3] = sigma * d;
    return q;
}

}  // namespace

DominanceReport dominance_report(const OsculCoeffs& co, double lo, double hi, int count) {
    DominanceReport rep;
    const double s = co.s(), t = co.t();
    const double spacing = (hi - lo) / std::max(1, count - 1);
    rep.min_gap = std::numeric_limits<double>::infinity();
    for (int i = 0; i < count; ++i) {
        const double x = lo + (hi - lo) * i / std::max(1, count - 1);
        const double gap = co.g(x) - co.f(x);
        rep.min_gap = std::min(rep.min_gap, gap);
        if (gap < -1e-10) rep.dominates = false;
        if (gap <= 1e-8) {
            ++rep.touch_count;
            const bool near = std::min(std::abs(x - s), std::abs(x - t)) <= 50.0 * spacing;
            if (!near) rep.strict_off_nodes = false;
        }
    }
    // Right of max(hi, r, 0): g - f = (d-1)x^3 + (c+3r)x^2 + (b-3r^2)x + a+r^3.
    const double r = co.r;
    const double xr = std::max({hi, r, 0.0});
    const std::array<double, 4> right{co.a + r * r * r, co.b - 3 * r * r, co.c + 3 * r, co.d - 1.0};
    // Left of min(lo, r, 0): g - f = (1-d)x^3 + (c-3r)x^2 + (b+3r^2)x + a-r^3.
    const double xl = std::min({lo, r, 0.0});
    const std::array<double, 4> left{co.a - r * r * r, co.b + 3 * r * r, co.c - 3 * r, 1.0 - co.d};
    if (!nonneg_halfline(shift(right, xr, 1.0), 1e-10) || !nonneg_halfline(shift(left, xl, -1.0), 1e-10))
        rep.dominates = false;
    return rep;
}

DominanceReport dominance_report(const OsculCoeffs& co) {
    const double pad = 3.0 * std::abs(co.r) + 3.0;
    return dominance_report(co, std::min(co.s(), co.t()) - pad, std::max(co.s(), co.t()) + pad, 10001);
}

bool dominance_check(const OsculCoeffs& co, double lo, double hi, int count) {
    const DominanceReport rep = dominance_report(co, lo, hi, count);
    return rep.dominates && (rep.strict_off_nodes || co.v == 0.0);
}

bool dominance_check(const OsculCoeffs& co) {
    const DominanceReport rep = dominance_report(co);
    return rep.dominates && (rep.strict_off_nodes || co.v == 0.0);
}

RecenteredBound recentered_abs3_bound(const DiscreteLaw& law, double r, double u, double v) {
    const OsculCoeffs co = oscul_coeffs(r, u, v);
    RecenteredBound b;
    b.lhs = law.expect([r](double x) {
        const double y = std::abs(x - r);
        return y * y * y;
    });
    b.rhs = co.a + co.b * raw_moment(law, 1) + co.c * raw_moment(law, 2) + co.d * abs_moment(law, 3.0);
    b.holds = b.lhs <= b.rhs + 1e-10 * std::max(1.0, std::abs(b.rhs));
    const double s = co.s(), t = co.t();
    b.tight = std::all_of(law.atoms().begin(), law.atoms().end(), [&](double x) {
        const double tolx = 1e-12 * std::max(1.0, std::abs(x));
        return std::abs(x - s) <= tolx || std::abs(x - t) <= tolx;
    });
    return b;
}

}  // namespace zf
