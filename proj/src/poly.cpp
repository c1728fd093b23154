#include "zf/poly.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include <boost/math/tools/roots.hpp>
#include <boost/math/tools/toms748_solve.hpp>

namespace zf {

double Cubic::integral(double a, double b) const noexcept {
    auto prim = [this](double u) {
        return (((c[3] / 4.0 * u + c[2] / 3.0) * u + c[1] / 2.0) * u + c[0]) * u;
    };
    return prim(b) - prim(a);
}

double Cubic::magnitude(double w) const noexcept {
    double m = 0.0, wp = 1.0;
    for (double ci : c) {
        m = std::max(m, std::abs(ci) * wp);
        wp *= w;
    }
    return m;
}

namespace {

// Roots of a u^2 + b u + c in (lo, hi), cancellation-free.
void quadratic_roots(double a, double b, double c, double lo, double hi, std::vector<double>& out) {
    auto keep = [&](double r) {
        if (r > lo && r < hi && std::isfinite(r)) out.push_back(r);
    };
    if (a == 0.0) {
        if (b != 0.0) keep(-c / b);
        return;
    }
    const double disc = b * b - 4.0 * a * c;
    if (disc < 0.0) return;
    const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
    keep(q / a);
    if (q != 0.0) keep(c / q);
}

}  // namespace

std::vector<double> real_roots(const Cubic& p, double lo, double hi) {
    std::vector<double> roots;
    if (!(hi > lo)) return roots;
    const double w = hi - lo;
    const double reach = std::max(std::abs(lo), std::abs(hi));
    const double scale = p.magnitude(reach);
    if (scale == 0.0) return roots;

    // Leading terms that cannot move the value on the interval are dropped.
    Cubic q = p;
    for (int d = 3; d >= 1; --d) {
        if (std::abs(q.c[d]) * std::pow(reach, d) <= 1e-15 * scale) q.c[d] = 0.0;
        else break;
    }

    std::vector<double> cuts{lo};
    const Cubic dq = q.derivative();
    std::vector<double> crit;
    quadratic_roots(dq.c[2], dq.c[1], dq.c[0], lo, hi, crit);
    std::sort(crit.begin(), crit.end());
    cuts.insert(cuts.end(), crit.begin(), crit.end());
    cuts.push_back(hi);

    boost::math::tools::eps_tolerance<double> tol(50);
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double a = cuts[i], b = cuts[i + 1];
        const double fa = q(a), fb = q(b);
        if (i > 0 && fa == 0.0) roots.push_back(a);
        if (fa == 0.0 || fb == 0.0 || (fa < 0.0) == (fb < 0.0)) continue;
        std::uintmax_t iters = 200;
        const auto br = boost::math::tools::toms748_solve(q, a, b, fa, fb, tol, iters);
        roots.push_back(0.5 * (br.first + br.second));
    }
    std::sort(roots.begin(), roots.end());
    std::vector<double> merged;
    for (double r : roots)
        if (merged.empty() || r - merged.back() > 1e-13 * w) merged.push_back(r);
    return merged;
}

double integral_abs(const Cubic& p, double lo, double hi) {
    if (p.is_zero() || !(hi > lo)) return 0.0;
    double total = 0.0, a = lo;
    for (double r : real_roots(p, lo, hi)) {
        total += std::abs(p.integral(a, r));
        a = r;
    }
    return total + std::abs(p.integral(a, hi));
}

double min_on(const Cubic& p, double lo, double hi) {
    double m = std::min(p(lo), p(hi));
    std::vector<double> crit;
    const Cubic d = p.derivative();
    quadratic_roots(d.c[2], d.c[1], d.c[0], lo, hi, crit);
    for (double x : crit) m = std::min(m, p(x));
    return m;
}

}  // namespace zf
