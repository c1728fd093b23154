#pragma once

#include <array>
#include <vector>

namespace zf {

// Polynomial of degree <= 3 with ascending coefficients.
struct Cubic {
    std::array<double, 4> c{};

    double operator()(double u) const noexcept { return ((c[3] * u + c[2]) * u + c[1]) * u + c[0]; }
    Cubic derivative() const noexcept { return Cubic{{c[1], 2.0 * c[2], 3.0 * c[3], 0.0}}; }
    // Integral over [a, b].
    double integral(double a, double b) const noexcept;
    // max_i |c_i| w^i, the magnitude of the terms on [0, w].
    double magnitude(double w) const noexcept;
    bool is_zero() const noexcept { return c[0] == 0.0 && c[1] == 0.0 && c[2] == 0.0 && c[3] == 0.0; }

    Cubic operator-(const Cubic& o) const noexcept {
        return Cubic{{c[0] - o.c[0], c[1] - o.c[1], c[2] - o.c[2], c[3] - o.c[3]}};
    }
};

// Real roots in the open interval (lo, hi), sorted. The interval is split at the
// closed-form critical points; each monotone piece with a sign change is solved
// by a bracketing solver. Roots closer than 1e-13 * (hi - lo) are merged.
std::vector<double> real_roots(const Cubic& p, double lo, double hi);

// Integral of |p| over [lo, hi].
double integral_abs(const Cubic& p, double lo, double hi);

// Minimum of p over [lo, hi].
double min_on(const Cubic& p, double lo, double hi);

}  // namespace zf
