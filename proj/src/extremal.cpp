#include "zf/extremal.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "zf/error.hpp"

namespace zf {

namespace {

void check_rho(double rho) {
    if (!(rho >= 1.0) || !std::isfinite(rho))
        throw Error(ErrorCode::BadRho, "rho must be finite and >= 1, got " + std::to_string(rho));
}

}  // namespace

// X = 1 - 4pq is formed as (rho^2 - 1) / D and 1 - X without subtraction,
// so there is no cancellation at either end of the range.
ExtremalParams extremal_params(double rho) {
    check_rho(rho);
    using ld = long double;
    const ld r = rho;
    const ld root = std::sqrt(r * r + 8.0L);
    const ld den = r * root / 2.0L + r * r / 2.0L + 1.0L;
    const ld x = (r - 1.0L) * (r + 1.0L) / den;
    const ld y = (4.0L * r / (root + r) + 2.0L) / den;
    const ld sx = std::sqrt(x);

    ExtremalParams e;
    e.rho = rho;
    e.p = static_cast<double>(y / (2.0L * (1.0L + sx)));
    e.h = static_cast<double>(2.0L / std::sqrt(y));
    e.B = static_cast<double>(2.0L * sx / std::sqrt(y));
    e.A = static_cast<double>(2.0L * sx / std::sqrt(y) / r);
    return e;
}

double B_of_rho(double rho) { return extremal_params(rho).B; }

double A_of_rho(double rho) { return extremal_params(rho).A; }

ClassicalConstants classical_constants() {
    const double s10 = std::sqrt(10.0);
    const double s2pi = std::sqrt(2.0 * std::numbers::pi);
    ClassicalConstants c{};
    c.C_E = (s10 + 3.0) / (6.0 * s2pi);
    c.rho_E = std::sqrt(20.0 * (s10 - 3.0) / 3.0);
    c.rho_0 = std::pow(3.0, 0.25) * (4.0 - std::sqrt(3.0)) / std::sqrt(6.0);
    c.p_E = (4.0 - s10) / 2.0;
    return c;
}

double g_function(GFunction which, double rho) {
    check_rho(rho);
    const double s2pi = std::sqrt(2.0 * std::numbers::pi);
    switch (which) {
        case GFunction::g0: {
            // Same as the radical form; 2 sqrt(2X) / sqrt(2(1-X)) = B and 2 / sqrt(1-X) = h.
            const ExtremalParams e = extremal_params(rho);
            return (e.B + 3.0 * e.h) / (6.0 * s2pi);
        }
        case GFunction::g1:
            return classical_constants().C_E * rho;
        case GFunction::g2:
            return 2.0 * rho / (3.0 * s2pi) +
                   std::sqrt((2.0 * std::sqrt(3.0) - 3.0) / (6.0 * std::numbers::pi));
    }
    return 0.0;
}

double g2_crossover() {
    return (2.0 / 3.0) * std::sqrt(2.0 / std::sqrt(3.0) - 1.0) * (std::sqrt(10.0) + 1.0);
}

}  // namespace zf
