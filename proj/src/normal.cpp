#include "zf/normal.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "zf/error.hpp"

namespace zf {

double normal_pdf(double t) { return std::exp(-0.5 * t * t) / std::sqrt(2.0 * std::numbers::pi); }

double normal_sf(double t) { return 0.5 * std::erfc(t / std::numbers::sqrt2); }

double normal_tail(int k, double t) {
    const double q = normal_sf(t);
    const double f = normal_pdf(t);
    const double t2 = t * t;
    switch (k) {
        case 1: return q;
        case 2: return f - t * q;
        case 3: return ((1.0 + t2) * q - t * f) / 2.0;
        case 4: return ((t2 + 2.0) * f - t * (t2 + 3.0) * q) / 6.0;
        case 5: return ((t2 * t2 + 6.0 * t2 + 3.0) * q - t * (t2 + 5.0) * f) / 24.0;
        default:
            throw Error(ErrorCode::BadOrder, "normal tail order must be in 1..5, got " + std::to_string(k));
    }
}

}  // namespace zf
