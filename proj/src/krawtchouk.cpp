#include "zf/krawtchouk.hpp"

#include <cmath>
#include <string>

#include "zf/error.hpp"
#include "zf/laws.hpp"

namespace zf {

namespace {

void check_nk(int n, int k) {
    if (n < 0 || k < 0) throw Error(ErrorCode::BadIndex, "n and k must be >= 0");
}

// C(x, j) for rational x and integer j >= 0.
Rational gen_binomial(const Rational& x, int j) {
    if (j < 0) return Rational(0);
    Rational r(1);
    for (int i = 0; i < j; ++i) r = r * (x - i) / (i + 1);
    return r;
}

void check_partial(int n, int k, int a) {
    if (n < 1) throw Error(ErrorCode::BadIndex, "n must be >= 1");
    if (k < 1) throw Error(ErrorCode::BadIndex, "k must be >= 1");
    if (a < 0 || a > n) throw Error(ErrorCode::BadIndex, "a must lie in 0..n");
}

}  // namespace

double kraw_eval(int n, int k, double x) {
    check_nk(n, k);
    double prev = 1.0;
    if (k == 0) return prev;
    double cur = n - 2.0 * x;
    for (int j = 1; j < k; ++j) {
        const double next = ((n - 2.0 * x) * cur - (n - j + 1.0) * prev) / (j + 1.0);
        prev = cur;
        cur = next;
    }
    return cur;
}

Rational kraw_eval_exact(int n, int k, const Rational& x) {
    check_nk(n, k);
    Rational prev(1);
    if (k == 0) return prev;
    const Rational lin = Rational(n) - 2 * x;
    Rational cur = lin;
    for (int j = 1; j < k; ++j) {
        Rational next = (lin * cur - Rational(n - j + 1) * prev) / (j + 1);
        prev = cur;
        cur = next;
    }
    return cur;
}

Rational kraw_sum_definition(int n, int k, const Rational& x) {
    check_nk(n, k);
    Rational s(0);
    for (int j = 0; j <= k; ++j) {
        const Rational term = gen_binomial(x, j) * gen_binomial(Rational(n) - x, k - j);
        s += (j % 2 == 0) ? term : Rational(-term);
    }
    return s;
}

Rational kraw_partial_sum_exact(int n, int k, int a) {
    check_partial(n, k, a);
    const auto b = binomial_half_exact(n);
    return Rational(n - a, k) * kraw_eval_exact(n - 1, k - 1, Rational(a)) * b[a];
}

Rational kraw_partial_sum_direct_exact(int n, int k, int a) {
    check_partial(n, k, a);
    const auto b = binomial_half_exact(n);
    Rational s(0);
    for (int x = 0; x <= a; ++x) s += kraw_eval_exact(n, k, Rational(x)) * b[x];
    return s;
}

double kraw_partial_sum(int n, int k, int a) {
    check_partial(n, k, a);
    const DiscreteLaw bin = binomial_half(n);
    // binomial_half drops underflowed tail masses, so index by atom value.
    auto weight = [&](int x) {
        for (std::size_t i = 0; i < bin.size(); ++i)
            if (bin.atoms()[i] == x) return bin.masses()[i];
        return 0.0;
    };
    const double closed = (n - a) / static_cast<double>(k) * kraw_eval(n - 1, k - 1, a) * weight(a);
    double direct = 0.0, scale = 1.0;
    for (int x = 0; x <= a; ++x) {
        const double term = kraw_eval(n, k, x) * weight(x);
        direct += term;
        scale = std::max(scale, std::abs(term));
    }
    if (std::abs(closed - direct) > 1e-10 * scale)
        throw Error(ErrorCode::IllConditioned,
                    "closed partial sum disagrees with direct sum for n=" + std::to_string(n) +
                        " k=" + std::to_string(k) + " a=" + std::to_string(a));
    return closed;
}

Rational central_binomial_half_exact(int n) {
    if (n < 1) throw Error(ErrorCode::BadN, "n must be >= 1");
    return binomial_half_exact(n)[static_cast<std::size_t>(n / 2)];
}

double central_binomial_half(int n) {
    if (n < 1) throw Error(ErrorCode::BadN, "n must be >= 1");
    if (n <= 64) return static_cast<double>(central_binomial_half_exact(n));
    const int m = n / 2;
    long double b = 1.0L;
    for (int j = 1; j <= m; ++j) b *= (2.0L * j - 1.0L) / (2.0L * j);
    if (n % 2 == 1) b *= (2.0L * m + 1.0L) / (2.0L * (m + 1.0L));
    return static_cast<double>(b);
}

Rational binom_abs3_raw_exact(int n) {
    if (n < 1) throw Error(ErrorCode::BadN, "n must be >= 1");
    const Rational b = central_binomial_half_exact(n);
    if (n % 2 == 0) return Rational(n * n, 4) * b;
    return (Rational(n * n, 4) + Rational(n, 8) - Rational(1, 8)) * b;
}

double binom_abs3(int n, bool standardized) {
    if (n < 1) throw Error(ErrorCode::BadN, "n must be >= 1, got " + std::to_string(n));
    const double b = central_binomial_half(n);
    const double dn = n;
    if (standardized) {
        if (n % 2 == 0) return 2.0 * std::sqrt(dn) * b;
        return (2.0 * std::sqrt(dn) + 1.0 / std::sqrt(dn) - std::pow(dn, -1.5)) * b;
    }
    if (n % 2 == 0) return dn * dn / 4.0 * b;
    return (dn * dn / 4.0 + dn / 8.0 - 1.0 / 8.0) * b;
}

}  // namespace zf
