#include "zf/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

#include "zf/error.hpp"
#include "zf/extremal.hpp"
#include "zf/krawtchouk.hpp"
#include "zf/zeta.hpp"

namespace zf {

namespace {

void check_sigmas_rhos(const std::vector<double>& sigmas, const std::vector<double>& rhos) {
    if (sigmas.empty() || sigmas.size() != rhos.size())
        throw Error(ErrorCode::BadInput, "sigmas and rhos must be non-empty and equally long");
    for (std::size_t i = 0; i < sigmas.size(); ++i) {
        if (!(sigmas[i] > 0.0) || !std::isfinite(sigmas[i]))
            throw Error(ErrorCode::BadInput, "sigma must be positive");
        if (!(rhos[i] >= 1.0) || !std::isfinite(rhos[i]))
            throw Error(ErrorCode::BadInput, "rho must be >= 1");
    }
}

template <class G>
double weighted_rhs(const std::vector<double>& sigmas, const std::vector<double>& rhos, G&& g) {
    check_sigmas_rhos(sigmas, rhos);
    double var = 0.0, acc = 0.0;
    for (std::size_t i = 0; i < sigmas.size(); ++i) {
        var += sigmas[i] * sigmas[i];
        acc += std::pow(sigmas[i], 3) * g(rhos[i]);
    }
    return acc / (6.0 * std::pow(var, 1.5));
}

struct LawShape {
    double mean, sigma, rho;
};

LawShape shape_of(const DiscreteLaw& law) {
    const MomentSummary m = moments(law);
    if (m.degenerate()) throw Error(ErrorCode::DegenerateLaw, "law has zero variance");
    return {m.mean, std::sqrt(m.variance), *m.rho};
}

// e^{iu} - 1 - iu + u^2/2 without cancellation for small |u|.
std::complex<double> exp_remainder(double u) {
    const double u2 = u * u;
    double re, im;
    if (std::abs(u) < 0.5) {
        re = u2 * u2 * (1.0 / 24 - u2 * (1.0 / 720 - u2 * (1.0 / 40320 - u2 * (1.0 / 3628800 - u2 / 479001600.0))));
        im = -u * u2 * (1.0 / 6 - u2 * (1.0 / 120 - u2 * (1.0 / 5040 - u2 * (1.0 / 362880 - u2 / 39916800.0))));
    } else {
        re = std::cos(u) - 1.0 + u2 / 2.0;
        im = std::sin(u) - u;
    }
    return {re, im};
}

}  // namespace

std::string summarize_rhos(const std::vector<double>& rhos) {
    std::ostringstream os;
    os.precision(6);
    if (rhos.empty()) return "";
    if (rhos.size() <= 4) {
        for (std::size_t i = 0; i < rhos.size(); ++i) os << (i ? ";" : "") << rhos[i];
        return os.str();
    }
    const auto [lo, hi] = std::minmax_element(rhos.begin(), rhos.end());
    os << *lo << ".." << *hi;
    return os.str();
}

double main_rhs(const std::vector<double>& sigmas, const std::vector<double>& rhos) {
    return weighted_rhs(sigmas, rhos, [](double r) { return B_of_rho(r); });
}

double tyurin_rhs(const std::vector<double>& sigmas, const std::vector<double>& rhos) {
    return weighted_rhs(sigmas, rhos, [](double r) { return r; });
}

double normal_rhs(double rho, int n, EpsMode mode) {
    if (!(rho >= 1.0) || n < 1) throw Error(ErrorCode::BadInput, "need rho >= 1 and n >= 1");
    const double lead = B_of_rho(rho) / (6.0 * std::sqrt(static_cast<double>(n)));
    const double eps = mode == EpsMode::exact ? epsilon_n(n).value : kEpsilonUpperConstant / n;
    return lead + eps;
}

NoniidBinomialBound noniid_binomial_normal_rhs(const std::vector<double>& sigmas) {
    if (sigmas.empty()) throw Error(ErrorCode::BadInput, "sigmas must be non-empty");
    double var = 0.0;
    for (std::size_t i = 0; i < sigmas.size(); ++i) {
        if (!(sigmas[i] > 0.0)) throw Error(ErrorCode::BadInput, "sigma must be positive");
        if (i > 0 && sigmas[i] > sigmas[i - 1])
            throw Error(ErrorCode::NotSorted, "sigmas must be sorted decreasing");
        var += sigmas[i] * sigmas[i];
    }
    const double s = std::sqrt(var), s3 = var * s;
    const double n = static_cast<double>(sigmas.size());
    const double lead = std::pow(sigmas[0], 3) / s3;
    NoniidBinomialBound b;
    b.value = (2.0 * std::sqrt(2.0 / std::numbers::pi) - 1.0) / 6.0 * lead;
    b.loose = 0.0993 * lead;
    const double c = 1.0 / (6.0 * std::sqrt(2.0 * std::numbers::pi));
    for (std::size_t k = 1; k < sigmas.size(); ++k) {
        const double sk = sigmas[k];
        const double term = std::pow(sk, 3) / (s3 * std::sqrt(static_cast<double>(k)));
        b.value += c * term * std::min(1.0, std::sqrt(n) * sk / s);
        b.loose += 0.0665 * term;
    }
    return b;
}

int improvement_n_min(double rho) {
    if (!(rho >= 1.0) || !std::isfinite(rho)) throw Error(ErrorCode::BadRho, "rho must be >= 1");
    const double gap = rho - B_of_rho(rho);
    return static_cast<int>(std::ceil(kImprovementConstant / (gap * gap)));
}

CharFnBound charfn_bound(double t, const std::vector<DiscreteLaw>& laws) {
    if (laws.empty()) throw Error(ErrorCode::BadInput, "no laws");
    std::vector<LawShape> shapes;
    double var = 0.0;
    for (const auto& law : laws) {
        shapes.push_back(shape_of(law));
        var += shapes.back().sigma * shapes.back().sigma;
    }
    const double s = std::sqrt(var);
    std::complex<double> phi(1.0, 0.0);
    double cosprod = 1.0;
    std::vector<double> sig, rho;
    for (std::size_t i = 0; i < laws.size(); ++i) {
        const double mu = shapes[i].mean;
        std::complex<double> ci(0.0, 0.0);
        for (std::size_t j = 0; j < laws[i].size(); ++j) {
            const double u = t * (laws[i].atoms()[j] - mu) / s;
            ci += laws[i].masses()[j] * std::complex<double>(std::cos(u), std::sin(u));
        }
        phi *= ci;
        cosprod *= std::cos(shapes[i].sigma * t / s);
        sig.push_back(shapes[i].sigma);
        rho.push_back(shapes[i].rho);
    }
    CharFnBound b;
    b.lhs_abs = std::abs(phi - cosprod);
    b.rhs = std::pow(std::abs(t), 3) * main_rhs(sig, rho);
    b.holds = b.lhs_abs <= b.rhs + 1e-12;
    return b;
}

TaylorCharFnBound taylor_charfn_bound(double rho, double t, const std::optional<DiscreteLaw>& law) {
    if (!(rho >= 1.0)) throw Error(ErrorCode::BadRho, "rho must be >= 1");
    TaylorCharFnBound b;
    const double at = std::abs(t);
    b.rhs = A_of_rho(rho) * rho * at * at * at / 6.0 + t * t * t * t / 24.0;
    if (law) {
        const MomentSummary m = moments(*law);
        if (std::abs(m.mean) > 1e-9 || std::abs(m.variance - 1.0) > 1e-9)
            throw Error(ErrorCode::NotStandardized, "law must have mean 0 and variance 1");
        if (std::abs(*m.rho - rho) > 1e-9 * rho)
            throw Error(ErrorCode::BadInput, "law's third absolute moment differs from rho");
        std::complex<double> acc(0.0, 0.0);
        for (std::size_t j = 0; j < law->size(); ++j)
            acc += law->masses()[j] * exp_remainder(t * law->atoms()[j]);
        b.lhs_abs = std::abs(acc);
        b.holds = *b.lhs_abs <= b.rhs + 1e-12;
    }
    return b;
}

ProdCosMargin prod_cos_margin(const std::vector<double>& ts) {
    ProdCosMargin r;
    double prod = 1.0, sq = 0.0, quart = 0.0, cross = 0.0;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        const double t2 = ts[i] * ts[i];
        prod *= std::cos(ts[i]);
        cross += t2 * sq;  // sum over j < i of t_j^2 t_i^2
        sq += t2;
        quart += t2 * t2;
    }
    r.value = prod - 1.0 + 0.5 * sq;
    r.upper = quart / 24.0 + cross / 4.0;
    r.holds = r.value >= r.lower - 1e-12 && r.value <= r.upper + 1e-12;
    return r;
}

double partial_sum_gap(int n) {
    if (n < 1) throw Error(ErrorCode::BadN, "n must be >= 1");
    long double s = 0.0L;
    for (int k = n - 1; k >= 1; --k) s += 1.0L / std::sqrt(static_cast<long double>(k));
    return static_cast<double>(s - 2.0L * std::sqrt(static_cast<long double>(n)));
}

BoundReport verify_main(const std::vector<DiscreteLaw>& laws, double tol) {
    if (laws.empty()) throw Error(ErrorCode::BadInput, "no laws");
    BoundReport rep;
    rep.bound_name = "main";
    rep.n = static_cast<int>(laws.size());
    std::vector<DiscreteLaw> partners;
    bool two_point = true;
    int kappa_sign = 0;
    bool equi_signed = true;
    for (const auto& law : laws) {
        const LawShape sh = shape_of(law);
        rep.sigmas.push_back(sh.sigma);
        rep.rhos.push_back(sh.rho);
        partners.push_back(symmetric_two_point(sh.sigma));
        two_point = two_point && law.size() == 2;
        const double k3 = cumulant(law, 3);
        const int sg = k3 > 1e-12 ? 1 : (k3 < -1e-12 ? -1 : 0);
        if (sg != 0) {
            if (kappa_sign != 0 && sg != kappa_sign) equi_signed = false;
            kappa_sign = sg;
        }
    }
    rep.rho_summary = summarize_rhos(rep.rhos);
    const DiscreteLaw P = standardize(convolve(laws));
    const DiscreteLaw Q = standardize(convolve(partners));
    rep.lhs = zeta_discrete(P, Q, 3);
    rep.rhs = main_rhs(rep.sigmas, rep.rhos);
    rep.margin = rep.rhs - rep.lhs;
    rep.equality_case = two_point && equi_signed;
    rep.pass = rep.margin >= -tol &&
               (!rep.equality_case || std::abs(rep.margin) <= kEqualityThreshold);
    return rep;
}

BoundReport verify_third_abs_moment(const DiscreteLaw& law, int n, double tol) {
    if (n < 1) throw Error(ErrorCode::BadN, "n must be >= 1");
    const LawShape sh = shape_of(law);
    BoundReport rep;
    rep.bound_name = "third_abs_moment";
    rep.n = n;
    rep.sigmas.assign(static_cast<std::size_t>(n), sh.sigma);
    rep.rhos.assign(static_cast<std::size_t>(n), sh.rho);
    rep.rho_summary = summarize_rhos({sh.rho});
    const DiscreteLaw S = standardize(convolve_power(law, n));
    rep.lhs = std::abs(abs_moment(S, 3.0) - binom_abs3(n, true));
    rep.rhs = B_of_rho(sh.rho) / std::sqrt(static_cast<double>(n));
    rep.margin = rep.rhs - rep.lhs;
    rep.pass = rep.margin >= -tol;
    return rep;
}

}  // namespace zf
