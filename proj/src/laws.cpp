#include "zf/laws.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "zf/error.hpp"
#include "zf/extremal.hpp"

namespace zf {

namespace {

bool close_atoms(double anchor, double x) {
    return x - anchor <= kDedupeTol * std::max(1.0, std::abs(x));
}

}  // namespace

DiscreteLaw merge_unchecked(std::vector<std::pair<double, double>> pairs) {
    std::erase_if(pairs, [](const auto& p) { return p.second == 0.0; });
    if (pairs.empty()) throw Error(ErrorCode::EmptySupport, "no atom with positive mass");
    std::sort(pairs.begin(), pairs.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    // A merged cluster sits at its mass-weighted centre; singletons keep their atom.
    DiscreteLaw law;
    double anchor = pairs.front().first;
    double wsum = 0.0, msum = 0.0;
    std::size_t members = 0;
    auto flush = [&] {
        law.atoms_.push_back(members == 1 ? anchor : wsum / msum);
        law.masses_.push_back(msum);
    };
    for (const auto& [x, m] : pairs) {
        if (members > 0 && !close_atoms(anchor, x)) {
            flush();
            anchor = x;
            wsum = msum = 0.0;
            members = 0;
        }
        wsum += m * x;
        msum += m;
        ++members;
    }
    flush();

    double total = 0.0;
    for (double m : law.masses_) total += m;
    for (double& m : law.masses_) m /= total;
    return law;
}

DiscreteLaw make_discrete(const std::vector<std::pair<double, double>>& pairs) {
    double total = 0.0;
    bool any_positive = false;
    for (const auto& [x, m] : pairs) {
        if (!std::isfinite(x)) throw Error(ErrorCode::BadInput, "non-finite atom");
        if (!(m >= 0.0) || !std::isfinite(m))
            throw Error(ErrorCode::BadMass, "negative or non-finite mass " + std::to_string(m));
        total += m;
        any_positive = any_positive || m > 0.0;
    }
    if (!any_positive) throw Error(ErrorCode::EmptySupport, "all masses are zero");
    if (!(std::abs(total - 1.0) < 1e-9))
        throw Error(ErrorCode::BadMass, "total mass " + std::to_string(total) + " is not 1");
    return merge_unchecked(pairs);
}

DiscreteLaw make_discrete(const std::vector<double>& atoms, const std::vector<double>& masses) {
    if (atoms.size() != masses.size())
        throw Error(ErrorCode::BadInput, "atoms and masses differ in length");
    std::vector<std::pair<double, double>> pairs(atoms.size());
    for (std::size_t i = 0; i < atoms.size(); ++i) pairs[i] = {atoms[i], masses[i]};
    return make_discrete(pairs);
}

DiscreteLaw point_mass(double x) { return make_discrete({{x, 1.0}}); }

DiscreteLaw rademacher() { return make_discrete({{-1.0, 0.5}, {1.0, 0.5}}); }

DiscreteLaw symmetric_two_point(double sigma) {
    if (!(sigma > 0.0)) throw Error(ErrorCode::BadParam, "sigma must be positive");
    return make_discrete({{-sigma, 0.5}, {sigma, 0.5}});
}

double mean(const DiscreteLaw& law) {
    return law.expect([](double x) { return x; });
}

double variance(const DiscreteLaw& law) { return central_moment(law, 2); }

double raw_moment(const DiscreteLaw& law, int k) {
    return law.expect([k](double x) { return std::pow(x, k); });
}

double central_moment(const DiscreteLaw& law, int k) {
    const double mu = mean(law);
    return law.expect([mu, k](double x) { return std::pow(x - mu, k); });
}

double abs_moment(const DiscreteLaw& law, double s) {
    return law.expect([s](double x) { return std::pow(std::abs(x), s); });
}

MomentSummary moments(const DiscreteLaw& law) {
    MomentSummary m;
    m.mean = mean(law);
    const double mu = m.mean;
    m.variance = law.expect([mu](double x) { return (x - mu) * (x - mu); });
    m.third_central_abs = law.expect([mu](double x) {
        const double d = std::abs(x - mu);
        return d * d * d;
    });
    if (law.size() > 1 && m.variance > 0.0)
        m.rho = m.third_central_abs / std::pow(m.variance, 1.5);
    return m;
}

DiscreteLaw standardize(const DiscreteLaw& law) {
    if (law.size() < 2) throw Error(ErrorCode::DegenerateLaw, "variance is zero");
    const double mu = mean(law);
    const double sd =
        std::sqrt(law.expect([mu](double x) { return (x - mu) * (x - mu); }));
    DiscreteLaw out = law;
    for (double& x : out.atoms_) x = (x - mu) / sd;
    return out;
}

DiscreteLaw affine(const DiscreteLaw& law, double a, double b) {
    if (a == 0.0 || !std::isfinite(a)) throw Error(ErrorCode::BadParam, "scale must be nonzero");
    DiscreteLaw out = law;
    for (double& x : out.atoms_) x = a * x + b;
    if (a < 0.0) {
        std::reverse(out.atoms_.begin(), out.atoms_.end());
        std::reverse(out.masses_.begin(), out.masses_.end());
    }
    return out;
}

DiscreteLaw mixture(const std::vector<double>& weights, const std::vector<DiscreteLaw>& laws) {
    if (weights.size() != laws.size() || laws.empty())
        throw Error(ErrorCode::BadInput, "mixture needs matching non-empty weights and laws");
    std::vector<std::pair<double, double>> pairs;
    for (std::size_t j = 0; j < laws.size(); ++j)
        for (std::size_t i = 0; i < laws[j].size(); ++i)
            pairs.emplace_back(laws[j].atoms()[i], weights[j] * laws[j].masses()[i]);
    return make_discrete(pairs);
}

double cumulant(const DiscreteLaw& law, int ell) {
    switch (ell) {
        case 1: return mean(law);
        case 2: return central_moment(law, 2);
        case 3: return central_moment(law, 3);
        case 4: {
            const double v = central_moment(law, 2);
            return central_moment(law, 4) - 3.0 * v * v;
        }
        default:
            throw Error(ErrorCode::BadOrder, "cumulant order must be in 1..4, got " +
                                                 std::to_string(ell));
    }
}

DiscreteLaw convolve(const DiscreteLaw& a, const DiscreteLaw& b, std::size_t max_atoms) {
    const std::size_t count = a.size() * b.size();
    if (count > max_atoms)
        throw Error(ErrorCode::SupportBlowup, std::to_string(count) + " atoms exceed budget " +
                                                  std::to_string(max_atoms));
    std::vector<std::pair<double, double>> pairs;
    pairs.reserve(count);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            pairs.emplace_back(a.atoms()[i] + b.atoms()[j], a.masses()[i] * b.masses()[j]);
    return merge_unchecked(std::move(pairs));
}

DiscreteLaw convolve(const std::vector<DiscreteLaw>& laws, std::size_t max_atoms) {
    if (laws.empty()) throw Error(ErrorCode::BadInput, "nothing to convolve");
    DiscreteLaw acc = laws.front();
    for (std::size_t i = 1; i < laws.size(); ++i) acc = convolve(acc, laws[i], max_atoms);
    return acc;
}

DiscreteLaw convolve_power(const DiscreteLaw& law, int n, std::size_t max_atoms) {
    if (n < 1) throw Error(ErrorCode::BadN, "convolution power must be >= 1");
    return convolve(std::vector<DiscreteLaw>(static_cast<std::size_t>(n), law), max_atoms);
}

// Ratios outward from the centre, then one normalization: no overflow, and the
// relative error per mass grows only linearly in n.
DiscreteLaw binomial_half(int n) {
    if (n < 1) throw Error(ErrorCode::BadN, "n must be >= 1, got " + std::to_string(n));
    std::vector<long double> w(static_cast<std::size_t>(n) + 1, 0.0L);
    const int c = n / 2;
    w[c] = 1.0L;
    for (int k = c; k < n; ++k) w[k + 1] = w[k] * (n - k) / (k + 1);
    for (int k = c; k > 0; --k) w[k - 1] = w[k] * k / (n - k + 1);
    long double total = 0.0L;
    for (long double x : w) total += x;
    std::vector<std::pair<double, double>> pairs;
    for (int k = 0; k <= n; ++k) {
        const double m = static_cast<double>(w[k] / total);
        if (m > 0.0) pairs.emplace_back(static_cast<double>(k), m);
    }
    return merge_unchecked(std::move(pairs));
}

std::vector<Rational> binomial_half_exact(int n) {
    if (n < 1) throw Error(ErrorCode::BadN, "n must be >= 1, got " + std::to_string(n));
    const BigInt denom = BigInt(1) << n;
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(n) + 1);
    BigInt c = 1;
    for (int k = 0; k <= n; ++k) {
        out.emplace_back(c, denom);
        c = c * (n - k) / (k + 1);
    }
    return out;
}

DiscreteLaw binomial_half_standardized(int n) { return standardize(binomial_half(n)); }

DiscreteLaw two_point_law(double rho) {
    const ExtremalParams e = extremal_params(rho);
    const double p = e.p;
    const double q = 1.0 - p;
    return make_discrete({{-std::sqrt(p / q), q}, {std::sqrt(q / p), p}});
}

namespace {

// Standardized third absolute moment of a law on 0,1,2,... given by successive
// pmf ratios; stops once terms are negligible beyond the mean.
template <class Pmf>
double lattice_rho(double mu, double var, Pmf&& pmf) {
    long double acc = 0.0L;
    for (long k = 0;; ++k) {
        const long double pk = pmf(k);
        const long double d = std::abs(static_cast<long double>(k) - mu);
        const long double term = pk * d * d * d;
        acc += term;
        if (k > mu + 1.0 && pk < 1e-17L && term < 1e-18L * acc) break;
        if (k > 100'000'000) throw Error(ErrorCode::BadParam, "series did not converge");
    }
    return static_cast<double>(acc / std::pow(static_cast<long double>(var), 1.5L));
}

}  // namespace

double catalog_rho(Catalog family, double param) {
    switch (family) {
        case Catalog::exponential:
            return 12.0 / std::numbers::e - 2.0;
        case Catalog::uniform:
            return 3.0 * std::sqrt(3.0) / 4.0;
        case Catalog::bernoulli: {
            if (!(param > 0.0 && param <= 0.5))
                throw Error(ErrorCode::BadParam, "bernoulli p must be in (0, 1/2]");
            const double p = param, q = 1.0 - param;
            return (p * p + q * q) / std::sqrt(p * q);
        }
        case Catalog::poisson: {
            if (!(param > 0.0) || !std::isfinite(param))
                throw Error(ErrorCode::BadParam, "poisson lambda must be positive");
            const long double lam = param;
            return lattice_rho(param, param, [lam](long k) {
                return std::exp(k * std::log(lam) - lam - std::lgamma(k + 1.0L));
            });
        }
        case Catalog::geometric: {
            if (!(param > 0.0 && param < 1.0))
                throw Error(ErrorCode::BadParam, "geometric p must be in (0, 1)");
            const long double p = param, q = 1.0L - p;
            return lattice_rho(static_cast<double>(q / p), static_cast<double>(q / (p * p)),
                               [p, q](long k) { return p * std::pow(q, static_cast<long double>(k)); });
        }
    }
    throw Error(ErrorCode::BadParam, "unknown catalog entry");
}

}  // namespace zf
