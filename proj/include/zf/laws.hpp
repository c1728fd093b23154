#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "zf/rational.hpp"

namespace zf {

// Atoms closer than kDedupeTol * max(1, |x|) are merged.
inline constexpr double kDedupeTol = 1e-12;
inline constexpr std::size_t kDefaultMaxAtoms = 2'000'000;

// Finite-support law. Atoms strictly increasing, masses positive, total 1.
class DiscreteLaw {
public:
    const std::vector<double>& atoms() const noexcept { return atoms_; }
    const std::vector<double>& masses() const noexcept { return masses_; }
    std::size_t size() const noexcept { return atoms_.size(); }
    double min_atom() const noexcept { return atoms_.front(); }
    double max_atom() const noexcept { return atoms_.back(); }

    // E f(X).
    template <class F>
    double expect(F&& f) const {
        double s = 0.0;
        for (std::size_t i = 0; i < atoms_.size(); ++i) s += masses_[i] * f(atoms_[i]);
        return s;
    }

private:
    friend DiscreteLaw make_discrete(const std::vector<std::pair<double, double>>&);
    friend DiscreteLaw merge_unchecked(std::vector<std::pair<double, double>>);
    friend DiscreteLaw standardize(const DiscreteLaw&);
    friend DiscreteLaw affine(const DiscreteLaw&, double, double);

    std::vector<double> atoms_;
    std::vector<double> masses_;
};

struct MomentSummary {
    double mean = 0.0;
    double variance = 0.0;
    double third_central_abs = 0.0;
    std::optional<double> rho;  // empty for degenerate laws

    bool degenerate() const noexcept { return !rho.has_value(); }
};

// Validates masses (>= 0, total within 1e-9 of 1), merges close atoms,
// drops zero masses and renormalizes.
DiscreteLaw make_discrete(const std::vector<std::pair<double, double>>& pairs);
DiscreteLaw make_discrete(const std::vector<double>& atoms, const std::vector<double>& masses);

// Same merge and renormalization without the total-mass check. Masses must be >= 0.
DiscreteLaw merge_unchecked(std::vector<std::pair<double, double>> pairs);

DiscreteLaw point_mass(double x);
DiscreteLaw rademacher();                   // 1/2 (delta_{-1} + delta_1)
DiscreteLaw symmetric_two_point(double sigma);  // 1/2 (delta_{-sigma} + delta_sigma)

MomentSummary moments(const DiscreteLaw& law);
double mean(const DiscreteLaw& law);
double variance(const DiscreteLaw& law);
double raw_moment(const DiscreteLaw& law, int k);
double central_moment(const DiscreteLaw& law, int k);
double abs_moment(const DiscreteLaw& law, double s);  // nu_s = E|X|^s

DiscreteLaw standardize(const DiscreteLaw& law);
// Pushforward under x -> a x + b, a != 0.
DiscreteLaw affine(const DiscreteLaw& law, double a, double b = 0.0);
DiscreteLaw mixture(const std::vector<double>& weights, const std::vector<DiscreteLaw>& laws);

double cumulant(const DiscreteLaw& law, int ell);

DiscreteLaw convolve(const DiscreteLaw& a, const DiscreteLaw& b,
                     std::size_t max_atoms = kDefaultMaxAtoms);
DiscreteLaw convolve(const std::vector<DiscreteLaw>& laws,
                     std::size_t max_atoms = kDefaultMaxAtoms);
DiscreteLaw convolve_power(const DiscreteLaw& law, int n,
                           std::size_t max_atoms = kDefaultMaxAtoms);

// B_{n,1/2} on atoms 0..n.
DiscreteLaw binomial_half(int n);
// Exact masses C(n,k) / 2^n, k = 0..n.
std::vector<Rational> binomial_half_exact(int n);
// Standardized symmetric binomial.
DiscreteLaw binomial_half_standardized(int n);

// Standardized two-point law with nu_3 = rho and mu_3 >= 0.
DiscreteLaw two_point_law(double rho);

enum class Catalog { exponential, uniform, bernoulli, poisson, geometric };

double catalog_rho(Catalog family, double param = 0.0);

}  // namespace zf
