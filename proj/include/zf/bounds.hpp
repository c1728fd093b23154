#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zf/laws.hpp"

namespace zf {

struct BoundReport {
    std::string bound_name;
    int n = 0;
    std::string rho_summary;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;  // rhs - lhs
    bool pass = true;
    bool equality_case = false;
    std::vector<double> sigmas;
    std::vector<double> rhos;
};

std::string summarize_rhos(const std::vector<double>& rhos);

// (1 / (6 sigma^3)) sum sigma_i^3 B(rho_i), sigma^2 = sum sigma_i^2.
double main_rhs(const std::vector<double>& sigmas, const std::vector<double>& rhos);
// Same with rho_i in place of B(rho_i).
double tyurin_rhs(const std::vector<double>& sigmas, const std::vector<double>& rhos);

enum class EpsMode { exact, upper };

inline constexpr double kEpsilonUpperConstant = 0.1352;

// B(rho) / (6 sqrt n) + epsilon_n, with epsilon_n computed or replaced by 0.1352 / n.
double normal_rhs(double rho, int n, EpsMode mode);

struct NoniidBinomialBound {
    double value = 0.0;
    double loose = 0.0;  // 0.0993 and 0.0665 coefficient form
};

// sigmas sorted decreasing and positive.
NoniidBinomialBound noniid_binomial_normal_rhs(const std::vector<double>& sigmas);

// Taken verbatim, not recomputed from (6 * 0.1352)^2.
inline constexpr double kImprovementConstant = 0.65804;

// ceil(0.65804 / (rho - B(rho))^2).
int improvement_n_min(double rho);

struct CharFnBound {
    double lhs_abs = 0.0;
    double rhs = 0.0;
    bool holds = true;  // lhs <= rhs + 1e-12
};

// |phi(t) - prod cos(sigma_i t / sigma)| for the standardized sum of the laws.
CharFnBound charfn_bound(double t, const std::vector<DiscreteLaw>& laws);

struct TaylorCharFnBound {
    std::optional<double> lhs_abs;
    double rhs = 0.0;
    bool holds = true;
};

// A(rho) rho |t|^3 / 6 + t^4 / 24, and |E e^{itX} - 1 + t^2/2| for a standardized law.
TaylorCharFnBound taylor_charfn_bound(double rho, double t,
                                      const std::optional<DiscreteLaw>& law = std::nullopt);

struct ProdCosMargin {
    double lower = 0.0;
    double value = 0.0;
    double upper = 0.0;
    bool holds = true;  // lower <= value <= upper within 1e-12
};

ProdCosMargin prod_cos_margin(const std::vector<double>& ts);

// sum_{k=1}^{n-1} k^{-1/2} - 2 sqrt(n).
double partial_sum_gap(int n);

// lhs = zeta_3 between the standardized convolution of the laws and the
// standardized convolution of 1/2 (delta_{-sigma_i} + delta_{sigma_i}).
inline constexpr double kEqualityThreshold = 1e-6;
BoundReport verify_main(const std::vector<DiscreteLaw>& laws, double tol = 1e-9);

// |E|S~_n|^3 - E|B~_n|^3| <= B(rho) / sqrt(n) for n i.i.d. copies of law.
BoundReport verify_third_abs_moment(const DiscreteLaw& law, int n, double tol = 1e-9);

}  // namespace zf
