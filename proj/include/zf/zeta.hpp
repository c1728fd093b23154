#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "zf/laws.hpp"
#include "zf/poly.hpp"

namespace zf {

// Piecewise cubic on breakpoints b_0 < ... < b_m. Piece j lives on (b_j, b_{j+1}]
// in the local variable u = t - b_j; the left tail lives on (-inf, b_0] in
// u = t - b_0; the function is 0 right of b_m. Values are left-continuous.
class PiecewisePoly {
public:
    PiecewisePoly() = default;  // identically zero
    PiecewisePoly(std::vector<double> breaks, std::vector<Cubic> pieces, Cubic left = {});

    double operator()(double t) const;
    double right_limit(double t) const;

    const std::vector<double>& breaks() const noexcept { return breaks_; }
    const std::vector<Cubic>& pieces() const noexcept { return pieces_; }
    const Cubic& left_tail() const noexcept { return left_; }
    bool is_zero() const noexcept;

    // Integral of |.| over [b_0, b_m].
    double integral_abs() const;
    // Minimum over [b_0, b_m]; 0 for the zero function.
    double min_value() const;

private:
    std::vector<double> breaks_;
    std::vector<Cubic> pieces_;
    Cubic left_;
};

// F_bar_k(t) = sum_i m_i (x_i - t)_+^{k-1} / (k-1)!, k in 1..4, on the law's atoms.
PiecewisePoly tail_function(const DiscreteLaw& law, int k);
// Same on a refined grid; grid must contain every atom.
PiecewisePoly tail_function(const DiscreteLaw& law, int k, const std::vector<double>& grid);

struct StandardNormal {};
using Law = std::variant<DiscreteLaw, StandardNormal>;

// H_bar_k for a pair of laws, or one of the tails themselves.
class TailFunction {
public:
    enum class Kind { piecewise, normal, normal_difference };

    static TailFunction from_piecewise(PiecewisePoly f, int k);
    static TailFunction normal(int k);
    // sign * (T_k - F_bar_k^law). The first k-1 moments of law must match N(0,1).
    static TailFunction normal_difference(const DiscreteLaw& law, int k, double sign);

    Kind kind() const noexcept { return kind_; }
    int order() const noexcept { return k_; }
    double operator()(double t) const;
    double right_limit(double t) const;

    const PiecewisePoly& piecewise() const noexcept { return upper_; }
    // Atoms of the discrete law (normal_difference) or breakpoints (piecewise).
    const std::vector<double>& breakpoints() const noexcept;
    double sign() const noexcept { return sign_; }

private:
    Kind kind_ = Kind::piecewise;
    int k_ = 1;
    double sign_ = 1.0;
    PiecewisePoly upper_;    // F_bar_k of the law, or the piecewise function
    PiecewisePoly lower_;    // F_bar_k of the reflected law
    std::vector<double> atoms_;
};

// Throws MomentMismatchError for the first j in 1..upto with |mu_j(P) - mu_j(Q)|
// above 1e-9 * max(1, nu_j(P), nu_j(Q)).
void check_moment_match(const Law& P, const Law& Q, int upto);

// H_bar_k = G_bar_k - F_bar_k with F from P and G from Q.
TailFunction hbar(const Law& P, const Law& Q, int k);

struct ZetaResult {
    double value = 0.0;
    double abs_error = 0.0;
};

double zeta_discrete(const DiscreteLaw& P, const DiscreteLaw& Q, int s);
ZetaResult zeta_discrete_detailed(const DiscreteLaw& P, const DiscreteLaw& Q, int s);

// zeta_s(P, N). s in 3..4 requires P standardized; s in 1..2 only the lower moments.
double zeta_vs_normal(const DiscreteLaw& P, int s, double tol = 1e-10);
ZetaResult zeta_vs_normal_detailed(const DiscreteLaw& P, int s, double tol = 1e-10);

// Dispatch on the law kinds.
ZetaResult zeta(const Law& P, const Law& Q, int s, double tol = 1e-10);

struct SignChangeReport {
    int count = 0;
    std::vector<double> points;
    bool lastly_positive = false;
};

struct SignChangeOptions {
    double zero_tol = 1e-12;     // |f| at or below this counts as 0
    int grid_points = 4096;      // sampling budget for the normal-difference kind
};

// Sign changes over the real line. Tails outside the breakpoint hull are
// one-signed for every supported kind and are accounted for analytically.
SignChangeReport sign_changes(const TailFunction& f, SignChangeOptions opt = {});

// True iff H_bar_s >= -1e-12 everywhere, i.e. P <=_{s-cx} Q.
bool s_convex_le(const DiscreteLaw& P, const DiscreteLaw& Q, int s);

// nu_s(P, Q) = integral |x|^s d|P - Q|.
double abs_moment_variation(const DiscreteLaw& P, const DiscreteLaw& Q, double s);

// D_k = integral |phi^{(k)}|, D_{k,alpha} = integral |x|^alpha |phi^{(k)}|.
double gauss_derivative_l1(int k);
double gauss_derivative_weighted_l1(int k, double alpha);
double smoothing_constant(double s, double t);

inline constexpr double kZetaHalf = -1.4603545088095868;

struct EpsilonReport {
    double value = 0.0;
    double abs_error = 0.0;
    double lower_line = 0.0;
    double upper_line = 0.0;
};

// epsilon_n = zeta_3(standardized B_{n,1/2}, N) with its two bounding lines.
// Throws SandwichViolation unless lower_line <= value + tol and value < upper_line.
EpsilonReport epsilon_n(int n, double tol = 1e-10);
double epsilon_lower_line(int n);
double epsilon_upper_line(int n);

}  // namespace zf
