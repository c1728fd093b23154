#include "zf/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/tools/toms748_solve.hpp>

#include "zf/error.hpp"
#include "zf/krawtchouk.hpp"
#include "zf/normal.hpp"

namespace zf {

namespace {

constexpr double kMomentTol = 1e-9;

void check_order(int k, int hi = 4) {
    if (k < 1 || k > hi)
        throw Error(ErrorCode::BadOrder, "order must be in 1.." + std::to_string(hi) +
                                             ", got " + std::to_string(k));
}

double binom(int n, int k) {
    double r = 1.0;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

double factorial(int n) {
    double r = 1.0;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

int sign_of(double v, double zero_tol) { return v > zero_tol ? 1 : (v < -zero_tol ? -1 : 0); }

std::vector<double> merged_grid(const DiscreteLaw& a, const DiscreteLaw& b) {
    std::vector<double> g;
    g.reserve(a.size() + b.size());
    std::merge(a.atoms().begin(), a.atoms().end(), b.atoms().begin(), b.atoms().end(),
               std::back_inserter(g));
    g.erase(std::unique(g.begin(), g.end()), g.end());
    return g;
}

}  // namespace

// ---------------------------------------------------------------- PiecewisePoly

PiecewisePoly::PiecewisePoly(std::vector<double> breaks, std::vector<Cubic> pieces, Cubic left)
    : breaks_(std::move(breaks)), pieces_(std::move(pieces)), left_(left) {
    if (breaks_.empty() ? !pieces_.empty() : pieces_.size() + 1 != breaks_.size())
        throw Error(ErrorCode::BadInput, "piece count must be breakpoint count minus one");
}

double PiecewisePoly::operator()(double t) const {
    if (breaks_.empty()) return 0.0;
    if (t <= breaks_.front()) return left_(t - breaks_.front());
    if (t > breaks_.back()) return 0.0;
    const auto j = static_cast<std::size_t>(
        std::lower_bound(breaks_.begin(), breaks_.end(), t) - breaks_.begin()) - 1;
    return pieces_[j](t - breaks_[j]);
}

double PiecewisePoly::right_limit(double t) const {
    if (breaks_.empty()) return 0.0;
    if (t < breaks_.front()) return left_(t - breaks_.front());
    if (t >= breaks_.back()) return 0.0;
    const auto j = static_cast<std::size_t>(
        std::upper_bound(breaks_.begin(), breaks_.end(), t) - breaks_.begin()) - 1;
    return pieces_[j](t - breaks_[j]);
}

bool PiecewisePoly::is_zero() const noexcept {
    if (!left_.is_zero()) return false;
    return std::all_of(pieces_.begin(), pieces_.end(), [](const Cubic& c) { return c.is_zero(); });
}

double PiecewisePoly::integral_abs() const {
    double s = 0.0;
    for (std::size_t j = 0; j < pieces_.size(); ++j)
        s += zf::integral_abs(pieces_[j], 0.0, breaks_[j + 1] - breaks_[j]);
    return s;
}

double PiecewisePoly::min_value() const {
    double m = pieces_.empty() ? 0.0 : std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < pieces_.size(); ++j)
        m = std::min(m, min_on(pieces_[j], 0.0, breaks_[j + 1] - breaks_[j]));
    return std::min(m, 0.0);
}

// Backward sweep: M_r holds sum over atoms right of g_j of m (x - g_j)^r. Each
// shift to the next breakpoint expands (y + delta)^r with y, delta > 0, so all
// terms are positive and nothing cancels.
PiecewisePoly tail_function(const DiscreteLaw& law, int k, const std::vector<double>& grid) {
    check_order(k);
    if (grid.empty()) throw Error(ErrorCode::BadInput, "empty grid");
    std::vector<double> mass_at(grid.size(), 0.0);
    for (std::size_t i = 0; i < law.size(); ++i) {
        const auto it = std::lower_bound(grid.begin(), grid.end(), law.atoms()[i]);
        if (it == grid.end() || *it != law.atoms()[i])
            throw Error(ErrorCode::BadInput, "grid does not contain every atom");
        mass_at[static_cast<std::size_t>(it - grid.begin())] += law.masses()[i];
    }

    const int deg = k - 1;
    const double fact = factorial(deg);
    auto piece_from = [&](const std::array<double, 4>& M) {
        Cubic p;
        for (int e = 0; e <= deg; ++e)
            p.c[e] = binom(deg, e) * ((e % 2) ? -1.0 : 1.0) * M[deg - e] / fact;
        return p;
    };

    const std::size_t m = grid.size();
    std::vector<Cubic> pieces(m - 1);
    std::array<double, 4> M{};  // nothing right of the last grid point
    for (std::size_t jj = m - 1; jj-- > 0;) {
        const double delta = grid[jj + 1] - grid[jj];
        std::array<double, 4> next{};
        for (int r = 0; r <= deg; ++r) {
            double acc = mass_at[jj + 1] * std::pow(delta, r);
            for (int e = 0; e <= r; ++e) acc += binom(r, e) * std::pow(delta, r - e) * M[e];
            next[r] = acc;
        }
        M = next;
        pieces[jj] = piece_from(M);
    }
    std::array<double, 4> Mleft = M;
    Mleft[0] += mass_at[0];
    return PiecewisePoly(grid, std::move(pieces), piece_from(Mleft));
}

PiecewisePoly tail_function(const DiscreteLaw& law, int k) { return tail_function(law, k, law.atoms()); }

// ----------------------------------------------------------------- TailFunction

TailFunction TailFunction::from_piecewise(PiecewisePoly f, int k) {
    TailFunction tf;
    tf.kind_ = Kind::piecewise;
    tf.k_ = k;
    tf.upper_ = std::move(f);
    return tf;
}

TailFunction TailFunction::normal(int k) {
    check_order(k);
    TailFunction tf;
    tf.kind_ = Kind::normal;
    tf.k_ = k;
    return tf;
}

TailFunction TailFunction::normal_difference(const DiscreteLaw& law, int k, double sign) {
    check_order(k);
    TailFunction tf;
    tf.kind_ = Kind::normal_difference;
    tf.k_ = k;
    tf.sign_ = sign;
    tf.upper_ = tail_function(law, k);
    tf.lower_ = tail_function(affine(law, -1.0), k);
    tf.atoms_ = law.atoms();
    return tf;
}

// For t < 0 the lower-tail form (-1)^k (T_k(-t) - F_bar_k^{-X}(-t)) is used; it
// equals T_k(t) - F_bar_k(t) once moments 1..k-1 match and avoids subtracting
// two large polynomial values.
double TailFunction::operator()(double t) const {
    switch (kind_) {
        case Kind::piecewise: return upper_(t);
        case Kind::normal: return sign_ * normal_tail(k_, t);
        case Kind::normal_difference: {
            if (t >= 0.0) return sign_ * (normal_tail(k_, t) - upper_(t));
            const double flip = (k_ % 2) ? -1.0 : 1.0;
            return sign_ * flip * (normal_tail(k_, -t) - lower_.right_limit(-t));
        }
    }
    return 0.0;
}

double TailFunction::right_limit(double t) const {
    switch (kind_) {
        case Kind::piecewise: return upper_.right_limit(t);
        case Kind::normal: return sign_ * normal_tail(k_, t);
        case Kind::normal_difference: {
            if (t >= 0.0) return sign_ * (normal_tail(k_, t) - upper_.right_limit(t));
            const double flip = (k_ % 2) ? -1.0 : 1.0;
            return sign_ * flip * (normal_tail(k_, -t) - lower_(-t));
        }
    }
    return 0.0;
}

const std::vector<double>& TailFunction::breakpoints() const noexcept {
    return kind_ == Kind::normal_difference ? atoms_ : upper_.breaks();
}

// ----------------------------------------------------------------------- hbar

namespace {

double law_moment(const Law& L, int j) {
    if (std::holds_alternative<StandardNormal>(L)) {
        static constexpr double m[] = {1.0, 0.0, 1.0, 0.0, 3.0};
        return m[j];
    }
    return raw_moment(std::get<DiscreteLaw>(L), j);
}

double law_abs_moment(const Law& L, int j) {
    if (std::holds_alternative<StandardNormal>(L)) {
        // E|Z|^j = 2^{j/2} Gamma((j+1)/2) / sqrt(pi)
        return std::pow(2.0, j / 2.0) * std::tgamma((j + 1) / 2.0) / std::sqrt(std::numbers::pi);
    }
    return abs_moment(std::get<DiscreteLaw>(L), j);
}

}  // namespace

void check_moment_match(const Law& P, const Law& Q, int upto) {
    for (int j = 1; j <= upto; ++j) {
        const double a = law_moment(P, j), b = law_moment(Q, j);
        const double scale = std::max({1.0, law_abs_moment(P, j), law_abs_moment(Q, j)});
        if (std::abs(a - b) > kMomentTol * scale) throw MomentMismatchError(j, a, b);
    }
}

TailFunction hbar(const Law& P, const Law& Q, int k) {
    check_order(k);
    check_moment_match(P, Q, k - 1);
    const bool pn = std::holds_alternative<StandardNormal>(P);
    const bool qn = std::holds_alternative<StandardNormal>(Q);
    if (pn && qn) return TailFunction::from_piecewise(PiecewisePoly(), k);
    if (qn) return TailFunction::normal_difference(std::get<DiscreteLaw>(P), k, 1.0);
    if (pn) return TailFunction::normal_difference(std::get<DiscreteLaw>(Q), k, -1.0);

    const auto& Pd = std::get<DiscreteLaw>(P);
    const auto& Qd = std::get<DiscreteLaw>(Q);
    const auto grid = merged_grid(Pd, Qd);
    const PiecewisePoly F = tail_function(Pd, k, grid);
    const PiecewisePoly G = tail_function(Qd, k, grid);
    std::vector<Cubic> pieces(F.pieces().size());
    for (std::size_t j = 0; j < pieces.size(); ++j) pieces[j] = G.pieces()[j] - F.pieces()[j];
    // Outside the hull H_bar_k vanishes once the moments match.
    return TailFunction::from_piecewise(PiecewisePoly(grid, std::move(pieces)), k);
}

// ---------------------------------------------------------------------- zeta

ZetaResult zeta_discrete_detailed(const DiscreteLaw& P, const DiscreteLaw& Q, int s) {
    check_order(s);
    check_moment_match(P, Q, s - 1);
    const auto grid = merged_grid(P, Q);
    const PiecewisePoly F = tail_function(P, s, grid);
    const PiecewisePoly G = tail_function(Q, s, grid);
    ZetaResult r;
    constexpr double eps = std::numeric_limits<double>::epsilon();
    for (std::size_t j = 0; j + 1 < grid.size(); ++j) {
        const double w = grid[j + 1] - grid[j];
        const Cubic h = G.pieces()[j] - F.pieces()[j];
        r.value += integral_abs(h, 0.0, w);
        r.abs_error += 8.0 * eps * w * (G.pieces()[j].magnitude(w) + F.pieces()[j].magnitude(w));
    }
    return r;
}

double zeta_discrete(const DiscreteLaw& P, const DiscreteLaw& Q, int s) {
    return zeta_discrete_detailed(P, Q, s).value;
}

namespace {

struct Profile {
    std::vector<double> roots;  // sign changes strictly inside atom intervals
};

// Brackets every sign change of a normal-difference function inside the hull
// on a grid refined per atom interval, then solves each bracket.
Profile normal_difference_roots(const TailFunction& f, int grid_points, double zero_tol) {
    const auto& atoms = f.breakpoints();
    Profile prof;
    if (atoms.size() < 2) return prof;
    const double width = atoms.back() - atoms.front();
    boost::math::tools::eps_tolerance<double> tol(50);

    for (std::size_t j = 0; j + 1 < atoms.size(); ++j) {
        const double a = atoms[j], b = atoms[j + 1];
        const int n = std::max(16, static_cast<int>(std::ceil(grid_points * (b - a) / width)));
        std::vector<double> ts(static_cast<std::size_t>(n) + 1), vs(ts.size());
        for (int i = 0; i <= n; ++i) {
            ts[i] = (i == n) ? b : a + (b - a) * i / n;
            vs[i] = (i == 0) ? f.right_limit(a) : f(ts[i]);
        }
        int prev = -1;  // index of the last nonzero sample
        for (int i = 0; i <= n; ++i) {
            const int si = sign_of(vs[i], zero_tol);
            if (si == 0) continue;
            if (prev >= 0 && si != sign_of(vs[prev], zero_tol)) {
                double root;
                if (i == prev + 1) {
                    std::uintmax_t iters = 200;
                    auto g = [&](double t) { return t <= a ? f.right_limit(a) : f(t); };
                    const auto br = boost::math::tools::toms748_solve(g, ts[prev], ts[i], vs[prev],
                                                                      vs[i], tol, iters);
                    root = 0.5 * (br.first + br.second);
                } else {
                    root = 0.5 * (ts[prev + 1] + ts[i - 1]);
                }
                if (root > a && root < b) {
                    if (!prof.roots.empty() && root - prof.roots.back() < 1e-13 * width)
                        throw Error(ErrorCode::UnresolvedSign,
                                    "sign changes closer than resolution near t=" + std::to_string(root));
                    prof.roots.push_back(root);
                }
            }
            prev = i;
        }
    }
    return prof;
}

// Adaptive Gauss-Kronrod bisection against an absolute error target; a
// relative target never settles where the integrand is at rounding level.
template <class F>
double integrate_abs_tol(const F& f, double a, double b, double abs_tol, int depth, double& err) {
    using GK = boost::math::quadrature::gauss_kronrod<double, 31>;
    double e = 0.0;
    const double v = GK::integrate(f, a, b, 0, 0.0, &e);
    if (e <= abs_tol || depth == 0 || b - a < 1e-14 * std::max(1.0, std::abs(a))) {
        err += e;
        return v;
    }
    const double m = 0.5 * (a + b);
    return integrate_abs_tol(f, a, m, abs_tol / 2.0, depth - 1, err) +
           integrate_abs_tol(f, m, b, abs_tol / 2.0, depth - 1, err);
}

}  // namespace

ZetaResult zeta_vs_normal_detailed(const DiscreteLaw& P, int s, double tol) {
    check_order(s);
    if (!(tol > 0.0)) throw Error(ErrorCode::BadParam, "tolerance must be positive");
    if (s >= 3) {
        const double m1 = raw_moment(P, 1), m2 = raw_moment(P, 2);
        if (std::abs(m1) > kMomentTol || std::abs(m2 - 1.0) > kMomentTol)
            throw Error(ErrorCode::NotStandardized, "law must have mean 0 and variance 1");
    }
    check_moment_match(P, StandardNormal{}, s - 1);

    const TailFunction f = TailFunction::normal_difference(P, s, 1.0);
    ZetaResult r;
    // Outside the hull |H_bar_s| is T_s(-t) on the left and T_s(t) on the right.
    r.value = normal_tail(s + 1, -P.min_atom()) + normal_tail(s + 1, P.max_atom());
    if (P.size() < 2) return r;

    const Profile prof = normal_difference_roots(f, 4096, 0.0);
    std::vector<double> cuts = P.atoms();
    cuts.insert(cuts.end(), prof.roots.begin(), prof.roots.end());
    std::sort(cuts.begin(), cuts.end());

    // Split at atoms and sign changes: |H_bar_s| is smooth on every piece.
    auto absf = [&f](double t) { return std::abs(f(t)); };
    const double per_segment = 0.1 * tol / static_cast<double>(cuts.size());
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
        r.value += integrate_abs_tol(absf, cuts[i], cuts[i + 1], per_segment, 30, r.abs_error);
    return r;
}

double zeta_vs_normal(const DiscreteLaw& P, int s, double tol) {
    return zeta_vs_normal_detailed(P, s, tol).value;
}

ZetaResult zeta(const Law& P, const Law& Q, int s, double tol) {
    check_order(s);
    const bool pn = std::holds_alternative<StandardNormal>(P);
    const bool qn = std::holds_alternative<StandardNormal>(Q);
    if (pn && qn) return {};
    if (qn) return zeta_vs_normal_detailed(std::get<DiscreteLaw>(P), s, tol);
    if (pn) return zeta_vs_normal_detailed(std::get<DiscreteLaw>(Q), s, tol);
    return zeta_discrete_detailed(std::get<DiscreteLaw>(P), std::get<DiscreteLaw>(Q), s);
}

// --------------------------------------------------------------- sign changes

namespace {

struct Segment {
    double a, b;
    int sign;
};

SignChangeReport summarize(const std::vector<Segment>& segs) {
    SignChangeReport rep;
    int last = 0;
    double last_end = 0.0;
    for (const auto& sg : segs) {
        if (sg.sign == 0) continue;
        if (last != 0 && sg.sign != last) {
            ++rep.count;
            rep.points.push_back(last_end);
        }
        last = sg.sign;
        last_end = sg.b;
    }
    rep.lastly_positive = last > 0;
    return rep;
}

}  // namespace

SignChangeReport sign_changes(const TailFunction& f, SignChangeOptions opt) {
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<Segment> segs;
    const int k = f.order();
    switch (f.kind()) {
        case TailFunction::Kind::normal:
            return summarize({{-inf, inf, f.sign() > 0 ? 1 : -1}});
        case TailFunction::Kind::piecewise: {
            const PiecewisePoly& p = f.piecewise();
            const auto& br = p.breaks();
            if (br.empty()) return {};
            // Left tail: a polynomial in u = t - b_0 on (-inf, 0].
            {
                const Cubic& L = p.left_tail();
                const double span = std::max(1.0, br.back() - br.front());
                const double far = -1e6 * span;
                auto roots = real_roots(L, far, 0.0);
                std::vector<double> cuts{far};
                cuts.insert(cuts.end(), roots.begin(), roots.end());
                cuts.push_back(0.0);
                for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
                    const double mid = (i == 0) ? cuts[1] - 1.0 : 0.5 * (cuts[i] + cuts[i + 1]);
                    segs.push_back({i == 0 ? -inf : br.front() + cuts[i], br.front() + cuts[i + 1],
                                    sign_of(L(mid), opt.zero_tol)});
                }
            }
            for (std::size_t j = 0; j < p.pieces().size(); ++j) {
                const Cubic& c = p.pieces()[j];
                const double w = br[j + 1] - br[j];
                std::vector<double> cuts{0.0};
                auto roots = real_roots(c, 0.0, w);
                cuts.insert(cuts.end(), roots.begin(), roots.end());
                cuts.push_back(w);
                for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
                    segs.push_back({br[j] + cuts[i], br[j] + cuts[i + 1],
                                    sign_of(c(0.5 * (cuts[i] + cuts[i + 1])), opt.zero_tol)});
            }
            segs.push_back({br.back(), inf, 0});
            return summarize(segs);
        }
        case TailFunction::Kind::normal_difference: {
            const auto& atoms = f.breakpoints();
            const int sg = f.sign() > 0 ? 1 : -1;
            segs.push_back({-inf, atoms.front(), (k % 2 ? -1 : 1) * sg});
            const Profile prof = normal_difference_roots(f, opt.grid_points, opt.zero_tol);
            std::vector<double> cuts = atoms;
            cuts.insert(cuts.end(), prof.roots.begin(), prof.roots.end());
            std::sort(cuts.begin(), cuts.end());
            for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
                segs.push_back({cuts[i], cuts[i + 1],
                                sign_of(f(0.5 * (cuts[i] + cuts[i + 1])), opt.zero_tol)});
            segs.push_back({atoms.back(), inf, sg});
            return summarize(segs);
        }
    }
    return {};
}

bool s_convex_le(const DiscreteLaw& P, const DiscreteLaw& Q, int s) {
    const TailFunction h = hbar(P, Q, s);
    return h.piecewise().min_value() >= -1e-12;
}

double abs_moment_variation(const DiscreteLaw& P, const DiscreteLaw& Q, double s) {
    std::vector<std::pair<double, double>> signed_mass;
    for (std::size_t i = 0; i < P.size(); ++i) signed_mass.emplace_back(P.atoms()[i], P.masses()[i]);
    for (std::size_t i = 0; i < Q.size(); ++i) signed_mass.emplace_back(Q.atoms()[i], -Q.masses()[i]);
    std::sort(signed_mass.begin(), signed_mass.end());
    double total = 0.0;
    std::size_t i = 0;
    while (i < signed_mass.size()) {
        const double anchor = signed_mass[i].first;
        double m = 0.0;
        std::size_t j = i;
        while (j < signed_mass.size() &&
               signed_mass[j].first - anchor <= kDedupeTol * std::max(1.0, std::abs(signed_mass[j].first)))
            m += signed_mass[j++].second;
        total += std::pow(std::abs(anchor), s) * std::abs(m);
        i = j;
    }
    return total;
}

// ------------------------------------------------------------ smoothing constant

namespace {

double hermite_he(int k, double x) {
    if (k == 0) return 1.0;
    double prev = 1.0, cur = x;
    for (int j = 1; j < k; ++j) {
        const double next = x * cur - j * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

std::vector<double> hermite_roots(int k) {
    switch (k) {
        case 0: return {};
        case 1: return {0.0};
        case 2: return {-1.0, 1.0};
        case 3: return {-std::sqrt(3.0), 0.0, std::sqrt(3.0)};
        case 4: {
            const double a = std::sqrt(3.0 - std::sqrt(6.0)), b = std::sqrt(3.0 + std::sqrt(6.0));
            return {-b, -a, a, b};
        }
        default: break;
    }
    // Roots are simple and lie inside |x| < 2 sqrt(k) + 1.
    std::vector<double> roots;
    const double R = 2.0 * std::sqrt(static_cast<double>(k)) + 1.0;
    const int n = 200 * k;
    boost::math::tools::eps_tolerance<double> tol(52);
    auto he = [k](double x) { return hermite_he(k, x); };
    double xa = -R, fa = he(xa);
    for (int i = 1; i <= n; ++i) {
        const double xb = -R + 2.0 * R * i / n, fb = he(xb);
        if (fb == 0.0) {
            roots.push_back(xb);
        } else if (fa != 0.0 && (fa < 0.0) != (fb < 0.0)) {
            std::uintmax_t it = 200;
            const auto br = boost::math::tools::toms748_solve(he, xa, xb, fa, fb, tol, it);
            roots.push_back(0.5 * (br.first + br.second));
        }
        xa = xb;
        fa = fb;
    }
    return roots;
}

}  // namespace

// Between consecutive roots of He_k the integral of phi^{(k)} is the jump of
// phi^{(k-1)} = (-1)^{k-1} He_{k-1} phi.
double gauss_derivative_l1(int k) {
    if (k < 0) throw Error(ErrorCode::BadParam, "derivative order must be >= 0");
    if (k == 0) return 1.0;
    auto prim = [k](double x) { return hermite_he(k - 1, x) * normal_pdf(x); };
    const auto roots = hermite_roots(k);
    double total = 0.0, prev = 0.0;  // primitive vanishes at -inf
    for (double r : roots) {
        const double v = prim(r);
        total += std::abs(v - prev);
        prev = v;
    }
    return total + std::abs(prev);
}

double gauss_derivative_weighted_l1(int k, double alpha) {
    if (k < 0 || !(alpha >= 0.0)) throw Error(ErrorCode::BadParam, "need k >= 0 and alpha >= 0");
    if (alpha == 0.0) return gauss_derivative_l1(k);
    auto g = [k, alpha](double x) {
        return std::pow(x, alpha) * std::abs(hermite_he(k, x)) * normal_pdf(x);
    };
    std::vector<double> cuts{0.0};
    for (double r : hermite_roots(k))
        if (r > 0.0) cuts.push_back(r);
    boost::math::quadrature::tanh_sinh<double> ts;
    boost::math::quadrature::exp_sinh<double> es;
    double half = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) half += ts.integrate(g, cuts[i], cuts[i + 1]);
    const double last = cuts.back();
    half += es.integrate([&](double u) { return g(last + u); });
    return 2.0 * half;
}

double smoothing_constant(double s, double t) {
    if (!(s > 0.0) || !(t > 0.0) || !std::isfinite(s) || !std::isfinite(t))
        throw Error(ErrorCode::BadParam, "s and t must be positive and finite");
    const double alpha = s - (std::ceil(s) - 1.0);
    const int m = static_cast<int>(std::ceil(t)) - 1;
    const double beta = t - m;
    if (alpha + beta <= 1.0) {
        return std::pow(gauss_derivative_l1(m), (1.0 - alpha - beta) / (1.0 - alpha)) *
               std::pow(gauss_derivative_weighted_l1(m + 1, alpha), beta / (1.0 - alpha));
    }
    const double d = gauss_derivative_l1(m + 1);
    const double exp_d = (alpha + beta - 1.0) / alpha;
    if (beta == 1.0) return std::pow(d, exp_d);
    return std::pow(d, exp_d) *
           std::pow(2.0 * gauss_derivative_weighted_l1(m + 1, alpha), (1.0 - beta) / alpha);
}

// -------------------------------------------------------------------- epsilon_n

double epsilon_lower_line(int n) {
    return std::abs(binom_abs3(n, true) - 4.0 / std::sqrt(2.0 * std::numbers::pi)) / 6.0;
}

double epsilon_upper_line(int n) {
    if (n < 1) throw Error(ErrorCode::BadN, "n must be >= 1");
    const double s2pi = std::sqrt(2.0 * std::numbers::pi);
    const double dn = n;
    return 1.0 / (3.0 * s2pi * dn) + ((4.0 + kZetaHalf) / s2pi - 1.0) / (6.0 * std::pow(dn, 1.5));
}

EpsilonReport epsilon_n(int n, double tol) {
    if (n < 1) throw Error(ErrorCode::BadN, "n must be >= 1");
    EpsilonReport rep;
    const ZetaResult z = zeta_vs_normal_detailed(binomial_half_standardized(n), 3, tol);
    rep.value = z.value;
    rep.abs_error = z.abs_error;
    rep.lower_line = epsilon_lower_line(n);
    rep.upper_line = epsilon_upper_line(n);
    if (rep.value + tol < rep.lower_line || !(rep.value < rep.upper_line))
        throw Error(ErrorCode::SandwichViolation,
                    "epsilon_" + std::to_string(n) + " = " + std::to_string(rep.value) +
                        " outside [" + std::to_string(rep.lower_line) + ", " +
                        std::to_string(rep.upper_line) + ")");
    return rep;
}

}  // namespace zf
