#include "zf/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include <Eigen/Dense>
#include <boost/math/tools/roots.hpp>

#include "zf/error.hpp"
#include "zf/extremal.hpp"
#include "zf/parallel.hpp"
#include "zf/zeta.hpp"

namespace zf {

namespace {

struct Measure {
    double weight;
    std::vector<double> x;
    std::vector<double> q;
};

void prune(Measure& m) {
    double top = 0.0;
    for (double v : m.q) top = std::max(top, v);
    std::size_t w = 0;
    for (std::size_t i = 0; i < m.q.size(); ++i) {
        if (m.q[i] > 1e-15 * top) {
            m.x[w] = m.x[i];
            m.q[w] = m.q[i];
            ++w;
        }
    }
    m.x.resize(w);
    m.q.resize(w);
}

// Returns (Q+, Q-, lambda) with q = lambda Q+ + (1 - lambda) Q-.
struct Split {
    Measure plus, minus;
    double lambda;
};

Split split_once(const Measure& m, const std::vector<Constraint>& fs) {
    const int rows = static_cast<int>(fs.size()) + 1;
    const int N = static_cast<int>(m.x.size());
    Eigen::MatrixXd M(rows, N);
    for (int j = 0; j < N; ++j) {
        M(0, j) = 1.0;
        for (int i = 1; i < rows; ++i) M(i, j) = fs[i - 1](m.x[j]);
    }
    if (!M.allFinite()) throw Error(ErrorCode::NumericalRankFailure, "constraint values not finite");
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(M, Eigen::ComputeFullV);
    const Eigen::VectorXd r = svd.matrixV().col(N - 1);
    const double scale = std::max(1.0, svd.singularValues()(0));
    if ((M * r).norm() > 1e-10 * scale)
        throw Error(ErrorCode::NumericalRankFailure, "null direction residual too large");

    double ep = std::numeric_limits<double>::infinity(), em = ep;
    int ip = -1, im = -1;
    for (int j = 0; j < N; ++j) {
        if (r(j) < 0 && m.q[j] / -r(j) < ep) ep = m.q[j] / -r(j), ip = j;
        if (r(j) > 0 && m.q[j] / r(j) < em) em = m.q[j] / r(j), im = j;
    }
    if (ip < 0 || im < 0) throw Error(ErrorCode::NumericalRankFailure, "null direction is one-signed");

    Split s{m, m, em / (ep + em)};
    for (int j = 0; j < N; ++j) {
        s.plus.q[j] = std::max(0.0, m.q[j] + ep * r(j));
        s.minus.q[j] = std::max(0.0, m.q[j] - em * r(j));
    }
    s.plus.q[ip] = 0.0;
    s.minus.q[im] = 0.0;
    s.plus.weight = m.weight * s.lambda;
    s.minus.weight = m.weight * (1.0 - s.lambda);
    prune(s.plus);
    prune(s.minus);
    return s;
}

DiscreteLaw to_law(const Measure& m) {
    std::vector<std::pair<double, double>> pairs(m.x.size());
    for (std::size_t i = 0; i < m.x.size(); ++i) pairs[i] = {m.x[i], m.q[i]};
    return merge_unchecked(std::move(pairs));
}

Measure from_law(const DiscreteLaw& law) { return {1.0, law.atoms(), law.masses()}; }

void check_constraints(const std::vector<Constraint>& fs) {
    if (fs.empty()) throw Error(ErrorCode::BadInput, "need at least one constraint");
}

}  // namespace

ConvexDecomposition extreme_point_decompose(const DiscreteLaw& law,
                                            const std::vector<Constraint>& constraints) {
    check_constraints(constraints);
    const std::size_t cap = constraints.size() + 1;
    ConvexDecomposition out;
    std::vector<Measure> stack{from_law(law)};
    while (!stack.empty()) {
        Measure m = std::move(stack.back());
        stack.pop_back();
        if (m.x.size() <= cap) {
            out.weights.push_back(m.weight);
            out.parts.push_back(to_law(m));
            continue;
        }
        Split s = split_once(m, constraints);
        stack.push_back(std::move(s.minus));
        stack.push_back(std::move(s.plus));
    }
    return out;
}

DiscreteLaw richter_reduce(const DiscreteLaw& law, const std::vector<Constraint>& constraints) {
    check_constraints(constraints);
    Measure m = from_law(law);
    while (m.x.size() > constraints.size() + 1) m = split_once(m, constraints).plus;
    return to_law(m);
}

double reconstruction_error(const DiscreteLaw& law, const ConvexDecomposition& dec) {
    std::map<double, double> acc;
    for (std::size_t i = 0; i < law.size(); ++i) acc[law.atoms()[i]] -= law.masses()[i];
    for (std::size_t p = 0; p < dec.parts.size(); ++p)
        for (std::size_t i = 0; i < dec.parts[p].size(); ++i)
            acc[dec.parts[p].atoms()[i]] += dec.weights[p] * dec.parts[p].masses()[i];
    double worst = 0.0;
    for (const auto& [x, e] : acc) worst = std::max(worst, std::abs(e));
    return worst;
}

ThreePointLaw three_point_masses(double a, double b, double c) {
    if (!(a < b && b < c)) throw Error(ErrorCode::InfeasibleParameters, "atoms not increasing");
    ThreePointLaw t{a, b, c, (1 + b * c) / ((a - b) * (a - c)), (1 + a * c) / ((b - a) * (b - c)),
                    (1 + a * b) / ((c - a) * (c - b))};
    if (t.pa < 0 || t.pb < 0 || t.pc < 0) throw Error(ErrorCode::InfeasibleParameters, "negative mass");
    return t;
}

namespace {

double nu3(const ThreePointLaw& t) {
    return t.pa * std::abs(t.a * t.a * t.a) + t.pb * std::abs(t.b * t.b * t.b) + t.pc * t.c * t.c * t.c;
}

DiscreteLaw law_of(const ThreePointLaw& t) {
    return merge_unchecked({{t.a, std::max(0.0, t.pa)}, {t.b, std::max(0.0, t.pb)}, {t.c, std::max(0.0, t.pc)}});
}

struct NodeBest {
    double value = -1.0;
    ThreePointLaw law;
    bool feasible = false;
};

// All middle atoms b in (-1/c, 1/|a|) with nu_3 = rho, scored by zeta_3 against Rademacher.
NodeBest solve_node(double a, double c, double rho, const DiscreteLaw& Q) {
    NodeBest best;
    const double lo = std::max(a, -1.0 / c), hi = std::min(c, -1.0 / a);
    if (!(lo < hi)) return best;
    auto g = [&](double b) {
        ThreePointLaw t{a, b, c, (1 + b * c) / ((a - b) * (a - c)), (1 + a * c) / ((b - a) * (b - c)),
                        (1 + a * b) / ((c - a) * (c - b))};
        return nu3(t) - rho;
    };
    auto score = [&](double b) {
        try {
            const ThreePointLaw t = three_point_masses(a, b, c);
            const DiscreteLaw P = law_of(t);
            const double v = zeta_discrete(P, Q, 3);
            best.feasible = true;
            if (v > best.value) best.value = v, best.law = t;
        } catch (const Error&) {
        }
    };
    constexpr int kScan = 16;
    const double w = hi - lo;
    double x0 = lo + 1e-12 * w, g0 = g(x0);
    for (int i = 1; i <= kScan; ++i) {
        const double x1 = i == kScan ? hi - 1e-12 * w : lo + w * i / kScan;
        const double g1 = g(x1);
        if (g0 == 0.0) score(x0);
        if (g0 * g1 < 0.0) {
            boost::uintmax_t it = 60;
            const auto br = boost::math::tools::toms748_solve(
                g, x0, x1, g0, g1, boost::math::tools::eps_tolerance<double>(50), it);
            score(0.5 * (br.first + br.second));
        }
        x0 = x1;
        g0 = g1;
    }
    return best;
}

}  // namespace

ExtremalSearchResult extremal_three_point_search(double rho, int density, Exec exec) {
    if (!(rho >= 1.0) || !std::isfinite(rho)) throw Error(ErrorCode::BadRho, "rho must be >= 1");
    if (density < 2) throw Error(ErrorCode::BadParam, "density must be >= 2");
    const DiscreteLaw Q = rademacher();
    ExtremalSearchResult res;
    res.rho = rho;
    res.bound = B_of_rho(rho) / 6.0;
    const DiscreteLaw corner = two_point_law(rho);
    res.corner_value = rho == 1.0 ? 0.0 : zeta_discrete(corner, Q, 3);
    if (rho == 1.0) {
        res.witness = Q;
        res.certified = true;
        return res;
    }

    // Atoms of any candidate with non-negligible mass stay within a few multiples of P_rho's.
    const double L = 1.5 * std::max(std::abs(corner.min_atom()), std::abs(corner.max_atom())) + 1.0;
    const int N = density;
    auto a_of = [&](int i) { return -L * (i + 0.5) / N; };
    auto c_of = [&](int j) { return L * (j + 0.5) / N; };

    std::vector<NodeBest> rows(static_cast<std::size_t>(N));
    std::vector<long> skipped(static_cast<std::size_t>(N), 0);
    auto row = [&](int i) {
        NodeBest rb;
        for (int j = 0; j < N; ++j) {
            const NodeBest nb = solve_node(a_of(i), c_of(j), rho, Q);
            if (!nb.feasible) ++skipped[i];
            if (nb.value > rb.value) rb = nb;
        }
        rows[i] = rb;
    };
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic) num_threads(worker_threads())
        for (int i = 0; i < N; ++i) row(i);
    } else {
        for (int i = 0; i < N; ++i) row(i);
    }

    NodeBest best;
    for (int i = 0; i < N; ++i) {
        res.skipped += skipped[i];
        if (rows[i].value > best.value) best = rows[i];
    }
    res.nodes = static_cast<long>(N) * N;

    // Pattern search on (a, c) from the best node.
    if (best.value >= 0.0) {
        double a = best.law.a, c = best.law.c, step = L / N;
        for (int it = 0; it < 200 && step > 1e-9; ++it) {
            bool moved = false;
            for (auto [da, dc] : {std::pair{step, 0.0}, {-step, 0.0}, {0.0, step}, {0.0, -step}}) {
                const double na = a + da, nc = c + dc;
                if (!(na < 0.0 && nc > 0.0)) continue;
                const NodeBest nb = solve_node(na, nc, rho, Q);
                if (nb.value > best.value) {
                    best = nb;
                    a = na;
                    c = nc;
                    moved = true;
                }
            }
            if (!moved) step *= 0.5;
        }
    }

    // The two-point corner lies on the closure of the three-point family.
    if (res.corner_value >= best.value) {
        res.sup_value = res.corner_value;
        res.witness = corner;
    } else {
        res.sup_value = best.value;
        res.witness = law_of(best.law);
    }
    res.certified = res.sup_value <= res.bound + 1e-6 && std::abs(res.corner_value - res.bound) <= 1e-6;
    return res;
}

}  // namespace zf
