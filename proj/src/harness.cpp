#include "zf/harness.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "zf/error.hpp"
#include "zf/extremal.hpp"
#include "zf/osculation.hpp"
#include "zf/parallel.hpp"
#include "zf/zeta.hpp"

namespace zf {

namespace {

using Instance = std::function<std::vector<BoundReport>(int index)>;

std::vector<BoundReport> fan_out(int count, const Instance& inst, Exec exec, const char* name) {
    std::vector<std::vector<BoundReport>> slots(static_cast<std::size_t>(count));
    auto one = [&](int i) {
        try {
            slots[i] = inst(i);
        } catch (const std::exception& e) {
            BoundReport r;
            r.bound_name = std::string(name) + ":error";
            r.n = i;
            r.rho_summary = e.what();
            r.pass = false;
            r.margin = -INFINITY;
            slots[i] = {r};
        }
    };
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic) num_threads(worker_threads())
        for (int i = 0; i < count; ++i) one(i);
    } else {
        for (int i = 0; i < count; ++i) one(i);
    }
    std::vector<BoundReport> out;
    for (auto& s : slots) out.insert(out.end(), s.begin(), s.end());
    return out;
}

BoundReport make(const std::string& name, int n, double lhs, double rhs, double tol,
                 std::string rho = "") {
    BoundReport r;
    r.bound_name = name;
    r.n = n;
    r.rho_summary = std::move(rho);
    r.lhs = lhs;
    r.rhs = rhs;
    r.margin = rhs - lhs;
    r.pass = r.margin >= -tol;
    return r;
}

std::vector<BoundReport> suite_main(const HarnessConfig& cfg) {
    return fan_out(cfg.trials, [&](int i) {
        auto rng = instance_rng(cfg.seed, 1, static_cast<std::uint64_t>(i));
        std::uniform_int_distribution<int> depth(1, 4);
        std::uniform_real_distribution<double> scale(0.5, 2.0);
        const int n = depth(rng);
        std::vector<DiscreteLaw> laws;
        for (int j = 0; j < n; ++j) laws.push_back(affine(random_standardized_law(rng), scale(rng)));
        std::vector<BoundReport> out{verify_main(laws, cfg.tol)};
        // Zero-equivalence: lhs vanishes exactly when rhs does.
        const bool zl = out[0].lhs < 1e-9, zr = out[0].rhs < 1e-9;
        if (zl != zr) out[0].pass = false;
        out.push_back(verify_third_abs_moment(laws[0], n, cfg.tol));
        return out;
    }, cfg.exec, "main");
}

std::vector<BoundReport> suite_normal(const HarnessConfig& cfg) {
    return fan_out(cfg.trials, [&](int i) {
        auto rng = instance_rng(cfg.seed, 2, static_cast<std::uint64_t>(i));
        std::uniform_int_distribution<int> depth(1, 4);
        const int n = depth(rng);
        const DiscreteLaw law = random_standardized_law(rng);
        const double rho = *moments(law).rho;
        const double lhs = zeta_vs_normal(standardize(convolve_power(law, n)), 3, 1e-10);
        return std::vector<BoundReport>{
            make("normal", n, lhs, normal_rhs(rho, n, EpsMode::exact), cfg.tol, summarize_rhos({rho}))};
    }, cfg.exec, "normal");
}

std::vector<BoundReport> suite_epsilon(const HarnessConfig& cfg) {
    return fan_out(50, [&](int i) {
        const int n = i + 1;
        std::vector<BoundReport> out;
        EpsilonReport e;
        try {
            e = epsilon_n(n, 1e-10);
        } catch (const Error& err) {
            if (err.code() != ErrorCode::SandwichViolation) throw;
            out.push_back(make("epsilon_sandwich", n, 1.0, 0.0, 0.0, err.what()));
            return out;
        }
        BoundReport lo = make("epsilon_lower", n, e.lower_line, e.value, cfg.tol);
        BoundReport up = make("epsilon_upper", n, e.value, e.upper_line, 0.0);
        up.pass = e.value < e.upper_line;
        BoundReport cst = make("epsilon_0.1352", n, e.upper_line, kEpsilonUpperConstant / n, 0.0);
        cst.pass = e.upper_line < kEpsilonUpperConstant / n;
        out = {lo, up, cst};
        if (n == 1) {
            BoundReport eq = make("epsilon_equality_n1", 1, std::abs(e.value - e.lower_line), 1e-9, 0.0);
            out.push_back(eq);
        }
        return out;
    }, cfg.exec, "epsilon");
}

std::vector<BoundReport> suite_charfn(const HarnessConfig& cfg) {
    return fan_out(cfg.trials, [&](int i) {
        auto rng = instance_rng(cfg.seed, 4, static_cast<std::uint64_t>(i));
        std::uniform_real_distribution<double> tt(-3.0, 3.0), box(-2.0, 2.0), scale(0.5, 2.0);
        std::uniform_int_distribution<int> depth(1, 4);
        const int n = depth(rng);
        std::vector<DiscreteLaw> laws;
        for (int j = 0; j < n; ++j) laws.push_back(affine(random_standardized_law(rng), scale(rng)));
        const double t = tt(rng);
        const CharFnBound cb = charfn_bound(t, laws);
        BoundReport r1 = make("charfn", n, cb.lhs_abs, cb.rhs, 1e-12);

        const DiscreteLaw one = random_standardized_law(rng);
        const double rho = *moments(one).rho;
        const TaylorCharFnBound tb = taylor_charfn_bound(rho, t, one);
        BoundReport r2 = make("charfn_taylor", 1, tb.lhs_abs.value_or(0.0), tb.rhs, 1e-12,
                              summarize_rhos({rho}));

        std::vector<double> ts(5);
        for (double& x : ts) x = box(rng);
        const ProdCosMargin pm = prod_cos_margin(ts);
        BoundReport r3 = make("prod_cos", 5, pm.value, pm.upper, 1e-12);
        r3.pass = pm.holds;
        return std::vector<BoundReport>{r1, r2, r3};
    }, cfg.exec, "charfn");
}

std::vector<BoundReport> suite_osculation(const HarnessConfig& cfg) {
    return fan_out(cfg.trials, [&](int i) {
        auto rng = instance_rng(cfg.seed, 5, static_cast<std::uint64_t>(i));
        std::uniform_real_distribution<double> mag(0.1, 3.0), unit(0.0, 1.0);
        const double r = (unit(rng) < 0.5 ? -1.0 : 1.0) * mag(rng);
        const double u = mag(rng);
        const double v = u * unit(rng) * 0.98;
        const OsculCoeffs co = oscul_coeffs(r, u, v);
        double err = 0.0;
        for (double x : {co.s(), co.t()}) {
            const double sc = std::max(1.0, std::abs(co.f(x)));
            err = std::max({err, std::abs(co.g(x) - co.f(x)) / sc,
                            std::abs(co.g_prime(x) - co.f_prime(x)) / std::max(1.0, std::abs(co.f_prime(x)))});
        }
        BoundReport r1 = make("oscul_interp", i, err, 1e-9, 0.0);
        BoundReport r2 = make("oscul_dominance", i, 0.0, 0.0, 0.0);
        r2.pass = dominance_check(co);
        const RecenteredBound rb = recentered_abs3_bound(random_standardized_law(rng), r, u, v);
        BoundReport r3 = make("recentered_abs3", i, rb.lhs, rb.rhs, 1e-10 * std::max(1.0, rb.rhs));
        return std::vector<BoundReport>{r1, r2, r3};
    }, cfg.exec, "osculation");
}

std::vector<BoundReport> suite_reduction(const HarnessConfig& cfg) {
    const std::vector<Constraint> all{[](double x) { return x; }, [](double x) { return x * x; },
                                      [](double x) { return std::abs(x) * x * x; }};
    return fan_out(cfg.trials, [&](int i) {
        auto rng = instance_rng(cfg.seed, 6, static_cast<std::uint64_t>(i));
        const int k = 1 + i % 3;
        const DiscreteLaw law = random_standardized_law(rng, 4, 9);
        const std::vector<Constraint> fs(all.begin(), all.begin() + k);
        const ConvexDecomposition dec = extreme_point_decompose(law, fs);
        double cerr = 0.0, wsum = 0.0;
        bool small = true;
        for (std::size_t p = 0; p < dec.parts.size(); ++p) {
            wsum += dec.weights[p];
            small = small && dec.parts[p].size() <= static_cast<std::size_t>(k + 1);
            for (const auto& f : fs) cerr = std::max(cerr, std::abs(dec.parts[p].expect(f) - law.expect(f)));
        }
        BoundReport r1 = make("decomp_reconstruction", k, reconstruction_error(law, dec), 1e-10, 0.0);
        BoundReport r2 = make("decomp_constraints", k, cerr, 1e-9, 0.0);
        r2.pass = r2.pass && small && std::abs(wsum - 1.0) <= 1e-10;
        return std::vector<BoundReport>{r1, r2};
    }, cfg.exec, "reduction");
}

}  // namespace

std::optional<Suite> parse_suite(const std::string& name) {
    for (Suite s : {Suite::main, Suite::normal, Suite::epsilon, Suite::charfn, Suite::osculation,
                    Suite::reduction, Suite::all})
        if (name == suite_name(s)) return s;
    return std::nullopt;
}

const char* suite_name(Suite s) {
    switch (s) {
        case Suite::main: return "main";
        case Suite::normal: return "normal";
        case Suite::epsilon: return "epsilon";
        case Suite::charfn: return "charfn";
        case Suite::osculation: return "osculation";
        case Suite::reduction: return "reduction";
        case Suite::all: return "all";
    }
    return "?";
}

std::vector<BoundReport> run_suite(const HarnessConfig& cfg) {
    if (cfg.trials < 1) throw Error(ErrorCode::BadInput, "trials must be >= 1");
    if (!(cfg.tol > 0.0)) throw Error(ErrorCode::BadInput, "tolerance must be positive");
    switch (cfg.suite) {
        case Suite::main: return suite_main(cfg);
        case Suite::normal: return suite_normal(cfg);
        case Suite::epsilon: return suite_epsilon(cfg);
        case Suite::charfn: return suite_charfn(cfg);
        case Suite::osculation: return suite_osculation(cfg);
        case Suite::reduction: return suite_reduction(cfg);
        case Suite::all: break;
    }
    std::vector<BoundReport> out;
    for (Suite s : {Suite::main, Suite::normal, Suite::epsilon, Suite::charfn, Suite::osculation,
                    Suite::reduction}) {
        HarnessConfig c = cfg;
        c.suite = s;
        auto part = run_suite(c);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

bool all_pass(const std::vector<BoundReport>& reports) {
    return std::all_of(reports.begin(), reports.end(), [](const BoundReport& r) { return r.pass; });
}

}  // namespace zf
