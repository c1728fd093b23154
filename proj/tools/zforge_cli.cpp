#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "zf/error.hpp"
#include "zf/harness.hpp"
#include "zf/law_io.hpp"
#include "zf/report.hpp"
#include "zf/table.hpp"
#include "zf/zeta.hpp"

namespace {

constexpr int kOk = 0, kVerifyFailed = 1, kInputError = 2;

int emit(const std::string& out, const std::string& text) {
    if (out.empty() || out == "-") {
        std::cout << text;
        return kOk;
    }
    std::ofstream f(out);
    if (!f || !(f << text)) {
        std::cerr << "IOFailure: cannot write " << out << '\n';
        return kInputError;
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"zforge: Zolotarev distance and Berry-Esseen bound toolkit"};
    app.require_subcommand(1);

    double tol = 1e-9;
    std::uint64_t seed = 42;
    int trials = 200;
    std::string out, suite = "all", law_a, law_b = "normal";
    int s = 3;

    auto* table = app.add_subcommand("table", "improvement table and worked examples as CSV");
    table->add_option("--out", out, "output path (default stdout)");

    auto* verify = app.add_subcommand("verify", "run a verification suite, CSV of reports");
    verify->add_option("--suite", suite, "main|normal|epsilon|charfn|osculation|reduction|all");
    verify->add_option("--trials", trials, "instances per randomized suite");
    verify->add_option("--seed", seed, "base seed");
    verify->add_option("--tol", tol, "margin tolerance");
    verify->add_option("--out", out, "output path (default stdout)");

    auto* zcmd = app.add_subcommand("zeta", "zeta_s distance between two laws");
    zcmd->add_option("--law-a", law_a, "builtin (rademacher, binomial:n, tworho:r, bernoulli:p) or JSON file")
        ->required();
    zcmd->add_option("--law-b", law_b, "builtin, JSON file, or normal");
    zcmd->add_option("--s", s, "order 1..4")->check(CLI::Range(1, 4));
    zcmd->add_option("--tol", tol, "absolute quadrature tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (*table) {
            std::ostringstream os;
            zf::write_table_csv(os, zf::improvement_table());
            return emit(out, os.str());
        }
        if (*verify) {
            const auto parsed = zf::parse_suite(suite);
            if (!parsed) {
                std::cerr << "BadInput: unknown suite " << suite << '\n';
                return kInputError;
            }
            zf::HarnessConfig cfg;
            cfg.suite = *parsed;
            cfg.trials = trials;
            cfg.seed = seed;
            cfg.tol = tol;
            const auto reports = zf::run_suite(cfg);
            std::ostringstream os;
            zf::write_csv(os, reports);
            if (const int rc = emit(out, os.str()); rc != kOk) return rc;
            for (const auto& r : reports) {
                if (!r.pass) {
                    std::ostringstream first;
                    zf::write_csv(first, {r});
                    std::cerr << "first failing report:\n" << first.str();
                    return kVerifyFailed;
                }
            }
            return kOk;
        }
        if (*zcmd) {
            if (!(tol > 0.0)) throw zf::Error(zf::ErrorCode::BadInput, "tolerance must be positive");
            const zf::Law a = zf::resolve_law(law_a), b = zf::resolve_law(law_b);
            try {
                const zf::ZetaResult r = zf::zeta(a, b, s, tol);
                std::cout << "zeta_" << s << " = " << zf::format_real(r.value)
                          << " (abs_error " << zf::format_real(r.abs_error) << ")\n";
            } catch (const zf::MomentMismatchError& e) {
                std::cout << "zeta_" << s << " = infinite (moment " << e.index() << ")\n";
                std::cerr << e.what() << '\n';
                return kInputError;
            }
            return kOk;
        }
    } catch (const zf::Error& e) {
        std::cerr << e.what() << '\n';
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kOk;
}
