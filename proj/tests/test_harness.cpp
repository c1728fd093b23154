#include <doctest.h>

#include <sstream>

#include "zf/error.hpp"
#include "zf/harness.hpp"
#include "zf/parallel.hpp"
#include "zf/report.hpp"
#include "zf/table.hpp"

using namespace zf;

TEST_CASE("suite names") {
    CHECK(parse_suite("main") == Suite::main);
    CHECK(parse_suite("all") == Suite::all);
    CHECK_FALSE(parse_suite("bogus").has_value());
    for (Suite s : {Suite::main, Suite::normal, Suite::epsilon, Suite::charfn, Suite::osculation, Suite::reduction})
        CHECK(parse_suite(suite_name(s)) == s);
}

TEST_CASE("zero trials is an input error") {
    HarnessConfig cfg;
    cfg.trials = 0;
    try {
        run_suite(cfg);
        FAIL("expected BadInput");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::BadInput);
    }
}

TEST_CASE("every suite passes and serial equals parallel byte for byte") {
    for (Suite s : {Suite::main, Suite::normal, Suite::epsilon, Suite::charfn, Suite::osculation, Suite::reduction}) {
        HarnessConfig cfg;
        cfg.suite = s;
        cfg.trials = 40;
        cfg.seed = 7;
        cfg.exec = Exec::serial;
        const auto a = run_suite(cfg);
        cfg.exec = Exec::parallel;
        const auto b = run_suite(cfg);
        CHECK(all_pass(a));
        std::ostringstream sa, sb;
        write_csv(sa, a);
        write_csv(sb, b);
        CHECK(sa.str() == sb.str());
    }
}

TEST_CASE("random laws are reproducible and standardized") {
    auto r1 = instance_rng(1, 2, 3), r2 = instance_rng(1, 2, 3), r3 = instance_rng(1, 2, 4);
    const DiscreteLaw a = random_standardized_law(r1), b = random_standardized_law(r2),
                      c = random_standardized_law(r3);
    CHECK(a.atoms() == b.atoms());
    CHECK(a.atoms() != c.atoms());
    CHECK(a.size() >= 3);
    CHECK(a.size() <= 6);
}

TEST_CASE("CSV formatting") {
    CHECK(format_real(0.1) == "0.1");
    CHECK(format_real(1.0 / 3) == "0.333333333333");
    CHECK(format_real(INFINITY) == "inf");
    BoundReport r;
    r.bound_name = "main";
    r.n = 2;
    r.rho_summary = "1.5;2";
    r.lhs = 0.25;
    r.rhs = 0.5;
    r.margin = 0.25;
    std::ostringstream os;
    write_csv(os, {r});
    CHECK(os.str() == "bound_name,n,rho_summary,lhs,rhs,margin,status\nmain,2,1.5;2,0.25,0.5,0.25,pass\n");
    CHECK_THROWS_AS(write_csv_file("/nonexistent/dir/x.csv", {r}), Error);

    std::ostringstream t;
    write_table_csv(t, improvement_table());
    CHECK(t.str().find("table,rho<=1.24,1.24,") != std::string::npos);
    CHECK(t.str().find("example,bernoulli p=0.45,") != std::string::npos);
}

TEST_CASE("thread cap from the environment") {
    setenv("ZETA_FORGE_THREADS", "1", 1);
    CHECK(worker_threads() == 1);
    setenv("ZETA_FORGE_THREADS", "junk", 1);
    CHECK(worker_threads() >= 1);
    unsetenv("ZETA_FORGE_THREADS");
}
