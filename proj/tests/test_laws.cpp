#include <doctest.h>

#include <cmath>

#include "zf/error.hpp"
#include "zf/laws.hpp"
#include "zf/law_io.hpp"
#include "zf/parallel.hpp"
#include "zf/rational.hpp"

using namespace zf;
using doctest::Approx;

TEST_CASE("make_discrete builds, merges and rejects") {
    const DiscreteLaw q = make_discrete({{-1, 0.5}, {1, 0.5}});
    CHECK(q.size() == 2);
    CHECK(q.atoms()[0] == -1.0);
    CHECK(q.masses()[1] == 0.5);

    const DiscreteLaw m = make_discrete({{0, 0.3}, {1e-15, 0.2}, {1, 0.5}});
    REQUIRE(m.size() == 2);
    CHECK(m.masses()[0] == Approx(0.5).epsilon(1e-15));
    CHECK(std::abs(m.atoms()[0]) <= 1e-15);

    CHECK_THROWS_AS(make_discrete({{0, 0.5}, {1, 0.6}}), Error);
    try {
        make_discrete({{0, 0.5}, {1, 0.6}});
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::BadMass);
    }
    try {
        make_discrete({{0, 0.0}, {1, 0.0}});
        FAIL("expected EmptySupport");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::EmptySupport);
    }
    CHECK_THROWS_AS(make_discrete({{0, -0.1}, {1, 1.1}}), Error);

    // Zero-mass atoms are dropped.
    CHECK(make_discrete({{0, 0.0}, {2, 1.0}}).size() == 1);
}

TEST_CASE("moments of the reference laws") {
    const MomentSummary r = moments(rademacher());
    CHECK(r.mean == Approx(0.0));
    CHECK(r.variance == Approx(1.0));
    REQUIRE(r.rho);
    CHECK(*r.rho == Approx(1.0));

    const MomentSummary b = moments(make_discrete({{0, 0.9}, {1, 0.1}}));
    REQUIRE(b.rho);
    CHECK(*b.rho == Approx(0.82 / std::sqrt(0.09)).epsilon(1e-12));
    CHECK(*b.rho == Approx(2.7333).epsilon(1e-4));

    CHECK(moments(point_mass(0.0)).degenerate());
    CHECK(moments(point_mass(0.0)).variance == 0.0);
}

TEST_CASE("standardize") {
    const DiscreteLaw s = standardize(make_discrete({{0, 0.5}, {2, 0.5}}));
    CHECK(s.atoms()[0] == Approx(-1.0));
    CHECK(s.atoms()[1] == Approx(1.0));

    const DiscreteLaw b2 = standardize(binomial_half(2));
    REQUIRE(b2.size() == 3);
    CHECK(b2.atoms()[0] == Approx(-std::sqrt(2.0)).epsilon(1e-14));
    CHECK(b2.atoms()[1] == Approx(0.0));
    CHECK(b2.masses()[1] == Approx(0.5));

    CHECK_THROWS_AS(standardize(point_mass(3.0)), Error);

    // Idempotence on random laws.
    for (int i = 0; i < 50; ++i) {
        auto rng = instance_rng(7, 0, i);
        const DiscreteLaw a = random_standardized_law(rng);
        const DiscreteLaw b = standardize(a);
        CHECK(mean(a) == Approx(0.0).epsilon(1e-12));
        CHECK(std::abs(variance(a) - 1.0) <= 1e-12);
        REQUIRE(a.size() == b.size());
        for (std::size_t j = 0; j < a.size(); ++j) CHECK(std::abs(a.atoms()[j] - b.atoms()[j]) <= 1e-12);
    }
}

TEST_CASE("affine maps, including reflections") {
    const DiscreteLaw p = make_discrete({{0, 0.2}, {1, 0.8}});
    const DiscreteLaw r = affine(p, -2.0, 1.0);
    CHECK(r.atoms()[0] == Approx(-1.0));
    CHECK(r.masses()[0] == Approx(0.8));
    CHECK(r.atoms()[1] == Approx(1.0));
}

TEST_CASE("cumulants") {
    CHECK(cumulant(rademacher(), 4) == Approx(-2.0));
    CHECK(cumulant(rademacher(), 1) == Approx(0.0));
    CHECK_THROWS_AS(cumulant(rademacher(), 5), Error);
    CHECK_THROWS_AS(cumulant(rademacher(), 0), Error);

    auto rng = instance_rng(3, 0, 0);
    for (int i = 0; i < 20; ++i) {
        const DiscreteLaw a = affine(random_standardized_law(rng, 4, 4), 1.3, 0.4);
        const DiscreteLaw b = affine(random_standardized_law(rng, 4, 4), 0.7, -1.0);
        const DiscreteLaw c = random_standardized_law(rng, 4, 4);
        const DiscreteLaw abc = convolve({a, b, c});
        for (int l = 1; l <= 4; ++l)
            CHECK(cumulant(abc, l) == Approx(cumulant(a, l) + cumulant(b, l) + cumulant(c, l)).epsilon(1e-9));
        const DiscreteLaw sa = standardize(a);
        CHECK(cumulant(sa, 3) == Approx(raw_moment(sa, 3)).epsilon(1e-12));
    }
}

TEST_CASE("convolution") {
    const DiscreteLaw c = convolve(rademacher(), rademacher());
    REQUIRE(c.size() == 3);
    CHECK(c.atoms()[0] == Approx(-2.0));
    CHECK(c.masses()[0] == Approx(0.25));
    CHECK(c.masses()[1] == Approx(0.5));

    const DiscreteLaw half = make_discrete({{0, 0.5}, {1, 0.5}});
    for (int n : {1, 3, 8}) {
        const DiscreteLaw a = convolve_power(half, n), b = binomial_half(n);
        REQUIRE(a.size() == b.size());
        for (std::size_t k = 0; k < a.size(); ++k) CHECK(a.masses()[k] == Approx(b.masses()[k]).epsilon(1e-14));
    }

    const DiscreteLaw big = make_discrete({{0, 0.25}, {1.1, 0.25}, {2.7, 0.25}, {3.14159, 0.25}});
    try {
        convolve(big, big, 10);
        FAIL("expected SupportBlowup");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::SupportBlowup);
    }
}

TEST_CASE("binomial_half") {
    CHECK(binomial_half(1).masses()[0] == Approx(0.5));
    CHECK(binomial_half(2).masses()[1] == Approx(0.5));
    CHECK(binomial_half(20).masses()[10] == Approx(184756.0 / 1048576.0).epsilon(1e-15));
    CHECK_THROWS_AS(binomial_half(0), Error);

    for (int n = 1; n <= 200; n += 13) {
        double s = 0.0;
        const DiscreteLaw b = binomial_half(n);
        for (double m : b.masses()) s += m;
        CHECK(std::abs(s - 1.0) <= 1e-14);
    }
    for (int n : {1, 5, 40}) {
        Rational s = 0;
        for (const auto& m : binomial_half_exact(n)) s += m;
        CHECK(s == 1);
    }
}

TEST_CASE("two_point_law") {
    const DiscreteLaw one = two_point_law(1.0);
    CHECK(one.masses()[0] == Approx(0.5));
    CHECK(one.atoms()[0] == Approx(-1.0));

    const double rhoE = std::sqrt(20.0 * (std::sqrt(10.0) - 3.0) / 3.0);
    const DiscreteLaw pe = two_point_law(rhoE);
    CHECK(std::min(pe.masses()[0], pe.masses()[1]) == Approx((4.0 - std::sqrt(10.0)) / 2.0).epsilon(1e-12));

    for (int i = 0; i <= 900; ++i) {
        const double rho = 1.0 + 0.01 * i;
        const DiscreteLaw p = two_point_law(rho);
        const MomentSummary m = moments(p);
        CHECK(std::abs(m.mean) <= 1e-9);
        CHECK(std::abs(m.variance - 1.0) <= 1e-9);
        CHECK(std::abs(*m.rho - rho) <= 1e-9);
        CHECK(raw_moment(p, 3) >= -1e-12);
    }
    CHECK_THROWS_AS(two_point_law(0.99), Error);
}

TEST_CASE("rho is at least one and equals one only for the symmetric two-point law") {
    for (int i = 0; i < 200; ++i) {
        auto rng = instance_rng(5, 0, i);
        CHECK(*moments(random_standardized_law(rng)).rho >= 1.0 - 1e-12);
    }
    CHECK(*moments(affine(rademacher(), 3.0, 2.0)).rho == Approx(1.0));
    CHECK(*moments(make_discrete({{-1, 0.25}, {0, 0.5}, {1, 0.25}})).rho > 1.0);
}

TEST_CASE("catalog_rho") {
    CHECK(catalog_rho(Catalog::exponential) == Approx(12.0 / std::exp(1.0) - 2.0).epsilon(1e-14));
    CHECK(catalog_rho(Catalog::exponential) == Approx(2.4145).epsilon(1e-4));
    CHECK(catalog_rho(Catalog::uniform) == Approx(3.0 * std::sqrt(3.0) / 4.0).epsilon(1e-14));
    CHECK(catalog_rho(Catalog::poisson, 1.0) == Approx(1.7357).epsilon(1e-4));
    CHECK(catalog_rho(Catalog::poisson, 2.0) == Approx(1.6640).epsilon(1e-4));
    CHECK(catalog_rho(Catalog::geometric, 0.1) == Approx(2.4158).epsilon(1e-4));
    CHECK(catalog_rho(Catalog::bernoulli, 0.1) == Approx(0.82 / 0.3).epsilon(1e-13));

    // Series against a brute-force sum for the geometric law.
    const double p = 0.3, q = 0.7, mu = q / p, var = q / (p * p);
    double s = 0.0, w = p;
    for (int k = 0; k < 400; ++k, w *= q) s += w * std::pow(std::abs(k - mu), 3);
    CHECK(catalog_rho(Catalog::geometric, p) == Approx(s / std::pow(var, 1.5)).epsilon(1e-12));

    CHECK_THROWS_AS(catalog_rho(Catalog::bernoulli, 0.7), Error);
    CHECK_THROWS_AS(catalog_rho(Catalog::poisson, 0.0), Error);
}

TEST_CASE("law JSON round trip and builtins") {
    const DiscreteLaw p = parse_law_json(R"({"atoms":[2,0],"masses":[0.25,0.75]})");
    CHECK(p.atoms()[0] == 0.0);
    CHECK(p.masses()[0] == 0.75);
    const DiscreteLaw back = parse_law_json(law_to_json(p));
    CHECK(back.atoms() == p.atoms());
    CHECK(back.masses() == p.masses());
    CHECK_THROWS_AS(parse_law_json(R"({"atoms":[0,1],"masses":[0.5,0.6]})"), Error);
    CHECK_THROWS_AS(parse_law_json("not json"), Error);
    CHECK_THROWS_AS(read_law_file("/nonexistent/law.json"), Error);

    CHECK(std::holds_alternative<StandardNormal>(resolve_law("normal")));
    const DiscreteLaw b = std::get<DiscreteLaw>(resolve_law("binomial:4"));
    CHECK(variance(b) == Approx(1.0));
    const DiscreteLaw t = std::get<DiscreteLaw>(resolve_law("tworho:1.5"));
    CHECK(*moments(t).rho == Approx(1.5));
    const DiscreteLaw be = std::get<DiscreteLaw>(resolve_law("bernoulli:0.3"));
    CHECK(mean(be) == Approx(0.0).epsilon(1e-12));
    CHECK_THROWS_AS(resolve_law("binomial:x"), Error);
    CHECK_THROWS_AS(resolve_law("bernoulli:1.5"), Error);
}
