#include "helpers.hpp"

#include <cozeta/variety.hpp>

using namespace cozeta;
using namespace cozeta::testing;

namespace {
Rat nval(const LaurentSlice &s) { return s.is_zero() ? Rat(0) : s.terms.begin()->second; }
}

TEST_CASE("variety parsing") {
    CHECK(VarietySpec::parse("gm").counting == QPoly{{1, 1}, {0, -1}});
    CHECK(VarietySpec::parse("ga").counting == QPoly{{1, 1}});
    CHECK(VarietySpec::parse("point").counting == QPoly{{0, 1}});
    CHECK(VarietySpec::parse("poly:1,0,2").counting == QPoly{{0, 1}, {2, 2}});
    CHECK(VarietySpec::parse("poly:-1,1").counting == QPoly{{0, -1}, {1, 1}});
    CHECK_THROWS_AS(VarietySpec::parse("projective"), std::invalid_argument);
    CHECK_THROWS_AS(VarietySpec::parse("poly:"), std::invalid_argument);
}

TEST_CASE("point counts") {
    VariableSpec q2 = VariableSpec::numeric_q(2);
    for (long r = 1; r <= 5; ++r)
        CHECK(nval(count_slice(VarietySpec::gm(), q2, r)) == int_pow(Int(2), r) - 1);
    // symbolic: N_3 of G_m is q^3 - 1
    LaurentSlice s = count_slice(VarietySpec::gm(), sym(), 3);
    CHECK(s.terms == std::map<Exp, Rat>{{Exp{0}, -1}, {Exp{3}, 1}});
}

TEST_CASE("orbit profile: degree-d point counts over F_2") {
    VariableSpec q2 = VariableSpec::numeric_q(2);
    auto gm = orbit_profile(VarietySpec::gm(), q2, 6);
    const long want_gm[] = {1, 1, 2, 3, 6, 9};
    for (long d = 1; d <= 6; ++d) CHECK(nval(gm.tilde[d - 1]) == want_gm[d - 1]);

    auto ga = orbit_profile(VarietySpec::ga(), q2, 4);
    const long want_ga[] = {2, 1, 2, 3};
    for (long d = 1; d <= 4; ++d) CHECK(nval(ga.tilde[d - 1]) == want_ga[d - 1]);

    // point: a single orbit of size 1
    auto pt = orbit_profile(VarietySpec::point(), q2, 4);
    CHECK(nval(pt.tilde[0]) == 1);
    for (long d = 2; d <= 4; ++d) CHECK(nval(pt.tilde[d - 1]) == 0);
}

TEST_CASE("zeta series") {
    // G_a: 1/(1-qT)
    TruncatedSeries za = zeta_series(VarietySpec::ga(), sym(), 5);
    for (long n = 0; n <= 5; ++n) CHECK(coeff(za, n, n) == 1);

    // G_m: (1-T)/(1-qT), coefficient q^n - q^{n-1} for n >= 1
    TruncatedSeries zm = zeta_series(VarietySpec::gm(), sym(), 5);
    CHECK(coeff(zm, 0, 0) == 1);
    for (long n = 1; n <= 5; ++n) {
        CHECK(coeff(zm, n, n) == 1);
        CHECK(coeff(zm, n, n - 1) == -1);
    }

    // point: 1/(1-T); both internal routes are cross-asserted on every call
    TruncatedSeries zp = zeta_series(VarietySpec::point(), sym(), 6);
    CHECK(series_equal_on_common(zp, inv(sub(one(), qT(1, 0, 1)), {6, {}})));

    // numeric: P^1 over F_3 has N_r = 3^r + 1
    TruncatedSeries zp1 = zeta_series(VarietySpec::parse("poly:1,1"), VariableSpec::numeric_q(3), 4);
    CHECK(ncoeff(zp1, 1) == 4);
    CHECK(ncoeff(zp1, 2) == 13);
}

TEST_CASE("factored zeta") {
    FactoredZeta f = factored(VarietySpec::gm());
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0] == std::pair<long, long>{0, -1});
    CHECK(f.factors[1] == std::pair<long, long>{1, 1});
    CHECK(factored(VarietySpec::ga()).factors ==
          std::vector<std::pair<long, long>>{{1, 1}});
}

TEST_CASE("gl orders") {
    CHECK(gl_order_int(1, 2) == 1);
    CHECK(gl_order_int(2, 2) == 6);
    CHECK(gl_order_int(3, 2) == 168);
    CHECK(gl_order_int(2, 3) == 48);
    CHECK(qpoly_eval(gl_order_poly(2), Rat(3)) == 48);
}
