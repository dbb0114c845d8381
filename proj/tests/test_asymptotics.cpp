#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "finfree/asymptotics.hpp"
#include "finfree/convolution.hpp"

using namespace finfree;

TEST_CASE("limit measure supports and normalization") {
    LimitMeasure mp2 = LimitMeasure::mp(2);
    CHECK(mp2.lo == doctest::Approx(3 - 2 * std::sqrt(2.0)).epsilon(1e-12));
    CHECK(mp2.hi == doctest::Approx(3 + 2 * std::sqrt(2.0)).epsilon(1e-12));
    CHECK(mp2.atom_weight == 0);
    CHECK(limit_density(mp2, 0.1) == 0);
    CHECK(limit_density(mp2, 3.0) > 0);
    CHECK(limit_moment(mp2, 0) == doctest::Approx(1.0).epsilon(1e-8));

    LimitMeasure rmp3 = LimitMeasure::rmp(-3);
    CHECK(rmp3.lo == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(rmp3.hi == doctest::Approx(-1.0 / 9).epsilon(1e-12));
    CHECK(limit_moment(rmp3, 0) == doctest::Approx(1.0).epsilon(1e-8));

    LimitMeasure j1 = LimitMeasure::jacobi(2, 4);
    CHECK(j1.kind == LimitMeasure::Kind::JacobiJ1);
    CHECK(j1.lo > 0);
    CHECK(j1.hi < 1);
    CHECK(limit_moment(j1, 0) == doctest::Approx(1.0).epsilon(1e-8));

    LimitMeasure j2 = LimitMeasure::jacobi(2, -3);
    CHECK(j2.kind == LimitMeasure::Kind::JacobiJ2);
    CHECK(j2.hi < 0);
    CHECK(limit_moment(j2, 0) == doctest::Approx(1.0).epsilon(1e-8));

    LimitMeasure j3 = LimitMeasure::jacobi(-5, -3);
    CHECK(j3.kind == LimitMeasure::Kind::JacobiJ3);
    CHECK(j3.lo > 1);
    CHECK(limit_moment(j3, 0) == doctest::Approx(1.0).epsilon(1e-8));

    // atom case: continuous mass b, atom 1-b
    LimitMeasure mph = LimitMeasure::mp(0.5);
    CHECK(mph.atom_weight == doctest::Approx(0.5));
    CHECK(limit_moment(mph, 0) == doctest::Approx(1.0).epsilon(1e-8));

    CHECK_THROWS_AS(LimitMeasure::jacobi(0.5, 0.7), unsupported_parameters_error);
    CHECK_THROWS_AS(LimitMeasure::rmp(1), unsupported_parameters_error);
}

TEST_CASE("density vanishes like a square root at the endpoints") {
    LimitMeasure mp2 = LimitMeasure::mp(2);
    double eps = 1e-6;
    CHECK(limit_density(mp2, mp2.lo + eps) < 0.01);
    CHECK(limit_density(mp2, mp2.hi - eps) < 0.01);
    CHECK(limit_density(mp2, mp2.lo + eps) > 0);
}

TEST_CASE("MP quadrature moments match the closed form") {
    LimitMeasure mp2 = LimitMeasure::mp(2);
    CHECK(std::fabs(limit_moment(mp2, 1) - 2.0) < 1e-8);
    CHECK(std::fabs(limit_moment(mp2, 2) - 6.0) < 1e-8);
    CHECK(std::fabs(limit_moment(mp2, 3) - 22.0) < 1e-8);
    CHECK(mp_moment_closed_form(2, 1) == doctest::Approx(2.0));
    CHECK(mp_moment_closed_form(2, 2) == doctest::Approx(6.0));
    CHECK(mp_moment_closed_form(2, 3) == doctest::Approx(22.0));
    for (int k = 0; k <= 5; ++k)
        CHECK(std::fabs(limit_moment(mp2, k) - mp_moment_closed_form(2, k)) < 1e-8);
    // second parameter point
    LimitMeasure mp32 = LimitMeasure::mp(1.5);
    for (int k = 0; k <= 4; ++k)
        CHECK(std::fabs(limit_moment(mp32, k) - mp_moment_closed_form(1.5, k)) < 1e-8);
}

TEST_CASE("exact moments via Newton identities") {
    // (x-1)^n: every moment 1
    Poly p = Poly::linear_power(6, rat(1));
    auto m = exact_moments(p, 5);
    for (int k = 0; k <= 5; ++k) CHECK(m[(size_t)k] == 1);

    // x^2 - 2: m1 = 0, m2 = 2
    Poly q(2, {rat(1), rat(0), rat(-2)});
    auto mq = exact_moments(q, 4);
    CHECK(mq[1] == 0);
    CHECK(mq[2] == 2);
    CHECK(mq[3] == 0);
    CHECK(mq[4] == 4);

    // against explicit roots
    Poly r = from_roots({rat(1), rat(2), rat(5, 2)}, rat(3), 3);
    auto mr = exact_moments(r, 3);
    CHECK(mr[1] == (1 + 2 + rat(5, 2)) / 3);
    CHECK(mr[2] == (1 + 4 + rat(25, 4)) / 3);
}

TEST_CASE("empirical moments agree with the exact pipeline") {
    Poly p = from_roots({rat(1, 2), rat(3), rat(7)}, rat(1), 3);
    auto exact = exact_moments(p, 3);
    auto emp = empirical_moments(p, 3, rat(1, 1 << 20));
    for (int k = 0; k <= 3; ++k)
        CHECK(std::fabs(emp.m[(size_t)k] - mpq_get_d(exact[(size_t)k].get_mpq_t())) < 1e-5);

    // m1 = e1/(n e0) cross-check on a hypergeometric polynomial
    HypergeomSpec s;
    s.n = 6;
    s.b = {rat(3)};
    Poly f = pFq_std(s);
    auto me = exact_moments(f, 1);
    CHECK(me[1] == f.e(1) / (6 * f.e(0)));

    CHECK_THROWS_AS(empirical_moments(Poly(2, {rat(1), rat(0), rat(1)}), 2, rat(1, 100)),
                    precondition_error);
}

TEST_CASE("hat families converge to their limit measures") {
    // small-n smoke check; the acceptance suite runs n up to 400
    HatFamily lag = HatFamily::laguerre(rat(2));
    auto rep = convergence_report(lag, lag.limit(), {20, 40, 80}, 4);
    CHECK(rep.skipped.empty());
    CHECK(rep.errors_decrease);
    CHECK(rep.max_err_last < 0.10);

    HatFamily bes = HatFamily::bessel(rat(-3));
    auto repb = convergence_report(bes, bes.limit(), {20, 40, 80}, 4);
    CHECK(repb.skipped.empty());
    CHECK(repb.errors_decrease);

    HatFamily jac = HatFamily::jacobi(rat(2), rat(4));
    auto repj = convergence_report(jac, jac.limit(), {20, 40, 80}, 4);
    CHECK(repj.skipped.empty());
    CHECK(repj.errors_decrease);
}

TEST_CASE("free moment combination is consistent with the finite identities") {
    // MP(2) boxplus MP(3/2) = MP(7/2) in moments
    auto m2 = std::array<double, 4>{1, limit_moment(LimitMeasure::mp(2), 1),
                                    limit_moment(LimitMeasure::mp(2), 2),
                                    limit_moment(LimitMeasure::mp(2), 3)};
    auto m32 = std::array<double, 4>{1, limit_moment(LimitMeasure::mp(1.5), 1),
                                     limit_moment(LimitMeasure::mp(1.5), 2),
                                     limit_moment(LimitMeasure::mp(1.5), 3)};
    auto sum = free_add_moments(m2, m32);
    for (int k = 1; k <= 3; ++k)
        CHECK(std::fabs(sum[(size_t)k] - limit_moment(LimitMeasure::mp(3.5), k)) < 1e-6);

    // the Jacobi J1 measure times MP(c+d) recovers MP(c) in moments
    LimitMeasure jac = LimitMeasure::jacobi(2, 5);  // c = 2, d = 3
    auto mj = std::array<double, 4>{1, limit_moment(jac, 1), limit_moment(jac, 2),
                                    limit_moment(jac, 3)};
    auto ml = std::array<double, 4>{1, limit_moment(LimitMeasure::mp(5), 1),
                                    limit_moment(LimitMeasure::mp(5), 2),
                                    limit_moment(LimitMeasure::mp(5), 3)};
    auto prod = free_mul_moments(mj, ml);
    for (int k = 1; k <= 3; ++k)
        CHECK(std::fabs(prod[(size_t)k] - limit_moment(LimitMeasure::mp(2), k)) < 1e-6);
}

TEST_CASE("free identity checks") {
    auto mp = free_identity_check(FreeIdentity::MPMP_E37, {rat(2), rat(7, 2)}, {6, 8, 10}, 3);
    CHECK(mp.exact_all);
    CHECK_FALSE(mp.rows.empty());

    auto fb = free_identity_check(FreeIdentity::FBetaQuotient, {rat(2), rat(3)}, {8}, 3);
    CHECK(fb.exact_all);

    auto cl = free_identity_check(FreeIdentity::Clausen_E39, {rat(4), rat(2)}, {6, 8}, 3);
    CHECK(cl.exact_all);

    auto bb = free_identity_check(FreeIdentity::BesselBessel_E311, {rat(-4), rat(-11, 2)},
                                  {6, 8}, 3);
    CHECK(bb.exact_all);

    // the two sides carry identical moments
    for (const auto& row : mp.rows) CHECK(row.err_sides < 1e-14);
    for (const auto& row : bb.rows) CHECK(row.err_sides < 1e-14);

    CHECK_THROWS_AS(
        free_identity_check(FreeIdentity::BesselBessel_E311, {rat(2), rat(3)}, {6}, 3),
        precondition_error);
}

TEST_CASE("moment agreement with the limiting expression improves with n") {
    auto mp = free_identity_check(FreeIdentity::MPMP_E37, {rat(2), rat(7, 2)},
                                  {20, 40, 80}, 3);
    CHECK(mp.errors_decrease);
    auto bb = free_identity_check(FreeIdentity::BesselBessel_E311, {rat(-4), rat(-11, 2)},
                                  {20, 40, 80}, 3);
    CHECK(bb.errors_decrease);
    auto cl = free_identity_check(FreeIdentity::Clausen_E39, {rat(4), rat(2)},
                                  {20, 40, 80}, 3);
    CHECK(cl.errors_decrease);
}

TEST_CASE("histogram emission") {
    HatFamily lag = HatFamily::laguerre(rat(2));
    Poly p = lag.at(24);
    auto rows = histogram(p, lag.limit(), 16, rat(1, 1 << 20));
    CHECK(rows.size() == 16);
    double mass = 0;
    for (const auto& r : rows) mass += r.mass;
    CHECK(mass == doctest::Approx(1.0));
}

TEST_CASE("format_double is deterministic") {
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(0.1) == format_double(0.1));
    CHECK(format_double(2.0 / 3).size() >= 17);
}
