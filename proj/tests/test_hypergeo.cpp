#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "finfree/hypergeo.hpp"
#include "test_util.hpp"

using namespace finfree;

namespace {
HypergeomSpec spec(int n, std::vector<Rational> a, std::vector<Rational> b) {
    HypergeomSpec s;
    s.n = n;
    s.a = std::move(a);
    s.b = std::move(b);
    return s;
}
}  // namespace

TEST_CASE("rising and falling factorials") {
    CHECK(rising(rat(7, 3), 0) == 1);
    CHECK(rising(rat(1, 2), 3) == rat(15, 8));
    CHECK(falling(rat(5), 2) == 20);

    testutil::Rng rng(41);
    for (int trial = 0; trial < 100; ++trial) {
        Rational a = rng.rational(30);
        int j = static_cast<int>(rng.integer(0, 9));
        Rational lhs = falling(a, j);
        Rational rhs = rising(-a, j);
        if (j % 2 != 0) rhs = -rhs;
        CHECK(lhs == rhs);
    }
    // (a)_n = (a)_{n-j} <a+n-1>_j
    for (int trial = 0; trial < 50; ++trial) {
        Rational a = rng.rational(20);
        int n = static_cast<int>(rng.integer(0, 8));
        int j = static_cast<int>(rng.integer(0, n));
        CHECK(rising(a, n) == rising(a, n - j) * falling(a + n - 1, j));
    }
    CHECK_THROWS_AS(rising(rat(1), -1), argument_error);
}

TEST_CASE("pFq_std basic shapes") {
    // i=0, j=1, n=1: b - x
    Poly p = pFq_std(spec(1, {}, {rat(5, 2)}));
    CHECK(same_polynomial(p, Poly(1, {rat(-1), rat(-5, 2)})));
    CHECK(evaluate(p, rat(5, 2)) == 0);
    CHECK(evaluate(p, rat(0)) == rat(5, 2));

    // 1F0: the polynomial is (1-x)^n up to the standard constant
    const int n = 6;
    Poly f10 = pFq_std(spec(n, {}, {}));
    Poly expect = scale(Poly::one_shifted(n), rat(1));
    CHECK(f10 == expect);  // (-1)^n (x-1)^n = (1-x)^n, n even
    Poly f10o = pFq_std(spec(5, {}, {}));
    CHECK(f10o == scale(Poly::one_shifted(5), rat(-1)));
}

TEST_CASE("pFq_std leading and trailing coefficients") {
    testutil::Rng rng(42);
    for (int trial = 0; trial < 100; ++trial) {
        int n = static_cast<int>(rng.integer(0, 9));
        int i = static_cast<int>(rng.integer(0, 2));
        int j = static_cast<int>(rng.integer(0, 2));
        auto s = spec(n, rng.rationals(i, 50), rng.rationals(j, 50));
        Poly p = pFq_std(s);
        Rational sg = (n % 2 == 0) ? rat(1) : rat(-1);
        CHECK(p.e(0) == sg * rising(s.a, n));
        CHECK(p.e(n) == sg * rising(s.b, n));
    }
}

TEST_CASE("pFq_std against the series of differential operators") {
    testutil::Rng rng(43);
    int done = 0;
    while (done < 40) {
        int n = static_cast<int>(rng.integer(1, 8));
        int i = static_cast<int>(rng.integer(0, 2));
        int j = static_cast<int>(rng.integer(0, 2));
        auto s = spec(n, rng.rationals(i, 20), rng.rationals(j, 20));
        if (!full_degree(s)) continue;
        Poly direct = pFq_std(s);
        try {
            Poly via = pFq_std_via_diffop(s);
            CHECK(direct == via);
        } catch (const precondition_error&) {
            continue;  // vanishing factor in the operator route
        }
        ++done;
    }
}

TEST_CASE("degenerate numerator parameters lower the degree") {
    // a = -2 with n = 5: degree drops to exactly 2... the polynomial form stays total
    Poly p = pFq_std(spec(5, {rat(-2)}, {rat(3)}));
    CHECK(p.actual_degree() == 2);
    CHECK_FALSE(full_degree(spec(5, {rat(-2)}, {rat(3)})));
    CHECK(full_degree(spec(5, {rat(-7)}, {rat(3)})));
    CHECK(full_degree(spec(5, {rat(1, 2)}, {})));
}

TEST_CASE("hgp_monic basics") {
    const int n = 7;
    // empty a, b = (0) gives x^n
    CHECK(hgp_monic(spec(n, {}, {rat(0)})) == Poly::monomial(n));
    // a = b nonempty, and both empty, give (x-1)^n
    CHECK(hgp_monic(spec(n, {}, {})) == Poly::one_shifted(n));
    CHECK(hgp_monic(spec(n, {rat(7, 2)}, {rat(7, 2)})) == Poly::one_shifted(n));
    // a=(1), b=(k/n) gives (x-1)^k x^{n-k}
    const int k = 2;
    Poly p = hgp_monic(spec(5, {rat(1)}, {rat(k, 5)}));
    Poly expect = mul(Poly::one_shifted(k), Poly::monomial(3));
    CHECK(p == expect);

    CHECK_THROWS_AS(hgp_monic(spec(5, {rat(2, 5)}, {})), undefined_coefficient_error);
    CHECK_THROWS_AS(hgp_monic(spec(5, {rat(0)}, {})), undefined_coefficient_error);
}

TEST_CASE("hgp_monic matches the standard normalization up to a constant") {
    testutil::Rng rng(44);
    int done = 0;
    while (done < 30) {
        int n = static_cast<int>(rng.integer(1, 9));
        int i = static_cast<int>(rng.integer(0, 2));
        int j = static_cast<int>(rng.integer(0, 2));
        auto a = rng.rationals(i, 8);
        auto b = rng.rationals(j, 8);
        bool bad = false;
        for (const auto& x : a) {
            Rational t = x * n;
            bad = bad || (is_integer(t) && t >= 0 && t <= n - 1);
        }
        if (bad) continue;
        Poly m = hgp_monic(spec(n, a, b));
        auto s = hgp_to_std_spec(n, a, b);
        Poly f = pFq_std(s);
        std::vector<Rational> an;
        for (const auto& x : a) an.push_back(x * n);
        Rational lead = ((n % 2 == 0) ? rat(1) : rat(-1)) / falling(an, n);
        CHECK(m == scale(f, lead));
        ++done;
    }
}

TEST_CASE("laguerre polynomials") {
    const int n = 6;
    const Rational alpha = rat(3, 2);
    // n! L_n^(alpha) = 1F1(-n; alpha+1)
    CHECK(scale(laguerre(n, alpha), Rational(factorial(n))) ==
          pFq_std(spec(n, {}, {alpha + 1})));

    // reduction for negative integer parameter: L_n^(-k) = (-x)^k (n-k)!/n! L_{n-k}^(k)
    const int nn = 5, k = 2;
    Poly lhs = laguerre(nn, rat(-k));
    Poly monk = scale(Poly::monomial(k), (k % 2 == 0) ? rat(1) : rat(-1));
    Poly rhs = scale(mul(monk, laguerre(nn - k, rat(k))),
                     Rational(factorial(nn - k), factorial(nn)));
    CHECK(same_polynomial(lhs, rhs));
}

TEST_CASE("bessel polynomials and Laguerre duality") {
    const int n = 5;
    const Rational a = rat(-9);
    // 2F0(-n, a) = n! x^n L_n^(-n-a)(-1/x), which is how bessel() is built
    Poly b = bessel(n, a);
    CHECK(scale(b, Rational(factorial(n))) == pFq_std(spec(n, {a}, {})));
}

TEST_CASE("jacobi polynomials") {
    // 2F1(-n, a; b) = n! P^{(b-1, -n+a-b)}(1-2x)
    testutil::Rng rng(45);
    for (int trial = 0; trial < 15; ++trial) {
        int n = static_cast<int>(rng.integer(1, 7));
        Rational a = rng.rational(10), b = rng.rational(10);
        Poly f = pFq_std(spec(n, {a}, {b}));
        Poly pj = jacobi(n, b - 1, a - b - n);
        Poly rhs = scale(compose_affine(pj, rat(-2), rat(1)), Rational(factorial(n)));
        CHECK(same_polynomial(f, rhs));
    }
    // P_n^{(a,b)}(-x) = (-1)^n P_n^{(b,a)}(x), here via negate_argument
    const int n = 4;
    Rational al = rat(5, 2), be = rat(-3, 4);
    CHECK(negate_argument(jacobi(n, al, be)) == jacobi(n, be, al));
}

TEST_CASE("multiplicative convolution theorem for hypergeometric polynomials") {
    // 2F0 BT 1F1 = 2F1 at n=8, a=(-9), b=(3)
    auto s1 = spec(8, {rat(-9)}, {});
    auto s2 = spec(8, {}, {rat(3)});
    auto rep = verify_mul_theorem(s1, s2);
    CHECK(rep.pass());

    // direct coefficient check of the same instance
    Poly prod = mul_convolve(pFq_std(s1), pFq_std(s2));
    CHECK(prod == pFq_std(spec(8, {rat(-9)}, {rat(3)})));  // n even: constant is +1

    // random sweep
    testutil::Rng rng(46);
    for (int trial = 0; trial < 120; ++trial) {
        int n = static_cast<int>(rng.integer(0, 12));
        auto sa = spec(n, rng.rationals(static_cast<int>(rng.integer(0, 2)), 50),
                       rng.rationals(static_cast<int>(rng.integer(0, 2)), 50));
        auto sb = spec(n, rng.rationals(static_cast<int>(rng.integer(0, 2)), 50),
                       rng.rationals(static_cast<int>(rng.integer(0, 2)), 50));
        CHECK(verify_mul_theorem(sa, sb).pass());
    }
}

TEST_CASE("cancellation: pFq(a;b) BT pFq(b;a) = (1-x)^n") {
    const int n = 6;
    auto s1 = spec(n, {rat(-7)}, {rat(2)});
    auto s2 = spec(n, {rat(2)}, {rat(-7)});
    Poly prod = mul_convolve(pFq_std(s1), pFq_std(s2));
    // exact form of the cancellation: (a)_n (b)_n (x-1)^n
    Rational c = rising(s1.a, n) * rising(s1.b, n);
    CHECK(prod == scale(Poly::one_shifted(n), c));

    // stated as the multiplicative-inverse property: normalize p so that
    // p BT q = (x-1)^n exactly matches multiplicative_inverse
    Poly p = pFq_std(s1);
    Poly q = multiplicative_inverse(p);
    CHECK(mul_convolve(p, q) == Poly::one_shifted(n));
    // q is proportional to pFq(b;a)
    Poly f = pFq_std(s2);
    CHECK(scale(q, f.e(0)) == scale(f, q.e(0)));
}

TEST_CASE("m-fold self-convolution matches the repeated-tuple formula") {
    const int n = 5, m = 3;
    auto base = spec(n, {rat(-6)}, {rat(5, 2)});
    Poly acc = pFq_std(base);
    for (int t = 1; t < m; ++t) acc = mul_convolve(acc, pFq_std(base));
    // each convolution contributes one (-1)^n; n(m-1) is even here
    HypergeomSpec rep;
    rep.n = n;
    for (int t = 0; t < m; ++t) {
        rep.a.insert(rep.a.end(), base.a.begin(), base.a.end());
        rep.b.insert(rep.b.end(), base.b.begin(), base.b.end());
    }
    CHECK(acc == pFq_std(rep));
}

TEST_CASE("additive example E37") {
    // hand-checked n=1 case: both sides are x - (b1+b2)
    auto rep1 = verify_additive_example(AdditiveExampleId::E37, {rat(3), rat(5, 2)}, 1);
    CHECK(rep1.pass());
    Poly lhs = add_convolve(pFq_std(spec(1, {}, {rat(3)})), pFq_std(spec(1, {}, {rat(5, 2)})));
    CHECK(lhs == Poly(1, {rat(1), rat(11, 2)}));

    auto rep = verify_additive_example(AdditiveExampleId::E37, {rat(2), rat(7, 2)}, 9);
    CHECK(rep.pass());
}

namespace {
// degenerate displayed constants are skips, not failures
bool passes_or_degenerate(AdditiveExampleId id, const std::vector<Rational>& ps, int n) {
    try {
        return verify_additive_example(id, ps, n).pass();
    } catch (const degenerate_parameter_error&) {
        return true;
    }
}
}  // namespace

TEST_CASE("additive examples E38, E39, E311, E312") {
    testutil::Rng rng(47);
    CHECK(verify_additive_example(AdditiveExampleId::E38, {rat(3), rat(2), rat(7, 2)}, 6).pass());
    CHECK(verify_additive_example(AdditiveExampleId::E39, {rat(2), rat(3, 2)}, 5).pass());
    CHECK(verify_additive_example(AdditiveExampleId::E311, {rat(-10), rat(-10)}, 7).pass());
    CHECK(verify_additive_example(AdditiveExampleId::E312, {rat(4), rat(3)}, 5).pass());

    for (int trial = 0; trial < 40; ++trial) {
        int n = static_cast<int>(rng.integer(1, 10));
        CHECK(passes_or_degenerate(AdditiveExampleId::E38,
                                   {rng.rational(12), rng.rational(12), rng.rational(12)}, n));
        CHECK(passes_or_degenerate(AdditiveExampleId::E39,
                                   {rng.rational(12), rng.rational(12)}, n));
        CHECK(passes_or_degenerate(AdditiveExampleId::E311,
                                   {rng.rational(12), rng.rational(12)}, n));
        CHECK(passes_or_degenerate(AdditiveExampleId::E312,
                                   {rng.rational(12), rng.rational(12)}, n));
    }
}

TEST_CASE("E311 with a = b against the squared form") {
    const int n = 7;
    const Rational a = rat(-10);
    Poly p = pFq_std(spec(n, {a}, {}));
    Poly lhs = add_convolve(p, p);
    Poly q = pFq_std(spec(n, {a, 2 * a + n}, {a + rat(1, 2)}));
    // cancelling the duplicated numerator/denominator parameter a leaves (a)_n
    Rational c = ((n % 2 == 0) ? rat(1) : rat(-1)) * rising(a, n) / rising(2 * a + n, n);
    CHECK(lhs == scale(dilate(q, rat(4)), c));
}

TEST_CASE("reduction identities") {
    CHECK(verify_reduction(ReductionId::LinearFactor, {rat(3)}, 5).pass());
    CHECK(verify_reduction(ReductionId::TopShift, {rat(3), rat(2)}, 6).pass());
    CHECK(verify_reduction(ReductionId::BottomShift, {rat(3), rat(2)}, 6).pass());
    CHECK(verify_reduction(ReductionId::DoubleFactor, {rat(2), rat(4)}, 6).pass());

    // explicit linear-factor form at n=5, b=3: root at 3/8 beside 1^(n-1)
    Poly L = pFq_std(spec(5, {rat(4)}, {rat(3)}));
    CHECK(evaluate(L, rat(3, 8)) == 0);
    CHECK(evaluate(L, rat(1)) == 0);

    // BottomShift RHS has a root at 1 of multiplicity n-k
    Poly R = pFq_std(spec(6, {rat(3 + 2)}, {rat(3)}));
    Poly d = R;
    for (int i = 0; i < 6 - 2; ++i) {
        CHECK(evaluate(d, rat(1)) == 0);
        d = derivative(d);
    }
    CHECK(evaluate(d, rat(1)) != 0);

    testutil::Rng rng(48);
    for (int trial = 0; trial < 50; ++trial) {
        int n = static_cast<int>(rng.integer(1, 10));
        int k = static_cast<int>(rng.integer(0, n - 1));
        Rational b = rng.rational(15);
        if (in_neg_lattice(b + k, n)) continue;
        if (in_neg_lattice(b + 1, n)) continue;
        CHECK(verify_reduction(ReductionId::TopShift, {b, rat(k)}, n).pass());
        CHECK(verify_reduction(ReductionId::BottomShift, {b, rat(k)}, n).pass());
        int j = static_cast<int>(rng.integer(k, n));
        CHECK(verify_reduction(ReductionId::DoubleFactor, {rat(k), rat(j)}, n).pass());
        CHECK(verify_reduction(ReductionId::LinearFactor, {b}, n).pass());
    }
    CHECK_THROWS_AS(verify_reduction(ReductionId::LinearFactor, {rat(-5)}, 5),
                    precondition_error);
}

TEST_CASE("reciprocal lemma") {
    auto s = spec(4, {rat(-6)}, {rat(2)});
    CHECK(verify_reciprocal_lemma(s).pass());

    testutil::Rng rng(49);
    for (int trial = 0; trial < 50; ++trial) {
        int n = static_cast<int>(rng.integer(1, 9));
        auto sp = spec(n, rng.rationals(static_cast<int>(rng.integer(0, 2)), 20),
                       rng.rationals(static_cast<int>(rng.integer(0, 2)), 20));
        CHECK(verify_reciprocal_lemma(sp).pass());
    }
}

TEST_CASE("reciprocation maps the hgp family to the swapped family") {
    // reciprocal of pFq(a;b) equals pFq(-n-b+1; -n-a+1) at (-1)^{i+j} x
    testutil::Rng rng(50);
    for (int trial = 0; trial < 30; ++trial) {
        int n = static_cast<int>(rng.integer(1, 8));
        int i = static_cast<int>(rng.integer(0, 2));
        int j = static_cast<int>(rng.integer(0, 2));
        auto s = spec(n, rng.rationals(i, 15), rng.rationals(j, 15));
        Poly p = pFq_std(s);
        Poly phat = reciprocal(p, rat(1));
        HypergeomSpec sw;
        sw.n = n;
        for (const auto& b : s.b) sw.a.push_back(-b - n + 1);
        for (const auto& a : s.a) sw.b.push_back(-a - n + 1);
        Poly q = pFq_std(sw);
        Poly q_at = ((i + j) % 2 == 0) ? q : negate_argument(q);
        // negate_argument(q) = (-1)^n q(-x), so compare projectively
        Rational lead = (((i + 1) * n) % 2 == 0) ? rat(1) : rat(-1);
        if ((i + j) % 2 != 0 && n % 2 != 0) lead = -lead;
        CHECK(phat == scale(q_at, lead));
    }
}
