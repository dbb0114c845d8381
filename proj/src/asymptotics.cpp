#include "finfree/asymptotics.hpp"

#include <cmath>
#include <cstdio>

#include "finfree/regions.hpp"

namespace finfree {

namespace {

constexpr double kPi = 3.14159265358979323846;

// 15-point Kronrod nodes/weights with the embedded 7-point Gauss rule
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct GK {
    double integral, error;
};

template <class F>
GK gk15(F&& f, double a, double b) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double resg = kWg[3] * f(c);
    double resk = kWgk[7] * f(c);
    for (int j = 0; j < 7; ++j) {
        double fv = f(c - h * kXgk[j]) + f(c + h * kXgk[j]);
        resk += kWgk[j] * fv;
        if (j % 2 == 1) resg += kWg[j / 2] * fv;
    }
    return {resk * h, std::fabs((resk - resg) * h)};
}

template <class F>
double adaptive_gk(F&& f, double a, double b, double tol, int max_depth = 24) {
    struct Seg {
        double a, b, tol;
        int depth;
    };
    std::vector<Seg> stack{{a, b, tol, 0}};
    double total = 0, achieved = 0;
    while (!stack.empty()) {
        Seg s = stack.back();
        stack.pop_back();
        GK r = gk15(f, s.a, s.b);
        if (r.error <= s.tol || s.depth >= max_depth) {
            total += r.integral;
            achieved += r.error;
            if (r.error > s.tol && s.depth >= max_depth)
                throw numeric_error("quadrature did not converge; achieved error " +
                                    std::to_string(achieved + r.error));
            continue;
        }
        double m = 0.5 * (s.a + s.b);
        stack.push_back({s.a, m, s.tol / 2, s.depth + 1});
        stack.push_back({m, s.b, s.tol / 2, s.depth + 1});
    }
    return total;
}

// the density with the square-root factor removed: rho = smooth * sqrt(...).
// All three Jacobi regimes share the shape a / (2 pi x (1-x)); on each
// support the sign of x(1-x) makes it positive.
double smooth_part(const LimitMeasure& m, double x) {
    switch (m.kind) {
        case LimitMeasure::Kind::MP: return 1.0 / (2 * kPi * x);
        case LimitMeasure::Kind::RMP: return -m.a / (2 * kPi * x * x);
        case LimitMeasure::Kind::JacobiJ1:
        case LimitMeasure::Kind::JacobiJ2:
        case LimitMeasure::Kind::JacobiJ3: return m.a / (2 * kPi * x * (1 - x));
    }
    return 0;
}

}  // namespace

LimitMeasure LimitMeasure::mp(double b) {
    if (!(b > 0)) throw unsupported_parameters_error("MP needs b > 0");
    LimitMeasure m;
    m.kind = Kind::MP;
    m.b = b;
    double s = std::sqrt(b);
    m.lo = (s - 1) * (s - 1);
    m.hi = (s + 1) * (s + 1);
    m.atom_weight = b < 1 ? 1 - b : 0;
    return m;
}

LimitMeasure LimitMeasure::rmp(double a) {
    if (!(a < 0)) throw unsupported_parameters_error("RMP needs a < 0");
    LimitMeasure m;
    m.kind = Kind::RMP;
    m.a = a;
    double u = std::sqrt(1 - a);
    m.lo = -1.0 / ((u - 1) * (u - 1));
    m.hi = -1.0 / ((u + 1) * (u + 1));
    return m;
}

LimitMeasure LimitMeasure::jacobi(double b, double a) {
    LimitMeasure m;
    m.b = b;
    m.a = a;
    if (b > 1 && a > b + 1) {
        m.kind = Kind::JacobiJ1;
        double p = std::sqrt(a - b), q = std::sqrt((a - 1) * b);
        m.lo = ((q - p) / a) * ((q - p) / a);
        m.hi = ((q + p) / a) * ((q + p) / a);
    } else if (b > 1 && a < 0) {
        m.kind = Kind::JacobiJ2;
        double u = std::sqrt(1 - a), w = std::sqrt(b * (b - a));
        double v = std::sqrt((1 - a) * (b - a)), s = std::sqrt(b);
        double e1 = -((u - w) / (v + s)) * ((u - w) / (v + s));
        double e2 = -((u + w) / (v - s)) * ((u + w) / (v - s));
        m.lo = std::min(e1, e2);
        m.hi = std::max(e1, e2);
    } else if (a < 0 && b < a - 1) {
        m.kind = Kind::JacobiJ3;
        double q = std::sqrt((a - 1) * b), p = std::sqrt(a - b);
        double e1 = (b - 1) / (q - p), e2 = (b - 1) / (q + p);
        e1 *= e1;
        e2 *= e2;
        m.lo = std::min(e1, e2);
        m.hi = std::max(e1, e2);
    } else {
        throw unsupported_parameters_error(
            "Jacobi limit measure: parameters outside the three regimes");
    }
    return m;
}

std::string LimitMeasure::name() const {
    char buf[64];
    switch (kind) {
        case Kind::MP: std::snprintf(buf, sizeof buf, "MP(%g)", b); break;
        case Kind::RMP: std::snprintf(buf, sizeof buf, "RMP(%g)", a); break;
        case Kind::JacobiJ1: std::snprintf(buf, sizeof buf, "Jacobi[J1](%g,%g)", b, a); break;
        case Kind::JacobiJ2: std::snprintf(buf, sizeof buf, "Jacobi[J2](%g,%g)", b, a); break;
        case Kind::JacobiJ3: std::snprintf(buf, sizeof buf, "Jacobi[J3](%g,%g)", b, a); break;
    }
    return buf;
}

double limit_density(const LimitMeasure& m, double x) {
    if (x <= m.lo || x >= m.hi) return 0;
    return smooth_part(m, x) * std::sqrt((m.hi - x) * (x - m.lo));
}

double limit_moment(const LimitMeasure& m, int k) {
    if (k < 0) throw argument_error("limit_moment: negative order");
    // substitute x = lo + (hi-lo) sin^2(theta); the square-root endpoint
    // factors become sin*cos and the integrand is smooth
    const double d = m.hi - m.lo;
    auto f = [&](double th) {
        double st = std::sin(th), ct = std::cos(th);
        double x = m.lo + d * st * st;
        return std::pow(x, k) * smooth_part(m, x) * 2 * d * d * st * st * ct * ct;
    };
    double integral = adaptive_gk(f, 0.0, kPi / 2, 1e-12);
    double atom = (k == 0) ? m.atom_weight : 0.0;
    return atom + integral;
}

double mp_moment_closed_form(double b, int k) {
    if (k == 0) return 1;
    // sum of Narayana numbers N(k,j) b^j
    double s = 0;
    for (int j = 1; j <= k; ++j) {
        double narayana = 1.0 / k;
        narayana *= mpz_get_d(binomial(static_cast<unsigned long>(k),
                                       static_cast<unsigned long>(j))
                                  .get_mpz_t());
        narayana *= mpz_get_d(binomial(static_cast<unsigned long>(k),
                                       static_cast<unsigned long>(j - 1))
                                  .get_mpz_t());
        s += narayana * std::pow(b, j);
    }
    return s;
}

std::vector<Rational> exact_moments(const Poly& p, int kmax) {
    const int n = p.actual_degree();
    if (n < 0) throw argument_error("exact_moments: zero polynomial");
    if (p.e(0) == 0)
        throw precondition_error("exact_moments: polynomial must have full degree");
    const int dshift = p.ambient_degree() - n;
    // sigma_j = e_{j+shift}/e_0-normalized elementary symmetric functions
    std::vector<Rational> sigma(static_cast<size_t>(n) + 1, Rational(0));
    sigma[0] = 1;
    Poly q = with_ambient(p, n);
    for (int j = 1; j <= n; ++j) {
        Rational s = q.e(j) / q.e(0);
        s.canonicalize();
        sigma[static_cast<size_t>(j)] = s;
    }
    (void)dshift;
    // Newton's identities for the power sums
    std::vector<Rational> power(static_cast<size_t>(kmax) + 1, Rational(0));
    power[0] = n;
    for (int k = 1; k <= kmax; ++k) {
        Rational s(0);
        for (int i = 1; i < k && i <= n; ++i) {
            Rational term = sigma[static_cast<size_t>(i)] * power[static_cast<size_t>(k - i)];
            s += (i % 2 == 1) ? term : -term;
        }
        if (k <= n) {
            Rational term = Rational(k) * sigma[static_cast<size_t>(k)];
            s += (k % 2 == 1) ? term : -term;
        }
        power[static_cast<size_t>(k)] = s;
    }
    std::vector<Rational> m(static_cast<size_t>(kmax) + 1);
    for (int k = 0; k <= kmax; ++k) {
        Rational v = power[static_cast<size_t>(k)] / Rational(n);
        v.canonicalize();
        m[static_cast<size_t>(k)] = v;
    }
    m[0] = 1;
    return m;
}

EmpiricalMoments empirical_moments(const Poly& p, int kmax, const Rational& width) {
    RootCertificate cert = certify(p);
    if (cert.nonreal_count > 0)
        throw precondition_error("empirical_moments: polynomial is not real-rooted");
    refine_certificate(cert, width);
    const int n = cert.degree;
    double maxabs = 0;
    std::vector<double> mids;
    std::vector<int> mult;
    for (const auto& r : cert.real_roots) {
        double mid = mpq_get_d(r.midpoint().get_mpq_t());
        mids.push_back(mid);
        mult.push_back(r.multiplicity);
        maxabs = std::max(maxabs, std::fabs(mid));
    }
    EmpiricalMoments out;
    out.m.assign(static_cast<size_t>(kmax) + 1, 0.0);
    out.bound.assign(static_cast<size_t>(kmax) + 1, 0.0);
    const double w = mpq_get_d(width.get_mpq_t());
    for (int k = 0; k <= kmax; ++k) {
        double s = 0;
        for (size_t i = 0; i < mids.size(); ++i) s += mult[i] * std::pow(mids[i], k);
        out.m[static_cast<size_t>(k)] = s / n;
        out.bound[static_cast<size_t>(k)] =
            k == 0 ? 0.0 : n * std::pow(std::max(maxabs, 1.0), k - 1) * k * w;
    }
    return out;
}

std::array<double, 4> free_add_moments(const std::array<double, 4>& x,
                                       const std::array<double, 4>& y) {
    // cumulants through order three coincide with the classical ones and add
    auto cum = [](const std::array<double, 4>& m) {
        double k1 = m[1];
        double k2 = m[2] - m[1] * m[1];
        double k3 = m[3] - 3 * m[1] * m[2] + 2 * m[1] * m[1] * m[1];
        return std::array<double, 3>{k1, k2, k3};
    };
    auto cx = cum(x), cy = cum(y);
    double k1 = cx[0] + cy[0], k2 = cx[1] + cy[1], k3 = cx[2] + cy[2];
    return {1.0, k1, k2 + k1 * k1, k3 + 3 * k1 * k2 + k1 * k1 * k1};
}

std::array<double, 4> free_mul_moments(const std::array<double, 4>& x,
                                       const std::array<double, 4>& y) {
    auto cum = [](const std::array<double, 4>& m) {
        double k1 = m[1];
        double k2 = m[2] - m[1] * m[1];
        double k3 = m[3] - 3 * m[1] * m[2] + 2 * m[1] * m[1] * m[1];
        return std::array<double, 3>{k1, k2, k3};
    };
    auto cx = cum(x), cy = cum(y);
    double k1 = cx[0] * cy[0];
    double k2 = cx[1] * cy[0] * cy[0] + cx[0] * cx[0] * cy[1];
    double k3 = cx[2] * cy[0] * cy[0] * cy[0] + cx[0] * cx[0] * cx[0] * cy[2] +
                3 * cx[0] * cx[1] * cy[0] * cy[1];
    return {1.0, k1, k2 + k1 * k1, k3 + 3 * k1 * k2 + k1 * k1 * k1};
}

HatFamily HatFamily::laguerre(const Rational& b) {
    HatFamily f;
    f.kind = Kind::Laguerre;
    f.b = b;
    return f;
}

HatFamily HatFamily::bessel(const Rational& a) {
    HatFamily f;
    f.kind = Kind::Bessel;
    f.a = a;
    return f;
}

HatFamily HatFamily::jacobi(const Rational& b, const Rational& a) {
    HatFamily f;
    f.kind = Kind::Jacobi;
    f.b = b;
    f.a = a;
    return f;
}

Poly HatFamily::at(int n) const {
    HypergeomSpec s;
    s.n = n;
    s.normalization = Normalization::MonicHGP;
    switch (kind) {
        case Kind::Laguerre:
            s.b = {b};
            return dilate(hgp_monic(s), rat(1, n));
        case Kind::Bessel:
            s.a = {a};
            return dilate(hgp_monic(s), Rational(n));
        case Kind::Jacobi:
            s.a = {a};
            s.b = {b};
            return hgp_monic(s);
    }
    throw argument_error("HatFamily::at: bad kind");
}

HypergeomSpec HatFamily::std_spec(int n) const {
    switch (kind) {
        case Kind::Laguerre: return hgp_to_std_spec(n, {}, {b});
        case Kind::Bessel: return hgp_to_std_spec(n, {a}, {});
        case Kind::Jacobi: return hgp_to_std_spec(n, {a}, {b});
    }
    throw argument_error("HatFamily::std_spec: bad kind");
}

LimitMeasure HatFamily::limit() const {
    switch (kind) {
        case Kind::Laguerre: return LimitMeasure::mp(mpq_get_d(b.get_mpq_t()));
        case Kind::Bessel: return LimitMeasure::rmp(mpq_get_d(a.get_mpq_t()));
        case Kind::Jacobi:
            return LimitMeasure::jacobi(mpq_get_d(b.get_mpq_t()), mpq_get_d(a.get_mpq_t()));
    }
    throw argument_error("HatFamily::limit: bad kind");
}

std::string HatFamily::name() const {
    switch (kind) {
        case Kind::Laguerre: return "laguerre-hat(" + to_string(b) + ")";
        case Kind::Bessel: return "bessel-hat(" + to_string(a) + ")";
        case Kind::Jacobi: return "jacobi-hat(" + to_string(b) + "," + to_string(a) + ")";
    }
    return "?";
}

ConvergenceReport convergence_report(const HatFamily& family, const LimitMeasure& mu,
                                     const std::vector<int>& n_list, int kmax) {
    ConvergenceReport rep;
    std::vector<double> limits(static_cast<size_t>(kmax) + 1);
    for (int k = 0; k <= kmax; ++k) limits[static_cast<size_t>(k)] = limit_moment(mu, k);

    std::vector<double> max_errs;
    for (int n : n_list) {
        auto claim = theoretical_claim(family.std_spec(n));
        if (!claim || *claim == RootLocation::NotAllReal) {
            rep.skipped.push_back(n);
            continue;
        }
        Poly p = family.at(n);
        auto m = exact_moments(p, kmax);
        double max_err = 0;
        for (int k = 1; k <= kmax; ++k) {
            ConvergenceRow row;
            row.n = n;
            row.k = k;
            row.empirical = mpq_get_d(m[static_cast<size_t>(k)].get_mpq_t());
            row.limit = limits[static_cast<size_t>(k)];
            row.rel_err = std::fabs(row.empirical - row.limit) /
                          std::max(std::fabs(row.limit), 1e-300);
            max_err = std::max(max_err, row.rel_err);
            rep.rows.push_back(row);
        }
        max_errs.push_back(max_err);
    }
    if (max_errs.size() >= 2) {
        rep.max_err_first = max_errs.front();
        rep.max_err_last = max_errs.back();
        rep.errors_decrease = rep.max_err_last < rep.max_err_first;
        for (size_t i = 0; i + 1 < max_errs.size(); ++i)
            if (max_errs[i + 1] > 2 * max_errs[i]) rep.errors_decrease = false;
    }
    return rep;
}

std::string to_string(FreeIdentity id) {
    switch (id) {
        case FreeIdentity::MPMP_E37: return "mp-mp";
        case FreeIdentity::Clausen_E39: return "clausen";
        case FreeIdentity::BesselBessel_E311: return "bessel-bessel";
        case FreeIdentity::FBetaQuotient: return "fbeta-quotient";
    }
    return "?";
}

namespace {

HypergeomSpec monic_spec(int n, std::vector<Rational> a, std::vector<Rational> b) {
    HypergeomSpec s;
    s.n = n;
    s.a = std::move(a);
    s.b = std::move(b);
    s.normalization = Normalization::MonicHGP;
    return s;
}

struct IdentitySides {
    Poly lhs, rhs;
    std::array<double, 4> limit;  // limit moments through order 3
    int limit_kmax = 3;
};

std::array<double, 4> measure_moments3(const LimitMeasure& m) {
    return {limit_moment(m, 0), limit_moment(m, 1), limit_moment(m, 2), limit_moment(m, 3)};
}

IdentitySides build_sides(FreeIdentity id, const std::vector<Rational>& params, int n) {
    switch (id) {
        case FreeIdentity::MPMP_E37: {
            if (params.size() != 2) throw argument_error("mp-mp needs {b1, b2}");
            const Rational &b1 = params[0], &b2 = params[1];
            if (!(b1 > 1 && b2 > 1))
                throw precondition_error("mp-mp: need b1, b2 > 1 for the MP limits");
            Poly l = add_convolve(dilate(hgp_monic(monic_spec(n, {}, {b1})), rat(1, n)),
                                  dilate(hgp_monic(monic_spec(n, {}, {b2})), rat(1, n)));
            Poly r = dilate(hgp_monic(monic_spec(n, {}, {b1 + b2})), rat(1, n));
            IdentitySides out{l, r, {}, 3};
            out.limit = measure_moments3(
                LimitMeasure::mp(mpq_get_d(Rational(b1 + b2).get_mpq_t())));
            return out;
        }
        case FreeIdentity::FBetaQuotient: {
            if (params.size() != 2) throw argument_error("fbeta-quotient needs {c, d}");
            const Rational &c = params[0], &d = params[1];
            if (!(c > 1 && d > 1))
                throw precondition_error("fbeta-quotient: need c, d > 1");
            Poly jac = hgp_monic(monic_spec(n, {c + d}, {c}));
            Poly lag = dilate(hgp_monic(monic_spec(n, {}, {c + d})), rat(1, n));
            Poly l = mul_convolve(jac, lag);
            Poly r = dilate(hgp_monic(monic_spec(n, {}, {c})), rat(1, n));
            IdentitySides out{l, r, {}, 3};
            out.limit = measure_moments3(LimitMeasure::mp(mpq_get_d(c.get_mpq_t())));
            return out;
        }
        case FreeIdentity::Clausen_E39: {
            if (params.size() != 2) throw argument_error("clausen needs {a, b}");
            const Rational &a = params[0], &b = params[1];
            if (!(a > 1 && b > 1 && a > b + 1))
                throw precondition_error("clausen: need a, b > 1 and a > b+1");
            const Rational half_n = rat(1, 2 * n);
            Poly p = dilate(hgp_monic(monic_spec(n, {a + b - half_n}, {a, b})), rat(1, n));
            Poly l = add_convolve(p, p);
            Poly r = dilate(
                hgp_monic(monic_spec(n, {a + b - half_n, 2 * a + 2 * b}, {2 * a, 2 * b, a + b})),
                rat(1, n));
            IdentitySides out{l, r, {}, 3};
            double ad = mpq_get_d(a.get_mpq_t()), bd = mpq_get_d(b.get_mpq_t());
            auto piece = free_mul_moments(measure_moments3(LimitMeasure::jacobi(ad, ad + bd)),
                                          measure_moments3(LimitMeasure::mp(bd)));
            out.limit = free_add_moments(piece, piece);
            return out;
        }
        case FreeIdentity::BesselBessel_E311: {
            if (params.size() != 2) throw argument_error("bessel-bessel needs {a, b}");
            const Rational &a = params[0], &b = params[1];
            if (!(a < 0 && b < a - 1))
                throw precondition_error("bessel-bessel: need a < 0 and b < a-1");
            Poly l = add_convolve(dilate(hgp_monic(monic_spec(n, {2 * a}, {})), Rational(n)),
                                  dilate(hgp_monic(monic_spec(n, {2 * b}, {})), Rational(n)));
            const Rational half_n = rat(1, 2 * n);
            Poly r0 = hgp_monic(monic_spec(
                n, {2 * a, 2 * b, 2 * a + 2 * b + rat(1, n)}, {a + b, a + b + half_n}));
            Poly r = dilate(dilate(r0, rat(4)), Rational(n));
            IdentitySides out{l, r, {}, 3};
            double ad = mpq_get_d(a.get_mpq_t()), bd = mpq_get_d(b.get_mpq_t());
            out.limit = free_add_moments(measure_moments3(LimitMeasure::rmp(2 * ad)),
                                         measure_moments3(LimitMeasure::rmp(2 * bd)));
            return out;
        }
    }
    throw argument_error("free_identity_check: unknown id");
}

}  // namespace

FreeIdentityReport free_identity_check(FreeIdentity id, const std::vector<Rational>& params,
                                       const std::vector<int>& n_list, int kmax) {
    FreeIdentityReport rep;
    std::vector<double> errs;
    for (int n : n_list) {
        IdentitySides sides = build_sides(id, params, n);
        bool exact = (sides.lhs == sides.rhs);
        rep.exact_all = rep.exact_all && exact;
        rep.exact_checked.push_back(n);
        const int kcap = std::min(kmax, sides.limit_kmax);
        auto ml = exact_moments(sides.lhs, kcap);
        auto mr = exact_moments(sides.rhs, kcap);
        double max_err = 0;
        for (int k = 1; k <= kcap; ++k) {
            FreeIdentityRow row;
            row.n = n;
            row.k = k;
            row.lhs = mpq_get_d(ml[static_cast<size_t>(k)].get_mpq_t());
            row.rhs = mpq_get_d(mr[static_cast<size_t>(k)].get_mpq_t());
            row.limit = sides.limit[static_cast<size_t>(k)];
            double denom = std::max(std::fabs(row.limit), 1e-300);
            row.err_sides = std::fabs(row.lhs - row.rhs) /
                            std::max({std::fabs(row.lhs), std::fabs(row.rhs), 1e-300});
            row.err_vs_limit = std::fabs(row.lhs - row.limit) / denom;
            max_err = std::max(max_err, row.err_vs_limit);
            rep.rows.push_back(row);
        }
        errs.push_back(max_err);
    }
    if (errs.size() >= 2) {
        rep.errors_decrease = errs.back() < errs.front();
        for (size_t i = 0; i + 1 < errs.size(); ++i)
            if (errs[i + 1] > 2 * errs[i]) rep.errors_decrease = false;
    }
    return rep;
}

std::vector<HistRow> histogram(const Poly& p, const LimitMeasure& m, int bins,
                               const Rational& width) {
    RootCertificate cert = certify(p);
    if (cert.nonreal_count > 0)
        throw precondition_error("histogram: polynomial is not real-rooted");
    refine_certificate(cert, width);
    const double margin = 0.1 * (m.hi - m.lo);
    const double lo = m.lo - margin, hi = m.hi + margin;
    const double bw = (hi - lo) / bins;
    std::vector<HistRow> rows(static_cast<size_t>(bins));
    for (int i = 0; i < bins; ++i) {
        rows[static_cast<size_t>(i)].center = lo + (i + 0.5) * bw;
        rows[static_cast<size_t>(i)].density =
            limit_density(m, rows[static_cast<size_t>(i)].center);
    }
    for (const auto& r : cert.real_roots) {
        double mid = mpq_get_d(r.midpoint().get_mpq_t());
        int idx = static_cast<int>(std::floor((mid - lo) / bw));
        if (idx >= 0 && idx < bins)
            rows[static_cast<size_t>(idx)].mass +=
                static_cast<double>(r.multiplicity) / cert.degree;
    }
    return rows;
}

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace finfree
