#include "finfree/rootcert.hpp"

#include <algorithm>
#include <cstdlib>

namespace finfree {

namespace {

// ===== integer polynomials, ascending power-basis coefficients =====

using ZPoly = std::vector<Int>;

void zp_trim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int zp_degree(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

Int zp_content(const ZPoly& p) {
    Int g(0);
    for (const auto& c : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

void zp_make_primitive(ZPoly& p) {
    zp_trim(p);
    if (p.empty()) return;
    Int g = zp_content(p);
    if (g > 1)
        for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

ZPoly zp_neg(ZPoly p) {
    for (auto& c : p) c = -c;
    return p;
}

ZPoly zp_derivative(const ZPoly& p) {
    ZPoly d;
    for (size_t k = 1; k < p.size(); ++k) d.push_back(Int(static_cast<long>(k)) * p[k]);
    zp_trim(d);
    return d;
}

// primitive integer polynomial with the same roots
ZPoly zp_from_poly(const Poly& p) {
    std::vector<Rational> c = to_power_basis(p);
    Int den(1);
    for (const auto& q : c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
    ZPoly z;
    z.reserve(c.size());
    for (const auto& q : c) z.push_back(Int(q.get_num() * (den / q.get_den())));
    zp_make_primitive(z);
    return z;
}

Poly zp_to_poly(const ZPoly& z) {
    std::vector<Rational> c;
    c.reserve(z.size());
    for (const auto& k : z) c.emplace_back(k);
    int n = std::max(0, zp_degree(z));
    return from_power_basis(c, n);
}

// sign of p(u/v) through the homogeneous form sum c_k u^k v^{d-k}; v > 0
int zp_sign_at(const ZPoly& p, const Int& u, const Int& v) {
    if (p.empty()) return 0;
    Int acc = p.back();
    Int vp(1);
    for (size_t i = p.size() - 1; i-- > 0;) {
        vp *= v;
        acc = acc * u + p[i] * vp;
    }
    return sgn(acc);
}

int zp_sign_at(const ZPoly& p, const Rational& x) {
    return zp_sign_at(p, Int(x.get_num()), Int(x.get_den()));
}

bool zp_is_root(const ZPoly& p, const Rational& x) { return zp_sign_at(p, x) == 0; }

int zp_sign_at_pos_inf(const ZPoly& p) { return p.empty() ? 0 : sgn(p.back()); }

int zp_sign_at_neg_inf(const ZPoly& p) {
    if (p.empty()) return 0;
    int s = sgn(p.back());
    return (zp_degree(p) % 2 == 0) ? s : -s;
}

// remainder of A by B times a positive constant
ZPoly zp_rem_signed(ZPoly A, const ZPoly& B) {
    const int db = zp_degree(B);
    const Int& lb = B.back();
    int steps = 0;
    while (zp_degree(A) >= db && !A.empty()) {
        const int da = zp_degree(A);
        Int la = A.back();
        ZPoly next(static_cast<size_t>(da), Int(0));
        for (int i = 0; i < da; ++i) {
            Int t = lb * A[static_cast<size_t>(i)];
            int j = i - (da - db);
            if (j >= 0 && j < db) t -= la * B[static_cast<size_t>(j)];
            next[static_cast<size_t>(i)] = t;
        }
        zp_trim(next);
        A = std::move(next);
        ++steps;
    }
    if (lb < 0 && steps % 2 != 0) A = zp_neg(A);
    return A;
}

ZPoly zp_gcd(ZPoly a, ZPoly b) {
    zp_make_primitive(a);
    zp_make_primitive(b);
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (zp_degree(a) < zp_degree(b)) std::swap(a, b);
    while (!b.empty()) {
        ZPoly r = zp_rem_signed(a, b);
        zp_make_primitive(r);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() < 0) a = zp_neg(a);
    return a;
}

// exact quotient; the quotient must be integral (Gauss's lemma covers every
// call site: primitive divisors of integer polynomials)
ZPoly zp_divexact(const ZPoly& A, const ZPoly& B) {
    if (B.empty()) throw argument_error("zp_divexact: division by zero polynomial");
    if (A.empty()) return {};
    const int da = zp_degree(A), db = zp_degree(B);
    if (da < db) throw argument_error("zp_divexact: degree underflow");
    std::vector<Rational> a;
    a.reserve(A.size());
    for (const auto& c : A) a.emplace_back(c);
    std::vector<Rational> q(static_cast<size_t>(da - db) + 1);
    for (int k = da - db; k >= 0; --k) {
        Rational coef = a[static_cast<size_t>(k + db)] / Rational(B.back());
        coef.canonicalize();
        q[static_cast<size_t>(k)] = coef;
        for (int i = 0; i <= db; ++i)
            a[static_cast<size_t>(k + i)] -= coef * Rational(B[static_cast<size_t>(i)]);
    }
    for (const auto& rest : a)
        if (rest != 0) throw argument_error("zp_divexact: inexact division");
    ZPoly out;
    out.reserve(q.size());
    for (const auto& coef : q) {
        if (!is_integer(coef)) throw argument_error("zp_divexact: non-integral quotient");
        out.push_back(Int(coef.get_num()));
    }
    zp_trim(out);
    return out;
}

ZPoly zp_sub(const ZPoly& x, const ZPoly& y) {
    ZPoly r(std::max(x.size(), y.size()), Int(0));
    for (size_t i = 0; i < x.size(); ++i) r[i] += x[i];
    for (size_t i = 0; i < y.size(); ++i) r[i] -= y[i];
    zp_trim(r);
    return r;
}

// Yun decomposition: f ~ prod factor^multiplicity, factors square-free
std::vector<std::pair<ZPoly, int>> zp_squarefree_decomposition(ZPoly f) {
    zp_make_primitive(f);
    std::vector<std::pair<ZPoly, int>> out;
    if (zp_degree(f) < 1) return out;
    ZPoly fp = zp_derivative(f);
    ZPoly d = zp_gcd(f, fp);
    if (zp_degree(d) == 0) {
        out.emplace_back(f, 1);
        return out;
    }
    ZPoly b = zp_divexact(f, d);
    ZPoly z = zp_sub(zp_divexact(fp, d), zp_derivative(b));
    int i = 1;
    while (zp_degree(b) >= 1) {
        ZPoly ai = zp_gcd(b, z);
        if (zp_degree(ai) >= 1) out.emplace_back(ai, i);
        b = zp_divexact(b, ai);
        z = zp_sub(zp_divexact(z, ai), zp_derivative(b));
        ++i;
    }
    return out;
}

ZPoly zp_squarefree_part(const ZPoly& f) {
    ZPoly g = zp_gcd(f, zp_derivative(f));
    if (zp_degree(g) == 0) {
        ZPoly r = f;
        zp_make_primitive(r);
        return r;
    }
    return zp_divexact(f, g);
}

ZPoly zp_mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

// ===== Sturm chains =====

struct SturmChain {
    std::vector<ZPoly> seq;

    explicit SturmChain(const ZPoly& squarefree) {
        seq.push_back(squarefree);
        if (zp_degree(squarefree) >= 1) {
            seq.push_back(zp_derivative(squarefree));
            while (!seq.back().empty() && zp_degree(seq.back()) >= 1) {
                ZPoly r = zp_rem_signed(seq[seq.size() - 2], seq.back());
                // content removal controls coefficient growth; positive
                // factors leave sign variations untouched
                zp_make_primitive(r);
                if (r.empty()) break;
                seq.push_back(zp_neg(r));
            }
        }
    }

    template <class SignOf>
    int variations(SignOf&& sign_of) const {
        int var = 0, prev = 0;
        for (const auto& p : seq) {
            int s = sign_of(p);
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++var;
            prev = s;
        }
        return var;
    }

    int variations_at(const Rational& x) const {
        return variations([&](const ZPoly& p) { return zp_sign_at(p, x); });
    }

    // distinct roots in (a, b], a < b
    int count_in(const Rational& a, const Rational& b) const {
        return variations_at(a) - variations_at(b);
    }

    int count_all() const {
        return variations([](const ZPoly& p) { return zp_sign_at_neg_inf(p); }) -
               variations([](const ZPoly& p) { return zp_sign_at_pos_inf(p); });
    }
};

// power of two strictly above the Cauchy bound 1 + max|c_i|/|c_d|
Rational zp_root_bound(const ZPoly& p) {
    Int m(0);
    for (size_t i = 0; i + 1 < p.size(); ++i) {
        Int a = abs(p[i]);
        if (a > m) m = a;
    }
    Int lead = abs(p.back());
    Int b(2);
    while (b * lead < m + lead) b *= 2;
    return Rational(b);
}

struct Bracket {
    Rational lo, hi;
    bool exact;
};

// isolating brackets for all real roots of a square-free polynomial; the
// non-exact ones are open intervals whose endpoints are not roots
std::vector<Bracket> isolate_squarefree(const ZPoly& s) {
    std::vector<Bracket> out;
    const int d = zp_degree(s);
    if (d <= 0) return out;
    if (d == 1) {
        Rational r(-s[0], s[1]);
        r.canonicalize();
        out.push_back({r, r, true});
        return out;
    }
    SturmChain chain(s);
    Rational B = zp_root_bound(s);
    struct Item {
        Rational lo, hi;
        int count;
    };
    std::vector<Item> stack;
    int total = chain.count_in(-B, B);
    if (total > 0) stack.push_back({-B, B, total});
    while (!stack.empty()) {
        Item it = stack.back();
        stack.pop_back();
        if (it.count == 1) {
            if (zp_is_root(s, it.hi))
                out.push_back({it.hi, it.hi, true});
            else
                out.push_back({it.lo, it.hi, false});
            continue;
        }
        Rational mid = (it.lo + it.hi) / 2;
        if (zp_is_root(s, mid)) {
            out.push_back({mid, mid, true});
            Rational eps = (it.hi - it.lo) / 4;
            while (chain.count_in(mid - eps, mid + eps) > 1) eps /= 2;
            int left = chain.count_in(it.lo, mid - eps);
            int right = chain.count_in(mid + eps, it.hi);
            if (left > 0) stack.push_back({it.lo, mid - eps, left});
            if (right > 0) stack.push_back({mid + eps, it.hi, right});
        } else {
            int left = chain.count_in(it.lo, mid);
            int right = it.count - left;
            if (left > 0) stack.push_back({it.lo, mid, left});
            if (right > 0) stack.push_back({mid, it.hi, right});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const Bracket& a, const Bracket& b) { return a.lo < b.lo; });
    return out;
}

void bisect_step(const ZPoly& s, Bracket& b) {
    if (b.exact) return;
    Rational mid = (b.lo + b.hi) / 2;
    int sm = zp_sign_at(s, mid);
    if (sm == 0) {
        b.lo = b.hi = mid;
        b.exact = true;
        return;
    }
    if (sm == zp_sign_at(s, b.lo))
        b.lo = mid;
    else
        b.hi = mid;
}

void refine_to_width(const ZPoly& s, Bracket& b, const Rational& width) {
    while (!b.exact && b.hi - b.lo > width) bisect_step(s, b);
}

// snap a rational point: mark exact if it is the bracketed root, else shrink
// the bracket past it
void snap_point(const ZPoly& s, Bracket& b, const Rational& r) {
    if (b.exact || r <= b.lo || r >= b.hi) return;
    if (zp_is_root(s, r)) {
        b.lo = b.hi = r;
        b.exact = true;
    } else if (zp_sign_at(s, r) == zp_sign_at(s, b.lo)) {
        b.lo = r;
    } else {
        b.hi = r;
    }
}

Int floor_of(const Rational& x) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

// minimal-denominator rational strictly inside the open interval (lo, hi);
// Stern-Brocot descent on the continued-fraction expansions
Rational simplest_rational_between(const Rational& lo, const Rational& hi) {
    if (lo < 0 && hi > 0) return Rational(0);
    if (hi <= 0) return -simplest_rational_between(-hi, -lo);
    Int fl = floor_of(lo);
    Rational next(fl + 1);
    if (lo < next && next < hi) return next;
    // the whole interval sits between consecutive integers
    Rational a = lo - Rational(fl), b = hi - Rational(fl);
    if (a == 0) {
        // (0, b): pick 1/ceil(1/b + 1)
        Rational inv = Rational(1) / b;
        Rational g(floor_of(inv) + 1);
        if (g == inv) g += 1;
        return Rational(fl) + Rational(1) / g;
    }
    Rational inner = simplest_rational_between(Rational(1) / b, Rational(1) / a);
    return Rational(fl) + Rational(1) / inner;
}

// search the bracket for a rational root; once the width passes the budget
// the root is certified irrational-or-deep and the interval stays
void try_rational_snap(const ZPoly& s, Bracket& b, int rounds = 48) {
    const Rational budget(1, Int(1) << 64);
    for (int i = 0; i < rounds && !b.exact; ++i) {
        if (b.hi - b.lo < budget) return;
        Rational r = simplest_rational_between(b.lo, b.hi);
        snap_point(s, b, r);
        if (!b.exact) bisect_step(s, b);
    }
}

}  // namespace

// ===== public interface =====

bool claim_implies(RootLocation have, RootLocation want) {
    if (have == want) return true;
    switch (want) {
        case RootLocation::AllReal: return have != RootLocation::NotAllReal;
        case RootLocation::AllNonNeg:
            return have == RootLocation::AllPos || have == RootLocation::InUnitInterval;
        case RootLocation::AllPos: return have == RootLocation::InUnitInterval;
        case RootLocation::AllNonPos: return have == RootLocation::AllNeg;
        default: return false;
    }
}

std::string to_string(RootLocation loc) {
    switch (loc) {
        case RootLocation::AllReal: return "AllReal";
        case RootLocation::AllPos: return "AllPos";
        case RootLocation::AllNonNeg: return "AllNonNeg";
        case RootLocation::AllNeg: return "AllNeg";
        case RootLocation::AllNonPos: return "AllNonPos";
        case RootLocation::InUnitInterval: return "InUnitInterval";
        case RootLocation::NotAllReal: return "NotAllReal";
    }
    return "?";
}

RootLocation parse_root_location(const std::string& s) {
    for (RootLocation loc :
         {RootLocation::AllReal, RootLocation::AllPos, RootLocation::AllNonNeg,
          RootLocation::AllNeg, RootLocation::AllNonPos, RootLocation::InUnitInterval,
          RootLocation::NotAllReal})
        if (to_string(loc) == s) return loc;
    throw argument_error("unknown root location claim: " + s);
}

RootCertificate certify(const Poly& p) {
    if (p.is_zero()) throw argument_error("certify: zero polynomial");
    RootCertificate cert;
    cert.degree = p.actual_degree();
    if (cert.degree == 0) return cert;

    ZPoly f = zp_from_poly(p);
    for (auto& [factor, mult] : zp_squarefree_decomposition(f)) {
        SquareFreeFactor sf;
        sf.coeffs = factor;
        sf.multiplicity = mult;
        cert.factors.push_back(std::move(sf));
    }

    std::vector<CertifiedRoot> roots;
    for (size_t fi = 0; fi < cert.factors.size(); ++fi) {
        const ZPoly& s = cert.factors[fi].coeffs;
        for (auto& b : isolate_squarefree(s)) {
            for (const Rational& cand : {Rational(-1), Rational(0), Rational(1)})
                snap_point(s, b, cand);
            try_rational_snap(s, b);
            CertifiedRoot r;
            r.lo = b.lo;
            r.hi = b.hi;
            r.exact = b.exact;
            r.multiplicity = cert.factors[fi].multiplicity;
            r.factor = static_cast<int>(fi);
            roots.push_back(std::move(r));
        }
    }

    // brackets from different factors may overlap; the roots are distinct,
    // so alternating snap/bisect separates them
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < roots.size(); ++i)
            for (size_t j = i + 1; j < roots.size(); ++j) {
                Bracket a{roots[i].lo, roots[i].hi, roots[i].exact};
                Bracket b{roots[j].lo, roots[j].hi, roots[j].exact};
                bool overlap;
                if (a.exact && b.exact)
                    overlap = false;
                else if (a.exact)
                    overlap = (b.lo < a.lo && a.lo < b.hi);
                else if (b.exact)
                    overlap = (a.lo < b.lo && b.lo < a.hi);
                else
                    overlap = !(a.hi <= b.lo || b.hi <= a.lo);
                if (!overlap) continue;
                const ZPoly& sa = cert.factors[static_cast<size_t>(roots[i].factor)].coeffs;
                const ZPoly& sb = cert.factors[static_cast<size_t>(roots[j].factor)].coeffs;
                if (a.exact) {
                    snap_point(sb, b, a.lo);
                } else if (b.exact) {
                    snap_point(sa, a, b.lo);
                } else {
                    bisect_step(sa, a);
                    bisect_step(sb, b);
                }
                roots[i].lo = a.lo; roots[i].hi = a.hi; roots[i].exact = a.exact;
                roots[j].lo = b.lo; roots[j].hi = b.hi; roots[j].exact = b.exact;
                changed = true;
            }
    }

    std::sort(roots.begin(), roots.end(), [](const CertifiedRoot& a, const CertifiedRoot& b) {
        return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
    });
    cert.real_roots = std::move(roots);
    cert.nonreal_count = cert.degree - cert.real_count_with_multiplicity();
    return cert;
}

void refine_certificate(RootCertificate& cert, const Rational& width) {
    for (auto& r : cert.real_roots) {
        if (r.exact) continue;
        const ZPoly& s = cert.factors[static_cast<size_t>(r.factor)].coeffs;
        Bracket b{r.lo, r.hi, r.exact};
        refine_to_width(s, b, width);
        r.lo = b.lo;
        r.hi = b.hi;
        r.exact = b.exact;
    }
}

namespace {

struct RootSigns {
    int nonreal = 0;
    bool any_zero = false, any_neg = false, any_pos = false;
    bool inside_unit = true;  // every root strictly inside (0, 1)
};

RootSigns root_signs(const Poly& p) {
    RootCertificate cert = certify(p);
    RootSigns out;
    out.nonreal = cert.nonreal_count;
    if (cert.nonreal_count > 0) return out;

    for (auto& r : cert.real_roots) {
        const ZPoly& s = cert.factors[static_cast<size_t>(r.factor)].coeffs;
        Bracket b{r.lo, r.hi, r.exact};
        for (const Rational& cand : {Rational(0), Rational(1)}) snap_point(s, b, cand);
        // refine until the open bracket sits on one side of 0 and of 1;
        // terminates because neither is a root after snapping
        while (!b.exact && ((b.lo < 0 && b.hi > 0) || (b.lo < 1 && b.hi > 1)))
            bisect_step(s, b);
        if (b.exact) {
            if (b.lo == 0) out.any_zero = true;
            else if (b.lo < 0) out.any_neg = true;
            else out.any_pos = true;
            if (!(b.lo > 0 && b.lo < 1)) out.inside_unit = false;
        } else {
            if (b.hi <= 0) {
                out.any_neg = true;
                out.inside_unit = false;
            } else {
                out.any_pos = true;
                if (!(b.lo >= 0 && b.hi <= 1)) out.inside_unit = false;
            }
        }
    }
    return out;
}

}  // namespace

RootLocation classify(const Poly& p) {
    RootSigns s = root_signs(p);
    if (s.nonreal > 0) return RootLocation::NotAllReal;
    if (!s.any_zero && !s.any_neg && !s.any_pos) return RootLocation::InUnitInterval;
    if (s.inside_unit && !s.any_zero && !s.any_neg) return RootLocation::InUnitInterval;
    if (!s.any_zero && !s.any_neg) return RootLocation::AllPos;
    if (!s.any_zero && !s.any_pos) return RootLocation::AllNeg;
    if (!s.any_neg) return RootLocation::AllNonNeg;
    if (!s.any_pos) return RootLocation::AllNonPos;
    return RootLocation::AllReal;
}

bool certifies_claim(const Poly& p, RootLocation want) {
    RootSigns s = root_signs(p);
    switch (want) {
        case RootLocation::NotAllReal: return s.nonreal > 0;
        case RootLocation::AllReal: return s.nonreal == 0;
        case RootLocation::AllPos: return s.nonreal == 0 && !s.any_neg && !s.any_zero;
        case RootLocation::AllNonNeg: return s.nonreal == 0 && !s.any_neg;
        case RootLocation::AllNeg: return s.nonreal == 0 && !s.any_pos && !s.any_zero;
        case RootLocation::AllNonPos: return s.nonreal == 0 && !s.any_pos;
        case RootLocation::InUnitInterval:
            return s.nonreal == 0 && s.inside_unit && !s.any_zero && !s.any_neg;
    }
    return false;
}

namespace {

struct MergedRoot {
    Bracket where;
    int mult_p = 0, mult_q = 0;
};

int mult_in(const std::vector<SquareFreeFactor>& factors,
            const std::vector<SturmChain>& chains, const Bracket& b) {
    int m = 0;
    for (size_t i = 0; i < factors.size(); ++i) {
        if (b.exact) {
            if (zp_is_root(factors[i].coeffs, b.lo)) m += factors[i].multiplicity;
        } else if (chains[i].count_in(b.lo, b.hi) > 0) {
            m += factors[i].multiplicity;
        }
    }
    return m;
}

// distinct roots of p and q on one sorted skeleton, with multiplicities
std::vector<MergedRoot> merged_roots(const Poly& p, const Poly& q,
                                     const RootCertificate& cp, const RootCertificate& cq) {
    std::vector<MergedRoot> out;
    if (cp.degree == 0 && cq.degree == 0) return out;
    ZPoly sp = (cp.degree > 0) ? zp_squarefree_part(zp_from_poly(p)) : ZPoly{};
    ZPoly sq = (cq.degree > 0) ? zp_squarefree_part(zp_from_poly(q)) : ZPoly{};
    ZPoly skeleton;
    if (zp_degree(sp) < 1)
        skeleton = sq;
    else if (zp_degree(sq) < 1)
        skeleton = sp;
    else {
        ZPoly common = zp_gcd(sp, sq);
        skeleton =
            (zp_degree(common) >= 1) ? zp_mul(sp, zp_divexact(sq, common)) : zp_mul(sp, sq);
        zp_make_primitive(skeleton);
    }
    auto brackets = isolate_squarefree(skeleton);
    for (auto& b : brackets)
        for (const Rational& cand : {Rational(-1), Rational(0), Rational(1)})
            snap_point(skeleton, b, cand);

    std::vector<SturmChain> chains_p, chains_q;
    for (const auto& f : cp.factors) chains_p.emplace_back(f.coeffs);
    for (const auto& f : cq.factors) chains_q.emplace_back(f.coeffs);

    for (const auto& b : brackets) {
        MergedRoot r;
        r.where = b;
        r.mult_p = mult_in(cp.factors, chains_p, b);
        r.mult_q = mult_in(cq.factors, chains_q, b);
        out.push_back(r);
    }
    return out;
}

std::vector<int> expand_ids(const std::vector<MergedRoot>& roots, bool for_p) {
    std::vector<int> v;
    for (size_t i = 0; i < roots.size(); ++i) {
        int mult = for_p ? roots[i].mult_p : roots[i].mult_q;
        for (int t = 0; t < mult; ++t) v.push_back(static_cast<int>(i));
    }
    return v;
}

// lambda_1(a) <= lambda_1(b) <= lambda_2(a) <= ... in the two allowed shapes
bool chain_holds(const std::vector<int>& a, const std::vector<int>& b, bool strict) {
    const size_t n = a.size(), m = b.size();
    if (!(m == n || m + 1 == n)) return false;
    auto le = [&](int x, int y) { return strict ? x < y : x <= y; };
    for (size_t i = 0; i < m; ++i) {
        if (!le(a[i], b[i])) return false;
        if (i + 1 < n && !le(b[i], a[i + 1])) return false;
    }
    return true;
}

}  // namespace

InterlacingResult interlaces(const Poly& p, const Poly& q) {
    RootCertificate cp = certify(p);
    RootCertificate cq = certify(q);
    if (cp.nonreal_count > 0 || cq.nonreal_count > 0)
        throw precondition_error("interlaces: inputs must be real-rooted");
    if (std::abs(cp.degree - cq.degree) >= 2)
        throw argument_error("interlaces: degrees differ by 2 or more");

    auto merged = merged_roots(p, q, cp, cq);
    std::vector<int> lp = expand_ids(merged, true), lq = expand_ids(merged, false);

    InterlacingResult res;
    res.p_preccurly_q = chain_holds(lp, lq, false);
    res.q_preccurly_p = chain_holds(lq, lp, false);
    res.p_prec_q = chain_holds(lp, lq, true);
    res.q_prec_p = chain_holds(lq, lp, true);
    return res;
}

namespace {

RootCertificate gap_setup(const Poly& p, const char* who, bool positive_needed) {
    RootCertificate cert = certify(p);
    if (cert.nonreal_count > 0)
        throw precondition_error(std::string(who) + ": polynomial is not real-rooted");
    if (cert.degree < 2)
        throw precondition_error(std::string(who) + ": degree must be at least 2");
    if (positive_needed) {
        for (auto& r : cert.real_roots) {
            const ZPoly& s = cert.factors[static_cast<size_t>(r.factor)].coeffs;
            Bracket b{r.lo, r.hi, r.exact};
            snap_point(s, b, Rational(0));
            while (!b.exact && b.lo < 0 && b.hi > 0) bisect_step(s, b);
            r.lo = b.lo;
            r.hi = b.hi;
            r.exact = b.exact;
            if (r.exact ? r.lo <= 0 : r.hi <= 0)
                throw precondition_error(std::string(who) +
                                         ": polynomial is not in P(R_{>0})");
        }
    }
    return cert;
}

}  // namespace

RatEnclosure mesh(const Poly& p, const Rational& width) {
    RootCertificate cert = gap_setup(p, "mesh", false);
    for (const auto& r : cert.real_roots)
        if (r.multiplicity >= 2) return {true, Rational(0), Rational(0)};

    refine_certificate(cert, width / 4);
    const auto& roots = cert.real_roots;
    bool all_exact = true;
    for (const auto& r : roots) all_exact = all_exact && r.exact;

    RatEnclosure enc;
    bool first = true;
    for (size_t i = 0; i + 1 < roots.size(); ++i) {
        Rational glo = roots[i + 1].lo - roots[i].hi;
        Rational ghi = roots[i + 1].hi - roots[i].lo;
        if (first || glo < enc.lo) enc.lo = glo;
        if (first || ghi < enc.hi) enc.hi = ghi;
        first = false;
    }
    enc.exact = all_exact;
    if (all_exact) enc.hi = enc.lo;
    return enc;
}

RatEnclosure lmesh(const Poly& p, const Rational& width) {
    RootCertificate cert = gap_setup(p, "lmesh", true);
    for (const auto& r : cert.real_roots)
        if (r.multiplicity >= 2) return {true, Rational(1), Rational(1)};

    refine_certificate(cert, width / 8);
    const auto& roots = cert.real_roots;
    bool all_exact = true;
    for (const auto& r : roots) all_exact = all_exact && r.exact;

    RatEnclosure enc;
    bool first = true;
    for (size_t i = 0; i + 1 < roots.size(); ++i) {
        Rational rlo = roots[i + 1].lo / roots[i].hi;
        Rational rhi = roots[i + 1].hi / roots[i].lo;
        rlo.canonicalize();
        rhi.canonicalize();
        if (first || rlo < enc.lo) enc.lo = rlo;
        if (first || rhi < enc.hi) enc.hi = rhi;
        first = false;
    }
    enc.exact = all_exact;
    if (all_exact) enc.hi = enc.lo;
    return enc;
}

namespace {

bool has_root_inside(const ZPoly& poly, const Rational& lo, const Rational& hi) {
    if (zp_degree(poly) < 1) return false;
    ZPoly s = zp_squarefree_part(poly);
    SturmChain ch(s);
    int c = ch.count_in(lo, hi);
    if (c > 0 && zp_is_root(s, hi)) c -= 1;
    return c > 0;
}

// sign of (root_{i+1} - root_i) - r, decided exactly; ties resolved through
// gcd(f_a(x), f_b(x+r))
int compare_gap(const RootCertificate& cert, size_t i, const Rational& r) {
    const CertifiedRoot& A = cert.real_roots[i];
    const CertifiedRoot& B = cert.real_roots[i + 1];
    const ZPoly& fa = cert.factors[static_cast<size_t>(A.factor)].coeffs;
    const ZPoly& fb = cert.factors[static_cast<size_t>(B.factor)].coeffs;
    Bracket a{A.lo, A.hi, A.exact}, b{B.lo, B.hi, B.exact};
    for (int round = 0;; ++round) {
        Rational glo = b.lo - a.hi, ghi = b.hi - a.lo;
        if (glo > r) return 1;
        if (ghi < r) return -1;
        if (a.exact && b.exact) {
            Rational gap = b.lo - a.lo;
            return (gap == r) ? 0 : ((gap < r) ? -1 : 1);
        }
        if (round > 0 && round % 8 == 0) {
            ZPoly shifted = zp_from_poly(taylor_shift(zp_to_poly(fb), r));
            ZPoly gg = zp_gcd(fa, shifted);
            bool pair_tied = false;
            if (zp_degree(gg) >= 1)
                pair_tied = a.exact ? zp_is_root(gg, a.lo)
                                    : has_root_inside(gg, a.lo, a.hi);
            if (pair_tied) {
                // the partner at distance r must be pinned to root i+1: no
                // other certified root may meet the shifted window
                bool ambiguous = false;
                for (size_t j = 0; j < cert.real_roots.size(); ++j) {
                    if (j == i + 1) continue;
                    const CertifiedRoot& o = cert.real_roots[j];
                    if (!(o.hi < a.lo + r || o.lo > a.hi + r)) ambiguous = true;
                }
                if (!ambiguous) return 0;
            }
        }
        bisect_step(fa, a);
        bisect_step(fb, b);
    }
}

// sign of (root_{i+1} / root_i) - r for positive roots; ties through
// gcd(f_a(x), f_b(r x))
int compare_ratio(const RootCertificate& cert, size_t i, const Rational& r) {
    const CertifiedRoot& A = cert.real_roots[i];
    const CertifiedRoot& B = cert.real_roots[i + 1];
    const ZPoly& fa = cert.factors[static_cast<size_t>(A.factor)].coeffs;
    const ZPoly& fb = cert.factors[static_cast<size_t>(B.factor)].coeffs;
    Bracket a{A.lo, A.hi, A.exact}, b{B.lo, B.hi, B.exact};
    for (int round = 0;; ++round) {
        Rational rlo = b.lo / a.hi, rhi = b.hi / a.lo;
        rlo.canonicalize();
        rhi.canonicalize();
        if (rlo > r) return 1;
        if (rhi < r) return -1;
        if (a.exact && b.exact) {
            Rational ratio = b.lo / a.lo;
            ratio.canonicalize();
            return (ratio == r) ? 0 : ((ratio < r) ? -1 : 1);
        }
        if (round > 0 && round % 8 == 0) {
            ZPoly dil = zp_from_poly(dilate(zp_to_poly(fb), Rational(1) / r));
            ZPoly gg = zp_gcd(fa, dil);
            bool pair_tied = false;
            if (zp_degree(gg) >= 1)
                pair_tied = a.exact ? zp_is_root(gg, a.lo)
                                    : has_root_inside(gg, a.lo, a.hi);
            if (pair_tied) {
                bool ambiguous = false;
                for (size_t j = 0; j < cert.real_roots.size(); ++j) {
                    if (j == i + 1) continue;
                    const CertifiedRoot& o = cert.real_roots[j];
                    if (!(o.hi < a.lo * r || o.lo > a.hi * r)) ambiguous = true;
                }
                if (!ambiguous) return 0;
            }
        }
        bisect_step(fa, a);
        bisect_step(fb, b);
    }
}

}  // namespace

int compare_mesh(const Poly& p, const Rational& r) {
    RootCertificate cert = gap_setup(p, "mesh", false);
    for (const auto& rt : cert.real_roots)
        if (rt.multiplicity >= 2) return -sgn(r);
    refine_certificate(cert, Rational(1, 1024));
    int best = 1;
    for (size_t i = 0; i + 1 < cert.real_roots.size(); ++i) {
        int c = compare_gap(cert, i, r);
        if (c < best) best = c;
        if (best < 0) break;
    }
    return best;
}

int compare_lmesh(const Poly& p, const Rational& r) {
    RootCertificate cert = gap_setup(p, "lmesh", true);
    for (const auto& rt : cert.real_roots)
        if (rt.multiplicity >= 2) return (r == 1) ? 0 : ((r > 1) ? -1 : 1);
    refine_certificate(cert, Rational(1, 1024));
    int best = 1;
    for (size_t i = 0; i + 1 < cert.real_roots.size(); ++i) {
        int c = compare_ratio(cert, i, r);
        if (c < best) best = c;
        if (best < 0) break;
    }
    return best;
}

}  // namespace finfree
