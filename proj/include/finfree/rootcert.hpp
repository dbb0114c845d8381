#ifndef FINFREE_ROOTCERT_HPP
#define FINFREE_ROOTCERT_HPP

#include <string>
#include <vector>

#include "finfree/poly.hpp"

namespace finfree {

enum class RootLocation {
    AllReal,
    AllPos,
    AllNonNeg,
    AllNeg,
    AllNonPos,
    InUnitInterval,
    NotAllReal
};

// partial order of claims: InUnitInterval => AllPos => AllNonNeg => AllReal, etc.
bool claim_implies(RootLocation have, RootLocation want);
std::string to_string(RootLocation loc);
RootLocation parse_root_location(const std::string& s);

// One certified real root: an exact rational point (lo == hi) or an open
// isolating interval with rational endpoints containing exactly one distinct
// root of the square-free factor it belongs to.
struct CertifiedRoot {
    Rational lo, hi;
    bool exact = false;
    int multiplicity = 1;
    int factor = -1;  // index into RootCertificate::factors

    Rational midpoint() const { return exact ? lo : (lo + hi) / 2; }
    Rational width() const { return exact ? Rational(0) : hi - lo; }
};

// Square-free factor over Z (power-basis coefficients, ascending) together
// with the multiplicity its roots carry in the certified polynomial.
struct SquareFreeFactor {
    std::vector<Int> coeffs;
    int multiplicity = 1;
};

struct RootCertificate {
    enum class Method { SturmChain };

    std::vector<CertifiedRoot> real_roots;  // ascending, pairwise disjoint
    int nonreal_count = 0;
    int degree = 0;  // actual degree of the certified polynomial
    Method method = Method::SturmChain;
    std::vector<SquareFreeFactor> factors;

    int real_count_with_multiplicity() const {
        int s = 0;
        for (const auto& r : real_roots) s += r.multiplicity;
        return s;
    }
};

// Exact real-root count with multiplicities via square-free decomposition
// and Sturm-chain isolation.  Throws on the zero polynomial.
RootCertificate certify(const Poly& p);

// Bisect isolating intervals (sign-based on the square-free factors) until
// every non-exact interval is narrower than `width`.
void refine_certificate(RootCertificate& cert, const Rational& width);

// Strongest location claim certified for p's root multiset.  When the root
// multiset is {0} both sign classes hold; classify reports AllNonNeg.
RootLocation classify(const Poly& p);

// Does the certified root multiset satisfy the given claim?  Unlike a
// classify/claim_implies round trip this handles claims that overlap.
bool certifies_claim(const Poly& p, RootLocation want);

// Both weak interlacing relations, both directions; strict variants too.
// p_preccurly_q means the roots of q interlace the roots of p.
struct InterlacingResult {
    bool p_prec_q = false;
    bool q_prec_p = false;
    bool p_preccurly_q = false;
    bool q_preccurly_p = false;
    bool neither() const { return !(p_prec_q || q_prec_p || p_preccurly_q || q_preccurly_p); }
};

InterlacingResult interlaces(const Poly& p, const Poly& q);

// Exact rational value when decided exactly, otherwise a certified enclosure.
struct RatEnclosure {
    bool exact = false;
    Rational lo, hi;  // lo == hi when exact
    Rational value() const { return lo; }
};

// Minimal distance between roots; requires real-rooted p of degree >= 2.
RatEnclosure mesh(const Poly& p, const Rational& width = Rational(1, Int(1) << 32));

// Minimal ratio (>= 1) of consecutive roots; requires all roots positive.
RatEnclosure lmesh(const Poly& p, const Rational& width = Rational(1, Int(1) << 32));

// Exact sign of mesh(p) - r (resp. lmesh(p) - r); decides ties by gcd tests.
int compare_mesh(const Poly& p, const Rational& r);
int compare_lmesh(const Poly& p, const Rational& r);

}  // namespace finfree

#endif
