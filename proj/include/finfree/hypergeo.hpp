#ifndef FINFREE_HYPERGEO_HPP
#define FINFREE_HYPERGEO_HPP

#include <string>
#include <vector>

#include "finfree/convolution.hpp"
#include "finfree/poly.hpp"

namespace finfree {

// rising factorial a(a+1)...(a+k-1); falling factorial a(a-1)...(a-k+1)
Rational rising(const Rational& a, int k);
Rational falling(const Rational& a, int k);
Rational rising(const std::vector<Rational>& tuple, int k);   // product over entries
Rational falling(const std::vector<Rational>& tuple, int k);

enum class Normalization { StandardF, MonicHGP };

// Terminating hypergeometric polynomial of degree <= n with numerator
// tuple a, denominator tuple b.
struct HypergeomSpec {
    int n = 0;
    std::vector<Rational> a;
    std::vector<Rational> b;
    Normalization normalization = Normalization::StandardF;
};

// True when no a_s lies in -Z_n, i.e. the standard-normalization polynomial
// has degree exactly n.
bool full_degree(const HypergeomSpec& spec);

// Standard normalization: e_k = (-1)^n binom(n,k) (a)_{n-k} (b+n-k)_k.
// Total in the parameters; degenerate a_s in -Z_n lower the degree.
Poly pFq_std(const HypergeomSpec& spec);

// Same polynomial built by applying the associated hypergeometric series of
// d/dx to x^n; requires full_degree. Independent of pFq_std's closed form.
Poly pFq_std_via_diffop(const HypergeomSpec& spec);

// Monic normalization: e_k = binom(n,k) <b n>_k / <a n>_k.
// Errors when some <a_s n>_k vanishes (a_s n in Z_n).
Poly hgp_monic(const HypergeomSpec& spec);

// The monic family is a constant multiple of a standard-normalization
// polynomial with parameters an-n+1 / bn-n+1; exposed for reuse.
HypergeomSpec hgp_to_std_spec(int n, const std::vector<Rational>& a,
                              const std::vector<Rational>& b);

// Classical families in their traditional normalizations.
Poly laguerre(int n, const Rational& alpha);
Poly bessel(int n, const Rational& a);
Poly jacobi(int n, const Rational& alpha, const Rational& beta);

// Outcome of an exact identity check.  Structural match is projective
// (cross-products of coefficients), the constant is checked separately so a
// wrong prefactor is distinguishable from a wrong shape.
struct IdentityReport {
    bool structural_match = false;
    bool constant_match = false;
    int first_mismatch_k = -1;
    std::string note;
    bool pass() const { return structural_match && constant_match; }
};

// p1 BT_n p2 against the concatenated-parameter polynomial.
IdentityReport verify_mul_theorem(const HypergeomSpec& s1, const HypergeomSpec& s2);

enum class AdditiveExampleId { E37, E38, E39, E311, E312 };

// Displayed additive-convolution identities, constants included.
//   E37  params {b1, b2}
//   E38  params {a, b1, b2}
//   E39  params {a, b}
//   E311 params {a, b}
//   E312 params {c, d}
IdentityReport verify_additive_example(AdditiveExampleId id,
                                       const std::vector<Rational>& params, int n);

enum class ReductionId {
    TopShift,       // 2F1(-n, b+k+1; -n+k+1) with the (-x)^{n-k} factor
    BottomShift,    // 2F1(-n, b+k; b) with the (1-x)^{n-k} factor
    DoubleFactor,   // 2F1(-n, j-k+1; 1-k) with (-x)^k (1-x)^{n-j}
    LinearFactor,   // 2F1(-n, b+1; b) as (x-1)^{n-1} times a linear factor
    ReciprocalLemma // x^n p(1/x) against the swapped-parameter polynomial
};

// Reduction / reciprocation identities.  Parameter vectors:
//   TopShift, BottomShift: {b, k};  DoubleFactor: {k, j};  LinearFactor: {b}.
IdentityReport verify_reduction(ReductionId id, const std::vector<Rational>& params, int n);

// ReciprocalLemma for an arbitrary spec.
IdentityReport verify_reciprocal_lemma(const HypergeomSpec& spec);

std::string to_string(AdditiveExampleId id);
std::string to_string(ReductionId id);

}  // namespace finfree

#endif
