#ifndef FINFREE_RATIONAL_HPP
#define FINFREE_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace finfree {

// All exact scalars in the library are GMP rationals kept canonical
// (lowest terms, positive denominator); mpq_class maintains that
// invariant through arithmetic once the value is canonicalized.
using Rational = mpq_class;
using Int = mpz_class;

struct argument_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct no_inverse_error : std::domain_error {
    using std::domain_error::domain_error;
};
struct degenerate_parameter_error : std::domain_error {
    using std::domain_error::domain_error;
};
struct undefined_coefficient_error : std::domain_error {
    using std::domain_error::domain_error;
};
struct precondition_error : std::domain_error {
    using std::domain_error::domain_error;
};
struct unsupported_parameters_error : std::domain_error {
    using std::domain_error::domain_error;
};
struct numeric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw argument_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "num" or "num/den" with arbitrary-precision parts.
inline Rational parse_rational(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0)
        throw argument_error("cannot parse rational: '" + s + "'");
    if (q.get_den() == 0)
        throw argument_error("zero denominator in rational: '" + s + "'");
    q.canonicalize();
    return q;
}

// Lowest-term string, "num" or "num/den".
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Int binomial(unsigned long n, unsigned long k) {
    if (k > n) return Int(0);
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// Membership in -Z_n = {0, -1, ..., -n+1}.
inline bool in_neg_lattice(const Rational& q, int n) {
    if (!is_integer(q)) return false;
    return q <= 0 && q > -n;
}

inline Rational pow_rational(const Rational& base, unsigned long k) {
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), k);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), k);
    return r;  // already canonical: gcd(num,den)=1 is preserved by powering
}

inline int sign(const Rational& q) { return sgn(q); }

}  // namespace finfree

#endif
