#ifndef FINFREE_POLY_HPP
#define FINFREE_POLY_HPP

#include <vector>

#include "finfree/rational.hpp"

namespace finfree {

// Polynomial of degree at most n in the signed symmetric-coefficient
// representation
//
//     p(x) = sum_{j=0}^{n} x^{n-j} (-1)^j e_j .
//
// The bound n ("ambient degree") is part of the value and is in general
// distinct from the actual degree: e_0 = 0 is legal input.  For a monic p
// of full degree, e_j/e_0 is the j-th elementary symmetric function of the
// roots.  Values are immutable after construction.
class Poly {
  public:
    // zero polynomial with the given ambient degree
    explicit Poly(int n) : n_(check_n(n)), e_(static_cast<size_t>(n) + 1, Rational(0)) {}

    Poly(int n, std::vector<Rational> e) : n_(check_n(n)), e_(std::move(e)) {
        if (e_.size() != static_cast<size_t>(n_) + 1)
            throw argument_error("Poly: coefficient count must be n+1");
        for (auto& c : e_) c.canonicalize();
    }

    int ambient_degree() const { return n_; }

    // n - (index of first nonzero e_j); -1 for the zero polynomial
    int actual_degree() const {
        for (int j = 0; j <= n_; ++j)
            if (e_[j] != 0) return n_ - j;
        return -1;
    }

    bool is_zero() const { return actual_degree() < 0; }
    bool is_monic() const { return e_[0] == 1; }

    const Rational& e(int j) const { return e_.at(static_cast<size_t>(j)); }
    const std::vector<Rational>& coefficients() const { return e_; }

    // x^n, the identity under additive convolution
    static Poly monomial(int n) {
        Poly p(n);
        p.e_[0] = 1;
        return p;
    }

    // (x-1)^n, the identity under multiplicative convolution
    static Poly one_shifted(int n) {
        Poly p(n);
        for (int j = 0; j <= n; ++j) p.e_[j] = Rational(binomial(n, j));
        return p;
    }

    // (x-a)^n
    static Poly linear_power(int n, const Rational& a) {
        Poly p(n);
        Rational pw(1);
        for (int j = 0; j <= n; ++j) {
            p.e_[j] = Rational(binomial(n, j)) * pw;
            pw *= a;
        }
        return p;
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.n_ == b.n_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  private:
    static int check_n(int n) {
        if (n < 0) throw argument_error("Poly: negative ambient degree");
        return n;
    }

    int n_;
    std::vector<Rational> e_;
};

// e_0 = leading, e_j/e_0 = j-th elementary symmetric function of roots.
Poly from_roots(const std::vector<Rational>& roots, const Rational& leading, int n);

Rational evaluate(const Poly& p, const Rational& x);

// d/dx p, returned with ambient degree n-1
Poly derivative(const Poly& p);

// q(x) = x^n p(c/x); e_j(q) = (-1)^n c^j e_{n-j}(p)
Poly reciprocal(const Poly& p, const Rational& c);

// (Dil_s p)(x) = s^n p(x/s); scales every root by s, e_j by s^j
Poly dilate(const Poly& p, const Rational& s);

// (-1)^n p(-x): negates the root multiset, keeps the leading coefficient
Poly negate_argument(const Poly& p);

// scalar multiple
Poly scale(const Poly& p, const Rational& c);

// alpha*p + beta*q, same ambient degree required
Poly linear_combination(const Rational& alpha, const Poly& p, const Rational& beta, const Poly& q);

// plain polynomial product, ambient degrees add
Poly mul(const Poly& p, const Poly& q);

// Same value with ambient degree m.  Raising is always possible; lowering
// requires the leading e's to vanish.
Poly with_ambient(const Poly& p, int m);

// true when p and q represent the same polynomial, ambients aside
bool same_polynomial(const Poly& p, const Poly& q);

// power-basis import/export: c[k] is the coefficient of x^k
std::vector<Rational> to_power_basis(const Poly& p);
Poly from_power_basis(const std::vector<Rational>& c, int n);

// p(x + a)
Poly taylor_shift(const Poly& p, const Rational& a);

// p(a*x + b) with a != 0, returned with the same ambient degree
Poly compose_affine(const Poly& p, const Rational& a, const Rational& b);

}  // namespace finfree

#endif
