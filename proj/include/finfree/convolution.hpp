#ifndef FINFREE_CONVOLUTION_HPP
#define FINFREE_CONVOLUTION_HPP

#include <vector>

#include "finfree/poly.hpp"

namespace finfree {

// Finite free convolutions of polynomials of equal ambient degree n.
//
// Multiplicative:  e_k(p BT q) = binom(n,k)^{-1} e_k(p) e_k(q)
// Additive:        e_k(p BP q) = sum_{i+j=k} (n-i)!(n-j)! / (n!(n-k)!) e_i(p) e_j(q)
//
// Both are bilinear and commutative; x^n is the additive identity and
// (x-1)^n the multiplicative one.

Poly mul_convolve(const Poly& p, const Poly& q);
Poly add_convolve(const Poly& p, const Poly& q);

// Same value as add_convolve, computed as (1/n!) sum_i p^(i)(x) q^(n-i)(0).
Poly add_convolve_via_derivatives(const Poly& p, const Poly& q);

// Same value again, computed by applying the differential operator of p to q.
Poly add_convolve_via_diffop(const Poly& p, const Poly& q);

// Constant-coefficient differential operator D_p with D_p[x^n] = p.
// coeffs[j] multiplies (d/dx)^j and equals (-1)^j e_j(p) / <n>_j.
struct DiffOperatorRep {
    int n;
    std::vector<Rational> coeffs;
};

DiffOperatorRep diff_operator(const Poly& p);

// Applies D to a polynomial of the same ambient degree.
Poly apply_diff_operator(const DiffOperatorRep& D, const Poly& q);

// q with p BP_n q = x^n; exists iff e_0(p) != 0, found by forward recursion.
Poly additive_inverse(const Poly& p);

// q with p BT_n q = (x-1)^n; exists iff every e_k(p) != 0.
Poly multiplicative_inverse(const Poly& p);

// p BP_n q = 0 iff deg p + deg q < n (taking deg 0 polynomials into account).
bool add_convolve_vanishes(const Poly& p, const Poly& q);

}  // namespace finfree

#endif
