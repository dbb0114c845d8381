#include "finfree/convolution.hpp"

namespace finfree {

namespace {

void require_same_ambient(const Poly& p, const Poly& q, const char* who) {
    if (p.ambient_degree() != q.ambient_degree())
        throw argument_error(std::string(who) + ": ambient degrees differ");
}

// (n-i)!(n-j)! / (n!(n-k)!) with k = i+j
Rational additive_weight(int n, int i, int j) {
    Rational w(factorial(static_cast<unsigned long>(n - i)) *
                   factorial(static_cast<unsigned long>(n - j)),
               factorial(static_cast<unsigned long>(n)) *
                   factorial(static_cast<unsigned long>(n - i - j)));
    w.canonicalize();
    return w;
}

}  // namespace

Poly mul_convolve(const Poly& p, const Poly& q) {
    require_same_ambient(p, q, "mul_convolve");
    const int n = p.ambient_degree();
    std::vector<Rational> e(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        Rational c = p.e(k) * q.e(k) / Rational(binomial(n, k));
        c.canonicalize();
        e[static_cast<size_t>(k)] = c;
    }
    return Poly(n, std::move(e));
}

Poly add_convolve(const Poly& p, const Poly& q) {
    require_same_ambient(p, q, "add_convolve");
    const int n = p.ambient_degree();
    std::vector<Rational> e(static_cast<size_t>(n) + 1, Rational(0));
    for (int k = 0; k <= n; ++k)
        for (int i = 0; i <= k; ++i) {
            if (p.e(i) == 0 || q.e(k - i) == 0) continue;
            e[static_cast<size_t>(k)] += additive_weight(n, i, k - i) * p.e(i) * q.e(k - i);
        }
    return Poly(n, std::move(e));
}

Poly add_convolve_via_derivatives(const Poly& p, const Poly& q) {
    require_same_ambient(p, q, "add_convolve_via_derivatives");
    const int n = p.ambient_degree();
    Poly acc(n);
    Poly pd = p;  // p^(i), ambient n-i
    for (int i = 0; i <= n; ++i) {
        // q^(n-i)(0)
        Poly qd = q;
        for (int d = 0; d < n - i; ++d) qd = derivative(qd);
        const Rational c = evaluate(qd, Rational(0));
        if (c != 0) acc = linear_combination(Rational(1), acc, c, with_ambient(pd, n));
        if (i < n) pd = derivative(pd);
    }
    return scale(acc, Rational(1, factorial(static_cast<unsigned long>(n))));
}

DiffOperatorRep diff_operator(const Poly& p) {
    const int n = p.ambient_degree();
    DiffOperatorRep D;
    D.n = n;
    D.coeffs.resize(static_cast<size_t>(n) + 1);
    Int fall(1);  // <n>_j
    for (int j = 0; j <= n; ++j) {
        Rational c = p.e(j) / Rational(fall);
        c.canonicalize();
        D.coeffs[static_cast<size_t>(j)] = (j % 2 == 0) ? c : -c;
        fall *= (n - j);
    }
    return D;
}

Poly apply_diff_operator(const DiffOperatorRep& D, const Poly& q) {
    if (D.n != q.ambient_degree())
        throw argument_error("apply_diff_operator: ambient degrees differ");
    const int n = D.n;
    Poly acc(n);
    Poly qd = q;  // q^(j), ambient n-j
    for (int j = 0; j <= n; ++j) {
        const Rational& c = D.coeffs[static_cast<size_t>(j)];
        if (c != 0) acc = linear_combination(Rational(1), acc, c, with_ambient(qd, n));
        if (j < n) qd = derivative(qd);
    }
    return acc;
}

Poly add_convolve_via_diffop(const Poly& p, const Poly& q) {
    require_same_ambient(p, q, "add_convolve_via_diffop");
    return apply_diff_operator(diff_operator(p), q);
}

Poly additive_inverse(const Poly& p) {
    const int n = p.ambient_degree();
    if (p.e(0) == 0)
        throw no_inverse_error("additive_inverse: polynomial must have full degree");
    // e_k of the inverse enters the k-th coefficient equation linearly with
    // unit weight, so each one is determined by the earlier ones.
    std::vector<Rational> e(static_cast<size_t>(n) + 1);
    e[0] = Rational(1) / p.e(0);
    e[0].canonicalize();
    for (int k = 1; k <= n; ++k) {
        Rational s(0);
        for (int j = 0; j < k; ++j) {
            if (p.e(k - j) == 0 || e[static_cast<size_t>(j)] == 0) continue;
            s += additive_weight(n, k - j, j) * p.e(k - j) * e[static_cast<size_t>(j)];
        }
        Rational c = -s / p.e(0);
        c.canonicalize();
        e[static_cast<size_t>(k)] = c;
    }
    return Poly(n, std::move(e));
}

Poly multiplicative_inverse(const Poly& p) {
    const int n = p.ambient_degree();
    std::vector<Rational> e(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        if (p.e(k) == 0)
            throw no_inverse_error("multiplicative_inverse: coefficient e_" +
                                   std::to_string(k) + " vanishes");
        const Int b = binomial(n, k);
        Rational c = Rational(b * b) / p.e(k);
        c.canonicalize();
        e[static_cast<size_t>(k)] = c;
    }
    return Poly(n, std::move(e));
}

bool add_convolve_vanishes(const Poly& p, const Poly& q) {
    const int n = p.ambient_degree();
    if (p.is_zero() || q.is_zero()) return true;
    return p.actual_degree() + q.actual_degree() < n;
}

}  // namespace finfree
