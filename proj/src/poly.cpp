#include "finfree/poly.hpp"

#include <algorithm>

namespace finfree {

Poly from_roots(const std::vector<Rational>& roots, const Rational& leading, int n) {
    if (static_cast<int>(roots.size()) != n)
        throw argument_error("from_roots: expected exactly n roots");
    if (leading == 0) throw argument_error("from_roots: zero leading coefficient");
    // incremental elementary symmetric functions
    std::vector<Rational> sym(static_cast<size_t>(n) + 1, Rational(0));
    sym[0] = 1;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j >= 1; --j) sym[j] += roots[static_cast<size_t>(i)] * sym[j - 1];
    for (auto& s : sym) s *= leading;
    return Poly(n, std::move(sym));
}

Rational evaluate(const Poly& p, const Rational& x) {
    // Horner on sum_j x^{n-j} (-1)^j e_j, top power first
    const int n = p.ambient_degree();
    Rational acc(0);
    for (int j = 0; j <= n; ++j) acc = acc * x + (j % 2 == 0 ? p.e(j) : -p.e(j));
    return acc;
}

Poly derivative(const Poly& p) {
    const int n = p.ambient_degree();
    if (n < 1) throw argument_error("derivative: ambient degree must be >= 1");
    // p' = sum_j x^{(n-1)-j} (-1)^j (n-j) e_j
    std::vector<Rational> e(static_cast<size_t>(n), Rational(0));
    for (int j = 0; j <= n - 1; ++j) e[static_cast<size_t>(j)] = Rational(n - j) * p.e(j);
    return Poly(n - 1, std::move(e));
}

Poly reciprocal(const Poly& p, const Rational& c) {
    const int n = p.ambient_degree();
    std::vector<Rational> e(static_cast<size_t>(n) + 1);
    const Rational neg1n = (n % 2 == 0) ? Rational(1) : Rational(-1);
    Rational pw(1);
    for (int j = 0; j <= n; ++j) {
        e[static_cast<size_t>(j)] = neg1n * pw * p.e(n - j);
        pw *= c;
    }
    return Poly(n, std::move(e));
}

Poly dilate(const Poly& p, const Rational& s) {
    if (s == 0) throw argument_error("dilate: scale must be nonzero");
    const int n = p.ambient_degree();
    std::vector<Rational> e(static_cast<size_t>(n) + 1);
    Rational pw(1);
    for (int j = 0; j <= n; ++j) {
        e[static_cast<size_t>(j)] = pw * p.e(j);
        pw *= s;
    }
    return Poly(n, std::move(e));
}

Poly negate_argument(const Poly& p) {
    const int n = p.ambient_degree();
    std::vector<Rational> e(static_cast<size_t>(n) + 1);
    for (int j = 0; j <= n; ++j)
        e[static_cast<size_t>(j)] = (j % 2 == 0) ? p.e(j) : -p.e(j);
    return Poly(n, std::move(e));
}

Poly scale(const Poly& p, const Rational& c) {
    const int n = p.ambient_degree();
    std::vector<Rational> e(static_cast<size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) e[static_cast<size_t>(j)] = c * p.e(j);
    return Poly(n, std::move(e));
}

Poly linear_combination(const Rational& alpha, const Poly& p, const Rational& beta, const Poly& q) {
    if (p.ambient_degree() != q.ambient_degree())
        throw argument_error("linear_combination: ambient degrees differ");
    const int n = p.ambient_degree();
    std::vector<Rational> e(static_cast<size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) e[static_cast<size_t>(j)] = alpha * p.e(j) + beta * q.e(j);
    return Poly(n, std::move(e));
}

Poly mul(const Poly& p, const Poly& q) {
    // In this representation the product is the plain convolution of the
    // e-sequences: e_k(pq) = sum_{i+j=k} e_i(p) e_j(q).
    const int n = p.ambient_degree(), m = q.ambient_degree();
    std::vector<Rational> e(static_cast<size_t>(n + m) + 1, Rational(0));
    for (int i = 0; i <= n; ++i) {
        if (p.e(i) == 0) continue;
        for (int j = 0; j <= m; ++j) e[static_cast<size_t>(i + j)] += p.e(i) * q.e(j);
    }
    return Poly(n + m, std::move(e));
}

Poly with_ambient(const Poly& p, int m) {
    const int n = p.ambient_degree();
    if (m == n) return p;
    if (m > n) {
        // x^{n-j} stays x^{m-k} with k = j + (m-n); the sign convention
        // absorbs (-1)^{m-n} into every coefficient
        const int d = m - n;
        const Rational s = (d % 2 == 0) ? Rational(1) : Rational(-1);
        std::vector<Rational> e(static_cast<size_t>(m) + 1, Rational(0));
        for (int j = 0; j <= n; ++j) e[static_cast<size_t>(j + d)] = s * p.e(j);
        return Poly(m, std::move(e));
    }
    const int d = n - m;
    for (int j = 0; j < d; ++j)
        if (p.e(j) != 0) throw argument_error("with_ambient: actual degree exceeds target");
    const Rational s = (d % 2 == 0) ? Rational(1) : Rational(-1);
    std::vector<Rational> e(static_cast<size_t>(m) + 1);
    for (int j = 0; j <= m; ++j) e[static_cast<size_t>(j)] = s * p.e(j + d);
    return Poly(m, std::move(e));
}

bool same_polynomial(const Poly& p, const Poly& q) {
    const int n = std::max(p.ambient_degree(), q.ambient_degree());
    return with_ambient(p, n) == with_ambient(q, n);
}

std::vector<Rational> to_power_basis(const Poly& p) {
    const int n = p.ambient_degree();
    std::vector<Rational> c(static_cast<size_t>(n) + 1);
    for (int j = 0; j <= n; ++j)
        c[static_cast<size_t>(n - j)] = (j % 2 == 0) ? p.e(j) : -p.e(j);
    return c;
}

Poly from_power_basis(const std::vector<Rational>& c, int n) {
    if (static_cast<int>(c.size()) > n + 1)
        throw argument_error("from_power_basis: too many coefficients for ambient degree");
    std::vector<Rational> e(static_cast<size_t>(n) + 1, Rational(0));
    for (size_t k = 0; k < c.size(); ++k) {
        const int j = n - static_cast<int>(k);
        e[static_cast<size_t>(j)] = (j % 2 == 0) ? c[k] : -c[k];
    }
    return Poly(n, std::move(e));
}

Poly taylor_shift(const Poly& p, const Rational& a) {
    const int n = p.ambient_degree();
    std::vector<Rational> c = to_power_basis(p);
    // synthetic (Horner) expansion around -a, one coefficient at a time
    for (int i = 0; i <= n; ++i)
        for (int k = n - 1; k >= i; --k)
            c[static_cast<size_t>(k)] += a * c[static_cast<size_t>(k) + 1];
    return from_power_basis(c, n);
}

Poly compose_affine(const Poly& p, const Rational& a, const Rational& b) {
    if (a == 0) throw argument_error("compose_affine: zero linear coefficient");
    // p(ax + b) = (Dil_{1/a} applied to the x-part of) p(x + b)
    Poly shifted = taylor_shift(p, b);
    std::vector<Rational> c = to_power_basis(shifted);
    Rational pw(1);
    for (size_t k = 0; k < c.size(); ++k) {
        c[k] *= pw;
        pw *= a;
    }
    return from_power_basis(c, p.ambient_degree());
}

}  // namespace finfree
