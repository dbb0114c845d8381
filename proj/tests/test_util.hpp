#ifndef FINFREE_TEST_UTIL_HPP
#define FINFREE_TEST_UTIL_HPP

#include <random>
#include <vector>

#include "finfree/poly.hpp"

namespace finfree::testutil {

// deterministic rational generator for property tests
class Rng {
  public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    long integer(long lo, long hi) {
        std::uniform_int_distribution<long> d(lo, hi);
        return d(eng_);
    }

    // numerators/denominators bounded by `bound`, never zero denominator
    Rational rational(long bound = 50) {
        long num = integer(-bound, bound);
        long den = integer(1, bound);
        return rat(num, den);
    }

    Rational nonzero_rational(long bound = 50) {
        Rational q = rational(bound);
        while (q == 0) q = rational(bound);
        return q;
    }

    std::vector<Rational> rationals(int count, long bound = 50) {
        std::vector<Rational> v;
        v.reserve(static_cast<size_t>(count));
        for (int i = 0; i < count; ++i) v.push_back(rational(bound));
        return v;
    }

    // random polynomial of full degree n with rational coefficients
    Poly poly(int n, long bound = 20) {
        std::vector<Rational> e;
        e.reserve(static_cast<size_t>(n) + 1);
        e.push_back(nonzero_rational(bound));
        for (int j = 1; j <= n; ++j) e.push_back(rational(bound));
        return Poly(n, std::move(e));
    }

    // monic polynomial with n distinct rational roots in (lo, hi)
    Poly real_rooted(int n, long lo = -10, long hi = 10) {
        std::vector<Rational> roots;
        while (static_cast<int>(roots.size()) < n) {
            Rational r = rat(integer(4 * lo, 4 * hi), 4);
            bool dup = false;
            for (const auto& x : roots) dup = dup || (x == r);
            if (!dup) roots.push_back(r);
        }
        return from_roots(roots, Rational(1), n);
    }

    std::mt19937_64& engine() { return eng_; }

  private:
    std::mt19937_64 eng_;
};

}  // namespace finfree::testutil

#endif
