#ifndef FINFREE_ASYMPTOTICS_HPP
#define FINFREE_ASYMPTOTICS_HPP

#include <array>
#include <string>
#include <vector>

#include "finfree/hypergeo.hpp"
#include "finfree/poly.hpp"
#include "finfree/rootcert.hpp"

namespace finfree {

// Limiting root distributions of the rescaled polynomial families.  Floats
// live only in this module; everything upstream is exact.
struct LimitMeasure {
    enum class Kind { MP, RMP, JacobiJ1, JacobiJ2, JacobiJ3 };

    Kind kind = Kind::MP;
    double b = 0, a = 0;
    double lo = 0, hi = 0;    // support endpoints
    double atom_weight = 0;   // point mass at x = 0

    static LimitMeasure mp(double b);       // b > 0; atom 1-b when b < 1
    static LimitMeasure rmp(double a);      // a < 0
    static LimitMeasure jacobi(double b, double a);  // picks the parameter regime

    std::string name() const;
};

// density at a point; zero outside the support (the atom is not included)
double limit_density(const LimitMeasure& m, double x);

// k-th moment: atom contribution plus adaptive Gauss-Kronrod quadrature of
// x^k against the density, absolute error target 1e-10
double limit_moment(const LimitMeasure& m, int k);

// closed-form MP moments (Narayana polynomials), used as an independent
// check of the quadrature
double mp_moment_closed_form(double b, int k);

// moments of the root multiset from the coefficients (Newton identities);
// exact, needs e_0 != 0; entry k holds m_k, k = 0..kmax
std::vector<Rational> exact_moments(const Poly& p, int kmax);

struct EmpiricalMoments {
    std::vector<double> m;      // m[k]
    std::vector<double> bound;  // a-priori error bound per k
};

// midpoint moments from a refined certificate; requires all roots real
EmpiricalMoments empirical_moments(const Poly& p, int kmax, const Rational& width);

// free convolution of moment sequences through third order; index = order
std::array<double, 4> free_add_moments(const std::array<double, 4>& x,
                                       const std::array<double, 4>& y);
std::array<double, 4> free_mul_moments(const std::array<double, 4>& x,
                                       const std::array<double, 4>& y);

// the rescaled classical families
struct HatFamily {
    enum class Kind { Laguerre, Bessel, Jacobi };

    Kind kind = Kind::Laguerre;
    Rational b, a;

    static HatFamily laguerre(const Rational& b);
    static HatFamily bessel(const Rational& a);
    static HatFamily jacobi(const Rational& b, const Rational& a);

    Poly at(int n) const;
    HypergeomSpec std_spec(int n) const;  // standard-normalization parameters
    LimitMeasure limit() const;
    std::string name() const;
};

struct ConvergenceRow {
    int n = 0, k = 0;
    double empirical = 0, limit = 0, rel_err = 0;
};

struct ConvergenceReport {
    std::vector<ConvergenceRow> rows;
    std::vector<int> skipped;  // n without a real-rootedness claim
    bool errors_decrease = false;
    double max_err_first = 0, max_err_last = 0;
};

// empirical moments of the family against the limit measure along n_list;
// flags whether the max-over-k error decreases (slack factor 2 per step)
ConvergenceReport convergence_report(const HatFamily& family, const LimitMeasure& mu,
                                     const std::vector<int>& n_list, int kmax);

enum class FreeIdentity { MPMP_E37, Clausen_E39, BesselBessel_E311, FBetaQuotient };

std::string to_string(FreeIdentity id);

struct FreeIdentityRow {
    int n = 0, k = 0;
    double lhs = 0, rhs = 0, limit = 0;
    double err_sides = 0;     // |lhs-rhs| relative
    double err_vs_limit = 0;  // |lhs-limit| relative
};

struct FreeIdentityReport {
    bool exact_all = true;  // the finite-n polynomial identity held exactly
    std::vector<int> exact_checked;
    std::vector<FreeIdentityRow> rows;
    bool errors_decrease = false;
};

// Finite-n convolution identities behind the limit laws.  Parameters:
//   MPMP_E37 {b1, b2}, Clausen_E39 {a, b}, BesselBessel_E311 {a, b},
//   FBetaQuotient {c, d}.
// Verifies the identity exactly, then compares both sides' moments with the
// limiting expression (k <= 3 for the composite limits).
FreeIdentityReport free_identity_check(FreeIdentity id, const std::vector<Rational>& params,
                                       const std::vector<int>& n_list, int kmax);

struct HistRow {
    double center = 0, mass = 0, density = 0;
};

// binned empirical root distribution against the limit density
std::vector<HistRow> histogram(const Poly& p, const LimitMeasure& m, int bins,
                               const Rational& width);

// fixed 17-significant-digit rendering used by every CSV writer
std::string format_double(double x);

}  // namespace finfree

#endif
