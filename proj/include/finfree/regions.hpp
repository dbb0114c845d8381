#ifndef FINFREE_REGIONS_HPP
#define FINFREE_REGIONS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "finfree/hypergeo.hpp"
#include "finfree/rootcert.hpp"

namespace finfree {

enum class TableId {
    T1_1F1,
    T2_2F1,
    T3_2F2,
    T4_3F1,
    T5_3F2major,
    T6_3F2case2,
    T7_3F2case3,
    T8_3F2extra
};

std::string to_string(TableId id);
TableId parse_table_id(const std::string& s);

// deterministic rational sampler; every draw is exact
class ParamSampler {
  public:
    explicit ParamSampler(uint64_t seed) : eng_(seed) {}

    long integer(long lo, long hi) {
        std::uniform_int_distribution<long> d(lo, hi);
        return d(eng_);
    }

    // strictly inside (lo, hi); denominators favour halves and quarters
    Rational in_open(const Rational& lo, const Rational& hi) {
        static const long dens[] = {2, 3, 4, 5, 8, 16};
        long d = dens[integer(0, 5)];
        long u = integer(1, d - 1);
        return lo + (hi - lo) * rat(u, d);
    }

    Rational above(const Rational& lo) { return lo + in_open(rat(0), rat(8)); }
    Rational below(const Rational& hi) { return hi - in_open(rat(0), rat(8)); }

    Rational zn(int n) { return Rational(integer(0, n - 1)); }
    Rational neg_lattice(int n) { return Rational(-integer(0, n - 1)); }

    // the mixed set Z_n union (n-2, infinity)
    Rational zn_or_above(int n) {
        if (integer(0, 1) == 0) return zn(n);
        return Rational(n - 2) + in_open(rat(0), rat(6));
    }

    bool coin() { return integer(0, 1) == 1; }

  private:
    std::mt19937_64 eng_;
};

struct RegionParams {
    std::vector<Rational> a, b;
};

// One row of the real-rootedness tables: a decidable parameter predicate,
// a sampler that generates points satisfying it, and the expected claim.
struct RegionRow {
    TableId table;
    int row;  // 1-based position in the table
    int na, nb;
    RootLocation expected;
    std::string constraint_text;
    std::function<bool(const RegionParams&, int)> predicate;
    std::function<RegionParams(ParamSampler&, int)> sample;
    int min_n = 1;
};

const std::vector<RegionRow>& region_registry();

// FNV-1a hash of the registry encoding; changes when any row changes
std::string registry_hash();

struct RowVerdict {
    bool pass = false;
    RootLocation expected = RootLocation::AllReal;
    RootLocation certified = RootLocation::AllReal;
    std::string note;
};

// constructs the row's polynomial at the given parameters and certifies it
RowVerdict check_row(const RegionRow& row, const RegionParams& params, int n);

// all registry rows whose predicate accepts the spec's parameters, trying
// tuple-role permutations (numerator and denominator entries commute)
std::vector<const RegionRow*> applicable_rows(const HypergeomSpec& spec);

// strongest registry claim applicable to the spec, if any
std::optional<RootLocation> theoretical_claim(const HypergeomSpec& spec);

// the two displayed parameter regions where the 2F2 polynomial cannot be
// real-rooted; which selects the region for sampling
bool in_excluded_region(const RegionParams& params, int n);
RegionParams sample_excluded(ParamSampler& sampler, int n, int which);
RowVerdict check_excluded(const RegionParams& params, int n);

enum class MonotoneFamily { T41, T43, T44, T45, T46, I1F1, I2F0, I2F1a, I2F1b, I2F1c };

std::string to_string(MonotoneFamily id);

struct MonotoneVerdict {
    bool pass = false;
    std::string note;
};

// Interlacing/monotonicity statements; `params` layout per family:
//   T41  {gamma, a, b}     base 2F1(-n,a;b) nonneg, append gamma downstairs
//   T43  {gamma, a, b}     base 2F1 nonneg, append gamma upstairs
//   T44  {alpha, beta, s, a, b}
//   T45  {i, j, a_1..a_i, b_1..b_j}   all a < -n+1, all b > 0
//   T46  {i, j, a_1..a_i, b_1..b_j}   j >= i, b > 0, a_s >= n-1+b_s
//   I1F1 {b}   I2F0 {a}   I2F1a/b/c {a, b, s}
MonotoneVerdict check_monotone_family(MonotoneFamily id, const std::vector<Rational>& params,
                                      int n, const Rational& t);

// Deterministic sweep over a table (or a single row); writes CSV rows
//   table,row,n,params,expected,certified,status
// and returns true when every sampled point passes.
bool run_table_sweep(TableId table, std::optional<int> row_filter,
                     const std::vector<int>& n_list, int samples, uint64_t seed,
                     std::ostream& csv);

std::string params_to_json(const RegionParams& p);

}  // namespace finfree

#endif
