#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "finfree/regions.hpp"

using namespace finfree;

namespace {
const RegionRow& find_row(TableId t, int r) {
    for (const auto& row : region_registry())
        if (row.table == t && row.row == r) return row;
    throw std::runtime_error("row not found");
}

RegionParams mk(std::vector<Rational> a, std::vector<Rational> b) {
    RegionParams p;
    p.a = std::move(a);
    p.b = std::move(b);
    return p;
}

HypergeomSpec spec(int n, std::vector<Rational> a, std::vector<Rational> b) {
    HypergeomSpec s;
    s.n = n;
    s.a = std::move(a);
    s.b = std::move(b);
    return s;
}
}  // namespace

TEST_CASE("registry shape") {
    int counts[8] = {0};
    for (const auto& row : region_registry()) counts[static_cast<int>(row.table)]++;
    CHECK(counts[0] == 6);   // T1
    CHECK(counts[1] == 6);   // T2
    CHECK(counts[2] == 14);  // T3
    CHECK(counts[3] == 14);  // T4
    CHECK(counts[4] == 6);   // T5
    CHECK(counts[5] == 8);   // T6
    CHECK(counts[6] == 8);   // T7
    CHECK(counts[7] == 5);   // T8
    CHECK(registry_hash().size() == 16);
}

TEST_CASE("applicable_rows on the worked examples") {
    auto rows = applicable_rows(spec(5, {}, {rat(3)}));
    bool t1r2 = false;
    for (auto* r : rows) t1r2 = t1r2 || (r->table == TableId::T1_1F1 && r->row == 2);
    CHECK(t1r2);

    rows = applicable_rows(spec(5, {rat(-9)}, {}));
    bool t1r5 = false;
    for (auto* r : rows) t1r5 = t1r5 || (r->table == TableId::T1_1F1 && r->row == 5);
    CHECK(t1r5);

    rows = applicable_rows(spec(6, {rat(-8), rat(-9)}, {rat(2), rat(3)}));
    bool t5r3 = false;
    for (auto* r : rows) t5r3 = t5r3 || (r->table == TableId::T5_3F2major && r->row == 3);
    CHECK(t5r3);
    CHECK(theoretical_claim(spec(6, {rat(-8), rat(-9)}, {rat(2), rat(3)})) ==
          RootLocation::AllPos);
}

TEST_CASE("check_row on the worked examples") {
    auto v = check_row(find_row(TableId::T2_2F1, 1), mk({rat(-8)}, {rat(3)}), 5);
    CHECK(v.pass);
    CHECK(v.expected == RootLocation::AllNonPos);

    auto v2 = check_row(find_row(TableId::T3_2F2, 11),
                        mk({rat(1, 4)}, {rat(-1, 2), rat(3, 4)}), 5);
    CHECK(v2.pass);

    // T6 row 2 with b1=b2=1, k=t=0 covers the 3F2(-n,1/2,-n+-1/2;1,1) family
    for (int n = 4; n <= 12; ++n) {
        auto vr = check_row(find_row(TableId::T6_3F2case2, 2),
                            mk({rat(1, 2), rat(1, 2) - n}, {rat(1), rat(1)}), n);
        CHECK(vr.pass);
        CHECK(vr.expected == RootLocation::AllNeg);
        auto vr2 = check_row(find_row(TableId::T6_3F2case2, 2),
                             mk({rat(1, 2), rat(-1, 2) - n}, {rat(1), rat(1)}), n);
        CHECK(vr2.pass);
    }

    CHECK_THROWS_AS(check_row(find_row(TableId::T2_2F1, 1), mk({rat(8)}, {rat(3)}), 5),
                    precondition_error);
}

TEST_CASE("every registry row passes on a few sampled points") {
    // fast smoke pass; the acceptance suite runs the full sweep
    for (const auto& row : region_registry()) {
        int n = std::max(5, row.min_n);
        ParamSampler sampler(12345u + static_cast<uint64_t>(row.row) * 7u +
                             static_cast<uint64_t>(row.table) * 97u);
        int done = 0, tries = 0;
        while (done < 3 && tries < 300) {
            ++tries;
            RegionParams params = row.sample(sampler, n);
            HypergeomSpec s;
            s.n = n;
            s.a = params.a;
            s.b = params.b;
            if (!row.predicate(params, n) || !full_degree(s)) continue;
            auto v = check_row(row, params, n);
            if (!v.pass)
                MESSAGE("row ", to_string(row.table), "/", row.row, " note: ", v.note,
                        " params ", params_to_json(params));
            CHECK(v.pass);
            ++done;
        }
        CHECK(done == 3);
    }
}

TEST_CASE("degenerate boundary: zero root of multiplicity -b+1") {
    for (long b = 0; b >= -3; --b) {
        Poly p = pFq_std(spec(5, {}, {rat(b)}));
        RootCertificate c = certify(p);
        bool found = false;
        for (const auto& r : c.real_roots)
            if (r.exact && r.lo == 0 && r.multiplicity == -b + 1) found = true;
        CHECK(found);
    }
}

TEST_CASE("excluded regions certify nonreal roots") {
    CHECK(check_excluded(mk({rat(1)}, {rat(-6), rat(-6)}), 5).pass);
    CHECK(check_excluded(mk({rat(1)}, {rat(-6), rat(5)}), 5).pass);
    CHECK(check_excluded(mk({rat(-8)}, {rat(-5), rat(-6)}), 4).pass);

    CHECK_THROWS_AS(check_excluded(mk({rat(-8)}, {rat(3), rat(5)}), 5),
                    precondition_error);

    ParamSampler sampler(777);
    for (int which = 0; which < 2; ++which)
        for (int i = 0; i < 10; ++i) {
            RegionParams p = sample_excluded(sampler, 5, which);
            REQUIRE(in_excluded_region(p, 5));
            CHECK(check_excluded(p, 5).pass);
        }
}

TEST_CASE("monotone and interlacing families") {
    CHECK(check_monotone_family(MonotoneFamily::I1F1, {rat(2)}, 6, rat(3, 2)).pass);
    CHECK(check_monotone_family(MonotoneFamily::I1F1, {rat(7)}, 6, rat(3)).pass);
    CHECK(check_monotone_family(MonotoneFamily::I2F0, {rat(-8)}, 6, rat(2)).pass);
    CHECK(check_monotone_family(MonotoneFamily::I2F1a, {rat(12), rat(3), rat(1)}, 5,
                                rat(1, 2))
              .pass);
    CHECK(check_monotone_family(MonotoneFamily::I2F1b, {rat(-7), rat(3), rat(1)}, 5,
                                rat(1, 2))
              .pass);
    CHECK(check_monotone_family(MonotoneFamily::I2F1c, {rat(-7), rat(-12), rat(1)}, 5,
                                rat(1, 2))
              .pass);

    CHECK(check_monotone_family(MonotoneFamily::T41, {rat(1), rat(9), rat(2)}, 5, rat(2))
              .pass);
    CHECK(check_monotone_family(MonotoneFamily::T43, {rat(-6), rat(9), rat(2)}, 5, rat(1))
              .pass);
    CHECK(check_monotone_family(MonotoneFamily::T44,
                                {rat(10), rat(3), rat(1), rat(9), rat(2)}, 5, rat(1))
              .pass);
    CHECK(check_monotone_family(MonotoneFamily::T45,
                                {rat(2), rat(1), rat(-7), rat(-8), rat(3)}, 5, rat(1))
              .pass);
    auto odd = check_monotone_family(MonotoneFamily::T45,
                                     {rat(1), rat(1), rat(-7), rat(3)}, 5, rat(1));
    CHECK(odd.pass);
    CHECK(odd.note.find("reversed") != std::string::npos);
    CHECK(check_monotone_family(MonotoneFamily::T46,
                                {rat(1), rat(1), rat(13, 2), rat(2)}, 5, rat(0))
              .pass);
    CHECK(check_monotone_family(
              MonotoneFamily::T46,
              {rat(2), rat(2), rat(7), rat(8), rat(2), rat(3)}, 5, rat(0))
              .pass);

    CHECK_THROWS_AS(check_monotone_family(MonotoneFamily::I1F1, {rat(-1)}, 5, rat(1)),
                    precondition_error);
    CHECK_THROWS_AS(check_monotone_family(MonotoneFamily::I1F1, {rat(2)}, 5, rat(3)),
                    precondition_error);
}

TEST_CASE("reciprocation duality maps T3 points to T4 points") {
    // T3 points with nonzero roots map through x -> 1/x (argument sign
    // (-1)^{i+j}) onto 3F1 polynomials with the dual claim
    ParamSampler sampler(4242);
    const int n = 5;
    int checked = 0;
    for (const auto& row : region_registry()) {
        if (row.table != TableId::T3_2F2) continue;
        if (n < row.min_n) continue;
        int tries = 0;
        while (tries < 200) {
            ++tries;
            RegionParams p = row.sample(sampler, n);
            HypergeomSpec s3;
            s3.n = n;
            s3.a = p.a;
            s3.b = p.b;
            if (!row.predicate(p, n) || !full_degree(s3)) continue;
            if (in_neg_lattice(p.b[0], n) || in_neg_lattice(p.b[1], n)) continue;
            HypergeomSpec s4;
            s4.n = n;
            s4.a = {-p.b[0] - n + 1, -p.b[1] - n + 1};
            s4.b = {-p.a[0] - n + 1};
            if (!full_degree(s4)) continue;
            Poly dual = pFq_std(s4);
            // i+j = 3 odd: roots of the dual are -1/lambda, so sign classes swap
            RootLocation want = RootLocation::AllReal;
            if (row.expected == RootLocation::AllPos) want = RootLocation::AllNeg;
            if (row.expected == RootLocation::AllNonPos) want = RootLocation::AllNonNeg;
            CHECK(certifies_claim(dual, want));
            ++checked;
            break;
        }
    }
    CHECK(checked >= 10);
}

TEST_CASE("table sweep is deterministic and passes") {
    std::ostringstream csv1, csv2;
    bool ok1 = run_table_sweep(TableId::T1_1F1, std::nullopt, {5, 8}, 4, 42, csv1);
    bool ok2 = run_table_sweep(TableId::T1_1F1, std::nullopt, {5, 8}, 4, 42, csv2);
    CHECK(ok1);
    CHECK(ok2);
    CHECK(csv1.str() == csv2.str());
    CHECK(csv1.str().find("PASS") != std::string::npos);
}
