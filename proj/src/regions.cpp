#include "finfree/regions.hpp"

#include <cstdio>
#include <sstream>

namespace finfree {

namespace {

// ---- predicate atoms ----

bool is_zn_int(const Rational& k, int n) {
    return is_integer(k) && k >= 0 && k <= n - 1;
}

// t in Z_n or t > n-2
bool zn_or_gt(const Rational& t, int n) { return is_zn_int(t, n) || t > n - 2; }

// x in {base+1, base+2, ...}
bool up_lattice(const Rational& x, const Rational& base) {
    Rational d = x - base;
    return is_integer(d) && d >= 1;
}

// x in {base-1, base-2, ...}
bool down_lattice(const Rational& x, const Rational& base) { return up_lattice(base, x); }

Rational maxr(const Rational& x, const Rational& y) { return x > y ? x : y; }

RegionParams pack(std::vector<Rational> a, std::vector<Rational> b) {
    RegionParams p;
    p.a = std::move(a);
    p.b = std::move(b);
    return p;
}

// the recurring column sets of the 2F1 table
bool col_b_nonneg(const Rational& b, int n) { return in_neg_lattice(b, n) || b >= 0; }
bool col_b_pos(const Rational& b, int n) { return in_neg_lattice(b, n) || b > 0; }
bool col_a_up(const Rational& a, const Rational& b, int n) {
    return up_lattice(a, b) || a > b + n - 2;
}
bool col_b_down(const Rational& b, const Rational& a, int n) {
    return b < a - n + 2 || down_lattice(b, a);
}

Rational sample_b_nonneg(ParamSampler& s, int n) {
    return s.coin() ? s.neg_lattice(n) : s.above(rat(0));
}
Rational sample_a_up(ParamSampler& s, const Rational& b, int n) {
    return s.coin() ? b + Rational(s.integer(1, n + 3)) : s.above(b + n - 2);
}
Rational sample_b_down(ParamSampler& s, const Rational& a, int n) {
    return s.coin() ? s.below(a - n + 2) : a - Rational(s.integer(1, n + 3));
}

// ---- registry ----

void add_table1(std::vector<RegionRow>& reg) {
    reg.push_back({TableId::T1_1F1, 1, 0, 0, RootLocation::AllPos, "no parameters",
                   [](const RegionParams&, int) { return true; },
                   [](ParamSampler&, int) { return pack({}, {}); }});
    reg.push_back({TableId::T1_1F1, 2, 0, 1, RootLocation::AllPos, "b>0",
                   [](const RegionParams& p, int) { return p.b[0] > 0; },
                   [](ParamSampler& s, int) { return pack({}, {s.above(rat(0))}); }});
    reg.push_back({TableId::T1_1F1, 3, 0, 1, RootLocation::AllReal, "b in (-1,0)",
                   [](const RegionParams& p, int) { return p.b[0] > -1 && p.b[0] < 0; },
                   [](ParamSampler& s, int) { return pack({}, {s.in_open(rat(-1), rat(0))}); }});
    reg.push_back({TableId::T1_1F1, 4, 0, 1, RootLocation::AllNonNeg, "b in -Z_n",
                   [](const RegionParams& p, int n) { return in_neg_lattice(p.b[0], n); },
                   [](ParamSampler& s, int n) { return pack({}, {s.neg_lattice(n)}); }});
    reg.push_back({TableId::T1_1F1, 5, 1, 0, RootLocation::AllNeg, "a<-n+1",
                   [](const RegionParams& p, int n) { return p.a[0] < -n + 1; },
                   [](ParamSampler& s, int n) { return pack({s.below(rat(-n + 1))}, {}); }});
    reg.push_back({TableId::T1_1F1, 6, 1, 0, RootLocation::AllReal, "a in (-n+1,-n+2)",
                   [](const RegionParams& p, int n) {
                       return p.a[0] > -n + 1 && p.a[0] < -n + 2;
                   },
                   [](ParamSampler& s, int n) {
                       return pack({s.in_open(rat(-n + 1), rat(-n + 2))}, {});
                   }});
}

void add_table2(std::vector<RegionRow>& reg) {
    reg.push_back({TableId::T2_2F1, 1, 1, 1, RootLocation::AllNonPos,
                   "a<-n+1; b in -Z_n or b>=0",
                   [](const RegionParams& p, int n) {
                       return p.a[0] < -n + 1 && col_b_nonneg(p.b[0], n);
                   },
                   [](ParamSampler& s, int n) {
                       return pack({s.below(rat(-n + 1))}, {sample_b_nonneg(s, n)});
                   }});
    reg.push_back({TableId::T2_2F1, 2, 1, 1, RootLocation::AllNonNeg,
                   "a in {b+1,b+2,...} or a>b+n-2; b in -Z_n or b>=0",
                   [](const RegionParams& p, int n) {
                       return col_a_up(p.a[0], p.b[0], n) && col_b_nonneg(p.b[0], n);
                   },
                   [](ParamSampler& s, int n) {
                       Rational b = sample_b_nonneg(s, n);
                       return pack({sample_a_up(s, b, n)}, {b});
                   }});
    reg.push_back({TableId::T2_2F1, 3, 1, 1, RootLocation::AllPos,
                   "a<-n+1; b<a-n+2 or b in {a-1,a-2,...}",
                   [](const RegionParams& p, int n) {
                       return p.a[0] < -n + 1 && col_b_down(p.b[0], p.a[0], n);
                   },
                   [](ParamSampler& s, int n) {
                       Rational a = s.below(rat(-n + 1));
                       return pack({a}, {sample_b_down(s, a, n)});
                   }});
    reg.push_back({TableId::T2_2F1, 4, 1, 1, RootLocation::AllReal,
                   "a in (-n+1,-n+2); b in -Z_n or b>-1",
                   [](const RegionParams& p, int n) {
                       return p.a[0] > -n + 1 && p.a[0] < -n + 2 &&
                              (in_neg_lattice(p.b[0], n) || p.b[0] > -1);
                   },
                   [](ParamSampler& s, int n) {
                       Rational b = s.coin() ? s.neg_lattice(n) : s.above(rat(-1));
                       return pack({s.in_open(rat(-n + 1), rat(-n + 2))}, {b});
                   }});
    reg.push_back({TableId::T2_2F1, 5, 1, 1, RootLocation::AllReal,
                   "a in (-n+1,-n+2); b<a-n+2 or b in {a-1,a-2,...}",
                   [](const RegionParams& p, int n) {
                       return p.a[0] > -n + 1 && p.a[0] < -n + 2 &&
                              col_b_down(p.b[0], p.a[0], n);
                   },
                   [](ParamSampler& s, int n) {
                       Rational a = s.in_open(rat(-n + 1), rat(-n + 2));
                       return pack({a}, {sample_b_down(s, a, n)});
                   }});
    reg.push_back({TableId::T2_2F1, 6, 1, 1, RootLocation::AllReal,
                   "a<-n+1 or a>b+n-2; b in (-1,0)",
                   [](const RegionParams& p, int n) {
                       return (p.a[0] < -n + 1 || p.a[0] > p.b[0] + n - 2) && p.b[0] > -1 &&
                              p.b[0] < 0;
                   },
                   [](ParamSampler& s, int n) {
                       Rational b = s.in_open(rat(-1), rat(0));
                       Rational a = s.coin() ? s.below(rat(-n + 1)) : s.above(b + n - 2);
                       return pack({a}, {b});
                   }});
}

void add_table3(std::vector<RegionRow>& reg) {
    // rows 1-6: the 2F1 cases with a standard Laguerre block b2>0 appended
    reg.push_back({TableId::T3_2F2, 1, 1, 2, RootLocation::AllNonPos,
                   "a<-n+1; b1 in -Z_n or b1>0; b2>0",
                   [](const RegionParams& p, int n) {
                       return p.a[0] < -n + 1 && col_b_pos(p.b[0], n) && p.b[1] > 0;
                   },
                   [](ParamSampler& s, int n) {
                       Rational b1 = s.coin() ? s.neg_lattice(n) : s.above(rat(0));
                       return pack({s.below(rat(-n + 1))}, {b1, s.above(rat(0))});
                   }});
    reg.push_back({TableId::T3_2F2, 2, 1, 2, RootLocation::AllNonNeg,
                   "a in {b1+1,...} or a>b1+n-2; b1 in -Z_n or b1>0; b2>0",
                   [](const RegionParams& p, int n) {
                       return col_a_up(p.a[0], p.b[0], n) && col_b_pos(p.b[0], n) &&
                              p.b[1] > 0;
                   },
                   [](ParamSampler& s, int n) {
                       Rational b1 = s.coin() ? s.neg_lattice(n) : s.above(rat(0));
                       return pack({sample_a_up(s, b1, n)}, {b1, s.above(rat(0))});
                   }});
    reg.push_back({TableId::T3_2F2, 3, 1, 2, RootLocation::AllPos,
                   "a<-n+1; b1<a-n+2 or b1 in {a-1,...}; b2>0",
                   [](const RegionParams& p, int n) {
                       return p.a[0] < -n + 1 && col_b_down(p.b[0], p.a[0], n) && p.b[1] > 0;
                   },
                   [](ParamSampler& s, int n) {
                       Rational a = s.below(rat(-n + 1));
                       return pack({a}, {sample_b_down(s, a, n), s.above(rat(0))});
                   }});
    reg.push_back({TableId::T3_2F2, 4, 1, 2, RootLocation::AllReal,
                   "a in (-n+1,-n+2); b1 in -Z_n or b1>-1; b2>0",
                   [](const RegionParams& p, int n) {
                       return p.a[0] > -n + 1 && p.a[0] < -n + 2 &&
                              (in_neg_lattice(p.b[0], n) || p.b[0] > -1) && p.b[1] > 0;
                   },
                   [](ParamSampler& s, int n) {
                       Rational b1 = s.coin() ? s.neg_lattice(n) : s.above(rat(-1));
                       return pack({s.in_open(rat(-n + 1), rat(-n + 2))},
                                   {b1, s.above(rat(0))});
                   }});
    reg.push_back({TableId::T3_2F2, 5, 1, 2, RootLocation::AllReal,
                   "a in (-n+1,-n+2); b1<a-n+2 or b1 in {a-1,...}; b2>0",
                   [](const RegionParams& p, int n) {
                       return p.a[0] > -n + 1 && p.a[0] < -n + 2 &&
                              col_b_down(p.b[0], p.a[0], n) && p.b[1] > 0;
                   },
                   [](ParamSampler& s, int n) {
                       Rational a = s.in_open(rat(-n + 1), rat(-n + 2));
                       return pack({a}, {sample_b_down(s, a, n), s.above(rat(0))});
                   }});
    reg.push_back({TableId::T3_2F2, 6, 1, 2, RootLocation::AllReal,
                   "a<-n+1 or a>b1+n-2; b1 in (-1,0); b2>0",
                   [](const RegionParams& p, int n) {
                       return (p.a[0] < -n + 1 || p.a[0] > p.b[0] + n - 2) && p.b[0] > -1 &&
                              p.b[0] < 0 && p.b[1] > 0;
                   },
                   [](ParamSampler& s, int n) {
                       Rational b1 = s.in_open(rat(-1), rat(0));
                       Rational a = s.coin() ? s.below(rat(-n + 1)) : s.above(b1 + n - 2);
                       return pack({a}, {b1, s.above(rat(0))});
                   }});
    // rows 7-14: the additive-convolution families, n >= 4
    reg.push_back({TableId::T3_2F2, 7, 1, 2, RootLocation::AllPos,
                   "a=k+1/2; b1=2-b2>0 or b1=1-b2>0; b2>0",
                   [](const RegionParams& p, int n) {
                       return is_zn_int(p.a[0] - rat(1, 2), n) && p.b[1] > 0 && p.b[0] > 0 &&
                              (p.b[0] == 2 - p.b[1] || p.b[0] == 1 - p.b[1]);
                   },
                   [](ParamSampler& s, int n) {
                       bool two = s.coin();
                       Rational b2 = s.in_open(rat(0), two ? rat(2) : rat(1));
                       Rational b1 = (two ? rat(2) : rat(1)) - b2;
                       return pack({s.zn(n) + rat(1, 2)}, {b1, b2});
                   },
                   4});
    reg.push_back({TableId::T3_2F2, 8, 1, 2, RootLocation::AllPos,
                   "a=b1+k-1/2; b1=(b2+t+1)/2; b2>0",
                   [](const RegionParams& p, int n) {
                       return is_zn_int(p.a[0] - p.b[0] + rat(1, 2), n) &&
                              zn_or_gt(2 * p.b[0] - p.b[1] - 1, n) && p.b[1] > 0;
                   },
                   [](ParamSampler& s, int n) {
                       Rational b2 = s.above(rat(0));
                       Rational b1 = (b2 + s.zn_or_above(n) + 1) / 2;
                       return pack({b1 + s.zn(n) - rat(1, 2)}, {b1, b2});
                   },
                   4});
    reg.push_back({TableId::T3_2F2, 9, 1, 2, RootLocation::AllPos,
                   "a=(b1+1)/2+k; b1=2(b2-1+t); b2>0",
                   [](const RegionParams& p, int n) {
                       return is_zn_int(p.a[0] - (p.b[0] + 1) / 2, n) &&
                              zn_or_gt(p.b[0] / 2 - p.b[1] + 1, n) && p.b[1] > 0;
                   },
                   [](ParamSampler& s, int n) {
                       Rational b2 = s.above(rat(0));
                       Rational b1 = 2 * (b2 - 1 + s.zn_or_above(n));
                       return pack({(b1 + 1) / 2 + s.zn(n)}, {b1, b2});
                   },
                   4});
    reg.push_back({TableId::T3_2F2, 10, 1, 2, RootLocation::AllPos,
                   "a=b1/2+k; b1=2(b2+t)-1; b2>0",
                   [](const RegionParams& p, int n) {
                       return is_zn_int(p.a[0] - p.b[0] / 2, n) &&
                              zn_or_gt((p.b[0] + 1) / 2 - p.b[1], n) && p.b[1] > 0;
                   },
                   [](ParamSampler& s, int n) {
                       Rational b2 = s.above(rat(0));
                       Rational b1 = 2 * (b2 + s.zn_or_above(n)) - 1;
                       return pack({b1 / 2 + s.zn(n)}, {b1, b2});
                   },
                   4});
    reg.push_back({TableId::T3_2F2, 11, 1, 2, RootLocation::AllReal,
                   "a=b2-1/2; b1=2b2-2; b2 in (0,1)",
                   [](const RegionParams& p, int n) {
                       return p.a[0] == p.b[1] - rat(1, 2) && p.b[0] == 2 * p.b[1] - 2 &&
                              p.b[1] > 0 && p.b[1] < 1;
                   },
                   [](ParamSampler& s, int n) {
                       Rational b2 = s.in_open(rat(0), rat(1));
                       return pack({b2 - rat(1, 2)}, {2 * b2 - 2, b2});
                   },
                   4});
    reg.push_back({TableId::T3_2F2, 12, 1, 2, RootLocation::AllReal,
                   "a=b2-1/2; b1=2b2-1; b2 in (-1,0)",
                   [](const RegionParams& p, int n) {
                       return p.a[0] == p.b[1] - rat(1, 2) && p.b[0] == 2 * p.b[1] - 1 &&
                              p.b[1] > -1 && p.b[1] < 0;
                   },
                   [](ParamSampler& s, int n) {
                       Rational b2 = s.in_open(rat(-1), rat(0));
                       return pack({b2 - rat(1, 2)}, {2 * b2 - 1, b2});
                   },
                   4});
    reg.push_back({TableId::T3_2F2, 13, 1, 2, RootLocation::AllReal,
                   "a=b2+k-1/2; b1=2b2-2; b2 in (1/2,1)",
                   [](const RegionParams& p, int n) {
                       return is_zn_int(p.a[0] - p.b[1] + rat(1, 2), n) &&
                              p.b[0] == 2 * p.b[1] - 2 && p.b[1] > rat(1, 2) && p.b[1] < 1;
                   },
                   [](ParamSampler& s, int n) {
                       Rational b2 = s.in_open(rat(1, 2), rat(1));
                       return pack({b2 + s.zn(n) - rat(1, 2)}, {2 * b2 - 2, b2});
                   },
                   4});
    reg.push_back({TableId::T3_2F2, 14, 1, 2, RootLocation::AllReal,
                   "a=k+1/2; b1+b2 in {1,2}; b2 in (-1,0)",
                   [](const RegionParams& p, int n) {
                       Rational sum = p.b[0] + p.b[1];
                       return is_zn_int(p.a[0] - rat(1, 2), n) && (sum == 1 || sum == 2) &&
                              p.b[1] > -1 && p.b[1] < 0;
                   },
                   [](ParamSampler& s, int n) {
                       Rational b2 = s.in_open(rat(-1), rat(0));
                       Rational b1 = (s.coin() ? rat(2) : rat(1)) - b2;
                       return pack({s.zn(n) + rat(1, 2)}, {b1, b2});
                   },
                   4});
}

void add_table4(std::vector<RegionRow>& reg) {
    reg.push_back({TableId::T4_3F1, 1, 2, 1, RootLocation::AllPos,
                   "a1<-n+1; a2<-n+1; b>0",
                   [](const RegionParams& p, int n) {
                       return p.a[0] < -n + 1 && p.a[1] < -n + 1 && p.b[0] > 0;
                   },
                   [](ParamSampler& s, int n) {
                       return pack({s.below(rat(-n + 1)), s.below(rat(-n + 1))},
                                   {s.above(rat(0))});
                   }});
    reg.push_back({TableId::T4_3F1, 2, 2, 1, RootLocation::AllNeg,
                   "a1<-n+1; a2<-n+1; b<a1-n+2",
                   [](const RegionParams& p, int n) {
                       return p.a[0] < -n + 1 && p.a[1] < -n + 1 && p.b[0] < p.a[0] - n + 2;
                   },
                   [](ParamSampler& s, int n) {
                       Rational a1 = s.below(rat(-n + 1));
                       return pack({a1, s.below(rat(-n + 1))}, {s.below(a1 - n + 2)});
                   }});
    reg.push_back({TableId::T4_3F1, 3, 2, 1, RootLocation::AllNeg,
                   "a1>b+n-2; a2<-n+1; b>0",
                   [](const RegionParams& p, int n) {
                       return p.a[0] > p.b[0] + n - 2 && p.a[1] < -n + 1 && p.b[0] > 0;
                   },
                   [](ParamSampler& s, int n) {
                       Rational b = s.above(rat(0));
                       return pack({s.above(b + n - 2), s.below(rat(-n + 1))}, {b});
                   }});
    reg.push_back({TableId::T4_3F1, 4, 2, 1, RootLocation::AllReal,
                   "a1<-n+2 and a1 != -n+1; a2<-n+1; b in (-1,0)",
                   [](const RegionParams& p, int n) {
                       return p.a[0] < -n + 2 && p.a[0] != -n + 1 && p.a[1] < -n + 1 &&
                              p.b[0] > -1 && p.b[0] < 0;
                   },
                   [](ParamSampler& s, int n) {
                       Rational a1 = s.coin() ? s.below(rat(-n + 1))
                                              : s.in_open(rat(-n + 1), rat(-n + 2));
                       return pack({a1, s.below(rat(-n + 1))},
                                   {s.in_open(rat(-1), rat(0))});
                   }});
    reg.push_back({TableId::T4_3F1, 5, 2, 1, RootLocation::AllReal,
                   "a1>b+n-2; a2<-n+1; b in (-1,0)",
                   [](const RegionParams& p, int n) {
                       return p.a[0] > p.b[0] + n - 2 && p.a[1] < -n + 1 && p.b[0] > -1 &&
                              p.b[0] < 0;
                   },
                   [](ParamSampler& s, int n) {
                       Rational b = s.in_open(rat(-1), rat(0));
                       return pack({s.above(b + n - 2), s.below(rat(-n + 1))}, {b});
                   }});
    reg.push_back({TableId::T4_3F1, 6, 2, 1, RootLocation::AllReal,
                   "a1 in (-n+1,-n+2); a2<-n+1; b<a1-n+2 or b>0",
                   [](const RegionParams& p, int n) {
                       return p.a[0] > -n + 1 && p.a[0] < -n + 2 && p.a[1] < -n + 1 &&
                              (p.b[0] < p.a[0] - n + 2 || p.b[0] > 0);
                   },
                   [](ParamSampler& s, int n) {
                       Rational a1 = s.in_open(rat(-n + 1), rat(-n + 2));
                       Rational b = s.coin() ? s.below(a1 - n + 2) : s.above(rat(0));
                       return pack({a1, s.below(rat(-n + 1))}, {b});
                   }});
    reg.push_back({TableId::T4_3F1, 7, 2, 1, RootLocation::AllNeg,
                   "a1 in {-a2-2n, -a2-2n+1} with a1<-n+1; a2<-n+1; b=-n-k+1/2",
                   [](const RegionParams& p, int n) {
                       bool j0 = p.a[0] == -p.a[1] - 2 * n;
                       bool j1 = p.a[0] == -p.a[1] - 2 * n + 1;
                       return (j0 || j1) && p.a[0] < -n + 1 && p.a[1] < -n + 1 &&
                              is_zn_int(-p.b[0] - n + rat(1, 2), n);
                   },
                   [](ParamSampler& s, int n) {
                       long j = s.integer(0, 1);
                       // a2 in (-n-1+j, -n+1) keeps a1 = -a2-2n+j below -n+1
                       Rational a2 = s.in_open(rat(-n - 1 + j), rat(-n + 1));
                       return pack({-a2 - 2 * n + j, a2},
                                   {rat(-n) - s.zn(n) + rat(1, 2)});
                   },
                   4});
    reg.push_back({TableId::T4_3F1, 8, 2, 1, RootLocation::AllNeg,
                   "a1=(a2-n-t)/2; a2<-n+1; b=a1-k+1/2",
                   [](const RegionParams& p, int n) {
                       return zn_or_gt(p.a[1] - n - 2 * p.a[0], n) && p.a[1] < -n + 1 &&
                              is_zn_int(p.a[0] - p.b[0] + rat(1, 2), n);
                   },
                   [](ParamSampler& s, int n) {
                       Rational a2 = s.below(rat(-n + 1));
                       Rational a1 = (a2 - n - s.zn_or_above(n)) / 2;
                       return pack({a1, a2}, {a1 - s.zn(n) + rat(1, 2)});
                   },
                   4});
    reg.push_back({TableId::T4_3F1, 9, 2, 1, RootLocation::AllNeg,
                   "a1=2a2+n+1-2t; a2<-n+1; b=(a1-n)/2-k",
                   [](const RegionParams& p, int n) {
                       Rational t = (2 * p.a[1] + n + 1 - p.a[0]) / 2;
                       return zn_or_gt(t, n) && p.a[1] < -n + 1 &&
                              is_zn_int((p.a[0] - n) / 2 - p.b[0], n);
                   },
                   [](ParamSampler& s, int n) {
                       Rational a2 = s.below(rat(-n + 1));
                       Rational a1 = 2 * a2 + n + 1 - 2 * s.zn_or_above(n);
                       return pack({a1, a2}, {(a1 - n) / 2 - s.zn(n)});
                   },
                   4});
    reg.push_back({TableId::T4_3F1, 10, 2, 1, RootLocation::AllNeg,
                   "a1=2a2+n-2t; a2<-n+1; b=(a1-n+1)/2-k",
                   [](const RegionParams& p, int n) {
                       Rational t = (2 * p.a[1] + n - p.a[0]) / 2;
                       return zn_or_gt(t, n) && p.a[1] < -n + 1 &&
                              is_zn_int((p.a[0] - n + 1) / 2 - p.b[0], n);
                   },
                   [](ParamSampler& s, int n) {
                       Rational a2 = s.below(rat(-n + 1));
                       Rational a1 = 2 * a2 + n - 2 * s.zn_or_above(n);
                       return pack({a1, a2}, {(a1 - n + 1) / 2 - s.zn(n)});
                   },
                   4});
    reg.push_back({TableId::T4_3F1, 11, 2, 1, RootLocation::AllReal,
                   "a1=2a2+n+1; a2 in (-n,-n+1); b=a2+1/2",
                   [](const RegionParams& p, int n) {
                       return p.a[0] == 2 * p.a[1] + n + 1 && p.a[1] > -n &&
                              p.a[1] < -n + 1 && p.b[0] == p.a[1] + rat(1, 2);
                   },
                   [](ParamSampler& s, int n) {
                       Rational a2 = s.in_open(rat(-n), rat(-n + 1));
                       return pack({2 * a2 + n + 1, a2}, {a2 + rat(1, 2)});
                   },
                   4});
    reg.push_back({TableId::T4_3F1, 12, 2, 1, RootLocation::AllReal,
                   "a1=2a2+n; a2 in (-n+1,-n+2); b=a2+1/2",
                   [](const RegionParams& p, int n) {
                       return p.a[0] == 2 * p.a[1] + n && p.a[1] > -n + 1 &&
                              p.a[1] < -n + 2 && p.b[0] == p.a[1] + rat(1, 2);
                   },
                   [](ParamSampler& s, int n) {
                       Rational a2 = s.in_open(rat(-n + 1), rat(-n + 2));
                       return pack({2 * a2 + n, a2}, {a2 + rat(1, 2)});
                   },
                   4});
    reg.push_back({TableId::T4_3F1, 13, 2, 1, RootLocation::AllReal,
                   "a1=2a2+n+1; a2 in (-n,-n+1/2); b=a2-k+1/2",
                   [](const RegionParams& p, int n) {
                       return p.a[0] == 2 * p.a[1] + n + 1 && p.a[1] > -n &&
                              p.a[1] < rat(-2 * n + 1, 2) &&
                              is_zn_int(p.a[1] - p.b[0] + rat(1, 2), n);
                   },
                   [](ParamSampler& s, int n) {
                       Rational a2 = s.in_open(rat(-n), rat(-2 * n + 1, 2));
                       return pack({2 * a2 + n + 1, a2}, {a2 - s.zn(n) + rat(1, 2)});
                   },
                   4});
    reg.push_back({TableId::T4_3F1, 14, 2, 1, RootLocation::AllReal,
                   "a1=-a2-2n+j, j in {0,1}; a2 in (-n+1,-n+2); b=-n-k+1/2",
                   [](const RegionParams& p, int n) {
                       bool j0 = p.a[0] == -p.a[1] - 2 * n;
                       bool j1 = p.a[0] == -p.a[1] - 2 * n + 1;
                       return (j0 || j1) && p.a[1] > -n + 1 && p.a[1] < -n + 2 &&
                              is_zn_int(-p.b[0] - n + rat(1, 2), n);
                   },
                   [](ParamSampler& s, int n) {
                       Rational a2 = s.in_open(rat(-n + 1), rat(-n + 2));
                       long j = s.integer(0, 1);
                       return pack({-a2 - 2 * n + j, a2},
                                   {rat(-n) - s.zn(n) + rat(1, 2)});
                   },
                   4});
}

void add_table5(std::vector<RegionRow>& reg) {
    reg.push_back({TableId::T5_3F2major, 1, 2, 2, RootLocation::AllNeg,
                   "a1<-n+1; a2>min(b1,b2)+n-2; b1>0; b2>0",
                   [](const RegionParams& p, int n) {
                       Rational m = p.b[0] < p.b[1] ? p.b[0] : p.b[1];
                       return p.a[0] < -n + 1 && p.a[1] > m + n - 2 && p.b[0] > 0 &&
                              p.b[1] > 0;
                   },
                   [](ParamSampler& s, int n) {
                       Rational b1 = s.above(rat(0)), b2 = s.above(rat(0));
                       Rational m = b1 < b2 ? b1 : b2;
                       return pack({s.below(rat(-n + 1)), s.above(m + n - 2)}, {b1, b2});
                   }});
    reg.push_back({TableId::T5_3F2major, 2, 2, 2, RootLocation::AllPos,
                   "a1>b1+n-2; a2>b2+n-2; b1>0; b2>0",
                   [](const RegionParams& p, int n) {
                       return p.a[0] > p.b[0] + n - 2 && p.a[1] > p.b[1] + n - 2 &&
                              p.b[0] > 0 && p.b[1] > 0;
                   },
                   [](ParamSampler& s, int n) {
                       Rational b1 = s.above(rat(0)), b2 = s.above(rat(0));
                       return pack({s.above(b1 + n - 2), s.above(b2 + n - 2)}, {b1, b2});
                   }});
    reg.push_back({TableId::T5_3F2major, 3, 2, 2, RootLocation::AllPos,
                   "a1<-n+1; a2<-n+1; b1>0; b2>0",
                   [](const RegionParams& p, int n) {
                       return p.a[0] < -n + 1 && p.a[1] < -n + 1 && p.b[0] > 0 && p.b[1] > 0;
                   },
                   [](ParamSampler& s, int n) {
                       return pack({s.below(rat(-n + 1)), s.below(rat(-n + 1))},
                                   {s.above(rat(0)), s.above(rat(0))});
                   }});
    reg.push_back({TableId::T5_3F2major, 4, 2, 2, RootLocation::AllNeg,
                   "a1<-n+1; a2<-n+1; b1>0; b2<min(a1,a2)-n+2",
                   [](const RegionParams& p, int n) {
                       Rational m = p.a[0] < p.a[1] ? p.a[0] : p.a[1];
                       return p.a[0] < -n + 1 && p.a[1] < -n + 1 && p.b[0] > 0 &&
                              p.b[1] < m - n + 2;
                   },
                   [](ParamSampler& s, int n) {
                       Rational a1 = s.below(rat(-n + 1)), a2 = s.below(rat(-n + 1));
                       Rational m = a1 < a2 ? a1 : a2;
                       return pack({a1, a2}, {s.above(rat(0)), s.below(m - n + 2)});
                   }});
    reg.push_back({TableId::T5_3F2major, 5, 2, 2, RootLocation::AllPos,
                   "a1<-n+1; a2<-n+1; b1<a1-n+2; b2<a2-n+2",
                   [](const RegionParams& p, int n) {
                       return p.a[0] < -n + 1 && p.a[1] < -n + 1 &&
                              p.b[0] < p.a[0] - n + 2 && p.b[1] < p.a[1] - n + 2;
                   },
                   [](ParamSampler& s, int n) {
                       Rational a1 = s.below(rat(-n + 1)), a2 = s.below(rat(-n + 1));
                       return pack({a1, a2}, {s.below(a1 - n + 2), s.below(a2 - n + 2)});
                   }});
    reg.push_back({TableId::T5_3F2major, 6, 2, 2, RootLocation::AllPos,
                   "a1<-n+1; a2>b2+n-2; b1<a1-n+2; b2>0",
                   [](const RegionParams& p, int n) {
                       return p.a[0] < -n + 1 && p.a[1] > p.b[1] + n - 2 &&
                              p.b[0] < p.a[0] - n + 2 && p.b[1] > 0;
                   },
                   [](ParamSampler& s, int n) {
                       Rational a1 = s.below(rat(-n + 1));
                       Rational b2 = s.above(rat(0));
                       return pack({a1, s.above(b2 + n - 2)}, {s.below(a1 - n + 2), b2});
                   }});
}

void add_table6(std::vector<RegionRow>& reg) {
    // the additive-convolution 2F2 rows with a Bessel block a2<-n+1 appended
    reg.push_back({TableId::T6_3F2case2, 1, 2, 2, RootLocation::AllNeg,
                   "a1=k+1/2; b1=2-b2>0 or b1=1-b2>0; b2>0; a2<-n+1",
                   [](const RegionParams& p, int n) {
                       return p.a[1] < -n + 1 && is_zn_int(p.a[0] - rat(1, 2), n) &&
                              p.b[1] > 0 && p.b[0] > 0 &&
                              (p.b[0] == 2 - p.b[1] || p.b[0] == 1 - p.b[1]);
                   },
                   [](ParamSampler& s, int n) {
                       bool two = s.coin();
                       Rational b2 = s.in_open(rat(0), two ? rat(2) : rat(1));
                       Rational b1 = (two ? rat(2) : rat(1)) - b2;
                       return pack({s.zn(n) + rat(1, 2), s.below(rat(-n + 1))}, {b1, b2});
                   },
                   4});
    reg.push_back({TableId::T6_3F2case2, 2, 2, 2, RootLocation::AllNeg,
                   "a1=b1+k-1/2; b1=(b2+t+1)/2; b2>0; a2<-n+1",
                   [](const RegionParams& p, int n) {
                       return p.a[1] < -n + 1 &&
                              is_zn_int(p.a[0] - p.b[0] + rat(1, 2), n) &&
                              zn_or_gt(2 * p.b[0] - p.b[1] - 1, n) && p.b[1] > 0;
                   },
                   [](ParamSampler& s, int n) {
                       Rational b2 = s.above(rat(0));
                       Rational b1 = (b2 + s.zn_or_above(n) + 1) / 2;
                       return pack({b1 + s.zn(n) - rat(1, 2), s.below(rat(-n + 1))},
                                   {b1, b2});
                   },
                   4});
    reg.push_back({TableId::T6_3F2case2, 3, 2, 2, RootLocation::AllNeg,
                   "a1=(b1+1)/2+k; b1=2(b2-1+t); b2>0; a2<-n+1",
                   [](const RegionParams& p, int n) {
                       return p.a[1] < -n + 1 && is_zn_int(p.a[0] - (p.b[0] + 1) / 2, n) &&
                              zn_or_gt(p.b[0] / 2 - p.b[1] + 1, n) && p.b[1] > 0;
                   },
                   [](ParamSampler& s, int n) {
                       Rational b2 = s.above(rat(0));
                       Rational b1 = 2 * (b2 - 1 + s.zn_or_above(n));
                       return pack({(b1 + 1) / 2 + s.zn(n), s.below(rat(-n + 1))},
                                   {b1, b2});
                   },
                   4});
    reg.push_back({TableId::T6_3F2case2, 4, 2, 2, RootLocation::AllNeg,
                   "a1=b1/2+k; b1=2(b2+t)-1; b2>0; a2<-n+1",
                   [](const RegionParams& p, int n) {
                       return p.a[1] < -n + 1 && is_zn_int(p.a[0] - p.b[0] / 2, n) &&
                              zn_or_gt((p.b[0] + 1) / 2 - p.b[1], n) && p.b[1] > 0;
                   },
                   [](ParamSampler& s, int n) {
                       Rational b2 = s.above(rat(0));
                       Rational b1 = 2 * (b2 + s.zn_or_above(n)) - 1;
                       return pack({b1 / 2 + s.zn(n), s.below(rat(-n + 1))}, {b1, b2});
                   },
                   4});
    reg.push_back({TableId::T6_3F2case2, 5, 2, 2, RootLocation::AllReal,
                   "a1=b2-1/2; b1=2b2-2; b2 in (0,1); a2<-n+1",
                   [](const RegionParams& p, int n) {
                       return p.a[1] < -n + 1 && p.a[0] == p.b[1] - rat(1, 2) &&
                              p.b[0] == 2 * p.b[1] - 2 && p.b[1] > 0 && p.b[1] < 1;
                   },
                   [](ParamSampler& s, int n) {
                       Rational b2 = s.in_open(rat(0), rat(1));
                       return pack({b2 - rat(1, 2), s.below(rat(-n + 1))},
                                   {2 * b2 - 2, b2});
                   },
                   4});
    reg.push_back({TableId::T6_3F2case2, 6, 2, 2, RootLocation::AllReal,
                   "a1=b2-1/2; b1=2b2-1; b2 in (-1,0); a2<-n+1",
                   [](const RegionParams& p, int n) {
                       return p.a[1] < -n + 1 && p.a[0] == p.b[1] - rat(1, 2) &&
                              p.b[0] == 2 * p.b[1] - 1 && p.b[1] > -1 && p.b[1] < 0;
                   },
                   [](ParamSampler& s, int n) {
                       Rational b2 = s.in_open(rat(-1), rat(0));
                       return pack({b2 - rat(1, 2), s.below(rat(-n + 1))},
                                   {2 * b2 - 1, b2});
                   },
                   4});
    reg.push_back({TableId::T6_3F2case2, 7, 2, 2, RootLocation::AllReal,
                   "a1=b2+k-1/2; b1=2b2-2; b2 in (1/2,1); a2<-n+1",
                   [](const RegionParams& p, int n) {
                       return p.a[1] < -n + 1 &&
                              is_zn_int(p.a[0] - p.b[1] + rat(1, 2), n) &&
                              p.b[0] == 2 * p.b[1] - 2 && p.b[1] > rat(1, 2) && p.b[1] < 1;
                   },
                   [](ParamSampler& s, int n) {
                       Rational b2 = s.in_open(rat(1, 2), rat(1));
                       return pack({b2 + s.zn(n) - rat(1, 2), s.below(rat(-n + 1))},
                                   {2 * b2 - 2, b2});
                   },
                   4});
    reg.push_back({TableId::T6_3F2case2, 8, 2, 2, RootLocation::AllReal,
                   "a1=k+1/2; b1=1-b2 or 2-b2; b2 in (-1,0); a2<-n+1",
                   [](const RegionParams& p, int n) {
                       return p.a[1] < -n + 1 && is_zn_int(p.a[0] - rat(1, 2), n) &&
                              (p.b[0] == 1 - p.b[1] || p.b[0] == 2 - p.b[1]) &&
                              p.b[1] > -1 && p.b[1] < 0;
                   },
                   [](ParamSampler& s, int n) {
                       Rational b2 = s.in_open(rat(-1), rat(0));
                       Rational b1 = (s.coin() ? rat(2) : rat(1)) - b2;
                       return pack({s.zn(n) + rat(1, 2), s.below(rat(-n + 1))}, {b1, b2});
                   },
                   4});
}

void add_table7(std::vector<RegionRow>& reg) {
    // the 3F1 rows with a standard Laguerre block b2>0 appended
    reg.push_back({TableId::T7_3F2case3, 1, 2, 2, RootLocation::AllNeg,
                   "a1=-a2-2n+j<-n+1; a2<-n+1; b1=-n-k+1/2; b2>0",
                   [](const RegionParams& p, int n) {
                       bool j0 = p.a[0] == -p.a[1] - 2 * n;
                       bool j1 = p.a[0] == -p.a[1] - 2 * n + 1;
                       return (j0 || j1) && p.a[0] < -n + 1 && p.a[1] < -n + 1 &&
                              is_zn_int(-p.b[0] - n + rat(1, 2), n) && p.b[1] > 0;
                   },
                   [](ParamSampler& s, int n) {
                       long j = s.integer(0, 1);
                       Rational a2 = s.in_open(rat(-n - 1 + j), rat(-n + 1));
                       return pack({-a2 - 2 * n + j, a2},
                                   {rat(-n) - s.zn(n) + rat(1, 2), s.above(rat(0))});
                   },
                   4});
    reg.push_back({TableId::T7_3F2case3, 2, 2, 2, RootLocation::AllNeg,
                   "a1=(a2-n-t)/2; a2<-n+1; b1=a1-k+1/2; b2>0",
                   [](const RegionParams& p, int n) {
                       return zn_or_gt(p.a[1] - n - 2 * p.a[0], n) && p.a[1] < -n + 1 &&
                              is_zn_int(p.a[0] - p.b[0] + rat(1, 2), n) && p.b[1] > 0;
                   },
                   [](ParamSampler& s, int n) {
                       Rational a2 = s.below(rat(-n + 1));
                       Rational a1 = (a2 - n - s.zn_or_above(n)) / 2;
                       return pack({a1, a2}, {a1 - s.zn(n) + rat(1, 2), s.above(rat(0))});
                   },
                   4});
    reg.push_back({TableId::T7_3F2case3, 3, 2, 2, RootLocation::AllNeg,
                   "a1=2a2+n+1-2t; a2<-n+1; b1=(a1-n)/2-k; b2>0",
                   [](const RegionParams& p, int n) {
                       Rational t = (2 * p.a[1] + n + 1 - p.a[0]) / 2;
                       return zn_or_gt(t, n) && p.a[1] < -n + 1 &&
                              is_zn_int((p.a[0] - n) / 2 - p.b[0], n) && p.b[1] > 0;
                   },
                   [](ParamSampler& s, int n) {
                       Rational a2 = s.below(rat(-n + 1));
                       Rational a1 = 2 * a2 + n + 1 - 2 * s.zn_or_above(n);
                       return pack({a1, a2}, {(a1 - n) / 2 - s.zn(n), s.above(rat(0))});
                   },
                   4});
    reg.push_back({TableId::T7_3F2case3, 4, 2, 2, RootLocation::AllNeg,
                   "a1=2a2+n-2t; a2<-n+1; b1=(a1-n+1)/2-k; b2>0",
                   [](const RegionParams& p, int n) {
                       Rational t = (2 * p.a[1] + n - p.a[0]) / 2;
                       return zn_or_gt(t, n) && p.a[1] < -n + 1 &&
                              is_zn_int((p.a[0] - n + 1) / 2 - p.b[0], n) && p.b[1] > 0;
                   },
                   [](ParamSampler& s, int n) {
                       Rational a2 = s.below(rat(-n + 1));
                       Rational a1 = 2 * a2 + n - 2 * s.zn_or_above(n);
                       return pack({a1, a2},
                                   {(a1 - n + 1) / 2 - s.zn(n), s.above(rat(0))});
                   },
                   4});
    reg.push_back({TableId::T7_3F2case3, 5, 2, 2, RootLocation::AllReal,
                   "a1=2a2+n+1; a2 in (-n,-n+1); b1=a2+1/2; b2>0",
                   [](const RegionParams& p, int n) {
                       return p.a[0] == 2 * p.a[1] + n + 1 && p.a[1] > -n &&
                              p.a[1] < -n + 1 && p.b[0] == p.a[1] + rat(1, 2) && p.b[1] > 0;
                   },
                   [](ParamSampler& s, int n) {
                       Rational a2 = s.in_open(rat(-n), rat(-n + 1));
                       return pack({2 * a2 + n + 1, a2}, {a2 + rat(1, 2), s.above(rat(0))});
                   },
                   4});
    reg.push_back({TableId::T7_3F2case3, 6, 2, 2, RootLocation::AllReal,
                   "a1=2a2+n; a2 in (-n+1,-n+2); b1=a2+1/2; b2>0",
                   [](const RegionParams& p, int n) {
                       return p.a[0] == 2 * p.a[1] + n && p.a[1] > -n + 1 &&
                              p.a[1] < -n + 2 && p.b[0] == p.a[1] + rat(1, 2) && p.b[1] > 0;
                   },
                   [](ParamSampler& s, int n) {
                       Rational a2 = s.in_open(rat(-n + 1), rat(-n + 2));
                       return pack({2 * a2 + n, a2}, {a2 + rat(1, 2), s.above(rat(0))});
                   },
                   4});
    reg.push_back({TableId::T7_3F2case3, 7, 2, 2, RootLocation::AllReal,
                   "a1=2a2+n+1; a2 in (-n,-n+1/2); b1=a2-k+1/2; b2>0",
                   [](const RegionParams& p, int n) {
                       return p.a[0] == 2 * p.a[1] + n + 1 && p.a[1] > -n &&
                              p.a[1] < rat(-2 * n + 1, 2) &&
                              is_zn_int(p.a[1] - p.b[0] + rat(1, 2), n) && p.b[1] > 0;
                   },
                   [](ParamSampler& s, int n) {
                       Rational a2 = s.in_open(rat(-n), rat(-2 * n + 1, 2));
                       return pack({2 * a2 + n + 1, a2},
                                   {a2 - s.zn(n) + rat(1, 2), s.above(rat(0))});
                   },
                   4});
    reg.push_back({TableId::T7_3F2case3, 8, 2, 2, RootLocation::AllReal,
                   "a1=-a2-2n+j; a2 in (-n+1,-n+2); b1=-n-k+1/2; b2>0",
                   [](const RegionParams& p, int n) {
                       bool j0 = p.a[0] == -p.a[1] - 2 * n;
                       bool j1 = p.a[0] == -p.a[1] - 2 * n + 1;
                       return (j0 || j1) && p.a[1] > -n + 1 && p.a[1] < -n + 2 &&
                              is_zn_int(-p.b[0] - n + rat(1, 2), n) && p.b[1] > 0;
                   },
                   [](ParamSampler& s, int n) {
                       Rational a2 = s.in_open(rat(-n + 1), rat(-n + 2));
                       long j = s.integer(0, 1);
                       return pack({-a2 - 2 * n + j, a2},
                                   {rat(-n) - s.zn(n) + rat(1, 2), s.above(rat(0))});
                   },
                   4});
}

void add_table8(std::vector<RegionRow>& reg) {
    reg.push_back({TableId::T8_3F2extra, 1, 2, 2, RootLocation::AllPos,
                   "a1>2n-1; a2=1/2; b1 in (0,2); b2=2-b1",
                   [](const RegionParams& p, int n) {
                       return p.a[0] > 2 * n - 1 && p.a[1] == rat(1, 2) && p.b[0] > 0 &&
                              p.b[0] < 2 && p.b[1] == 2 - p.b[0];
                   },
                   [](ParamSampler& s, int n) {
                       Rational b1 = s.in_open(rat(0), rat(2));
                       return pack({s.above(rat(2 * n - 1)), rat(1, 2)}, {b1, 2 - b1});
                   }});
    reg.push_back({TableId::T8_3F2extra, 2, 2, 2, RootLocation::AllPos,
                   "a1>2(b1+n-1); a2=b1-1/2; b1>0; b2=2b1-1",
                   [](const RegionParams& p, int n) {
                       return p.b[0] > 0 && p.a[0] > 2 * (p.b[0] + n - 1) &&
                              p.a[1] == p.b[0] - rat(1, 2) && p.b[1] == 2 * p.b[0] - 1;
                   },
                   [](ParamSampler& s, int n) {
                       Rational b1 = s.above(rat(0));
                       return pack({s.above(2 * (b1 + n - 1)), b1 - rat(1, 2)},
                                   {b1, 2 * b1 - 1});
                   }});
    reg.push_back({TableId::T8_3F2extra, 3, 2, 2, RootLocation::AllNeg,
                   "a1<-n+1; a2=b1-1/2; b1>0; b2=2b1-1",
                   [](const RegionParams& p, int n) {
                       return p.b[0] > 0 && p.a[0] < -n + 1 &&
                              p.a[1] == p.b[0] - rat(1, 2) && p.b[1] == 2 * p.b[0] - 1;
                   },
                   [](ParamSampler& s, int n) {
                       Rational b1 = s.above(rat(0));
                       return pack({s.below(rat(-n + 1)), b1 - rat(1, 2)},
                                   {b1, 2 * b1 - 1});
                   }});
    reg.push_back({TableId::T8_3F2extra, 4, 2, 2, RootLocation::AllPos,
                   "a1>2(b1+n)-3; a2=b1-1/2; b1>1; b2=2b1-2",
                   [](const RegionParams& p, int n) {
                       return p.b[0] > 1 && p.a[0] > 2 * (p.b[0] + n) - 3 &&
                              p.a[1] == p.b[0] - rat(1, 2) && p.b[1] == 2 * p.b[0] - 2;
                   },
                   [](ParamSampler& s, int n) {
                       Rational b1 = s.above(rat(1));
                       return pack({s.above(2 * (b1 + n) - 3), b1 - rat(1, 2)},
                                   {b1, 2 * b1 - 2});
                   }});
    reg.push_back({TableId::T8_3F2extra, 5, 2, 2, RootLocation::AllNeg,
                   "a1<-n+1; a2=b1-1/2; b1>1; b2=2b1-2",
                   [](const RegionParams& p, int n) {
                       return p.b[0] > 1 && p.a[0] < -n + 1 &&
                              p.a[1] == p.b[0] - rat(1, 2) && p.b[1] == 2 * p.b[0] - 2;
                   },
                   [](ParamSampler& s, int n) {
                       Rational b1 = s.above(rat(1));
                       return pack({s.below(rat(-n + 1)), b1 - rat(1, 2)},
                                   {b1, 2 * b1 - 2});
                   }});
}

std::vector<RegionRow> build_registry() {
    std::vector<RegionRow> reg;
    add_table1(reg);
    add_table2(reg);
    add_table3(reg);
    add_table4(reg);
    add_table5(reg);
    add_table6(reg);
    add_table7(reg);
    add_table8(reg);
    return reg;
}

}  // namespace

const std::vector<RegionRow>& region_registry() {
    static const std::vector<RegionRow> registry = build_registry();
    return registry;
}

std::string to_string(TableId id) {
    switch (id) {
        case TableId::T1_1F1: return "T1";
        case TableId::T2_2F1: return "T2";
        case TableId::T3_2F2: return "T3";
        case TableId::T4_3F1: return "T4";
        case TableId::T5_3F2major: return "T5";
        case TableId::T6_3F2case2: return "T6";
        case TableId::T7_3F2case3: return "T7";
        case TableId::T8_3F2extra: return "T8";
    }
    return "?";
}

TableId parse_table_id(const std::string& s) {
    for (TableId id : {TableId::T1_1F1, TableId::T2_2F1, TableId::T3_2F2, TableId::T4_3F1,
                       TableId::T5_3F2major, TableId::T6_3F2case2, TableId::T7_3F2case3,
                       TableId::T8_3F2extra})
        if (to_string(id) == s) return id;
    throw argument_error("unknown table id: " + s);
}

std::string registry_hash() {
    uint64_t h = 1469598103934665603ull;
    auto mix = [&h](const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ull;
        }
    };
    for (const auto& row : region_registry()) {
        mix(to_string(row.table));
        mix("|" + std::to_string(row.row) + "|" + std::to_string(row.na) + "," +
            std::to_string(row.nb) + "|" + to_string(row.expected) + "|" +
            row.constraint_text + "\n");
    }
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string params_to_json(const RegionParams& p) {
    std::string s = "{\"a\":[";
    for (size_t i = 0; i < p.a.size(); ++i)
        s += (i ? ",\"" : "\"") + to_string(p.a[i]) + "\"";
    s += "],\"b\":[";
    for (size_t i = 0; i < p.b.size(); ++i)
        s += (i ? ",\"" : "\"") + to_string(p.b[i]) + "\"";
    return s + "]}";
}

RowVerdict check_row(const RegionRow& row, const RegionParams& params, int n) {
    if (static_cast<int>(params.a.size()) != row.na ||
        static_cast<int>(params.b.size()) != row.nb)
        throw argument_error("check_row: parameter tuple sizes do not match the row");
    if (n < row.min_n || !row.predicate(params, n))
        throw precondition_error("check_row: parameters violate the row predicate");
    HypergeomSpec spec;
    spec.n = n;
    spec.a = params.a;
    spec.b = params.b;
    if (!full_degree(spec))
        throw precondition_error("check_row: numerator parameter in -Z_n");
    Poly p = pFq_std(spec);
    RowVerdict v;
    v.expected = row.expected;
    v.certified = classify(p);
    v.pass = certifies_claim(p, row.expected);
    if (!v.pass) {
        RootCertificate cert = certify(p);
        std::ostringstream os;
        os << "certificate: degree " << cert.degree << ", nonreal " << cert.nonreal_count
           << ", roots";
        for (const auto& r : cert.real_roots) {
            if (r.exact)
                os << " {" << to_string(r.lo) << " x" << r.multiplicity << "}";
            else
                os << " (" << to_string(r.lo) << "," << to_string(r.hi) << ")x"
                   << r.multiplicity;
        }
        v.note = os.str();
    }
    return v;
}

std::vector<const RegionRow*> applicable_rows(const HypergeomSpec& spec) {
    std::vector<const RegionRow*> out;
    const int na = static_cast<int>(spec.a.size());
    const int nb = static_cast<int>(spec.b.size());
    auto permutations = [](const std::vector<Rational>& t) {
        std::vector<std::vector<Rational>> perms{t};
        if (t.size() == 2) perms.push_back({t[1], t[0]});
        return perms;
    };
    for (const auto& row : region_registry()) {
        if (row.na != na || row.nb != nb || spec.n < row.min_n) continue;
        bool hit = false;
        for (const auto& ap : permutations(spec.a))
            for (const auto& bp : permutations(spec.b)) {
                RegionParams p;
                p.a = ap;
                p.b = bp;
                if (row.predicate(p, spec.n)) hit = true;
            }
        if (hit) out.push_back(&row);
    }
    return out;
}

std::optional<RootLocation> theoretical_claim(const HypergeomSpec& spec) {
    std::optional<RootLocation> best;
    for (const RegionRow* row : applicable_rows(spec))
        if (!best || claim_implies(row->expected, *best)) best = row->expected;
    return best;
}

bool in_excluded_region(const RegionParams& p, int n) {
    if (p.a.size() != 1 || p.b.size() != 2)
        throw argument_error("exclusion regions are for 2F2 parameters");
    const Rational &a = p.a[0], &b1 = p.b[0], &b2 = p.b[1];
    bool regionA =
        b1 < -n + 1 && b2 < -n + 1 && (a > 0 || a < maxr(b1 - n + 2, b2 - n + 2));
    bool regionB = (b1 < -n + 1 && a > 0 && b2 > a + n - 2) ||
                   (b2 < -n + 1 && a > 0 && b1 > a + n - 2);
    return regionA || regionB;
}

RegionParams sample_excluded(ParamSampler& s, int n, int which) {
    if (which == 0) {
        Rational b1 = s.below(rat(-n + 1)), b2 = s.below(rat(-n + 1));
        Rational a = s.coin() ? s.above(rat(0)) : s.below(maxr(b1 - n + 2, b2 - n + 2));
        return pack({a}, {b1, b2});
    }
    Rational b1 = s.below(rat(-n + 1));
    Rational a = s.above(rat(0));
    Rational b2 = s.above(a + n - 2);
    return pack({a}, {b1, b2});
}

RowVerdict check_excluded(const RegionParams& params, int n) {
    if (!in_excluded_region(params, n))
        throw precondition_error("check_excluded: parameters outside both regions");
    HypergeomSpec spec;
    spec.n = n;
    spec.a = params.a;
    spec.b = params.b;
    Poly p = pFq_std(spec);
    RowVerdict v;
    v.expected = RootLocation::NotAllReal;
    v.certified = classify(p);
    v.pass = (v.certified == RootLocation::NotAllReal);
    return v;
}

namespace {

HypergeomSpec make_spec(int n, std::vector<Rational> a, std::vector<Rational> b) {
    HypergeomSpec s;
    s.n = n;
    s.a = std::move(a);
    s.b = std::move(b);
    return s;
}

MonotoneVerdict verdict_of(bool pass, const std::string& note = "") {
    MonotoneVerdict v;
    v.pass = pass;
    v.note = note;
    return v;
}

bool in_01_2(const Rational& t) { return t >= 0 && t <= 2; }

}  // namespace

std::string to_string(MonotoneFamily id) {
    switch (id) {
        case MonotoneFamily::T41: return "T41";
        case MonotoneFamily::T43: return "T43";
        case MonotoneFamily::T44: return "T44";
        case MonotoneFamily::T45: return "T45";
        case MonotoneFamily::T46: return "T46";
        case MonotoneFamily::I1F1: return "I1F1";
        case MonotoneFamily::I2F0: return "I2F0";
        case MonotoneFamily::I2F1a: return "I2F1a";
        case MonotoneFamily::I2F1b: return "I2F1b";
        case MonotoneFamily::I2F1c: return "I2F1c";
    }
    return "?";
}

MonotoneVerdict check_monotone_family(MonotoneFamily id, const std::vector<Rational>& params,
                                      int n, const Rational& t) {
    switch (id) {
        case MonotoneFamily::I1F1: {
            if (params.size() != 1) throw argument_error("I1F1 needs {b}");
            const Rational& b = params[0];
            if (!(b > 0) || !(in_01_2(t) || (t == 3 && b >= n)))
                throw precondition_error("I1F1: need b>0 and t in [0,2] (or t=3, b>=n)");
            Poly l = pFq_std(make_spec(n, {}, {b}));
            Poly r = pFq_std(make_spec(n, {}, {b + t}));
            return verdict_of(interlaces(l, r).p_preccurly_q);
        }
        case MonotoneFamily::I2F0: {
            if (params.size() != 1) throw argument_error("I2F0 needs {a}");
            const Rational& a = params[0];
            if (!(a < -n + 1) || !in_01_2(t))
                throw precondition_error("I2F0: need a<-n+1 and t in [0,2]");
            Poly l = pFq_std(make_spec(n, {a}, {}));
            Poly r = pFq_std(make_spec(n, {a - t}, {}));
            return verdict_of(interlaces(l, r).p_preccurly_q);
        }
        case MonotoneFamily::I2F1a: {
            if (params.size() != 3) throw argument_error("I2F1a needs {a, b, s}");
            const Rational &a = params[0], &b = params[1], &s = params[2];
            if (!(b > 0 && a > n + b && in_01_2(s) && in_01_2(t)))
                throw precondition_error("I2F1a: need b>0, a>n+b, s,t in [0,2]");
            Poly l = pFq_std(make_spec(n, {a + s}, {b}));
            Poly r = pFq_std(make_spec(n, {a + t}, {b + t}));
            return verdict_of(interlaces(l, r).p_preccurly_q);
        }
        case MonotoneFamily::I2F1b: {
            if (params.size() != 3) throw argument_error("I2F1b needs {a, b, s}");
            const Rational &a = params[0], &b = params[1], &s = params[2];
            if (!(b > 0 && a < -n + 1 && in_01_2(s) && in_01_2(t)))
                throw precondition_error("I2F1b: need b>0, a<-n+1, s,t in [0,2]");
            Poly l = pFq_std(make_spec(n, {a}, {b + t}));
            Poly r = pFq_std(make_spec(n, {a - s}, {b}));
            return verdict_of(interlaces(l, r).p_preccurly_q);
        }
        case MonotoneFamily::I2F1c: {
            if (params.size() != 3) throw argument_error("I2F1c needs {a, b, s}");
            const Rational &a = params[0], &b = params[1], &s = params[2];
            if (!(b < a - n + 1 && a < -n + 1 && in_01_2(s) && in_01_2(t)))
                throw precondition_error("I2F1c: need b<a-n+1, a<-n+1, s,t in [0,2]");
            Poly l = pFq_std(make_spec(n, {a - t}, {b - t}));
            Poly r = pFq_std(make_spec(n, {a}, {b - s}));
            return verdict_of(interlaces(l, r).p_preccurly_q);
        }
        case MonotoneFamily::T41: {
            if (params.size() != 3) throw argument_error("T41 needs {gamma, a, b}");
            const Rational &gamma = params[0], &a = params[1], &b = params[2];
            if (!(gamma > 0 && in_01_2(t)))
                throw precondition_error("T41: need gamma>0 and t in [0,2]");
            Poly base = pFq_std(make_spec(n, {a}, {b}));
            if (!certifies_claim(base, RootLocation::AllReal))
                throw precondition_error("T41: base polynomial is not real-rooted");
            Poly aug = pFq_std(make_spec(n, {a}, {b, gamma}));
            bool real_kept = certifies_claim(aug, RootLocation::AllReal);
            bool inter = true;
            if (certifies_claim(base, RootLocation::AllNonNeg)) {
                Poly aug_t = pFq_std(make_spec(n, {a}, {b, gamma + t}));
                inter = interlaces(aug, aug_t).p_preccurly_q;
            }
            return verdict_of(real_kept && inter);
        }
        case MonotoneFamily::T43: {
            if (params.size() != 3) throw argument_error("T43 needs {gamma, a, b}");
            const Rational &gamma = params[0], &a = params[1], &b = params[2];
            if (!(gamma < -n + 1 && in_01_2(t)))
                throw precondition_error("T43: need gamma<-n+1 and t in [0,2]");
            Poly base = pFq_std(make_spec(n, {a}, {b}));
            if (!certifies_claim(base, RootLocation::AllReal))
                throw precondition_error("T43: base polynomial is not real-rooted");
            Poly aug = pFq_std(make_spec(n, {a, gamma}, {b}));
            bool real_kept = certifies_claim(aug, RootLocation::AllReal);
            bool inter = true;
            if (certifies_claim(base, RootLocation::AllNonNeg)) {
                Poly aug_t = pFq_std(make_spec(n, {a, gamma - t}, {b}));
                inter = interlaces(aug, aug_t).p_preccurly_q;
            }
            return verdict_of(real_kept && inter);
        }
        case MonotoneFamily::T44: {
            if (params.size() != 5) throw argument_error("T44 needs {alpha, beta, s, a, b}");
            const Rational &alpha = params[0], &beta = params[1], &s = params[2];
            const Rational &a = params[3], &b = params[4];
            if (!(beta > 0 && alpha > beta + n - 1 && in_01_2(s) && in_01_2(t)))
                throw precondition_error("T44: need beta>0, alpha>beta+n-1, s,t in [0,2]");
            Poly base = pFq_std(make_spec(n, {a}, {b}));
            if (!certifies_claim(base, RootLocation::AllReal))
                throw precondition_error("T44: base polynomial is not real-rooted");
            Poly aug = pFq_std(make_spec(n, {a, alpha}, {b, beta}));
            bool real_kept = certifies_claim(aug, RootLocation::AllReal);
            bool inter = true;
            if (certifies_claim(base, RootLocation::AllNonNeg)) {
                Poly l = pFq_std(make_spec(n, {a, alpha + s}, {b, beta}));
                Poly r = pFq_std(make_spec(n, {a, alpha + t}, {b, beta + t}));
                inter = interlaces(l, r).p_preccurly_q;
            }
            return verdict_of(real_kept && inter);
        }
        case MonotoneFamily::T45: {
            if (params.size() < 2) throw argument_error("T45 needs {i, j, a..., b...}");
            const int i = static_cast<int>(params[0].get_num().get_si());
            const int j = static_cast<int>(params[1].get_num().get_si());
            if (params.size() != static_cast<size_t>(2 + i + j))
                throw argument_error("T45: tuple sizes do not match");
            std::vector<Rational> a(params.begin() + 2, params.begin() + 2 + i);
            std::vector<Rational> b(params.begin() + 2 + i, params.end());
            for (const auto& x : a)
                if (!(x < -n + 1)) throw precondition_error("T45: need every a<-n+1");
            for (const auto& x : b)
                if (!(x > 0)) throw precondition_error("T45: need every b>0");
            if (!in_01_2(t)) throw precondition_error("T45: need t in [0,2]");
            Poly p = pFq_std(make_spec(n, a, b));
            const bool even = (i % 2 == 0);
            bool sign_ok =
                certifies_claim(p, even ? RootLocation::AllPos : RootLocation::AllNeg);
            bool inter_ok = true;
            std::string note;
            if (j >= 1) {
                std::vector<Rational> bt = b;
                bt[0] += t;
                Poly q = pFq_std(make_spec(n, a, bt));
                inter_ok =
                    even ? interlaces(p, q).p_preccurly_q : interlaces(q, p).p_preccurly_q;
                if (!even) note = "direction reversed for odd numerator count";
            }
            if (inter_ok && i >= 1) {
                std::vector<Rational> at = a;
                at[0] -= t;
                Poly q = pFq_std(make_spec(n, at, b));
                inter_ok =
                    even ? interlaces(q, p).p_preccurly_q : interlaces(p, q).p_preccurly_q;
            }
            return verdict_of(sign_ok && inter_ok, note);
        }
        case MonotoneFamily::T46: {
            if (params.size() < 2) throw argument_error("T46 needs {i, j, a..., b...}");
            const int i = static_cast<int>(params[0].get_num().get_si());
            const int j = static_cast<int>(params[1].get_num().get_si());
            if (params.size() != static_cast<size_t>(2 + i + j) || j < i)
                throw argument_error("T46: tuple sizes do not match or j < i");
            std::vector<Rational> a(params.begin() + 2, params.begin() + 2 + i);
            std::vector<Rational> b(params.begin() + 2 + i, params.end());
            for (const auto& x : b)
                if (!(x > 0)) throw precondition_error("T46: need every b>0");
            for (int s = 0; s < i; ++s)
                if (!(a[static_cast<size_t>(s)] >= n - 1 + b[static_cast<size_t>(s)]))
                    throw precondition_error("T46: need a_s >= n-1+b_s");
            Poly p = pFq_std(make_spec(n, a, b));
            return verdict_of(certifies_claim(p, RootLocation::AllPos));
        }
    }
    throw argument_error("check_monotone_family: unknown id");
}

bool run_table_sweep(TableId table, std::optional<int> row_filter,
                     const std::vector<int>& n_list, int samples, uint64_t seed,
                     std::ostream& csv) {
    bool all_pass = true;
    for (const auto& row : region_registry()) {
        if (row.table != table) continue;
        if (row_filter && *row_filter != row.row) continue;
        for (int n : n_list) {
            if (n < row.min_n) continue;
            ParamSampler sampler(seed * 1000003ull + static_cast<uint64_t>(row.row) * 8191ull +
                                 static_cast<uint64_t>(n) * 131ull +
                                 static_cast<uint64_t>(row.table));
            for (int s = 0; s < samples; ++s) {
                RegionParams params;
                bool found = false;
                for (int tries = 0; tries < 500 && !found; ++tries) {
                    params = row.sample(sampler, n);
                    HypergeomSpec spec;
                    spec.n = n;
                    spec.a = params.a;
                    spec.b = params.b;
                    found = row.predicate(params, n) && full_degree(spec);
                }
                std::string status;
                RowVerdict v;
                if (!found) {
                    status = "SAMPLER_STUCK";
                    all_pass = false;
                } else {
                    v = check_row(row, params, n);
                    status = v.pass ? "PASS" : "FAIL";
                    if (!v.pass) all_pass = false;
                }
                std::string pj = params_to_json(params);
                std::string quoted = "\"";
                for (char c : pj)
                    quoted += (c == '"') ? std::string("\"\"") : std::string(1, c);
                quoted += "\"";
                csv << to_string(table) << "," << row.row << "," << n << "," << quoted << ","
                    << to_string(row.expected) << "," << to_string(v.certified) << ","
                    << status << "\n";
            }
        }
    }
    return all_pass;
}

}  // namespace finfree
