#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wsets/construction.hpp"
#include "wsets/fold.hpp"

#include <random>

using namespace wsets;

namespace {

Scalar pi(Rational r) { return Scalar::pi_units(std::move(r)); }

Params params(int n, Rational eps_ratio) {
    return Params(n, EpsBinding(std::move(eps_ratio)));
}

IntervalSet one(const Scalar& lo, const Scalar& hi, const EpsBinding& b) {
    return IntervalSet::normalize({{lo, hi}}, b);
}

}  // namespace

TEST_CASE("admissible eps range") {
    CHECK(delta_bound(1) == pi(Rational(8, 21)));
    CHECK(delta_bound(2) == pi(Rational(16, 45)));
    CHECK(delta_bound(3) == pi(Rational(32, 93)));
    CHECK_THROWS_AS(delta_bound(0), std::invalid_argument);

    CHECK_NOTHROW(params(2, Rational(1, 5)));
    CHECK_THROWS_AS(params(2, Rational(1, 2)), EpsOutOfRange);
    CHECK_THROWS_AS(params(2, Rational(16, 45)), EpsOutOfRange);  // boundary strict
    CHECK_THROWS_AS(params(1, Rational(8, 21)), EpsOutOfRange);
}

TEST_CASE("pieces at n=2, eps=pi/5") {
    Params p = params(2, Rational(1, 5));
    Pieces pc = build_pieces(p);
    const EpsBinding& b = p.eps;
    CHECK(pc.parity == Parity::Even);
    CHECK(pc.M == pi(Rational(16, 3)));

    CHECK(pc.S1.lo == pi(Rational(-16, 3)));
    CHECK(pc.S1.hi == pi(Rational(-16, 3)) + Scalar::eps_units(1));
    CHECK(pc.X0.lo.in_pi_units(b) == Rational(83, 480));
    CHECK(pc.X0.hi.in_pi_units(b) == Rational(106, 480));
    CHECK(pc.Y0.lo.in_pi_units(b) == Rational(883, 3840));
    CHECK(pc.Y0.hi.in_pi_units(b) == Rational(23, 96));
    CHECK(pc.Z0.lo.in_pi_units(b) == Rational(7, 24));
    CHECK(pc.Z0.hi.in_pi_units(b) == Rational(73, 240));
    CHECK(pc.window.lo.in_pi_units(b) == Rational(2003, 480));
    CHECK(pc.window.hi == pi(Rational(13, 3)));
    CHECK(pc.shift == pi(4));
    CHECK(pc.fixed_point == pi(Rational(4, 15)));
    CHECK_FALSE(pc.X0.is_empty(b));
}

TEST_CASE("pieces at n=1, eps=pi/3 (odd case)") {
    Params p = params(1, Rational(1, 3));
    Pieces pc = build_pieces(p);
    const EpsBinding& b = p.eps;
    CHECK(pc.parity == Parity::Odd);
    CHECK(pc.M == pi(Rational(8, 3)));
    // S6 = [M - pi/3, M + eps) = [7pi/3, 3pi).
    CHECK(pc.S6.lo == pi(Rational(7, 3)));
    CHECK(pc.S6.hi.in_pi_units(b) == Rational(3));
    CHECK(pc.shift == pi(2));
    // The odd seed X0 is empty for n=1: it would need eps > 4pi/3 > delta(1).
    CHECK(pc.X0.is_empty(b));
    CHECK_FALSE(pc.Y0.is_empty(b));
    CHECK_FALSE(pc.Z0.is_empty(b));
    // At n=3 the odd seeds are all nonempty.
    Pieces pc3 = build_pieces(params(3, Rational(1, 10)));
    CHECK_FALSE(pc3.X0.is_empty(EpsBinding(Rational(1, 10))));
}

TEST_CASE("level sets follow the contraction") {
    Params p = params(2, Rational(1, 5));
    const EpsBinding& b = p.eps;
    Pieces pc = build_pieces(p);

    IntervalSet l0 = level_set(p, 0);
    CHECK(l0.size() == 3);
    CHECK(measure(l0).in_pi_units(b) == Rational(269, 3840));

    IntervalSet l1 = level_set(p, 1);
    CHECK(l1.intervals().front().lo.in_pi_units(b) == Rational(2003, 7680));
    CHECK(l1.intervals().front().hi.in_pi_units(b) == Rational(2026, 7680));
    CHECK(measure(l1) == measure(l0) / Rational(16));

    for (int j = 0; j <= 4; ++j) {
        IntervalSet lev = level_set(p, j);
        // Fact (i): levels live inside the seed basin.
        IntervalSet basin = one(pc.basin.lo, pc.basin.hi, b);
        CHECK(set_difference(lev, basin).empty());
        // Fact (ii): scaled levels j >= 1 land inside the window.
        if (j >= 1) {
            IntervalSet window = one(pc.window.lo, pc.window.hi, b);
            CHECK(set_difference(dilate_pow2(lev, 4), window).empty());
        }
        // Ordering X_j < Y_j < Z_j with strict gaps: three disjoint pieces.
        CHECK(lev.size() == 3);
        // Contraction toward the fixed point.
        for (const Interval& iv : lev.intervals()) {
            Scalar d = iv.lo - pc.fixed_point;
            CHECK(abs(d.in_pi_units(b)) <=
                  abs((level_set(p, 0).intervals().front().lo - pc.fixed_point)
                          .in_pi_units(b)));
        }
    }
    // Level j+1 sits strictly between Y_j and Z_j (fact v).
    IntervalSet l2 = level_set(p, 2);
    Rational y1_hi = l1.intervals()[1].hi.in_pi_units(b);
    Rational z1_lo = l1.intervals()[2].lo.in_pi_units(b);
    for (const Interval& iv : l2.intervals()) {
        CHECK(iv.lo.in_pi_units(b) >= y1_hi);
        CHECK(iv.hi.in_pi_units(b) <= z1_lo);
    }
}

TEST_CASE("shift constants are 2*pi multiples") {
    for (int n = 1; n <= 6; ++n) {
        Params p = params(n, delta_bound(n).pi_coef / 2);
        Pieces pc = build_pieces(p);
        Rational half = pc.shift.pi_coef / 2;
        CHECK(denominator(half) == 1);
        CHECK(pc.fixed_point * Rational((BigInt(1) << unsigned(n + 2)) - 1) == pc.shift);
    }
}

TEST_CASE("truncations carry exact excess and missing measures") {
    Params p = params(2, Rational(1, 5));
    const EpsBinding& b = p.eps;
    Scalar s0 = measure(level_set(p, 0));

    TruncatedSet t2 = truncate(p, 2);
    CHECK(t2.excess_measure.in_pi_units(b) == Rational(269, 983040));
    CHECK(measure(t2.set) == pi(2) + t2.excess_measure);

    for (int J = 0; J <= 5; ++J) {
        TruncatedSet t = truncate(p, J);
        CHECK(t.excess_measure == s0 * pow2(-4 * J));
        CHECK(t.missing_measure == s0 * (pow2(-4 * J) / 15));
        if (J >= 1)
            CHECK(truncate(p, J - 1).excess_measure == t.excess_measure * Rational(16));
    }

    // Odd parity, n=3.
    Params p3 = params(3, Rational(1, 10));
    Scalar s0_3 = measure(level_set(p3, 0));
    for (int J = 0; J <= 3; ++J)
        CHECK(truncate(p3, J).excess_measure == s0_3 * pow2(-5 * J));

    // n=1, eps=pi/3, J=0 contains S6 = [7pi/3, 3pi).
    Params p1 = params(1, Rational(1, 3));
    TruncatedSet t1 = truncate(p1, 0);
    CHECK(contains(t1.set, pi(Rational(5, 2))));
    CHECK(contains(t1.set, pi(Rational(7, 3))));
    CHECK_FALSE(contains(t1.set, pi(3)));
}

TEST_CASE("exact membership oracle") {
    Params p = params(2, Rational(1, 5));
    CHECK(member(p, pi(Rational(7, 24))));           // Z0
    CHECK_FALSE(member(p, pi(Rational(1, 4))));      // exits basin, hits no seed
    CHECK_FALSE(member(p, pi(Rational(4, 15))));     // fixed point, by convention
    CHECK_FALSE(member(p, pi(Rational(64, 15))));    // scaled fixed point
    CHECK(member(p, pi(Rational(16, 3)) + pi(Rational(1, 50))));  // S6
    CHECK_FALSE(member(p, Scalar::zero()));
    CHECK_FALSE(member(p, pi(10)));

    CHECK(level_index(p, pi(Rational(7, 24))) == 0);
    CHECK(level_index(p, pi(Rational(2003, 7680))) == 1);
    CHECK_FALSE(level_index(p, pi(Rational(4, 15))).has_value());
    CHECK(hole_index(p, pi(Rational(2003, 480))) == 1);
    CHECK_FALSE(hole_index(p, pi(Rational(13, 3))).has_value());

    CHECK(dist_from_zero(p) == pi(Rational(1, 6)));
    CHECK(dist_from_zero(params(1, Rational(1, 3))) == pi(Rational(1, 6)));
    // The bound is below every endpoint magnitude of a truncation.
    TruncatedSet t = truncate(p, 3);
    for (const Interval& iv : t.set.intervals()) {
        CHECK(abs(iv.lo.in_pi_units(p.eps)) >= Rational(1, 6));
        CHECK(abs(iv.hi.in_pi_units(p.eps)) >= Rational(1, 6));
    }
}

TEST_CASE("membership agrees with truncations away from deep levels") {
    Params p = params(2, Rational(1, 5));
    const int J = 4;
    TruncatedSet t = truncate(p, J);
    std::mt19937 rng(41);
    std::uniform_int_distribution<long> num(-40000, 40000);
    int checked = 0;
    for (int i = 0; i < 2000; ++i) {
        Scalar x = pi(Rational(num(rng), 7 * 1024));
        auto lev = level_index(p, x);
        auto hole = hole_index(p, x);
        int depth = lev.value_or(hole.value_or(0));
        if (depth <= J) {
            CHECK(member(p, x) == contains(t.set, x));
            ++checked;
        } else if (hole) {
            CHECK_FALSE(member(p, x));
            CHECK(contains(t.set, x));
        } else {
            CHECK(member(p, x));
            CHECK_FALSE(contains(t.set, x));
        }
    }
    CHECK(checked > 1900);
}

TEST_CASE("witness pairs") {
    auto fmt = [](const std::vector<std::pair<int, BigInt>>& v) {
        std::string s;
        for (const auto& [j, k] : v) s += "(" + std::to_string(j) + "," + k.str() + ")";
        return s;
    };
    CHECK(fmt(witness_pairs(params(1, Rational(1, 3)))) == "(1,-1)(2,0)");
    CHECK(fmt(witness_pairs(params(2, Rational(1, 5)))) == "(1,1)(2,-1)(3,0)");
    CHECK(fmt(witness_pairs(params(3, Rational(1, 10)))) == "(1,-3)(2,1)(3,-1)(4,0)");
}

TEST_CASE("finite identities, even case n=2") {
    Params p = params(2, Rational(1, 5));
    IdentityReport rep = verify_paper_identities(p, 6);
    CHECK(rep.all_pass);
    for (const IdentityCheck& c : rep.checks) {
        if (c.name == "translation.lower") {
            CHECK(c.holds);
            CHECK(c.expected ==
                  one(Scalar(Rational(10, 3), 1),
                      Scalar(Rational(25, 6), Rational(1, 32)), p.eps));
        }
        if (c.name == "translation.levels.shift-variant") CHECK_FALSE(c.holds);
    }
}

TEST_CASE("finite identities, odd case") {
    // n=3 passes everything except the printed partial right-hand side.
    IdentityReport rep3 = verify_paper_identities(params(3, Rational(1, 10)), 6);
    CHECK(rep3.all_pass);
    for (const IdentityCheck& c : rep3.checks)
        if (c.name == "translation.chain.printed") CHECK_FALSE(c.holds);

    // n=1 is degenerate (empty X0): the positive dilation identity and the
    // window tiling genuinely fail, and W(1, eps) is not a wavelet set.
    IdentityReport rep1 = verify_paper_identities(params(1, Rational(1, 3)), 6);
    CHECK_FALSE(rep1.all_pass);
    for (const IdentityCheck& c : rep1.checks) {
        if (c.name == "dilation.positive") CHECK_FALSE(c.holds);
        if (c.name == "translation.window") CHECK_FALSE(c.holds);
        if (c.name == "translation.chain") CHECK(c.holds);
        if (c.name == "dilation.negative") CHECK(c.holds);
        if (c.name == "levels.recursion") CHECK(c.holds);
    }
    Verdict v1 = wavelet_verdict(truncate(params(1, Rational(1, 3)), 6).set);
    CHECK_FALSE(v1.is_wavelet_set);
}

TEST_CASE("deep truncations converge to exact partitions for n >= 2") {
    Params p = params(2, Rational(1, 5));
    TruncatedSet t = truncate(p, 5);
    Verdict v = wavelet_verdict(t.set);
    const EpsBinding& b = p.eps;
    CHECK(v.dilation_pos.exact(b));
    CHECK(v.dilation_neg.exact(b));
    CHECK(v.translation.gap_measure == Scalar::zero());
    CHECK(v.translation.overlap_measure == t.excess_measure);
}
