#include "wsets/dimension.hpp"

#include <algorithm>
#include <map>

namespace wsets {

namespace {

Scalar pi(Rational r) { return Scalar::pi_units(std::move(r)); }

Rational max_abs_support(const SetOracle& o) {
    Rational lo = o.support_lo.in_pi_units(o.binding);
    Rational hi = o.support_hi.in_pi_units(o.binding);
    return std::max(abs(lo), abs(hi));
}

const Scalar& scalar_min(const Scalar& a, const Scalar& b, const EpsBinding& bind) {
    return scalar_lt(b, a, bind) ? b : a;
}
const Scalar& scalar_max(const Scalar& a, const Scalar& b, const EpsBinding& bind) {
    return scalar_lt(a, b, bind) ? b : a;
}

}  // namespace

SetOracle oracle_for(const IntervalSet& a) {
    SetOracle o;
    o.binding = a.binding();
    if (a.empty()) {
        o.support_lo = Scalar::zero();
        o.support_hi = Scalar::zero();
        o.dist0 = pi(1);
        o.contains = [](const Scalar&) { return false; };
        return o;
    }
    o.support_lo = a.intervals().front().lo;
    o.support_hi = a.intervals().back().hi;
    Rational best = -1;
    bool touches = false;
    for (const Interval& iv : a.intervals()) {
        Rational lo = iv.lo.in_pi_units(a.binding());
        Rational hi = iv.hi.in_pi_units(a.binding());
        if (lo <= 0 && hi >= 0) { touches = true; break; }
        Rational d = lo > 0 ? lo : -hi;
        if (best < 0 || d < best) best = d;
    }
    o.dist0 = touches ? Scalar::zero() : pi(best);
    o.contains = [a](const Scalar& x) { return contains(a, x); };
    return o;
}

SetOracle oracle_for(const Params& p) {
    SetOracle o;
    o.binding = p.eps;
    Pieces pc = build_pieces(p);
    o.support_lo = -pc.M;
    o.support_hi = pc.M + Scalar::eps_units(1);
    o.dist0 = dist_from_zero(p);
    o.contains = [p](const Scalar& x) { return member(p, x); };
    return o;
}

long folded_tail(const SetOracle& o, const Scalar& xi) {
    Rational v = xi.in_pi_units(o.binding);
    if (v == 0) return 0;
    Rational maxabs = max_abs_support(o);
    long count = 0;
    Rational y = v * 2;
    Scalar s = xi * Rational(2);
    while (abs(y) <= maxabs) {
        if (o.contains(s)) ++count;
        y *= 2;
        s = s * Rational(2);
    }
    return count;
}

std::vector<std::pair<int, BigInt>> dimension_pairs(const SetOracle& o, const Scalar& xi) {
    std::vector<std::pair<int, BigInt>> out;
    Rational maxabs = max_abs_support(o);
    Rational v = xi.in_pi_units(o.binding);
    BigInt kmin = rational_ceil((-maxabs / 2 - v) / 2);
    BigInt kmax = rational_floor((maxabs / 2 - v) / 2);
    for (BigInt k = kmin; k <= kmax; ++k) {
        Scalar base = xi + pi(Rational(2 * k));
        Rational y = base.in_pi_units(o.binding);
        if (y == 0) continue;
        int j = 1;
        Scalar s = base * Rational(2);
        Rational sv = y * 2;
        while (abs(sv) <= maxabs) {
            if (o.contains(s)) out.emplace_back(j, k);
            ++j;
            s = s * Rational(2);
            sv *= 2;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

long dimension_at(const SetOracle& o, const Scalar& xi) {
    return static_cast<long>(dimension_pairs(o, xi).size());
}

long sum_rule_at(const SetOracle& o, const Scalar& xi) {
    Rational v = xi.in_pi_units(o.binding);
    if (v == 0) throw ZeroInput("sum_rule_at: xi must be nonzero");
    Rational maxabs = max_abs_support(o);
    Rational d0 = o.dist0.in_pi_units(o.binding);
    long count = 0;
    Scalar s = xi;
    Rational sv = v;
    while (abs(sv) <= maxabs) {
        if (o.contains(s)) ++count;
        s = s * Rational(2);
        sv *= 2;
    }
    s = xi * Rational(1, 2);
    sv = v / 2;
    while (abs(sv) >= d0) {
        if (o.contains(s)) ++count;
        s = s * Rational(1, 2);
        sv /= 2;
    }
    return count;
}

namespace {

// Constant dyadic fold multiplicity on one side, or throws.
long fold_constant(const IntervalSet& a, Sign sign) {
    FoldReport rep = fold_dyadic(a, sign);
    long value = -1;
    for (const MultiplicitySegment& seg : rep.multiplicity) {
        if (value == -1) value = seg.count;
        if (seg.count != value)
            throw NonConstantFoldAtZero(
                "dyadic fold multiplicity is not constant; the dimension "
                "function has no finite exact profile");
    }
    return value < 0 ? 0 : value;
}

}  // namespace

Profile dimension_profile(const IntervalSet& a) {
    const EpsBinding& bind = a.binding();
    Profile prof;
    prof.binding = bind;

    const Scalar minus_pi = pi(-1), plus_pi = pi(1);
    if (a.empty()) {
        prof.breakpoints = {minus_pi, plus_pi};
        prof.values = {0};
        return prof;
    }
    SetOracle o = oracle_for(a);
    Rational d0 = o.dist0.in_pi_units(bind);
    if (d0 == 0)
        throw AccumulationAtZero("dimension_profile: set touches 0");

    long gpos = fold_constant(a, Sign::Positive);
    long gneg = fold_constant(a, Sign::Negative);

    Scalar r = scalar_min(o.dist0, plus_pi, bind);
    Rational r_units = r.in_pi_units(bind);

    // Weighted event sweep over [-pi, pi).
    std::map<Rational, std::pair<long, Scalar>> events;
    auto touch = [&](const Scalar& s, long delta) {
        Rational key = s.in_pi_units(bind);
        auto [it, fresh] = events.emplace(key, std::make_pair(delta, s));
        if (!fresh) it->second.first += delta;
    };
    auto add_piece = [&](const Scalar& lo, const Scalar& hi, long weight) {
        const Scalar& clo = scalar_max(lo, minus_pi, bind);
        const Scalar& chi = scalar_min(hi, plus_pi, bind);
        if (weight != 0 && scalar_lt(clo, chi, bind)) {
            touch(clo, weight);
            touch(chi, -weight);
        }
    };
    touch(minus_pi, 0);
    touch(plus_pi, 0);

    // Deep-dilation tails: constant near 0 on each side.
    add_piece(-r, Scalar::zero(), gneg);
    add_piece(Scalar::zero(), r, gpos);

    // Finitely many (j, k) pieces away from 0 (k = 0 clipped to |xi| >= r).
    Rational maxabs = max_abs_support(o);
    for (long j = 1; pow2(-j) * maxabs >= r_units; ++j) {
        IntervalSet scaled = dilate_pow2(a, -j);
        for (const Interval& iv : scaled.intervals()) {
            Rational lo = iv.lo.in_pi_units(bind);
            Rational hi = iv.hi.in_pi_units(bind);
            BigInt kmin = rational_ceil((lo - 1) / 2);
            BigInt kmax = rational_floor((hi + 1) / 2);
            for (BigInt k = kmin; k <= kmax; ++k) {
                Scalar shift = pi(Rational(-2 * k));
                if (k == 0) {
                    add_piece(iv.lo, scalar_min(iv.hi, -r, bind), 1);
                    add_piece(scalar_max(iv.lo, r, bind), iv.hi, 1);
                } else {
                    add_piece(iv.lo + shift, iv.hi + shift, 1);
                }
            }
        }
    }

    // All event keys lie in [-pi, pi] by clipping; sweep and merge pieces
    // that share a value.
    long count = 0;
    std::optional<Scalar> prev;
    for (const auto& [key, ev] : events) {
        if (prev && scalar_lt(*prev, ev.second, bind)) {
            if (!prof.values.empty() && prof.values.back() == count) {
                prof.breakpoints.back() = ev.second;
            } else {
                if (prof.breakpoints.empty()) prof.breakpoints.push_back(*prev);
                prof.breakpoints.push_back(ev.second);
                prof.values.push_back(count);
            }
        }
        count += ev.first;
        prev = ev.second;
    }
    return prof;
}

ProfileStats profile_stats(const Profile& p) {
    ProfileStats st;
    for (size_t i = 0; i < p.values.size(); ++i) {
        st.max = std::max(st.max, p.values[i]);
        st.integral = st.integral +
                      Rational(p.values[i]) * (p.breakpoints[i + 1] - p.breakpoints[i]);
    }
    return st;
}

long profile_value_at(const Profile& p, const Scalar& xi) {
    Rational v = xi.in_pi_units(p.binding);
    for (size_t i = 0; i < p.values.size(); ++i) {
        if (p.breakpoints[i].in_pi_units(p.binding) <= v &&
            v < p.breakpoints[i + 1].in_pi_units(p.binding))
            return p.values[i];
    }
    throw std::invalid_argument("profile_value_at: xi outside [-pi, pi)");
}

bool check_bound(const IntervalSet& a, int n, BoundMode mode) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    Rational limit = mode == BoundMode::SymmetricThm1
                         ? Rational(BigInt(1) << static_cast<unsigned>(n + 2), 3)
                         : Rational(2 * n);
    if (!a.empty()) {
        Rational lo = a.intervals().front().lo.in_pi_units(a.binding());
        Rational hi = a.intervals().back().hi.in_pi_units(a.binding());
        if (lo < -limit || hi > limit)
            throw SupportOutOfRange("support exceeds [-" + format_rational(limit) +
                                    "*pi, " + format_rational(limit) + "*pi)");
    }
    return profile_stats(dimension_profile(a)).max <= n;
}

WitnessReport check_witness(const Params& p) {
    WitnessReport rep;
    rep.pairs = witness_pairs(p);
    rep.xi_sample = pi(Rational(2, 3)) + Scalar::eps_units(pow2(-(p.n + 2)));
    rep.all_pairs_land = true;
    for (const auto& [j, k] : rep.pairs) {
        Scalar arg = (rep.xi_sample + pi(Rational(2 * k))) * pow2(j);
        rep.all_pairs_land = rep.all_pairs_land && member(p, arg);
    }
    rep.dim = dimension_at(oracle_for(p), rep.xi_sample);
    rep.ok = rep.all_pairs_land && rep.dim >= p.n + 1;
    return rep;
}

}  // namespace wsets
