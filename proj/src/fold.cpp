#include "wsets/fold.hpp"

#include <map>

namespace wsets {

namespace {

FoldReport assemble(std::vector<Interval> pieces, const Interval& cell,
                    const EpsBinding& bind) {
    // Event sweep over piece endpoints, cut against the cell.
    std::map<Rational, std::pair<long, Scalar>> events;
    auto touch = [&](const Scalar& s, long delta) {
        Rational key = s.in_pi_units(bind);
        auto [it, fresh] = events.emplace(key, std::make_pair(delta, s));
        if (!fresh) it->second.first += delta;
    };
    touch(cell.lo, 0);
    touch(cell.hi, 0);
    for (const Interval& p : pieces) {
        touch(p.lo, +1);
        touch(p.hi, -1);
    }

    FoldReport rep;
    rep.cover = IntervalSet(bind);
    rep.gap = IntervalSet(bind);
    rep.overlap = IntervalSet(bind);

    std::vector<Interval> cover_raw, gap_raw, over_raw;
    long count = 0;
    std::optional<std::pair<Rational, Scalar>> prev;
    for (const auto& [key, ev] : events) {
        if (prev && prev->first < key) {
            Interval seg{prev->second, ev.second};
            if (count >= 1) cover_raw.push_back(seg); else gap_raw.push_back(seg);
            if (count >= 2) {
                over_raw.push_back(seg);
                rep.excess_mass = rep.excess_mass + Rational(count - 1) * (seg.hi - seg.lo);
            }
            if (!rep.multiplicity.empty() && rep.multiplicity.back().count == count &&
                rep.multiplicity.back().segment.hi == seg.lo) {
                rep.multiplicity.back().segment.hi = seg.hi;
            } else {
                rep.multiplicity.push_back({seg, count});
            }
        }
        count += ev.first;
        prev = {key, ev.second};
    }

    rep.cover = IntervalSet::normalize(std::move(cover_raw), bind);
    rep.gap = IntervalSet::normalize(std::move(gap_raw), bind);
    rep.overlap = IntervalSet::normalize(std::move(over_raw), bind);
    rep.gap_measure = measure(rep.gap);
    rep.overlap_measure = measure(rep.overlap);
    return rep;
}

}  // namespace

FoldReport fold_mod_2pi(const IntervalSet& a) {
    const EpsBinding& bind = a.binding();
    std::vector<Interval> pieces;
    for (const Interval& iv : a.intervals()) {
        BigInt k = rational_floor(iv.lo.in_pi_units(bind) / 2);
        Scalar cur = iv.lo;
        while (scalar_lt(cur, iv.hi, bind)) {
            Scalar boundary = Scalar::pi_units(Rational(2 * (k + 1)));
            Scalar next = scalar_lt(boundary, iv.hi, bind) ? boundary : iv.hi;
            Scalar shift = Scalar::pi_units(Rational(-2 * k));
            pieces.push_back({cur + shift, next + shift});
            cur = next;
            ++k;
        }
    }
    Interval cell{Scalar::zero(), Scalar::pi_units(2)};
    return assemble(std::move(pieces), cell, bind);
}

FoldReport fold_dyadic(const IntervalSet& a, Sign sign) {
    const EpsBinding& bind = a.binding();
    Interval cell = sign == Sign::Positive
                        ? Interval{Scalar::pi_units(1), Scalar::pi_units(2)}
                        : Interval{Scalar::pi_units(-2), Scalar::pi_units(-1)};

    std::vector<Interval> pieces;
    for (const Interval& iv : a.intervals()) {
        Rational lo = iv.lo.in_pi_units(bind);
        Rational hi = iv.hi.in_pi_units(bind);
        if (sign == Sign::Positive) {
            if (hi <= 0) continue;
            if (lo <= 0) {
                FoldReport rep = assemble({}, cell, bind);
                rep.failure_reason = "AccumulationAtZero";
                return rep;
            }
            long m = floor_log2(lo);
            Scalar cur = iv.lo;
            while (scalar_lt(cur, iv.hi, bind)) {
                Scalar boundary = Scalar::pi_units(pow2(m + 1));
                Scalar next = scalar_lt(boundary, iv.hi, bind) ? boundary : iv.hi;
                Rational f = pow2(-m);
                pieces.push_back({cur * f, next * f});
                cur = boundary;
                ++m;
            }
        } else {
            if (lo >= 0) continue;
            if (hi >= 0) {
                FoldReport rep = assemble({}, cell, bind);
                rep.failure_reason = "AccumulationAtZero";
                return rep;
            }
            // largest m with 2^m < |cur|; annulus (2^m, 2^{m+1}] scales by 2^-m
            Scalar cur = iv.lo;
            Rational mag = -cur.in_pi_units(bind);
            long m = floor_log2(mag);
            if (pow2(m) == mag) --m;
            while (scalar_lt(cur, iv.hi, bind)) {
                Scalar boundary = Scalar::pi_units(-pow2(m));
                Scalar next = scalar_lt(boundary, iv.hi, bind) ? boundary : iv.hi;
                Rational f = pow2(-m);
                pieces.push_back({cur * f, next * f});
                cur = boundary;
                --m;
            }
        }
    }
    return assemble(std::move(pieces), cell, bind);
}

Verdict wavelet_verdict(const IntervalSet& a) {
    Verdict v;
    v.translation = fold_mod_2pi(a);
    v.dilation_pos = fold_dyadic(a, Sign::Positive);
    v.dilation_neg = fold_dyadic(a, Sign::Negative);
    const EpsBinding& b = a.binding();
    v.is_wavelet_set = v.translation.exact(b) && v.dilation_pos.exact(b) &&
                       v.dilation_neg.exact(b);
    return v;
}

}  // namespace wsets
