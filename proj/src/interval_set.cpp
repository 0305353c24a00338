#include "wsets/interval_set.hpp"

#include <algorithm>
#include <map>

namespace wsets {

namespace {

void check_bindings(const IntervalSet& a, const IntervalSet& b) {
    if (!(a.binding() == b.binding()))
        throw BindingMismatch("interval sets carry different eps bindings");
}

// Boundary sweep: evaluate a boolean combination of two canonical sets on the
// elementary segments cut by all endpoints, then stitch the result back
// together. Endpoints of the result are always endpoints of the inputs.
template <typename Op>
IntervalSet combine(const IntervalSet& a, const IntervalSet& b, Op keep) {
    check_bindings(a, b);
    const EpsBinding& bind = a.binding();

    std::map<Rational, Scalar> cuts;
    auto add_cuts = [&](const IntervalSet& s) {
        for (const Interval& iv : s.intervals()) {
            cuts.emplace(iv.lo.in_pi_units(bind), iv.lo);
            cuts.emplace(iv.hi.in_pi_units(bind), iv.hi);
        }
    };
    add_cuts(a);
    add_cuts(b);

    std::vector<std::pair<Rational, Scalar>> pts(cuts.begin(), cuts.end());
    auto covered = [&](const IntervalSet& s, const Rational& key) {
        for (const Interval& iv : s.intervals()) {
            if (iv.lo.in_pi_units(bind) <= key && key < iv.hi.in_pi_units(bind)) return true;
        }
        return false;
    };

    std::vector<Interval> raw;
    for (size_t i = 0; i + 1 < pts.size(); ++i) {
        if (keep(covered(a, pts[i].first), covered(b, pts[i].first)))
            raw.push_back({pts[i].second, pts[i + 1].second});
    }
    return IntervalSet::normalize(std::move(raw), bind);
}

}  // namespace

IntervalSet IntervalSet::normalize(std::vector<Interval> raw, const EpsBinding& b) {
    for (const Interval& iv : raw) {
        if (!scalar_lt(iv.lo, iv.hi, b))
            throw MalformedInterval("interval with lo >= hi: [" + format_scalar(iv.lo) +
                                    ", " + format_scalar(iv.hi) + ")");
    }
    std::sort(raw.begin(), raw.end(), [&](const Interval& x, const Interval& y) {
        return x.lo.in_pi_units(b) < y.lo.in_pi_units(b);
    });
    IntervalSet out(b);
    for (Interval& iv : raw) {
        if (!out.intervals_.empty() &&
            !scalar_lt(out.intervals_.back().hi, iv.lo, b)) {
            if (scalar_lt(out.intervals_.back().hi, iv.hi, b))
                out.intervals_.back().hi = iv.hi;
        } else {
            out.intervals_.push_back(iv);
        }
    }
    return out;
}

IntervalSet set_union(const IntervalSet& a, const IntervalSet& b) {
    check_bindings(a, b);
    std::vector<Interval> raw = a.intervals();
    raw.insert(raw.end(), b.intervals().begin(), b.intervals().end());
    return IntervalSet::normalize(std::move(raw), a.binding());
}

IntervalSet set_intersect(const IntervalSet& a, const IntervalSet& b) {
    return combine(a, b, [](bool x, bool y) { return x && y; });
}

IntervalSet set_difference(const IntervalSet& a, const IntervalSet& b) {
    return combine(a, b, [](bool x, bool y) { return x && !y; });
}

IntervalSet translate(const IntervalSet& a, const Scalar& t) {
    IntervalSet out(a.binding());
    for (const Interval& iv : a.intervals())
        out.intervals_.push_back({iv.lo + t, iv.hi + t});
    return out;
}

IntervalSet translate_2pi(const IntervalSet& a, const BigInt& k) {
    return translate(a, Scalar::pi_units(Rational(2 * k)));
}

IntervalSet dilate_pow2(const IntervalSet& a, long m) {
    Rational f = pow2(m);
    IntervalSet out(a.binding());
    for (const Interval& iv : a.intervals())
        out.intervals_.push_back({iv.lo * f, iv.hi * f});
    return out;
}

Scalar measure(const IntervalSet& a) {
    Scalar total = Scalar::zero();
    for (const Interval& iv : a.intervals()) total = total + (iv.hi - iv.lo);
    return total;
}

bool contains(const IntervalSet& a, const Scalar& x) {
    Rational key = x.in_pi_units(a.binding());
    for (const Interval& iv : a.intervals()) {
        if (iv.lo.in_pi_units(a.binding()) <= key &&
            key < iv.hi.in_pi_units(a.binding()))
            return true;
    }
    return false;
}

}  // namespace wsets
