#pragma once

#include "wsets/scalar.hpp"

#include <vector>

namespace wsets {

struct MalformedInterval : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct BindingMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Half-open [lo, hi). Nonempty by construction inside an IntervalSet.
struct Interval {
    Scalar lo;
    Scalar hi;
    friend bool operator==(const Interval&, const Interval&) = default;
};

// Canonical finite union of half-open intervals: sorted, pairwise disjoint,
// no two adjacent. Canonical form is unique, so set equality is list equality.
class IntervalSet {
public:
    explicit IntervalSet(EpsBinding b = EpsBinding()) : binding_(std::move(b)) {}

    // Throws MalformedInterval if any raw interval has lo >= hi.
    static IntervalSet normalize(std::vector<Interval> raw, const EpsBinding& b);

    const std::vector<Interval>& intervals() const { return intervals_; }
    const EpsBinding& binding() const { return binding_; }
    bool empty() const { return intervals_.empty(); }
    size_t size() const { return intervals_.size(); }

    friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

private:
    std::vector<Interval> intervals_;
    EpsBinding binding_;

    friend IntervalSet set_union(const IntervalSet&, const IntervalSet&);
    friend IntervalSet set_intersect(const IntervalSet&, const IntervalSet&);
    friend IntervalSet set_difference(const IntervalSet&, const IntervalSet&);
    friend IntervalSet translate_2pi(const IntervalSet&, const BigInt&);
    friend IntervalSet dilate_pow2(const IntervalSet&, long);
    friend IntervalSet translate(const IntervalSet&, const Scalar&);
};

IntervalSet set_union(const IntervalSet& a, const IntervalSet& b);
IntervalSet set_intersect(const IntervalSet& a, const IntervalSet& b);
IntervalSet set_difference(const IntervalSet& a, const IntervalSet& b);

// Shift every endpoint by 2*k*pi.
IntervalSet translate_2pi(const IntervalSet& a, const BigInt& k);
// Shift by an arbitrary exact amount.
IntervalSet translate(const IntervalSet& a, const Scalar& t);
// Multiply every endpoint by 2^m (m may be negative).
IntervalSet dilate_pow2(const IntervalSet& a, long m);

Scalar measure(const IntervalSet& a);
bool contains(const IntervalSet& a, const Scalar& x);

}  // namespace wsets
