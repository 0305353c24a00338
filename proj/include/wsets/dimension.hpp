#pragma once

#include "wsets/construction.hpp"
#include "wsets/fold.hpp"

#include <functional>

namespace wsets {

struct SupportOutOfRange : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ZeroInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct AccumulationAtZero : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// Raised when the dyadic fold multiplicity is not constant on a side, so the
// dimension function has infinitely many breakpoints accumulating at 0 and no
// finite exact profile exists.
struct NonConstantFoldAtZero : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Membership oracle for an indicator-type Fourier support set.
struct SetOracle {
    std::function<bool(const Scalar&)> contains;
    Scalar support_lo;
    Scalar support_hi;
    Scalar dist0;  // positive lower bound on inf |x| over the set
    EpsBinding binding;
};

// Oracle over a finite interval set; dist0 is derived from the endpoints.
SetOracle oracle_for(const IntervalSet& a);
// Exact oracle for the untruncated W(n, eps).
SetOracle oracle_for(const Params& p);

// #{j >= 1 : 2^j * xi in support}.
long folded_tail(const SetOracle& o, const Scalar& xi);

// #{(j, k) : j >= 1, k in Z, 2^j (xi + 2 k pi) in support}.
long dimension_at(const SetOracle& o, const Scalar& xi);
// Same, listing the contributing pairs.
std::vector<std::pair<int, BigInt>> dimension_pairs(const SetOracle& o, const Scalar& xi);

// #{j in Z : 2^j * xi in support}. Throws ZeroInput on xi = 0.
long sum_rule_at(const SetOracle& o, const Scalar& xi);

// Exact piecewise-constant dimension function on [-pi, pi).
struct Profile {
    // breakpoints.size() == values.size() + 1; breakpoints span [-pi, pi].
    std::vector<Scalar> breakpoints;
    std::vector<long> values;
    EpsBinding binding;
};

struct ProfileStats {
    long max = 0;
    Scalar integral = Scalar::zero();
};

Profile dimension_profile(const IntervalSet& a);
ProfileStats profile_stats(const Profile& p);

// Evaluate the profile at a point of [-pi, pi) (half-open pieces).
long profile_value_at(const Profile& p, const Scalar& xi);

enum class BoundMode { SymmetricThm1, SymmetricProp1 };

// True iff the profile max is <= n. Requires the support inside the mode's
// symmetric interval; a violated precondition is SupportOutOfRange, not false.
bool check_bound(const IntervalSet& a, int n, BoundMode mode);

struct WitnessReport {
    std::vector<std::pair<int, BigInt>> pairs;
    Scalar xi_sample;
    long dim = 0;
    bool all_pairs_land = false;
    bool ok = false;  // dim >= n + 1
};

// Samples the midpoint of the witness interval [2pi/3, 2pi/3 + eps/2^{n+1}]
// and counts the dimension there against the expected pairs.
WitnessReport check_witness(const Params& p);

}  // namespace wsets
