#pragma once

#include "wsets/interval_set.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wsets {

struct EpsOutOfRange : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Strict upper bound for admissible eps: 2^{n+2} * pi / (3 * (2^{n+2} - 1)).
Scalar delta_bound(int n);

struct Params {
    int n;
    EpsBinding eps;

    // Throws EpsOutOfRange unless 0 < eps < delta_bound(n).
    Params(int n_, EpsBinding eps_);
};

enum class Parity { Even, Odd };

// Endpoint pair that may be empty (lo == hi reachable only in the degenerate
// n == 1 case, where the seed X0 collapses).
struct Span {
    Scalar lo;
    Scalar hi;
    bool is_empty(const EpsBinding& b) const { return !scalar_lt(lo, hi, b); }
};

// The finite building blocks of W(n, eps), all exact.
struct Pieces {
    Parity parity;
    Scalar M;  // 2^{n+2}*pi/3
    Span S1, S2, S3, S4, S5, S6;
    Span X0, Y0, Z0;
    Span window;       // the interval V is carved from
    Span basin;        // [pi/6 + eps/2^{n+3}, pi/3): where all seed levels live
    Scalar shift;      // recursion shift c_n; an exact multiple of 2*pi
    Scalar fixed_point;  // shift / (2^{n+2} - 1)
};

Pieces build_pieces(const Params& p);

// Seed union X0 u Y0 u Z0 pushed through j steps of the contraction
// P -> (P + c_n) / 2^{n+2}.
IntervalSet level_set(const Params& p, int j);

struct TruncatedSet {
    int depth = 0;
    IntervalSet set;
    Scalar excess_measure = Scalar::zero();   // measure(set) - 2*pi
    Scalar missing_measure = Scalar::zero();  // measure of W \ set
};

// Finite depth-J rendering: S pieces, levels 0..J, and the window minus the
// first J hole levels. Over-covers W by exactly the deeper holes.
TruncatedSet truncate(const Params& p, int J);

// Exact membership in the untruncated W. The contraction fixed point and its
// 2^{n+2}-scaled copy are excluded by convention.
bool member(const Params& p, const Scalar& x);

// j >= 0 such that x lies in level j, if any. Decided by iterating the
// expanding inverse map; terminates because the iterates leave the basin
// geometrically unless x is the fixed point.
std::optional<int> level_index(const Params& p, const Scalar& x);

// j >= 1 such that x lies in the j-th hole 2^{n+2}(X_j u Y_j u Z_j), if any.
std::optional<int> hole_index(const Params& p, const Scalar& x);

// Positive lower bound on inf{|x| : x in W}; always pi/6 for this family.
Scalar dist_from_zero(const Params& p);

// The n+1 witness pairs (j, k): k_j = (2^{n+1-j}-1)/3 where that is an
// integer, else l_j = -(2^{n+1-j}+1)/3, for j = 1..n+1.
std::vector<std::pair<int, BigInt>> witness_pairs(const Params& p);

struct IdentityCheck {
    std::string name;
    bool holds = false;
    IntervalSet lhs;
    IntervalSet expected;
    IntervalSet missing;  // expected \ lhs
    IntervalSet extra;    // lhs \ expected
    std::string note;
};

struct IdentityReport {
    std::vector<IdentityCheck> checks;
    bool all_pass = false;  // over every check not marked informational
};

// Checks the finite translation/dilation identities of the construction and
// the level-wise self-similar identity up to depth J, as exact set equalities.
IdentityReport verify_paper_identities(const Params& p, int J);

}  // namespace wsets
