#pragma once

#include "wsets/interval_set.hpp"

#include <optional>
#include <string>

namespace wsets {

enum class Sign { Positive, Negative };

// Multiplicity-annotated tiling of a fundamental cell. Segments partition the
// cell, are ordered, and adjacent segments carry different counts.
struct MultiplicitySegment {
    Interval segment;
    long count = 0;
};

// Result of folding a set into a fundamental cell.
struct FoldReport {
    IntervalSet cover;    // points hit at least once, within the cell
    IntervalSet gap;      // cell minus cover
    IntervalSet overlap;  // points hit at least twice
    Scalar gap_measure = Scalar::zero();
    Scalar overlap_measure = Scalar::zero();
    // Mass counted beyond the first hit: sum over segments of (count-1)*length.
    Scalar excess_mass = Scalar::zero();
    std::vector<MultiplicitySegment> multiplicity;
    std::optional<std::string> failure_reason;

    bool exact(const EpsBinding& b) const {
        return !failure_reason && gap_measure.in_pi_units(b) == 0 &&
               overlap_measure.in_pi_units(b) == 0;
    }
};

struct Verdict {
    FoldReport translation;
    FoldReport dilation_pos;
    FoldReport dilation_neg;
    bool is_wavelet_set = false;
};

// Fold under 2*pi*Z translations into [0, 2*pi).
FoldReport fold_mod_2pi(const IntervalSet& a);

// Fold the sign-restricted part under powers of two into [pi, 2*pi) or
// [-2*pi, -pi). A piece touching or straddling 0 on the requested side cannot
// be folded finitely; that is reported as failure_reason "AccumulationAtZero".
FoldReport fold_dyadic(const IntervalSet& a, Sign sign);

Verdict wavelet_verdict(const IntervalSet& a);

}  // namespace wsets
