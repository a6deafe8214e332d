#pragma once

#include <optional>

#include "poolstat/interval.hpp"
#include "poolstat/stats_kernels.hpp"

namespace poolstat {

// Confidence interval whose endpoints are themselves sets of attainable
// values: lower_end collects the L values over endpoint configurations,
// upper_end the U values. The reported bound is the outer hull
// [lower_end.lo, upper_end.hi]; the inner region is
// [lower_end.hi, upper_end.lo] when non-empty.
struct UncertainCI {
    Interval lower_end;
    Interval upper_end;

    double hull_lo() const { return lower_end.lo; }
    double hull_hi() const { return upper_end.hi; }
    double hull_width() const { return upper_end.hi - lower_end.lo; }
};

// Endpoint-wise sample mean [mean of lows, mean of highs].
Interval interval_mean(const IntervalDataset& ds);

// Bounds on the Student-t confidence interval for the mean over interval
// data. Lex-sorts, then sweeps the N+1 configurations that take the first k
// lower endpoints and the remaining upper endpoints; exact for no-nesting
// data. Coverage level is 1 - alpha. Requires N >= 2.
UncertainCI outer_ci(const IntervalDataset& ds, Alpha alpha);

// Intersection of the swept confidence intervals, [max L_k, min U_k];
// empty when the configurations disagree enough that max L > min U.
std::optional<Interval> inner_ci(const IntervalDataset& ds, Alpha alpha);

// Width of the outer bounds (the D metric).
double ci_width(const UncertainCI& ci);

}  // namespace poolstat
