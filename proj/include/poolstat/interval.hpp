#pragma once

#include <string>
#include <vector>

namespace poolstat {

// Closed real interval [lo, hi]. Degenerate (lo == hi) intervals are
// first-class so precise measurements need no separate code path.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    double width() const { return hi - lo; }
    double midpoint() const { return 0.5 * (lo + hi); }
    bool contains(double x) const { return lo <= x && x <= hi; }
};

// Validated constructor: rejects lo > hi and non-finite endpoints.
Interval make_interval(double lo, double hi);

// Ordered collection of intervals with a provenance tag
// (skinny | puffy | pooled | user).
struct IntervalDataset {
    std::vector<Interval> items;
    std::string label = "user";

    std::size_t size() const { return items.size(); }
    bool empty() const { return items.empty(); }
};

// Endpoint-wise sum [a.lo + b.lo, a.hi + b.hi].
Interval add(const Interval& a, const Interval& b);

// Endpoint-wise sum over the whole dataset.
Interval sum(const IntervalDataset& ds);

// N / sum of intervals = [N / sum hi, N / sum lo].
// Requires every lower endpoint strictly positive.
Interval scale_recip_sum(const IntervalDataset& ds);

// Componentwise maximum [max lo_i, max hi_i].
Interval interval_max(const IntervalDataset& ds);

// Stable lexicographic sort: by lo, ties broken by hi.
IntervalDataset lex_sort(const IntervalDataset& ds);

}  // namespace poolstat
