#include "poolstat/interval.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "poolstat/errors.hpp"

namespace poolstat {

Interval make_interval(double lo, double hi) {
    if (!std::isfinite(lo) || !std::isfinite(hi)) {
        std::ostringstream msg;
        msg << "interval endpoints must be finite, got [" << lo << ", " << hi << "]";
        throw data_error(msg.str());
    }
    if (lo > hi) {
        std::ostringstream msg;
        msg << "interval lower endpoint exceeds upper: [" << lo << ", " << hi << "]";
        throw data_error(msg.str());
    }
    return Interval{lo, hi};
}

Interval add(const Interval& a, const Interval& b) {
    return Interval{a.lo + b.lo, a.hi + b.hi};
}

Interval sum(const IntervalDataset& ds) {
    Interval acc{0.0, 0.0};
    for (const Interval& x : ds.items) acc = add(acc, x);
    return acc;
}

Interval scale_recip_sum(const IntervalDataset& ds) {
    if (ds.empty()) throw data_error("scale_recip_sum: empty dataset");
    for (const Interval& x : ds.items) {
        if (!(x.lo > 0.0)) {
            std::ostringstream msg;
            msg << "scale_recip_sum: non-positive lower endpoint " << x.lo
                << " (positive support required)";
            throw data_error(msg.str());
        }
    }
    const Interval s = sum(ds);
    const double n = static_cast<double>(ds.size());
    return Interval{n / s.hi, n / s.lo};
}

Interval interval_max(const IntervalDataset& ds) {
    if (ds.empty()) throw data_error("interval_max: empty dataset");
    Interval acc = ds.items.front();
    for (const Interval& x : ds.items) {
        acc.lo = std::max(acc.lo, x.lo);
        acc.hi = std::max(acc.hi, x.hi);
    }
    return acc;
}

IntervalDataset lex_sort(const IntervalDataset& ds) {
    IntervalDataset out = ds;
    std::stable_sort(out.items.begin(), out.items.end(),
                     [](const Interval& a, const Interval& b) {
                         if (a.lo != b.lo) return a.lo < b.lo;
                         return a.hi < b.hi;
                     });
    return out;
}

}  // namespace poolstat
