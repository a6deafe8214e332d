#include "poolstat/descriptive.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "poolstat/errors.hpp"

namespace poolstat {

namespace {

struct SweepExtremes {
    double min_l, max_l, min_u, max_u;
};

// Sweep the configurations x^k = (lo_1..lo_k, hi_{k+1}..hi_N) of the
// lex-sorted data, k = 0..N, tracking the extreme confidence limits.
// Data are centered on the midpoint mean first so the running second moment
// does not cancel catastrophically; E and the squared-term sum are updated
// in O(1) per step.
SweepExtremes sweep_confidence_limits(const IntervalDataset& ds, Alpha alpha) {
    const IntervalDataset sorted = lex_sort(ds);
    const std::size_t n = sorted.size();
    const double nd = static_cast<double>(n);

    double center = 0.0;
    for (const Interval& x : sorted.items) center += x.midpoint();
    center /= nd;

    std::vector<double> lows(n), highs(n);
    for (std::size_t i = 0; i < n; ++i) {
        lows[i] = sorted.items[i].lo - center;
        highs[i] = sorted.items[i].hi - center;
    }

    const double t_crit =
        student_t_quantile(static_cast<int>(n) - 1, 1.0 - alpha.value / 2.0);

    double mean = 0.0;
    double mean_sq = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mean += highs[i];
        mean_sq += highs[i] * highs[i];
    }
    mean /= nd;
    mean_sq /= nd;

    SweepExtremes ext{};
    bool first = true;
    for (std::size_t k = 0; k <= n; ++k) {
        if (k > 0) {
            const std::size_t i = k - 1;  // switch datum i from high to low
            mean += (lows[i] - highs[i]) / nd;
            mean_sq += (lows[i] * lows[i] - highs[i] * highs[i]) / nd;
        }
        const double variance = std::max(0.0, mean_sq - mean * mean);
        const double half = t_crit * std::sqrt(variance / (nd - 1.0));
        const double l = mean - half;
        const double u = mean + half;
        if (first) {
            ext = SweepExtremes{l, l, u, u};
            first = false;
        } else {
            ext.min_l = std::min(ext.min_l, l);
            ext.max_l = std::max(ext.max_l, l);
            ext.min_u = std::min(ext.min_u, u);
            ext.max_u = std::max(ext.max_u, u);
        }
    }
    ext.min_l += center;
    ext.max_l += center;
    ext.min_u += center;
    ext.max_u += center;
    return ext;
}

}  // namespace

Interval interval_mean(const IntervalDataset& ds) {
    if (ds.empty()) throw data_error("interval_mean: empty dataset");
    const Interval s = sum(ds);
    const double n = static_cast<double>(ds.size());
    return Interval{s.lo / n, s.hi / n};
}

UncertainCI outer_ci(const IntervalDataset& ds, Alpha alpha) {
    if (ds.size() < 2) throw data_error("outer_ci: need at least 2 intervals");
    const SweepExtremes ext = sweep_confidence_limits(ds, alpha);
    return UncertainCI{Interval{ext.min_l, ext.max_l}, Interval{ext.min_u, ext.max_u}};
}

std::optional<Interval> inner_ci(const IntervalDataset& ds, Alpha alpha) {
    if (ds.size() < 2) throw data_error("inner_ci: need at least 2 intervals");
    const SweepExtremes ext = sweep_confidence_limits(ds, alpha);
    if (ext.max_l > ext.min_u) return std::nullopt;
    return Interval{ext.max_l, ext.min_u};
}

double ci_width(const UncertainCI& ci) {
    return ci.hull_width();
}

}  // namespace poolstat
