#include "poolstat/intervalize.hpp"

#include <cmath>
#include <sstream>

#include "poolstat/errors.hpp"

namespace poolstat {

namespace {

void check_delta(double delta) {
    if (!(delta > 0.0) || !std::isfinite(delta)) {
        std::ostringstream msg;
        msg << "intervalize: delta must be > 0, got " << delta;
        throw data_error(msg.str());
    }
}

// [x + (r-1)*delta, x + (r+1)*delta] around midpoint x + r*delta. The
// one-sided offsets keep x inside the interval under rounding, which
// [m - delta, m + delta] does not guarantee when |r| = 1.
Interval biased_interval(double x, double r, double delta) {
    return Interval{x + (r - 1.0) * delta, x + (r + 1.0) * delta};
}

}  // namespace

IntervalDataset intervalize_central(const std::vector<double>& xs, double delta) {
    check_delta(delta);
    IntervalDataset ds;
    ds.items.reserve(xs.size());
    for (double x : xs) ds.items.push_back(Interval{x - delta, x + delta});
    return ds;
}

IntervalDataset intervalize_uniform_bias(const std::vector<double>& xs, double delta,
                                         RandomStream& rs) {
    check_delta(delta);
    IntervalDataset ds;
    ds.items.reserve(xs.size());
    for (double x : xs) {
        const double r = rs.uniform(-1.0, 1.0);
        ds.items.push_back(biased_interval(x, r, delta));
    }
    return ds;
}

IntervalDataset intervalize_uniform_bias(const std::vector<double>& xs, double delta,
                                         SeedStream seed) {
    RandomStream rs(seed);
    return intervalize_uniform_bias(xs, delta, rs);
}

IntervalDataset intervalize_systematic(const std::vector<double>& xs, double delta, double c) {
    check_delta(delta);
    if (!(c >= -1.0 && c <= 1.0)) {
        std::ostringstream msg;
        msg << "intervalize_systematic: C must be in [-1, 1], got " << c;
        throw data_error(msg.str());
    }
    IntervalDataset ds;
    ds.items.reserve(xs.size());
    for (double x : xs) ds.items.push_back(biased_interval(x, c, delta));
    return ds;
}

IntervalDataset pool(const IntervalDataset& a, const IntervalDataset& b) {
    IntervalDataset out;
    out.items.reserve(a.size() + b.size());
    out.items.insert(out.items.end(), a.items.begin(), a.items.end());
    out.items.insert(out.items.end(), b.items.begin(), b.items.end());
    out.label = "pooled";
    return out;
}

}  // namespace poolstat
