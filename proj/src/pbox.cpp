#include "poolstat/pbox.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "poolstat/errors.hpp"

namespace poolstat {

namespace {

StepFunction shift_clipped(const StepFunction& f, double offset) {
    const double floor_v = std::clamp(f.floor_value() + offset, 0.0, 1.0);
    std::vector<double> vs = f.values();
    for (double& v : vs) v = std::clamp(v + offset, 0.0, 1.0);
    return StepFunction::from_jumps(floor_v, f.jump_points(), std::move(vs));
}

}  // namespace

PBox pbox_from_intervals(const IntervalDataset& ds) {
    if (ds.empty()) throw data_error("pbox_from_intervals: empty dataset");
    std::vector<double> lows, highs;
    lows.reserve(ds.size());
    highs.reserve(ds.size());
    for (const Interval& x : ds.items) {
        lows.push_back(x.lo);
        highs.push_back(x.hi);
    }
    return PBox{ecdf(lows), ecdf(highs)};
}

KSBand ks_band(const PBox& pb, long n, Alpha alpha) {
    const double d = ks_critical(n, alpha);
    return KSBand{shift_clipped(pb.upper, d), shift_clipped(pb.lower, -d), d, n, alpha};
}

double horizontal_width(const KSBand& band, double p0, long n_pooled, long slices) {
    if (!(p0 > 0.0 && p0 < 1.0)) throw data_error("horizontal_width: p0 must be in (0, 1)");
    if (n_pooled < 1) throw data_error("horizontal_width: n_pooled must be >= 1");
    if (slices < 1) throw data_error("horizontal_width: slices must be >= 1");
    const double layer_height = 2.0 / static_cast<double>(n_pooled);
    const double a = p0 - 0.5 * layer_height;
    const double b = p0 + 0.5 * layer_height;
    if (!(a > 0.0 && b < 1.0)) {
        std::ostringstream msg;
        msg << "horizontal_width: layer [" << a << ", " << b << "] not inside (0, 1)";
        throw data_error(msg.str());
    }
    const double dp = layer_height / static_cast<double>(slices);
    double acc = 0.0;
    for (long i = 1; i <= slices; ++i) {
        const double p = a + (static_cast<double>(i) - 0.5) * dp;
        const double left = band_inverse(band.upper, p);
        const double right = band_inverse(band.lower, p);
        if (std::isinf(left) || std::isinf(right)) {
            return std::numeric_limits<double>::infinity();
        }
        acc += (right - left) * dp;
    }
    return acc / layer_height;
}

}  // namespace poolstat
