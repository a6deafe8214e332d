#include "poolstat/stepfn.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "poolstat/errors.hpp"

namespace poolstat {

StepFunction StepFunction::from_jumps(double floor_value, std::vector<double> jump_points,
                                      std::vector<double> values) {
    if (jump_points.size() != values.size()) {
        throw data_error("step function: jump point and value counts differ");
    }
    if (!(floor_value >= 0.0 && floor_value <= 1.0)) {
        throw data_error("step function: floor outside [0, 1]");
    }
    double prev_v = floor_value;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0 && !(jump_points[i] > jump_points[i - 1])) {
            throw data_error("step function: jump points must be strictly increasing");
        }
        if (!(values[i] >= prev_v)) throw data_error("step function: values must be nondecreasing");
        if (!(values[i] <= 1.0)) throw data_error("step function: values outside [0, 1]");
        prev_v = values[i];
    }
    StepFunction f;
    f.floor_ = floor_value;
    f.xs_ = std::move(jump_points);
    f.values_ = std::move(values);
    return f;
}

double StepFunction::operator()(double x) const {
    // Last jump point <= x.
    const auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
    if (it == xs_.begin()) return floor_;
    return values_[static_cast<std::size_t>(it - xs_.begin()) - 1];
}

StepFunction ecdf(const std::vector<double>& points) {
    if (points.empty()) throw data_error("ecdf: empty input");
    std::vector<double> sorted = points;
    std::sort(sorted.begin(), sorted.end());
    const double n = static_cast<double>(sorted.size());
    std::vector<double> xs;
    std::vector<double> vs;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        // Stack ties: record only the last occurrence of each value.
        if (i + 1 < sorted.size() && sorted[i + 1] == sorted[i]) continue;
        xs.push_back(sorted[i]);
        vs.push_back(static_cast<double>(i + 1) / n);
    }
    return StepFunction::from_jumps(0.0, std::move(xs), std::move(vs));
}

double band_inverse(const StepFunction& f, double p) {
    if (!(p > 0.0 && p < 1.0)) throw data_error("band_inverse: p must be in (0, 1)");
    if (f.floor_value() >= p) return -std::numeric_limits<double>::infinity();
    if (f.sup() < p) return std::numeric_limits<double>::infinity();
    const auto& vs = f.values();
    const auto it = std::lower_bound(vs.begin(), vs.end(), p);
    return f.jump_points()[static_cast<std::size_t>(it - vs.begin())];
}

}  // namespace poolstat
