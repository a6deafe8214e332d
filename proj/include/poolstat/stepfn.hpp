#pragma once

#include <vector>

namespace poolstat {

// Right-continuous nondecreasing step function with values in [0, 1].
// floor_value is taken on (-inf, first jump); values[i] is taken on
// [jump_points[i], jump_points[i+1]).
class StepFunction {
public:
    StepFunction() = default;

    // Validates ordering, monotonicity, and range.
    static StepFunction from_jumps(double floor_value, std::vector<double> jump_points,
                                   std::vector<double> values);

    double operator()(double x) const;

    double floor_value() const { return floor_; }
    // Largest value attained.
    double sup() const { return values_.empty() ? floor_ : values_.back(); }

    const std::vector<double>& jump_points() const { return xs_; }
    const std::vector<double>& values() const { return values_; }

private:
    double floor_ = 0.0;
    std::vector<double> xs_;
    std::vector<double> values_;
};

// Empirical CDF with steps of 1/N at each sorted point (ties stack).
StepFunction ecdf(const std::vector<double>& points);

// Generalized inverse inf{x : f(x) >= p} for p in (0, 1). Returns +inf when
// the function never reaches p, -inf when even the floor does.
double band_inverse(const StepFunction& f, double p);

}  // namespace poolstat
