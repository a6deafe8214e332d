#pragma once

#include <optional>

#include "poolstat/descriptive.hpp"
#include "poolstat/interval.hpp"
#include "poolstat/stats_kernels.hpp"

namespace poolstat {

enum class Family { exponential, uniform };
enum class FitMethod { traditional, interval };

struct FitResult {
    Interval estimate;  // degenerate for traditional fits
    Family family = Family::exponential;
    FitMethod method = FitMethod::interval;
    std::optional<double> loglik;  // traditional fits only
};

// Interval-censored exponential log-likelihood
// sum_i ln(exp(-rate*lo_i) - exp(-rate*hi_i)), evaluated stably.
// Requires rate > 0, lows >= 0, and strictly positive widths (a zero-width
// interval makes the censored likelihood identically -inf; add a small
// width or use the point likelihood instead).
double exp_loglik_interval(const IntervalDataset& ds, double rate);

// Single-distribution censored MLE: golden-section maximization of the
// unimodal interval likelihood on [1e-8, 1e3 / mean(midpoints)],
// tolerance 1e-10 in the rate.
FitResult exp_mle_traditional(const IntervalDataset& ds);

// Fisher-information confidence interval around the traditional fit, with
// the observed information (central finite difference of the log-likelihood
// at the maximum) standing in for the expected information. Both ends
// degenerate.
UncertainCI exp_ci_traditional(const FitResult& fit, const IntervalDataset& ds, Alpha alpha);

// Imprecise-probabilities MLE: the set of rates N / sum of intervals.
FitResult exp_mle_interval(const IntervalDataset& ds);

// Chi-square confidence interval for the interval MLE; both ends are
// intervals and the reported region is their outer hull.
UncertainCI exp_ci_interval(const IntervalDataset& ds, Alpha alpha);

// Interval MLE of theta for U(0, theta): componentwise max.
FitResult unif_mle_interval(const IntervalDataset& ds);

UncertainCI unif_ci_interval(const IntervalDataset& ds, Alpha alpha);

// Hull width of a confidence region (upper_end.hi - lower_end.lo).
double mle_ci_width(const UncertainCI& ci);

}  // namespace poolstat
