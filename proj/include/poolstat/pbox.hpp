#pragma once

#include "poolstat/interval.hpp"
#include "poolstat/stats_kernels.hpp"
#include "poolstat/stepfn.hpp"

namespace poolstat {

// Probability box: a pair of CDF bounds. upper is the ECDF of the lower
// endpoints (everything the data could be, at the earliest), lower the ECDF
// of the upper endpoints; upper(x) >= lower(x) everywhere.
struct PBox {
    StepFunction upper;
    StepFunction lower;
};

// Kolmogorov-Smirnov simultaneous confidence band around a p-box: the p-box
// widened by the critical value d_crit and clipped to [0, 1].
struct KSBand {
    StepFunction upper;
    StepFunction lower;
    double d_crit = 0.0;
    long n = 0;
    Alpha alpha;
};

PBox pbox_from_intervals(const IntervalDataset& ds);

// n must be the sample size behind the p-box.
KSBand ks_band(const PBox& pb, long n, Alpha alpha);

// Slice-averaged horizontal distance between the band edges in a thin layer
// of height 2/n_pooled centered at probability p0; +inf when the band is
// clipped away from part of the layer. Midpoint rule over `slices` slices.
double horizontal_width(const KSBand& band, double p0, long n_pooled, long slices);

}  // namespace poolstat
