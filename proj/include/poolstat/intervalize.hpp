#pragma once

#include <vector>

#include "poolstat/interval.hpp"
#include "poolstat/random.hpp"

namespace poolstat {

// Symmetric censoring: each x becomes [x - delta, x + delta].
IntervalDataset intervalize_central(const std::vector<double>& xs, double delta);

// Uniformly biased censoring: per datum, r ~ U(-1,1) independently,
// m = x + r*delta, interval = [m - delta, m + delta]. The true value stays
// inside because |r| <= 1.
IntervalDataset intervalize_uniform_bias(const std::vector<double>& xs, double delta,
                                         RandomStream& rs);
IntervalDataset intervalize_uniform_bias(const std::vector<double>& xs, double delta,
                                         SeedStream seed);

// Systematic bias with fixed offset C in [-1, 1]: m = x + C*delta.
// C = 0 reproduces intervalize_central bit-exactly.
IntervalDataset intervalize_systematic(const std::vector<double>& xs, double delta, double c);

// Concatenation; the result is labeled "pooled".
IntervalDataset pool(const IntervalDataset& a, const IntervalDataset& b);

}  // namespace poolstat
