#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "poolstat/interval.hpp"
#include "poolstat/random.hpp"
#include "poolstat/stats_kernels.hpp"

namespace poolstat {

enum class Metric {
    outer_ci_width,
    ks_horizontal_width,
    mle_ci_width_exponential,
    mle_ci_width_uniform,
    mle_traditional_study,
};

enum class Intervalization { central, uniform_bias, systematic };

// Full parameterization of one Monte Carlo experiment. The puffy imprecision
// is f * delta_skinny.
struct Scenario {
    SourceDistribution source = NormalParams{0.0, 1.0};
    long n_skinny = 10;
    long n_puffy = 10;
    double delta_skinny = 0.1;
    double f = 1.0;
    Alpha alpha{0.05};
    Metric metric = Metric::outer_ci_width;
    Intervalization intervalization = Intervalization::uniform_bias;
    double systematic_c = 0.0;
    long replications = 1000;
    std::uint64_t master_seed = 0;
    long slices = 101;
    double p0 = 0.5;
};

// Throws data_error listing every violated constraint.
void validate(const Scenario& sc);

struct TrialResult {
    double width_skinny = 0.0;
    double width_pooled = 0.0;
    bool success = false;  // strict width_pooled < width_skinny
};

struct CurvePoint {
    double f = 0.0;
    double percent_success = 0.0;
    long successes = 0;
    long both_infinite = 0;
    long trials = 0;
};

using Curve = std::vector<CurvePoint>;

struct ContourGrid {
    std::vector<double> f_values;
    std::vector<double> dispersion_values;
    // percent[i][j] for dispersion i, f j.
    std::vector<std::vector<double>> percent;
    // Cells at >= 90% success adjacent to a cell below 90 (the iso-line).
    std::vector<std::pair<std::size_t, std::size_t>> iso90_cells;
};

struct StudyResult {
    double mean_rate_skinny = 0.0;
    double mean_rate_pooled = 0.0;
    std::vector<double> bin_edges;
    std::vector<long> hist_skinny;
    std::vector<long> hist_pooled;
    long trials = 0;
};

// One seeded trial: draw n_skinny + n_puffy source values from stream
// (master_seed, trial_index), intervalize the first n_skinny with
// delta_skinny and the rest with f * delta_skinny, and compare the
// scenario's uncertainty metric on the skinny set alone versus the pooled
// set. Deterministic per (scenario, trial_index).
TrialResult run_trial(const Scenario& sc, std::uint64_t trial_index);

// Runs M trials per grid value of f; percent success is over all M.
// Trials are deterministic per index, so results do not depend on the
// thread count. Any trial error aborts the curve.
Curve success_curve(const Scenario& sc, const std::vector<double>& f_grid, int threads = 1);

// Success percentages over (f, dispersion); dispersion replaces sigma for a
// normal source and the shape for a gamma source. Requires a balanced
// scenario (n_skinny == n_puffy).
ContourGrid contour_grid(const Scenario& sc, const std::vector<double>& f_grid,
                         const std::vector<double>& dispersion_grid, int threads = 1);

// Sampling distribution of the traditional exponential MLE on skinny versus
// pooled data: means plus binned histograms.
StudyResult mle_sampling_study(const Scenario& sc, int threads = 1);

// Source variates drawn by harness calls since process start (audit
// counter; aggregated across threads).
std::uint64_t total_draw_count();

}  // namespace poolstat
