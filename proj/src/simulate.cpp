#include "poolstat/simulate.hpp"

#include <algorithm>
#include <atomic>
#include <cfloat>
#include <cmath>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "poolstat/descriptive.hpp"
#include "poolstat/errors.hpp"
#include "poolstat/intervalize.hpp"
#include "poolstat/mle.hpp"
#include "poolstat/pbox.hpp"

namespace poolstat {

namespace {

std::atomic<std::uint64_t> g_draw_count{0};

bool is_mle_metric(Metric m) {
    return m == Metric::mle_ci_width_exponential || m == Metric::mle_ci_width_uniform ||
           m == Metric::mle_traditional_study;
}

// Measurement intervals for a positive quantity cannot extend below the
// support, so the harness truncates lower endpoints there before the MLE
// metrics. The exponential formulas require strictly positive lows; the
// smallest normal double stands in for "zero, but positive".
void truncate_to_support(IntervalDataset& ds, double floor_value) {
    for (Interval& x : ds.items) {
        if (x.lo < floor_value) x.lo = floor_value;
    }
}

struct TrialData {
    IntervalDataset skinny;
    IntervalDataset pooled;
};

IntervalDataset intervalize_for(const Scenario& sc, const std::vector<double>& xs, double delta,
                                RandomStream& rs) {
    switch (sc.intervalization) {
        case Intervalization::central:
            return intervalize_central(xs, delta);
        case Intervalization::uniform_bias:
            return intervalize_uniform_bias(xs, delta, rs);
        case Intervalization::systematic:
            return intervalize_systematic(xs, delta, sc.systematic_c);
    }
    throw data_error("unknown intervalization method");
}

TrialData synthesize_trial(const Scenario& sc, std::uint64_t trial_index) {
    RandomStream rs(SeedStream{sc.master_seed, trial_index});
    const long total = sc.n_skinny + sc.n_puffy;

    std::vector<double> skinny_vals, puffy_vals;
    if (std::holds_alternative<NormalMixtureParams>(sc.source)) {
        // Draw the subsets separately so each follows the mixture proportions.
        skinny_vals = sample(resize_for(sc.source, sc.n_skinny), sc.n_skinny, rs);
        if (sc.n_puffy > 0) {
            puffy_vals = sample(resize_for(sc.source, sc.n_puffy), sc.n_puffy, rs);
        }
    } else {
        std::vector<double> all = sample(sc.source, total, rs);
        skinny_vals.assign(all.begin(), all.begin() + sc.n_skinny);
        puffy_vals.assign(all.begin() + sc.n_skinny, all.end());
    }
    g_draw_count.fetch_add(static_cast<std::uint64_t>(total), std::memory_order_relaxed);

    TrialData td;
    td.skinny = intervalize_for(sc, skinny_vals, sc.delta_skinny, rs);
    td.skinny.label = "skinny";
    IntervalDataset puffy;
    if (!puffy_vals.empty()) {
        puffy = intervalize_for(sc, puffy_vals, sc.f * sc.delta_skinny, rs);
    }
    puffy.label = "puffy";

    if (is_mle_metric(sc.metric) && positive_support(sc.source)) {
        const double floor_value =
            sc.metric == Metric::mle_ci_width_exponential ? DBL_MIN : 0.0;
        truncate_to_support(td.skinny, floor_value);
        truncate_to_support(puffy, floor_value);
    }

    td.pooled = pool(td.skinny, puffy);
    return td;
}

double metric_width(const Scenario& sc, const IntervalDataset& ds, long n_pooled) {
    switch (sc.metric) {
        case Metric::outer_ci_width:
            return ci_width(outer_ci(ds, sc.alpha));
        case Metric::ks_horizontal_width: {
            const PBox pb = pbox_from_intervals(ds);
            const KSBand band = ks_band(pb, static_cast<long>(ds.size()), sc.alpha);
            return horizontal_width(band, sc.p0, n_pooled, sc.slices);
        }
        case Metric::mle_ci_width_exponential:
            return mle_ci_width(exp_ci_interval(ds, sc.alpha));
        case Metric::mle_ci_width_uniform:
            return mle_ci_width(unif_ci_interval(ds, sc.alpha));
        case Metric::mle_traditional_study:
            break;
    }
    throw data_error("metric_width: not a width metric");
}

// Runs trials [0, M) of `sc`, deterministically per index, optionally
// chunked over threads. Any exception is rethrown on the calling thread.
std::vector<TrialResult> run_trials(const Scenario& sc, long m, int threads) {
    std::vector<TrialResult> results(static_cast<std::size_t>(m));
    if (threads <= 1 || m < 4) {
        for (long i = 0; i < m; ++i) results[static_cast<std::size_t>(i)] = run_trial(sc, i);
        return results;
    }
    std::atomic<long> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&]() {
        try {
            for (;;) {
                const long i = next.fetch_add(1);
                if (i >= m) return;
                results[static_cast<std::size_t>(i)] = run_trial(sc, i);
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!error) error = std::current_exception();
            next.store(m);
        }
    };
    std::vector<std::thread> pool_threads;
    for (int t = 0; t < threads; ++t) pool_threads.emplace_back(worker);
    for (auto& t : pool_threads) t.join();
    if (error) std::rethrow_exception(error);
    return results;
}

CurvePoint summarize(double f, const std::vector<TrialResult>& trials) {
    CurvePoint pt;
    pt.f = f;
    pt.trials = static_cast<long>(trials.size());
    for (const TrialResult& tr : trials) {
        if (tr.success) ++pt.successes;
        if (std::isinf(tr.width_skinny) && std::isinf(tr.width_pooled)) ++pt.both_infinite;
    }
    pt.percent_success = 100.0 * static_cast<double>(pt.successes) /
                         static_cast<double>(pt.trials);
    return pt;
}

}  // namespace

void validate(const Scenario& sc) {
    std::vector<std::string> problems;
    try {
        poolstat::validate(sc.source);
    } catch (const std::exception& e) {
        problems.emplace_back(e.what());
    }
    if (sc.n_skinny < 1) problems.emplace_back("n_skinny must be >= 1");
    if (sc.n_puffy < 0) problems.emplace_back("n_puffy must be >= 0");
    if (!(sc.delta_skinny > 0.0) || !std::isfinite(sc.delta_skinny)) {
        problems.emplace_back("delta_skinny must be > 0 and finite");
    }
    if (!(sc.f >= 1.0) || !std::isfinite(sc.f)) problems.emplace_back("f must be >= 1 and finite");
    if (sc.replications < 1) problems.emplace_back("M must be >= 1");
    if (sc.slices < 1) problems.emplace_back("slices must be >= 1");
    if (!(sc.p0 > 0.0 && sc.p0 < 1.0)) problems.emplace_back("p0 must be in (0, 1)");
    if (sc.intervalization == Intervalization::systematic &&
        !(sc.systematic_c >= -1.0 && sc.systematic_c <= 1.0)) {
        problems.emplace_back("systematic C must be in [-1, 1]");
    }
    if (sc.metric == Metric::outer_ci_width && sc.n_skinny < 2) {
        problems.emplace_back("outer_ci_width metric needs n_skinny >= 2");
    }
    if (sc.metric == Metric::ks_horizontal_width) {
        const double h = 2.0 / static_cast<double>(sc.n_skinny + sc.n_puffy);
        if (!(sc.p0 - 0.5 * h > 0.0 && sc.p0 + 0.5 * h < 1.0)) {
            problems.emplace_back("ks layer around p0 must stay inside (0, 1)");
        }
        try {
            ks_critical(1, sc.alpha);
        } catch (const std::exception& e) {
            problems.emplace_back(e.what());
        }
    }
    if ((sc.metric == Metric::mle_ci_width_exponential ||
         sc.metric == Metric::mle_traditional_study) &&
        !std::holds_alternative<ExponentialParams>(sc.source)) {
        problems.emplace_back("exponential MLE metrics require an exponential source");
    }
    if (sc.metric == Metric::mle_ci_width_uniform) {
        const auto* u = std::get_if<UniformParams>(&sc.source);
        if (u == nullptr || u->a != 0.0) {
            problems.emplace_back("uniform MLE metric requires a uniform(0, theta) source");
        }
    }
    if (!problems.empty()) {
        std::ostringstream msg;
        msg << "invalid scenario:";
        for (const std::string& p : problems) msg << "\n  - " << p;
        throw data_error(msg.str());
    }
}

TrialResult run_trial(const Scenario& sc, std::uint64_t trial_index) {
    const TrialData td = synthesize_trial(sc, trial_index);
    const long n_pooled = sc.n_skinny + sc.n_puffy;
    TrialResult tr;
    tr.width_skinny = metric_width(sc, td.skinny, n_pooled);
    tr.width_pooled = metric_width(sc, td.pooled, n_pooled);
    tr.success = tr.width_pooled < tr.width_skinny;
    return tr;
}

Curve success_curve(const Scenario& sc, const std::vector<double>& f_grid, int threads) {
    validate(sc);
    if (f_grid.empty()) throw data_error("success_curve: empty f grid");
    Curve curve;
    curve.reserve(f_grid.size());
    for (double f : f_grid) {
        Scenario point = sc;
        point.f = f;
        validate(point);
        curve.push_back(summarize(f, run_trials(point, sc.replications, threads)));
    }
    return curve;
}

ContourGrid contour_grid(const Scenario& sc, const std::vector<double>& f_grid,
                         const std::vector<double>& dispersion_grid, int threads) {
    validate(sc);
    if (sc.n_skinny != sc.n_puffy) {
        throw data_error("contour_grid: balanced scenario (n_skinny == n_puffy) required");
    }
    if (f_grid.empty() || dispersion_grid.empty()) {
        throw data_error("contour_grid: empty grid");
    }
    ContourGrid grid;
    grid.f_values = f_grid;
    grid.dispersion_values = dispersion_grid;
    for (double disp : dispersion_grid) {
        Scenario point = sc;
        if (auto* np = std::get_if<NormalParams>(&point.source)) {
            np->sigma = disp;
        } else if (auto* gp = std::get_if<GammaParams>(&point.source)) {
            gp->shape = disp;
        } else {
            throw data_error("contour_grid: dispersion sweep needs a normal or gamma source");
        }
        std::vector<double> row;
        row.reserve(f_grid.size());
        for (double f : f_grid) {
            point.f = f;
            validate(point);
            row.push_back(summarize(f, run_trials(point, sc.replications, threads))
                              .percent_success);
        }
        grid.percent.push_back(std::move(row));
    }
    // Boundary cells of the >= 90% region.
    const std::size_t rows = grid.percent.size();
    const std::size_t cols = f_grid.size();
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            if (grid.percent[i][j] < 90.0) continue;
            const bool boundary =
                (i > 0 && grid.percent[i - 1][j] < 90.0) ||
                (i + 1 < rows && grid.percent[i + 1][j] < 90.0) ||
                (j > 0 && grid.percent[i][j - 1] < 90.0) ||
                (j + 1 < cols && grid.percent[i][j + 1] < 90.0);
            if (boundary) grid.iso90_cells.emplace_back(i, j);
        }
    }
    return grid;
}

StudyResult mle_sampling_study(const Scenario& sc, int threads) {
    Scenario study = sc;
    study.metric = Metric::mle_traditional_study;
    validate(study);
    const long m = sc.replications;

    std::vector<double> rate_skinny(static_cast<std::size_t>(m));
    std::vector<double> rate_pooled(static_cast<std::size_t>(m));
    std::atomic<long> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&]() {
        try {
            for (;;) {
                const long i = next.fetch_add(1);
                if (i >= m) return;
                const TrialData td = synthesize_trial(study, static_cast<std::uint64_t>(i));
                rate_skinny[static_cast<std::size_t>(i)] =
                    exp_mle_traditional(td.skinny).estimate.midpoint();
                rate_pooled[static_cast<std::size_t>(i)] =
                    exp_mle_traditional(td.pooled).estimate.midpoint();
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!error) error = std::current_exception();
            next.store(m);
        }
    };
    const int nthreads = std::max(1, threads);
    std::vector<std::thread> pool_threads;
    for (int t = 0; t < nthreads; ++t) pool_threads.emplace_back(worker);
    for (auto& t : pool_threads) t.join();
    if (error) std::rethrow_exception(error);

    StudyResult out;
    out.trials = m;
    double lo = rate_skinny[0], hi = rate_skinny[0];
    for (double v : rate_skinny) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
        out.mean_rate_skinny += v;
    }
    for (double v : rate_pooled) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
        out.mean_rate_pooled += v;
    }
    out.mean_rate_skinny /= static_cast<double>(m);
    out.mean_rate_pooled /= static_cast<double>(m);

    constexpr std::size_t kBins = 50;
    if (hi <= lo) hi = lo + 1.0;
    out.bin_edges.resize(kBins + 1);
    for (std::size_t b = 0; b <= kBins; ++b) {
        out.bin_edges[b] = lo + (hi - lo) * static_cast<double>(b) / kBins;
    }
    out.hist_skinny.assign(kBins, 0);
    out.hist_pooled.assign(kBins, 0);
    auto bin_of = [&](double v) {
        auto b = static_cast<long>((v - lo) / (hi - lo) * kBins);
        return std::min<long>(std::max<long>(b, 0), kBins - 1);
    };
    for (double v : rate_skinny) ++out.hist_skinny[static_cast<std::size_t>(bin_of(v))];
    for (double v : rate_pooled) ++out.hist_pooled[static_cast<std::size_t>(bin_of(v))];
    return out;
}

std::uint64_t total_draw_count() {
    return g_draw_count.load(std::memory_order_relaxed);
}

}  // namespace poolstat
