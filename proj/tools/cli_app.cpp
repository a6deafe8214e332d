#include "cli_app.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <thread>

#include <CLI11.hpp>

#include "poolstat/descriptive.hpp"
#include "poolstat/errors.hpp"
#include "poolstat/intervalize.hpp"
#include "poolstat/io.hpp"
#include "poolstat/mle.hpp"
#include "poolstat/pbox.hpp"
#include "poolstat/simulate.hpp"

namespace poolstat {

namespace {

// "-" selects standard output.
class OutputTarget {
public:
    explicit OutputTarget(const std::string& path) {
        if (path != "-") {
            file_.open(path, std::ios::binary);
            if (!file_) throw data_error("cannot write output file '" + path + "'");
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }
    bool to_stdout() const { return !file_.is_open(); }

private:
    std::ofstream file_;
};

std::string show(const Interval& x) {
    return "[" + format_double(x.lo) + "," + format_double(x.hi) + "]";
}

struct SynthOptions {
    std::string family;
    double mu = 0.0, sigma = 1.0, a = 0.0, b = 1.0, lambda = 1.0, shape = 1.0, theta = 1.0;
    double mu1 = 0.0, sigma1 = 1.0, mu2 = 0.0, sigma2 = 1.0;
    long n1 = 0, n2 = 0;
    long n = 0;
    double delta = 0.0;
    std::string method = "central";
    double c = 0.0;
    std::uint64_t seed = 0;
    std::string label = "user";
    std::string out = "-";
    bool emit_truth = false;
};

SourceDistribution make_source(const SynthOptions& o, long n) {
    if (o.family == "normal") return NormalParams{o.mu, o.sigma};
    if (o.family == "uniform") return UniformParams{o.a, o.b};
    if (o.family == "exponential") return ExponentialParams{o.lambda};
    if (o.family == "gamma") return GammaParams{o.shape, o.theta};
    if (o.family == "normal_mixture") {
        NormalMixtureParams p{o.mu1, o.sigma1, o.n1, o.mu2, o.sigma2, o.n2};
        if (p.n1 + p.n2 == 0) return resize_for(NormalMixtureParams{o.mu1, o.sigma1, 1, o.mu2,
                                                                    o.sigma2, 1},
                                                n);
        return p;
    }
    throw data_error("unknown family '" + o.family + "'");
}

int cmd_synth(const SynthOptions& o) {
    const SourceDistribution dist = make_source(o, o.n);
    RandomStream rs(SeedStream{o.seed, 0});
    const std::vector<double> xs = sample(dist, o.n, rs);

    IntervalDataset ds;
    if (o.method == "central") {
        ds = intervalize_central(xs, o.delta);
    } else if (o.method == "uniform_bias") {
        ds = intervalize_uniform_bias(xs, o.delta, rs);
    } else if (o.method == "systematic") {
        ds = intervalize_systematic(xs, o.delta, o.c);
    } else {
        throw data_error("unknown intervalization method '" + o.method + "'");
    }
    ds.label = o.label;

    OutputTarget out(o.out);
    write_dataset(out.stream(), ds, o.emit_truth ? &xs : nullptr);

    double mean_width = 0.0;
    for (const Interval& x : ds.items) mean_width += x.width();
    mean_width /= static_cast<double>(ds.size());
    std::ostream& info = out.to_stdout() ? std::cerr : std::cout;
    info << "n: " << ds.size() << "\n";
    info << "mean_width: " << format_double(mean_width) << "\n";
    return 0;
}

int cmd_describe(const std::string& path, double alpha_value) {
    const IntervalDataset ds = load_dataset(path);
    if (ds.size() < 2) throw data_error("need at least 2 intervals, got " +
                                        std::to_string(ds.size()));
    const Alpha alpha(alpha_value);
    const Interval mean = interval_mean(ds);
    const UncertainCI outer = outer_ci(ds, alpha);
    const std::optional<Interval> inner = inner_ci(ds, alpha);

    std::cout << "n: " << ds.size() << "\n";
    std::cout << "label: " << ds.label << "\n";
    std::cout << "mean: " << show(mean) << "\n";
    std::cout << "outer_lower_end: " << show(outer.lower_end) << "\n";
    std::cout << "outer_upper_end: " << show(outer.upper_end) << "\n";
    std::cout << "outer_hull: [" << format_double(outer.hull_lo()) << ","
              << format_double(outer.hull_hi()) << "]\n";
    std::cout << "inner: " << (inner ? show(*inner) : std::string("empty")) << "\n";
    std::cout << "D_width: " << format_double(ci_width(outer)) << "\n";
    return 0;
}

int cmd_ks(const std::string& path, double alpha_value, double p0, long slices, long pooled_n,
           const std::string& out_path) {
    const IntervalDataset ds = load_dataset(path);
    if (ds.empty()) throw data_error("need at least 1 interval");
    const Alpha alpha(alpha_value);
    const PBox pb = pbox_from_intervals(ds);
    const KSBand band = ks_band(pb, static_cast<long>(ds.size()), alpha);

    OutputTarget out(out_path);
    write_band_csv(out.stream(), pb, band);

    const long layer_n = pooled_n > 0 ? pooled_n : static_cast<long>(ds.size());
    const double h = horizontal_width(band, p0, layer_n, slices);
    std::ostream& info = out.to_stdout() ? std::cerr : std::cout;
    info << "d_crit: " << format_double(band.d_crit) << "\n";
    info << "H: " << format_double(h) << "\n";
    return 0;
}

int cmd_mle(const std::string& path, const std::string& family, const std::string& method,
            double alpha_value) {
    const IntervalDataset ds = load_dataset(path);
    const Alpha alpha(alpha_value);

    FitResult fit;
    UncertainCI ci;
    if (family == "exponential" && method == "traditional") {
        fit = exp_mle_traditional(ds);
        ci = exp_ci_traditional(fit, ds, alpha);
    } else if (family == "exponential" && method == "interval") {
        fit = exp_mle_interval(ds);
        ci = exp_ci_interval(ds, alpha);
    } else if (family == "uniform" && method == "interval") {
        fit = unif_mle_interval(ds);
        ci = unif_ci_interval(ds, alpha);
    } else {
        std::cerr << "unsupported combination: family '" << family << "' with method '"
                  << method << "'\n";
        return 2;
    }

    std::cout << "family: " << family << "\n";
    std::cout << "method: " << method << "\n";
    std::cout << "estimate: " << show(fit.estimate) << "\n";
    std::cout << "ci_lower_end: " << show(ci.lower_end) << "\n";
    std::cout << "ci_upper_end: " << show(ci.upper_end) << "\n";
    std::cout << "ci_hull: [" << format_double(ci.hull_lo()) << ","
              << format_double(ci.hull_hi()) << "]\n";
    if (fit.loglik) std::cout << "loglik: " << format_double(*fit.loglik) << "\n";
    std::cout << "ci_width: " << format_double(mle_ci_width(ci)) << "\n";
    return 0;
}

int cmd_simulate(const std::string& scenario_path, const std::string& out_path,
                 const std::string& hist_path, int threads) {
    const ScenarioFile sf = load_scenario(scenario_path);
    const Scenario& sc = sf.scenario;

    const std::uint64_t draws_before = total_draw_count();
    const auto t0 = std::chrono::steady_clock::now();
    OutputTarget out(out_path);

    long both_infinite = 0;
    if (sc.metric == Metric::mle_traditional_study) {
        if (sf.f_grid.size() > 1) {
            throw data_error("study scenarios take a single f, not an f_grid");
        }
        const StudyResult study = mle_sampling_study(sc, threads);
        write_study_csv(out.stream(), sc, study);
        if (!hist_path.empty()) {
            OutputTarget hist(hist_path);
            write_study_histogram_csv(hist.stream(), study);
        }
    } else if (!sf.dispersion_grid.empty()) {
        std::vector<double> f_grid = sf.f_grid;
        if (f_grid.empty()) f_grid.push_back(sc.f);
        const ContourGrid grid = contour_grid(sc, f_grid, sf.dispersion_grid, threads);
        write_grid_csv(out.stream(), grid);
    } else {
        std::vector<double> f_grid = sf.f_grid;
        if (f_grid.empty()) f_grid.push_back(sc.f);
        const Curve curve = success_curve(sc, f_grid, threads);
        write_curve_csv(out.stream(), curve);
    }

    const auto t1 = std::chrono::steady_clock::now();
    const double seconds = std::chrono::duration<double>(t1 - t0).count();
    std::ostream& info = out.to_stdout() ? std::cerr : std::cout;
    info << "wall_clock_s: " << format_double(seconds) << "\n";
    info << "source_draws: " << (total_draw_count() - draws_before) << "\n";
    return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"statistics for interval-censored data and pooling decisions"};
    app.require_subcommand(1);

    SynthOptions so;
    CLI::App* synth = app.add_subcommand("synth", "generate an interval dataset");
    synth->add_option("--family", so.family, "normal|uniform|exponential|gamma|normal_mixture")
        ->required();
    synth->add_option("--mu", so.mu, "normal mean");
    synth->add_option("--sigma", so.sigma, "normal standard deviation");
    synth->add_option("--a", so.a, "uniform lower bound");
    synth->add_option("--b", so.b, "uniform upper bound");
    synth->add_option("--lambda", so.lambda, "exponential rate");
    synth->add_option("--k", so.shape, "gamma shape");
    synth->add_option("--theta", so.theta, "gamma scale");
    synth->add_option("--mu1", so.mu1, "mixture component 1 mean");
    synth->add_option("--sigma1", so.sigma1, "mixture component 1 sd");
    synth->add_option("--n1", so.n1, "mixture component 1 count");
    synth->add_option("--mu2", so.mu2, "mixture component 2 mean");
    synth->add_option("--sigma2", so.sigma2, "mixture component 2 sd");
    synth->add_option("--n2", so.n2, "mixture component 2 count");
    synth->add_option("--n", so.n, "sample size")->required();
    synth->add_option("--delta", so.delta, "imprecision half-width")->required();
    synth->add_option("--method", so.method, "central|uniform_bias|systematic");
    synth->add_option("--C", so.c, "systematic bias in [-1, 1]");
    synth->add_option("--seed", so.seed, "master seed");
    synth->add_option("--label", so.label, "dataset label");
    synth->add_option("--out", so.out, "output file, '-' for stdout");
    synth->add_flag("--emit-truth", so.emit_truth, "record generating values as a third column");

    std::string dataset_path;
    double alpha_value = 0.05;
    CLI::App* describe =
        app.add_subcommand("describe", "interval mean and confidence bounds on the mean");
    describe->add_option("dataset", dataset_path, "dataset CSV")->required();
    describe->add_option("--alpha", alpha_value, "significance level (default 0.05)");

    std::string ks_dataset, ks_out = "-";
    double ks_alpha = 0.025, ks_p0 = 0.5;
    long ks_slices = 101, ks_pooled_n = 0;
    CLI::App* ks = app.add_subcommand("ks", "p-box and Kolmogorov-Smirnov band");
    ks->add_option("dataset", ks_dataset, "dataset CSV")->required();
    ks->add_option("--alpha", ks_alpha, "band significance level (default 0.025)");
    ks->add_option("--p0", ks_p0, "layer center probability");
    ks->add_option("--slices", ks_slices, "slices per layer");
    ks->add_option("--pooled-n", ks_pooled_n, "layer height reference size (default: dataset)");
    ks->add_option("--out", ks_out, "band CSV output, '-' for stdout");

    std::string mle_dataset, mle_family, mle_method = "interval";
    double mle_alpha = 0.05;
    CLI::App* mle = app.add_subcommand("mle", "maximum likelihood fits");
    mle->add_option("dataset", mle_dataset, "dataset CSV")->required();
    mle->add_option("--family", mle_family, "exponential|uniform")->required();
    mle->add_option("--method", mle_method, "traditional|interval");
    mle->add_option("--alpha", mle_alpha, "significance level (default 0.05)");

    std::string sim_scenario, sim_out = "-", sim_hist;
    int sim_threads = static_cast<int>(std::thread::hardware_concurrency());
    CLI::App* simulate = app.add_subcommand("simulate", "run a Monte Carlo scenario");
    simulate->add_option("--scenario", sim_scenario, "scenario file")->required();
    simulate->add_option("--out", sim_out, "result CSV, '-' for stdout");
    simulate->add_option("--hist-out", sim_hist, "histogram CSV (study scenarios)");
    simulate->add_option("--threads", sim_threads, "worker threads (default: all cores)");

    try {
        app.parse(argc, argv);
        if (synth->parsed()) return cmd_synth(so);
        if (describe->parsed()) return cmd_describe(dataset_path, alpha_value);
        if (ks->parsed()) return cmd_ks(ks_dataset, ks_alpha, ks_p0, ks_slices, ks_pooled_n,
                                        ks_out);
        if (mle->parsed()) return cmd_mle(mle_dataset, mle_family, mle_method, mle_alpha);
        if (simulate->parsed()) {
            return cmd_simulate(sim_scenario, sim_out, sim_hist, std::max(1, sim_threads));
        }
        return 2;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            app.exit(e);
            return 0;
        }
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const numeric_error& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace poolstat
