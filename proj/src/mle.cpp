#include "poolstat/mle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "poolstat/errors.hpp"

namespace poolstat {

namespace {

void check_exponential_data(const IntervalDataset& ds) {
    if (ds.empty()) throw data_error("exponential likelihood: empty dataset");
    for (const Interval& x : ds.items) {
        if (x.lo < 0.0) {
            std::ostringstream msg;
            msg << "exponential likelihood: negative lower endpoint " << x.lo;
            throw data_error(msg.str());
        }
        if (x.width() <= 0.0) {
            throw data_error(
                "exponential likelihood: zero-width interval makes the censored likelihood "
                "identically -inf; add a small width or use the point likelihood");
        }
    }
}

// Golden-section maximization of a unimodal function on [lo, hi].
double golden_section_max(const std::function<double(double)>& f, double lo, double hi,
                          double tol) {
    constexpr double inv_phi = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int it = 0; it < 400 && (b - a) > tol; ++it) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

double exp_loglik_interval(const IntervalDataset& ds, double rate) {
    if (!(rate > 0.0)) throw data_error("exponential likelihood: rate must be > 0");
    check_exponential_data(ds);
    double ll = 0.0;
    for (const Interval& x : ds.items) {
        // ln(e^{-rate*lo} - e^{-rate*hi}) = -rate*lo + ln(1 - e^{-rate*width})
        ll += -rate * x.lo + std::log(-std::expm1(-rate * x.width()));
    }
    return ll;
}

FitResult exp_mle_traditional(const IntervalDataset& ds) {
    check_exponential_data(ds);
    double mean_mid = 0.0;
    for (const Interval& x : ds.items) mean_mid += x.midpoint();
    mean_mid /= static_cast<double>(ds.size());
    if (!(mean_mid > 0.0)) throw data_error("exp_mle_traditional: data midpoints not positive");

    const double lo = 1e-8;
    const double hi = 1e3 / mean_mid;
    const auto obj = [&ds](double rate) { return exp_loglik_interval(ds, rate); };
    const double rate_hat = golden_section_max(obj, lo, hi, 1e-10);

    FitResult fit;
    fit.estimate = Interval{rate_hat, rate_hat};
    fit.family = Family::exponential;
    fit.method = FitMethod::traditional;
    fit.loglik = obj(rate_hat);
    return fit;
}

UncertainCI exp_ci_traditional(const FitResult& fit, const IntervalDataset& ds, Alpha alpha) {
    if (fit.method != FitMethod::traditional || fit.family != Family::exponential) {
        throw data_error("exp_ci_traditional: traditional exponential fit required");
    }
    const double rate = fit.estimate.midpoint();
    const double h = std::max(1e-5, 1e-5 * rate);
    const double ll0 = exp_loglik_interval(ds, rate);
    const double llp = exp_loglik_interval(ds, rate + h);
    const double llm = exp_loglik_interval(ds, rate - h);
    const double observed_info = -(llp - 2.0 * ll0 + llm) / (h * h);
    if (!(observed_info > 0.0)) {
        throw numeric_error("exp_ci_traditional: non-positive observed information");
    }
    const int df = static_cast<int>(ds.size()) - 1;
    if (df < 1) throw data_error("exp_ci_traditional: need at least 2 observations");
    const double t_crit = student_t_quantile(df, 1.0 - alpha.value / 2.0);
    const double half = t_crit * std::sqrt(1.0 / observed_info);
    return UncertainCI{Interval{rate - half, rate - half}, Interval{rate + half, rate + half}};
}

FitResult exp_mle_interval(const IntervalDataset& ds) {
    FitResult fit;
    fit.estimate = scale_recip_sum(ds);
    fit.family = Family::exponential;
    fit.method = FitMethod::interval;
    return fit;
}

UncertainCI exp_ci_interval(const IntervalDataset& ds, Alpha alpha) {
    if (ds.empty()) throw data_error("exp_ci_interval: empty dataset");
    for (const Interval& x : ds.items) {
        if (!(x.lo > 0.0)) {
            std::ostringstream msg;
            msg << "exp_ci_interval: non-positive lower endpoint " << x.lo;
            throw data_error(msg.str());
        }
    }
    const Interval s = sum(ds);
    const int df = 2 * static_cast<int>(ds.size());
    const double chi_lo = chi_square_quantile(df, alpha.value / 2.0);
    const double chi_hi = chi_square_quantile(df, 1.0 - alpha.value / 2.0);
    return UncertainCI{Interval{chi_lo / (2.0 * s.hi), chi_lo / (2.0 * s.lo)},
                       Interval{chi_hi / (2.0 * s.hi), chi_hi / (2.0 * s.lo)}};
}

FitResult unif_mle_interval(const IntervalDataset& ds) {
    if (ds.empty()) throw data_error("unif_mle_interval: empty dataset");
    for (const Interval& x : ds.items) {
        if (x.lo < 0.0) {
            std::ostringstream msg;
            msg << "unif_mle_interval: negative lower endpoint " << x.lo
                << " outside the U(0, theta) support";
            throw data_error(msg.str());
        }
    }
    FitResult fit;
    fit.estimate = interval_max(ds);
    fit.family = Family::uniform;
    fit.method = FitMethod::interval;
    return fit;
}

UncertainCI unif_ci_interval(const IntervalDataset& ds, Alpha alpha) {
    const FitResult fit = unif_mle_interval(ds);
    const double n = static_cast<double>(ds.size());
    const double denom_lo = std::pow(1.0 - alpha.value / 2.0, 1.0 / n);
    const double denom_hi = std::pow(alpha.value / 2.0, 1.0 / n);
    return UncertainCI{
        Interval{fit.estimate.lo / denom_lo, fit.estimate.hi / denom_lo},
        Interval{fit.estimate.lo / denom_hi, fit.estimate.hi / denom_hi}};
}

double mle_ci_width(const UncertainCI& ci) {
    return ci.hull_width();
}

}  // namespace poolstat
