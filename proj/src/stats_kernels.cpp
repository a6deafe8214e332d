#include "poolstat/stats_kernels.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>

#include "poolstat/errors.hpp"

namespace poolstat {

namespace {

constexpr int kMaxIterations = 100;
constexpr double kFpMin = 1e-300;

// Continued fraction for the incomplete beta function (modified Lentz).
double beta_continued_fraction(double a, double b, double x) {
    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < kFpMin) d = kFpMin;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= 300; ++m) {
        const int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kFpMin) d = kFpMin;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kFpMin) c = kFpMin;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kFpMin) d = kFpMin;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kFpMin) c = kFpMin;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < 1e-15) return h;
    }
    throw numeric_error("incomplete beta continued fraction did not converge");
}

// Series expansion of P(a, x), valid for x < a + 1.
double lower_gamma_series(double a, double x) {
    double ap = a;
    double sum = 1.0 / a;
    double del = sum;
    for (int n = 0; n < 500; ++n) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::fabs(del) < std::fabs(sum) * 1e-16) {
            return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
        }
    }
    throw numeric_error("incomplete gamma series did not converge");
}

// Continued fraction for Q(a, x) = 1 - P(a, x), valid for x >= a + 1.
double upper_gamma_continued_fraction(double a, double x) {
    double b = x + 1.0 - a;
    double c = 1.0 / kFpMin;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 300; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < kFpMin) d = kFpMin;
        c = b + an / c;
        if (std::fabs(c) < kFpMin) c = kFpMin;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < 1e-15) {
            return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
        }
    }
    throw numeric_error("incomplete gamma continued fraction did not converge");
}

// Bracketed Newton with bisection fallback for an increasing CDF.
double invert_increasing_cdf(const std::function<double(double)>& cdf,
                             const std::function<double(double)>& pdf, double p, double lo,
                             double hi) {
    double x = 0.5 * (lo + hi);
    for (int it = 0; it < kMaxIterations; ++it) {
        const double f = cdf(x) - p;
        if (f > 0.0) {
            hi = x;
        } else {
            lo = x;
        }
        const double d = pdf(x);
        double next;
        if (d > 0.0) {
            next = x - f / d;
            if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        } else {
            next = 0.5 * (lo + hi);
        }
        if (std::fabs(next - x) < 1e-12 * (1.0 + std::fabs(next))) return next;
        x = next;
        if (hi - lo < 1e-13 * (1.0 + std::fabs(x))) return x;
    }
    throw numeric_error("quantile inversion did not converge");
}

void check_probability(double p, const char* who) {
    if (!(p > 0.0 && p < 1.0)) {
        std::ostringstream msg;
        msg << who << ": p must be in (0, 1), got " << p;
        throw data_error(msg.str());
    }
}

// Smirnov critical values for n = 1..20 (Miller 1956), one row per
// significance level alpha = (1-c)/2; transcribed published data.
constexpr double kKsSmallAlpha10[20] = {
    0.90000, 0.68377, 0.56481, 0.49265, 0.44698, 0.41037, 0.38148, 0.35831, 0.33910, 0.32260,
    0.30829, 0.29577, 0.28470, 0.27481, 0.26588, 0.25778, 0.25039, 0.24360, 0.23735, 0.23156};
constexpr double kKsSmallAlpha05[20] = {
    0.95000, 0.77639, 0.63604, 0.56522, 0.50945, 0.46799, 0.43607, 0.40962, 0.38746, 0.36866,
    0.35242, 0.33815, 0.32549, 0.31417, 0.30397, 0.29472, 0.28627, 0.27851, 0.27136, 0.26473};
constexpr double kKsSmallAlpha025[20] = {
    0.97500, 0.84189, 0.70760, 0.62394, 0.56328, 0.51926, 0.48342, 0.45427, 0.43001, 0.40925,
    0.39122, 0.37543, 0.36143, 0.34890, 0.33760, 0.32733, 0.31796, 0.30936, 0.30143, 0.29408};

}  // namespace

Alpha::Alpha(double v) : value(v) {
    if (!(v > 0.0 && v < 1.0)) {
        std::ostringstream msg;
        msg << "alpha must be in (0, 1), got " << v;
        throw data_error(msg.str());
    }
}

double regularized_incomplete_beta(double a, double b, double x) {
    if (!(a > 0.0 && b > 0.0)) throw data_error("incomplete beta: a, b must be > 0");
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    const double front =
        std::exp(std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) + a * std::log(x) +
                 b * std::log1p(-x));
    if (x < (a + 1.0) / (a + b + 2.0)) {
        return front * beta_continued_fraction(a, b, x) / a;
    }
    return 1.0 - front * beta_continued_fraction(b, a, 1.0 - x) / b;
}

double regularized_lower_gamma(double a, double x) {
    if (!(a > 0.0)) throw data_error("incomplete gamma: a must be > 0");
    if (x <= 0.0) return 0.0;
    if (x < a + 1.0) return lower_gamma_series(a, x);
    return 1.0 - upper_gamma_continued_fraction(a, x);
}

double student_t_cdf(int df, double t) {
    const double v = df;
    const double x = v / (t * t + v);
    const double tail = 0.5 * regularized_incomplete_beta(0.5 * v, 0.5, x);
    return t >= 0.0 ? 1.0 - tail : tail;
}

double student_t_pdf(int df, double t) {
    const double v = df;
    const double lognorm = std::lgamma(0.5 * (v + 1.0)) - std::lgamma(0.5 * v) -
                           0.5 * std::log(v * std::numbers::pi);
    return std::exp(lognorm - 0.5 * (v + 1.0) * std::log1p(t * t / v));
}

double student_t_quantile(int df, double p) {
    if (df < 1) throw data_error("student_t_quantile: df must be >= 1");
    check_probability(p, "student_t_quantile");
    if (p == 0.5) return 0.0;
    const double q = p > 0.5 ? p : 1.0 - p;
    double hi = 1.0;
    while (student_t_cdf(df, hi) < q) {
        hi *= 2.0;
        if (hi > 1e12) throw numeric_error("student_t_quantile: bracket expansion failed");
    }
    const double t = invert_increasing_cdf([df](double x) { return student_t_cdf(df, x); },
                                           [df](double x) { return student_t_pdf(df, x); }, q,
                                           0.0, hi);
    return p > 0.5 ? t : -t;
}

double chi_square_cdf(int df, double x) {
    if (x <= 0.0) return 0.0;
    return regularized_lower_gamma(0.5 * df, 0.5 * x);
}

double chi_square_pdf(int df, double x) {
    if (x <= 0.0) return 0.0;
    const double k = 0.5 * df;
    return std::exp((k - 1.0) * std::log(x) - 0.5 * x - std::lgamma(k) - k * std::numbers::ln2);
}

double chi_square_quantile(int df, double p) {
    if (df < 1) throw data_error("chi_square_quantile: df must be >= 1");
    check_probability(p, "chi_square_quantile");
    double hi = df + 10.0 * std::sqrt(2.0 * df) + 10.0;
    while (chi_square_cdf(df, hi) < p) {
        hi *= 2.0;
        if (hi > 1e12) throw numeric_error("chi_square_quantile: bracket expansion failed");
    }
    return invert_increasing_cdf([df](double x) { return chi_square_cdf(df, x); },
                                 [df](double x) { return chi_square_pdf(df, x); }, p, 0.0, hi);
}

double ks_critical(long n, Alpha alpha) {
    if (n < 1) throw data_error("ks_critical: n must be >= 1");
    const double a = alpha.value;
    const double* table = nullptr;
    double coefficient = 0.0;  // A(alpha) in the n > 20 approximation
    if (std::fabs(a - 0.1) < 1e-12) {
        table = kKsSmallAlpha10;
        coefficient = 0.00256;
    } else if (std::fabs(a - 0.05) < 1e-12) {
        table = kKsSmallAlpha05;
        coefficient = 0.05256;
    } else if (std::fabs(a - 0.025) < 1e-12) {
        table = kKsSmallAlpha025;
        coefficient = 0.11282;
    } else {
        std::ostringstream msg;
        msg << "ks_critical: unsupported alpha " << a << " (supported: 0.1, 0.05, 0.025)";
        throw data_error(msg.str());
    }
    if (n <= 20) return table[n - 1];
    const double nn = static_cast<double>(n);
    const double canonical = table == kKsSmallAlpha10 ? 0.1 : (table == kKsSmallAlpha05 ? 0.05 : 0.025);
    return std::sqrt(std::log(1.0 / canonical) / (2.0 * nn)) - 0.16693 / nn -
           coefficient * std::pow(nn, -1.5);
}

}  // namespace poolstat
