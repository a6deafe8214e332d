#pragma once

namespace poolstat {

// Significance level. The Kolmogorov-Smirnov helpers follow the band
// convention alpha = (1 - c)/2 for confidence level c and only support
// alpha in {0.1, 0.05, 0.025}; the confidence-interval routines use the
// classical convention (coverage 1 - alpha).
struct Alpha {
    double value;

    explicit Alpha(double v);
};

// Regularized incomplete beta I_x(a, b), continued-fraction evaluation.
double regularized_incomplete_beta(double a, double b, double x);

// Regularized lower incomplete gamma P(a, x).
double regularized_lower_gamma(double a, double x);

double student_t_cdf(int df, double t);
double student_t_pdf(int df, double t);

// Quantile of Student's t with df degrees of freedom: t with CDF(t) = p.
// Bracketed Newton on the incomplete-beta CDF, absolute tolerance 1e-8.
double student_t_quantile(int df, double p);

double chi_square_cdf(int df, double x);
double chi_square_pdf(int df, double x);

// Quantile of the chi-squared distribution: x with P(df/2, x/2) = p.
double chi_square_quantile(int df, double p);

// Two-sided Kolmogorov-Smirnov critical value D_alpha(n): the asymptotic
// approximation for n > 20, exact small-sample table values for n <= 20.
double ks_critical(long n, Alpha alpha);

}  // namespace poolstat
