#pragma once

#include <span>
#include <vector>

namespace ricesim::stats {

struct Estimate {
    double value = 0.0;
    double std_error = 0.0;
};

double mean(std::span<const double> xs);
double sample_variance(std::span<const double> xs);

// Standard error of the mean of batch values (batches assumed near-independent).
Estimate batch_means(std::span<const double> batch_values);

// Regularized incomplete gamma P(a,x) and its complement Q(a,x).
double gamma_p(double a, double x);
double gamma_q(double a, double x);
double lgamma_fn(double x);

double gamma_cdf(double shape, double rate, double x);
double chi_squared_cdf(double k, double x);
double chi_squared_quantile(double k, double p);

// Regularized incomplete beta I_x(a,b).
double incomplete_beta(double a, double b, double x);
double student_t_cdf(double t, double dof);
// Two-sided p-value for a t statistic.
double student_t_two_sided_p(double t, double dof);

double normal_cdf(double z);

// One-sample Kolmogorov-Smirnov p-value for statistic d with n samples.
double ks_p_value(double d, std::size_t n);
// KS statistic of xs against a cdf given as sorted (value, cdf) evaluations.
double ks_statistic_exponential(std::span<const double> xs, double rate);

struct SlopeFit {
    double slope = 0.0;
    double intercept = 0.0;
    double slope_se = 0.0;
    double r_squared = 0.0;   // of the full fit
    double t_statistic = 0.0;
    double p_value = 1.0;     // two-sided, H0: slope = 0
    std::size_t n = 0;
};

// Ordinary least squares y ~ a + b x with t-test on b.
SlopeFit ols_slope(std::span<const double> x, std::span<const double> y);

struct OriginFit {
    double slope = 0.0;
    double r_squared = 0.0;  // 1 - SS_res / SS_tot (SS_tot about the mean)
};

// Least squares through the origin, y ~ b x.
OriginFit fit_through_origin(std::span<const double> x, std::span<const double> y);

struct ChiSquaredTest {
    double statistic = 0.0;
    double dof = 0.0;
    double p_value = 1.0;
};

// Goodness-of-fit of observed counts against expected counts.
ChiSquaredTest chi_squared_test(std::span<const double> observed,
                                std::span<const double> expected,
                                int extra_constraints = 0);

}  // namespace ricesim::stats
