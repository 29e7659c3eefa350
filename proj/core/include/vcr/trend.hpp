#pragma once

#include <optional>

#include "vcr/indices.hpp"
#include "vcr/types.hpp"

namespace vcr {

enum class TrendModel { ConstantMean, LinearTrend };

// Outcome of comparing a fit's confidence interval against the neutral
// value: the CI lies entirely above it, entirely below it, or straddles it.
enum class Significance { AboveSignificant, BelowSignificant, Inconclusive };

const char* to_string(TrendModel m);
const char* to_string(Significance s);

// For smoothed series, which calendar year of the window serves as the
// regressor (and as the meaning of "projection to year T").
enum class TimeAnchor { WindowEnd, WindowStart };

struct TrendFit {
    TrendModel model = TrendModel::ConstantMean;
    int n = 0;                    // observations used
    double beta0 = 0.0;           // intercept (sample mean for ConstantMean)
    std::optional<double> beta1;  // slope; absent for ConstantMean
    double residual_sd = 0.0;     // s
    double t_center = 0.0;        // mean of the time regressor
    double sxx = 0.0;             // sum of squared centered regressors
    Year target_year = 0;
    double projection = 0.0;      // beta0 + beta1 * T, or the sample mean
    double se_projection = 0.0;   // standard error of the mean response at T
    double alpha = 0.05;          // CI level is 1 - alpha
    double ci_low = 0.0;
    double ci_high = 0.0;
    double null_value = 1.0;
    double p_value = 1.0;         // two-sided, H0: projection == null_value
    int stars = 0;                // 0..3 for the 10% / 5% / 1% thresholds
    bool degenerate = false;      // zero residual variance (exact fit)

    int dof() const { return model == TrendModel::LinearTrend ? n - 2 : n - 1; }
};

// Constant-level model: the series mean with a one-sample two-sided t test
// against null_value (n-1 dof). InsufficientData when n < 2. A zero-variance
// series is flagged degenerate with p = 1 if the mean equals the null and
// p = 0 otherwise.
TrendFit fit_constant(const VcrSeries& series, double null_value = 1.0,
                      double alpha = 0.05);

// Ordinary least squares of the series values on the period's calendar year
// (WindowEnd by default for smoothed windows). Projects the mean response to
// target_year with its standard error s*sqrt(1/n + (T-mean)^2/Sxx), the
// two-sided CI at level 1-alpha, and the two-sided p-value against
// null_value with n-2 dof.
// InsufficientData when n < 3 distinct periods; SingularDesign when the
// regressor does not vary; an exact fit is flagged degenerate (zero-width
// CI).
TrendFit fit_linear(const VcrSeries& series, Year target_year,
                    double alpha = 0.05, double null_value = 1.0,
                    TimeAnchor anchor = TimeAnchor::WindowEnd);

// AboveSignificant iff ci_low > null_value, BelowSignificant iff
// ci_high < null_value, Inconclusive otherwise.
Significance classify_significance(const TrendFit& fit,
                                   double null_value = 1.0);

// *** p < 0.01, ** p < 0.05, * p < 0.10, none otherwise.
int stars_from_p(double p_value);

// Regressor year of a period under the anchor rule.
Year anchor_year(const YearRange& period, TimeAnchor anchor);

// Fitted mean response and its standard error at an arbitrary year (the
// confidence-band inputs; se grows with the distance from t_center).
double mean_response_at(const TrendFit& fit, Year year);
double mean_response_se(const TrendFit& fit, Year year);

}  // namespace vcr
