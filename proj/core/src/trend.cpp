#include "vcr/trend.hpp"

#include <cmath>
#include <set>

#include "vcr/error.hpp"
#include "vcr/student_t.hpp"

namespace vcr {

const char* to_string(TrendModel m) {
    return m == TrendModel::ConstantMean ? "constant" : "linear";
}

const char* to_string(Significance s) {
    switch (s) {
        case Significance::AboveSignificant: return "above";
        case Significance::BelowSignificant: return "below";
        case Significance::Inconclusive: return "inconclusive";
    }
    return "?";
}

Year anchor_year(const YearRange& period, TimeAnchor anchor) {
    return anchor == TimeAnchor::WindowEnd ? period.last : period.first;
}

int stars_from_p(double p_value) {
    if (p_value < 0.01) return 3;
    if (p_value < 0.05) return 2;
    if (p_value < 0.10) return 1;
    return 0;
}

namespace {

void check_alpha(double alpha) {
    if (!(alpha > 0.0) || !(alpha < 1.0))
        raise(Errc::DomainError, "alpha must be inside (0, 1)");
}

double two_sided_p(double t_stat, int df) {
    double a = std::fabs(t_stat);
    // 2 * (1 - F(|t|)) through the incomplete beta for tail accuracy.
    double v = df;
    double w = v / (v + a * a);
    return incomplete_beta(v / 2.0, 0.5, w);
}

// An exact fit leaves residuals at rounding noise; treat the variance as
// zero when it is negligible against the values' own scale.
bool negligible(double sse, double scale) {
    return sse <= 1e-24 * std::max(1.0, scale);
}

void finish_interval(TrendFit& fit) {
    if (fit.degenerate || fit.se_projection == 0.0) {
        fit.ci_low = fit.ci_high = fit.projection;
        fit.p_value = fit.projection == fit.null_value ? 1.0 : 0.0;
    } else {
        double q = student_t_quantile(1.0 - fit.alpha / 2.0, fit.dof());
        fit.ci_low = fit.projection - q * fit.se_projection;
        fit.ci_high = fit.projection + q * fit.se_projection;
        double t_stat = (fit.projection - fit.null_value) / fit.se_projection;
        fit.p_value = two_sided_p(t_stat, fit.dof());
    }
    fit.stars = stars_from_p(fit.p_value);
}

}  // namespace

TrendFit fit_constant(const VcrSeries& series, double null_value,
                      double alpha) {
    check_alpha(alpha);
    int n = int(series.points.size());
    if (n < 2)
        raise(Errc::InsufficientData,
              "constant model needs n >= 2, got " + std::to_string(n));

    double mean = 0.0;
    double t_mean = 0.0;
    for (const VcrPoint& p : series.points) {
        mean += p.value;
        t_mean += anchor_year(p.period, TimeAnchor::WindowEnd);
    }
    mean /= n;
    t_mean /= n;

    double sse = 0.0, scale = 0.0;
    for (const VcrPoint& p : series.points) {
        double r = p.value - mean;
        sse += r * r;
        scale += p.value * p.value;
    }

    TrendFit fit;
    fit.model = TrendModel::ConstantMean;
    fit.n = n;
    fit.beta0 = mean;
    fit.t_center = t_mean;
    fit.sxx = 0.0;
    fit.target_year = anchor_year(series.points.back().period,
                                  TimeAnchor::WindowEnd);
    fit.projection = mean;
    fit.alpha = alpha;
    fit.null_value = null_value;
    fit.degenerate = negligible(sse, scale);
    fit.residual_sd = fit.degenerate ? 0.0 : std::sqrt(sse / (n - 1));
    fit.se_projection = fit.residual_sd / std::sqrt(double(n));
    finish_interval(fit);
    return fit;
}

TrendFit fit_linear(const VcrSeries& series, Year target_year, double alpha,
                    double null_value, TimeAnchor anchor) {
    check_alpha(alpha);
    std::set<YearRange> distinct;
    for (const VcrPoint& p : series.points) distinct.insert(p.period);
    int n = int(series.points.size());
    if (n < 3 || distinct.size() < 3)
        raise(Errc::InsufficientData,
              "linear model needs n >= 3 distinct periods, got " +
                  std::to_string(distinct.size()));

    double t_mean = 0.0, y_mean = 0.0;
    for (const VcrPoint& p : series.points) {
        t_mean += anchor_year(p.period, anchor);
        y_mean += p.value;
    }
    t_mean /= n;
    y_mean /= n;

    double sxx = 0.0, sxy = 0.0;
    for (const VcrPoint& p : series.points) {
        double dt = anchor_year(p.period, anchor) - t_mean;
        sxx += dt * dt;
        sxy += dt * (p.value - y_mean);
    }
    if (sxx == 0.0)
        raise(Errc::SingularDesign, "time regressor does not vary");

    double beta1 = sxy / sxx;
    double beta0 = y_mean - beta1 * t_mean;

    double sse = 0.0, scale = 0.0;
    for (const VcrPoint& p : series.points) {
        double r = p.value - (beta0 + beta1 * anchor_year(p.period, anchor));
        sse += r * r;
        scale += p.value * p.value;
    }

    TrendFit fit;
    fit.model = TrendModel::LinearTrend;
    fit.n = n;
    fit.beta0 = beta0;
    fit.beta1 = beta1;
    fit.t_center = t_mean;
    fit.sxx = sxx;
    fit.target_year = target_year;
    fit.projection = beta0 + beta1 * target_year;
    fit.alpha = alpha;
    fit.null_value = null_value;
    fit.degenerate = negligible(sse, scale);
    fit.residual_sd = fit.degenerate ? 0.0 : std::sqrt(sse / (n - 2));
    double dt = target_year - t_mean;
    fit.se_projection =
        fit.residual_sd * std::sqrt(1.0 / n + dt * dt / sxx);
    finish_interval(fit);
    return fit;
}

Significance classify_significance(const TrendFit& fit, double null_value) {
    if (fit.ci_low > null_value) return Significance::AboveSignificant;
    if (fit.ci_high < null_value) return Significance::BelowSignificant;
    return Significance::Inconclusive;
}

double mean_response_at(const TrendFit& fit, Year year) {
    if (fit.model == TrendModel::ConstantMean) return fit.beta0;
    return fit.beta0 + *fit.beta1 * year;
}

double mean_response_se(const TrendFit& fit, Year year) {
    if (fit.model == TrendModel::ConstantMean)
        return fit.residual_sd / std::sqrt(double(fit.n));
    double dt = year - fit.t_center;
    return fit.residual_sd * std::sqrt(1.0 / fit.n + dt * dt / fit.sxx);
}

}  // namespace vcr
