#pragma once

namespace vcr {

// Student-t density, CDF and quantile. Absolute accuracy of the CDF and
// quantile is well inside 1e-6 for df in [1, 200] and |x| <= 50; CDF and
// quantile round-trip to 1e-5 or better over that range.
//
// DomainError: df < 1, non-finite x, or p outside (0, 1).

double student_t_pdf(double x, int df);
double student_t_cdf(double x, int df);
double student_t_quantile(double p, int df);

// Regularized incomplete beta I_x(a, b), exposed because the CDF reduces to
// it and other callers (two-sided p-values) use it directly.
double incomplete_beta(double a, double b, double x);

}  // namespace vcr
