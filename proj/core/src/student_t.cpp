#include "vcr/student_t.hpp"

#include <cmath>
#include <limits>

#include "vcr/error.hpp"

namespace vcr {

namespace {

// Modified Lentz evaluation of the incomplete-beta continued fraction.
double beta_cf(double a, double b, double x) {
    constexpr int kMaxIter = 300;
    constexpr double kEps = 3e-16;
    constexpr double kTiny = 1e-300;

    double qab = a + b;
    double qap = a + 1.0;
    double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < kTiny) d = kTiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kMaxIter; ++m) {
        int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < kEps) break;
    }
    return h;
}

void check_df(int df) {
    if (df < 1) raise(Errc::DomainError, "df must be >= 1");
}

}  // namespace

double incomplete_beta(double a, double b, double x) {
    if (!(a > 0) || !(b > 0))
        raise(Errc::DomainError, "incomplete beta needs a, b > 0");
    if (!(x >= 0.0) || !(x <= 1.0))
        raise(Errc::DomainError, "incomplete beta needs x in [0, 1]");
    if (x == 0.0) return 0.0;
    if (x == 1.0) return 1.0;
    double ln_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                      a * std::log(x) + b * std::log1p(-x);
    double front = std::exp(ln_front);
    if (x < (a + 1.0) / (a + b + 2.0)) return front * beta_cf(a, b, x) / a;
    return 1.0 - front * beta_cf(b, a, 1.0 - x) / b;
}

double student_t_pdf(double x, int df) {
    check_df(df);
    if (!std::isfinite(x)) raise(Errc::DomainError, "non-finite x");
    double v = df;
    double ln = std::lgamma((v + 1.0) / 2.0) - std::lgamma(v / 2.0) -
                0.5 * std::log(v * M_PI) -
                (v + 1.0) / 2.0 * std::log1p(x * x / v);
    return std::exp(ln);
}

double student_t_cdf(double x, int df) {
    check_df(df);
    if (!std::isfinite(x)) raise(Errc::DomainError, "non-finite x");
    if (x == 0.0) return 0.5;
    double v = df;
    double w = v / (v + x * x);
    double tail = 0.5 * incomplete_beta(v / 2.0, 0.5, w);
    return x > 0.0 ? 1.0 - tail : tail;
}

double student_t_quantile(double p, int df) {
    check_df(df);
    if (!(p > 0.0) || !(p < 1.0))
        raise(Errc::DomainError, "quantile needs p strictly inside (0, 1)");
    if (p == 0.5) return 0.0;

    // Solve cdf(x) = p on a bracket, bisection with Newton polish. The
    // bracket doubles outward until it straddles p; the CDF is strictly
    // increasing so this always terminates.
    bool upper = p > 0.5;
    double target = upper ? p : 1.0 - p;  // work in the upper half

    double lo = 0.0, hi = 1.0;
    while (student_t_cdf(hi, df) < target) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e300) raise(Errc::DomainError, "quantile out of range");
    }
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        if (student_t_cdf(mid, df) < target)
            lo = mid;
        else
            hi = mid;
        if (hi - lo < 1e-12 * (1.0 + hi)) break;
    }
    double x = 0.5 * (lo + hi);
    for (int i = 0; i < 3; ++i) {
        double f = student_t_cdf(x, df) - target;
        double d = student_t_pdf(x, df);
        if (d <= 0) break;
        double step = f / d;
        double next = x - step;
        if (next <= lo || next >= hi) break;  // keep the bracket
        x = next;
        if (std::fabs(step) < 1e-14 * (1.0 + std::fabs(x))) break;
    }
    return upper ? x : -x;
}

}  // namespace vcr
