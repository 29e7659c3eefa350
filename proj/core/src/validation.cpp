#include "vcr/validation.hpp"

#include <cmath>
#include <numbers>
#include <thread>

#include "vcr/error.hpp"
#include "vcr/student_t.hpp"
#include "vcr/trend.hpp"

namespace vcr {

namespace {

// SplitMix64 finalizer; full-avalanche mixing of a 64-bit word, so
// consecutive keys and counters still produce independent-looking streams.
std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

void check_spec(const SyntheticSpec& spec) {
    if (spec.n_periods < 3)
        raise(Errc::DomainError, "n_periods must be >= 3");
    if (!(spec.noise_sd >= 0))
        raise(Errc::DomainError, "noise_sd must be >= 0");
    if (spec.replications < 1)
        raise(Errc::DomainError, "replications must be >= 1");
}

}  // namespace

const char* to_string(NoiseKind k) {
    return k == NoiseKind::Gaussian ? "gaussian" : "student_t3";
}

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream)
    : key_(mix64(seed) ^ mix64(mix64(stream) + 0x6a09e667f3bcc909ULL)) {}

double CounterRng::uniform(std::uint64_t index) const {
    std::uint64_t z = mix64(key_ + 0x9e3779b97f4a7c15ULL * (index + 1));
    // 53-bit mantissa, offset by half a step: strictly inside (0, 1).
    return (double(z >> 11) + 0.5) * 0x1.0p-53;
}

double CounterRng::normal(std::uint64_t index) const {
    double u1 = uniform(2 * index);
    double u2 = uniform(2 * index + 1);
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
}

double CounterRng::student_t3(std::uint64_t index) const {
    return student_t_quantile(uniform(index), 3);
}

VcrSeries generate_series(const SyntheticSpec& spec, int replication_index) {
    check_spec(spec);
    // One stream per replication: reproducible in isolation.
    CounterRng rng(spec.base_seed, std::uint64_t(replication_index));
    VcrSeries series;
    series.entity = "synthetic";
    series.node = "synthetic";
    series.measure = Measure::Documents;
    series.smoothing = Smoothing::Annual;
    series.points.reserve(std::size_t(spec.n_periods));
    for (int i = 0; i < spec.n_periods; ++i) {
        Year year = spec.first_year + i;
        double eps = spec.noise == NoiseKind::Gaussian
                         ? rng.normal(std::uint64_t(i))
                         : rng.student_t3(std::uint64_t(i));
        VcrPoint point;
        point.period = YearRange{year};
        point.value = spec.true_value_at(year) + spec.noise_sd * eps;
        series.points.push_back(point);
    }
    return series;
}

std::vector<ReplicationOutcome> run_replications(const SyntheticSpec& spec,
                                                 double alpha,
                                                 double null_value,
                                                 int threads) {
    check_spec(spec);
    if (threads < 1) threads = 1;
    double truth = spec.true_value_at(spec.target_year);
    std::vector<ReplicationOutcome> outcomes(std::size_t(spec.replications));

    auto worker = [&](int begin, int end) {
        for (int i = begin; i < end; ++i) {
            VcrSeries series = generate_series(spec, i);
            TrendFit fit =
                fit_linear(series, spec.target_year, alpha, null_value);
            ReplicationOutcome& out = outcomes[std::size_t(i)];
            out.index = i;
            out.projection = fit.projection;
            out.ci_low = fit.ci_low;
            out.ci_high = fit.ci_high;
            out.covered = fit.ci_low <= truth && truth <= fit.ci_high;
            out.rejected = fit.p_value < alpha;
        }
    };

    if (threads == 1 || spec.replications < 2) {
        worker(0, spec.replications);
    } else {
        int used = std::min(threads, spec.replications);
        std::vector<std::thread> pool;
        pool.reserve(std::size_t(used));
        int chunk = (spec.replications + used - 1) / used;
        for (int t = 0; t < used; ++t) {
            int begin = t * chunk;
            int end = std::min(spec.replications, begin + chunk);
            if (begin >= end) break;
            pool.emplace_back(worker, begin, end);
        }
        for (std::thread& th : pool) th.join();
    }
    return outcomes;
}

CoverageResult coverage_experiment(const SyntheticSpec& spec, double alpha,
                                   int threads) {
    CoverageResult result;
    result.replications = spec.replications;
    result.true_value = spec.true_value_at(spec.target_year);
    result.alpha = alpha;
    for (const ReplicationOutcome& out :
         run_replications(spec, alpha, 1.0, threads)) {
        if (out.covered) ++result.hits;
    }
    return result;
}

RejectionResult rejection_experiment(const SyntheticSpec& spec,
                                     double null_value, double alpha,
                                     int threads) {
    RejectionResult result;
    result.replications = spec.replications;
    for (const ReplicationOutcome& out :
         run_replications(spec, alpha, null_value, threads)) {
        if (out.rejected) ++result.rejections;
    }
    return result;
}

}  // namespace vcr
