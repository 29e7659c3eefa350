#pragma once

#include <cstdint>
#include <vector>

#include "vcr/indices.hpp"
#include "vcr/types.hpp"

namespace vcr {

// Counter-based deterministic random stream: draw i is a pure function of
// (seed, stream, i), so replications are reproducible in isolation and
// schedule-independent under any thread count.
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream);

    // Strictly inside (0, 1).
    double uniform(std::uint64_t index) const;
    // Standard normal via Box-Muller on uniforms (2*index, 2*index + 1).
    double normal(std::uint64_t index) const;
    // Student-t with 3 dof, by inverse CDF on uniform(index).
    double student_t3(std::uint64_t index) const;

private:
    std::uint64_t key_;
};

enum class NoiseKind { Gaussian, StudentT3 };

const char* to_string(NoiseKind k);

// Generative model for synthetic VCR series: value(t) = beta0 + beta1*t
// plus noise_sd times a standard variate, over n_periods consecutive years
// starting at first_year. Values are not clamped at zero.
struct SyntheticSpec {
    int n_periods = 24;
    double beta0 = 1.0;
    double beta1 = 0.0;
    double noise_sd = 0.1;
    Year first_year = 1996;
    Year target_year = 2019;
    int replications = 10000;
    std::uint64_t base_seed = 1;
    NoiseKind noise = NoiseKind::Gaussian;

    double true_value_at(Year t) const { return beta0 + beta1 * t; }
};

// Deterministic given (spec.base_seed, replication_index).
VcrSeries generate_series(const SyntheticSpec& spec, int replication_index);

struct ReplicationOutcome {
    int index = 0;
    double projection = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
    bool covered = false;   // CI contains the true mean response at T
    bool rejected = false;  // two-sided test rejected H0: VCR_T == null
};

// Runs every replication (optionally across threads; results are identical
// for any thread count) and returns the outcomes ordered by index.
std::vector<ReplicationOutcome> run_replications(const SyntheticSpec& spec,
                                                 double alpha = 0.05,
                                                 double null_value = 1.0,
                                                 int threads = 1);

struct CoverageResult {
    int replications = 0;
    int hits = 0;
    double true_value = 0.0;
    double alpha = 0.05;
    double coverage() const {
        return replications > 0 ? double(hits) / replications : 0.0;
    }
};

// Fraction of replications whose CI at target_year contains the true mean
// response beta0 + beta1 * target_year.
CoverageResult coverage_experiment(const SyntheticSpec& spec,
                                   double alpha = 0.05, int threads = 1);

struct RejectionResult {
    int replications = 0;
    int rejections = 0;
    double rate() const {
        return replications > 0 ? double(rejections) / replications : 0.0;
    }
};

// Fraction of replications rejecting H0: VCR_T == null_value (the power of
// the projection test at this spec's true line).
RejectionResult rejection_experiment(const SyntheticSpec& spec,
                                     double null_value = 1.0,
                                     double alpha = 0.05, int threads = 1);

}  // namespace vcr
