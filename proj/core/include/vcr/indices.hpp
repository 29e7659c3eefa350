#pragma once

#include <span>
#include <utility>
#include <vector>

#include "vcr/panel.hpp"
#include "vcr/types.hpp"

namespace vcr {

enum class Smoothing { Annual, TriennialMoving };

const char* to_string(Smoothing s);

// One revealed-comparative-advantage observation: the ratio of the focal
// entity's share in a node to the baseline's share in the same node.
struct VcrPoint {
    YearRange period;
    double focal_share = 0.0;     // focal-in-node / focal total
    double baseline_share = 0.0;  // baseline-in-node / baseline total
    double value = 0.0;           // focal_share / baseline_share
};

struct VcrSeries {
    std::string entity;
    std::string node;
    Measure measure = Measure::Documents;
    Smoothing smoothing = Smoothing::Annual;
    std::vector<VcrPoint> points;  // strictly increasing periods
};

// Counts enter as non-negative reals so callers can feed exact shares as
// well as integer tallies; integer tallies are exact in double well beyond
// any bibliometric panel size.
//
// Errors: UndefinedDenominator (zero focal or baseline total),
// InconsistentPanel (node counted for the focal entity but not the
// baseline), NoData (node absent on both sides: undefined, not zero).
double vcr_ratio(double focal_in_node, double focal_total, double baseline_in_node,
           double baseline_total);

// Relative-specialization transform (v-1)/(v+1): strictly increasing, maps
// [0, inf) onto [-1, 1). DomainError for negative or non-finite input.
double rsi(double vcr_value);

// Moving 3-year windows over a contiguous annual series; window [y, y+2]
// holds the sum of its member years, first window starting at the first
// year. InsufficientData (< 3 years), NonContiguous (gap in years).
std::vector<std::pair<YearRange, double>> triennial_series(
    std::span<const std::pair<Year, double>> annual);

// Rescales so series[base_index] maps to 100. UndefinedBase when the base
// value is zero, InvalidRange when base_index is out of bounds.
std::vector<double> indexed_series(std::span<const double> series,
                                   std::size_t base_index);

// Compound annual growth rate (last/first)^(1/span_years) - 1.
// DomainError unless first > 0, last > 0, span_years >= 1.
double annualized_growth(double first, double last, int span_years);

// 1000 * focal / baseline. UndefinedDenominator when baseline is zero.
double participation_per_thousand(double focal, double baseline);

// Citations-per-document of the focal entity over the comparison set's.
// UndefinedDenominator when any of the three divisors is zero.
double relative_citation_index(double focal_cites, double focal_docs,
                               double comparison_cites,
                               double comparison_docs);

// Comparison set for panel-level relative citation series. The default is
// the baseline minus the focal entity; WholeBaseline keeps the focal
// entity's own counts in the comparison.
enum class RciComparison { RestOfBaseline, WholeBaseline };

// Builds the VCR series of (entity, node, measure) against the panel's
// baseline. Periods where any of the four aggregates is unobserved, or where
// the node is absent on both sides, are omitted rather than zero-filled.
// InsufficientData when no period is computable.
VcrSeries vcr_series(const Panel& panel, std::string_view entity,
                     std::string_view node, Measure measure,
                     Smoothing smoothing = Smoothing::Annual,
                     const AggregateOptions& opts = {});

// Single-period VCR point (the "VCR trienio" column when `period` is the
// last 3-year window). Throws like vcr()/observed_aggregate on undefined
// input.
VcrPoint vcr_point(const Panel& panel, std::string_view entity,
                   std::string_view node, Measure measure, YearRange period,
                   const AggregateOptions& opts = {});

// Relative-citation-index series for (entity, node) against the comparison
// set; incomputable periods are omitted. InsufficientData when empty.
std::vector<std::pair<YearRange, double>> rci_series(
    const Panel& panel, std::string_view entity, std::string_view node,
    Smoothing smoothing = Smoothing::TriennialMoving,
    RciComparison comparison = RciComparison::RestOfBaseline,
    const AggregateOptions& opts = {});

}  // namespace vcr
