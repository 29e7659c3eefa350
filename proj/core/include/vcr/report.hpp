#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vcr/classify.hpp"
#include "vcr/indices.hpp"
#include "vcr/panel.hpp"
#include "vcr/trend.hpp"

namespace vcr {

// Everything below is pure table assembly over the library calls; the CLI
// performs no arithmetic of its own. Machine renderings (CSV, JSON) carry
// full precision; display renderings round VCR to one decimal and shares to
// one-decimal percentages.

struct AnalysisConfig {
    std::string entity;
    std::optional<TaxonomyLevel> level;  // nullopt: every level, taxonomy order
    Year project_to = 0;                 // 0: last year of coverage
    double alpha = 0.05;
    TrendModel model = TrendModel::LinearTrend;
    Smoothing trend_smoothing = Smoothing::Annual;
    TimeAnchor anchor = TimeAnchor::WindowEnd;
    double null_value = 1.0;
    // Below this many usable periods a node is reported Inconclusive with an
    // insufficient-data flag instead of a verdict.
    int min_periods = 5;
    AggregateOptions agg;
};

// ---- indices table ------------------------------------------------------

struct IndicesRow {
    std::string node_id;
    std::string path;
    std::optional<double> focal_share;
    std::optional<double> baseline_share;
    std::optional<double> value;  // VCR; absent where undefined
};

// Per-node shares and VCR for one period (annual year or 3-year window).
std::vector<IndicesRow> indices_table(const Panel& panel,
                                      const AnalysisConfig& config,
                                      Measure measure, YearRange period);

// Resolves the --period/--window flags: the last annual year or last 3-year
// window of coverage when `period` is unset.
YearRange default_period(const Panel& panel, Smoothing smoothing);

// ---- trend table --------------------------------------------------------

struct TrendRow {
    std::string node_id;
    std::string path;
    std::optional<TrendFit> fit;  // absent when the series is unusable
    Significance outcome = Significance::Inconclusive;
    bool insufficient = false;
    std::string note;  // diagnostic for unusable nodes
};

std::vector<TrendRow> trend_table(const Panel& panel,
                                  const AnalysisConfig& config,
                                  Measure measure);

// Per-period band data behind a fit: observed VCR, fitted mean response and
// its CI at each year of coverage (the fan chart input).
struct PlotPoint {
    Year year = 0;
    std::optional<double> observed;
    double fitted = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
};

std::vector<PlotPoint> plot_series(const Panel& panel,
                                   const AnalysisConfig& config,
                                   Measure measure, std::string_view node);

// ---- classification table -----------------------------------------------

struct ClassifyRow {
    std::string node_id;
    std::string path;
    AdvantageVerdict verdict;
    std::optional<double> docs_projection;
    std::optional<double> cites_projection;
};

// Rows ordered bucket-descending, then docs projection descending.
std::vector<ClassifyRow> classification_table(const Panel& panel,
                                              const AnalysisConfig& config);

// ---- full report --------------------------------------------------------

struct MeasureCell {
    std::optional<double> world_share;     // baseline share in the trienio
    std::optional<double> vcr_trienio;     // VCR on the last 3-year window
    std::optional<double> vcr_regression;  // projection of the trend fit
    std::optional<double> p_value;
    int stars = 0;
    Significance outcome = Significance::Inconclusive;
    bool insufficient = false;
};

struct ReportRow {
    std::string node_id;
    std::string path;
    TaxonomyLevel level = TaxonomyLevel::BigArea;
    MeasureCell docs;
    MeasureCell cites;
    Bucket bucket = Bucket::Inconclusive;
};

std::vector<ReportRow> build_report(const Panel& panel,
                                    const AnalysisConfig& config);

// ---- renderers ----------------------------------------------------------

enum class TableFormat { Csv, Json, Markdown };

TableFormat table_format_from_string(std::string_view name);  // DomainError

void render_indices(std::span<const IndicesRow> rows, Measure measure,
                    YearRange period, TableFormat format, std::ostream& out);
void render_trend(std::span<const TrendRow> rows, Measure measure,
                  TableFormat format, std::ostream& out);
void render_plot_csv(std::span<const PlotPoint> points, std::string_view node,
                     std::ostream& out);
void render_classification(std::span<const ClassifyRow> rows,
                           TableFormat format, std::ostream& out);
void render_report(std::span<const ReportRow> rows, TableFormat format,
                   std::ostream& out);

// Shortest round-trip decimal rendering (machine formats).
std::string format_double(double v);
// Display rounding: one decimal.
std::string format_display(double v);
// Share as a one-decimal percentage for display.
std::string format_share_pct(double share);

// Display-only floor at zero for negative projections (the untruncated
// linear projection permits small negative values). Machine formats keep
// the raw numbers.
void apply_display_clamp(std::vector<TrendRow>& rows);
void apply_display_clamp(std::vector<ReportRow>& rows);

}  // namespace vcr
