#include "vcr/indices.hpp"

#include <cmath>

#include "vcr/error.hpp"

namespace vcr {

const char* to_string(Smoothing s) {
    return s == Smoothing::Annual ? "annual" : "triennial";
}

double vcr_ratio(double focal_in_node, double focal_total, double baseline_in_node,
           double baseline_total) {
    if (!(focal_in_node >= 0) || !(focal_total >= 0) ||
        !(baseline_in_node >= 0) || !(baseline_total >= 0) ||
        !std::isfinite(focal_in_node) || !std::isfinite(focal_total) ||
        !std::isfinite(baseline_in_node) || !std::isfinite(baseline_total))
        raise(Errc::DomainError, "counts must be finite and non-negative");
    if (focal_total == 0 || baseline_total == 0)
        raise(Errc::UndefinedDenominator,
              "zero focal or baseline total");
    if (baseline_in_node == 0) {
        if (focal_in_node > 0)
            raise(Errc::InconsistentPanel,
                  "focal production in a node the baseline does not have");
        raise(Errc::NoData, "node absent on both sides");
    }
    double focal_share = focal_in_node / focal_total;
    double baseline_share = baseline_in_node / baseline_total;
    return focal_share / baseline_share;
}

double rsi(double vcr_value) {
    if (!std::isfinite(vcr_value) || vcr_value < 0)
        raise(Errc::DomainError, "rsi requires a finite non-negative value");
    return (vcr_value - 1.0) / (vcr_value + 1.0);
}

std::vector<std::pair<YearRange, double>> triennial_series(
    std::span<const std::pair<Year, double>> annual) {
    if (annual.size() < 3)
        raise(Errc::InsufficientData,
              "triennial smoothing needs at least 3 years, got " +
                  std::to_string(annual.size()));
    for (std::size_t i = 1; i < annual.size(); ++i) {
        if (annual[i].first != annual[i - 1].first + 1)
            raise(Errc::NonContiguous,
                  "gap between " + std::to_string(annual[i - 1].first) +
                      " and " + std::to_string(annual[i].first));
    }
    std::vector<std::pair<YearRange, double>> windows;
    windows.reserve(annual.size() - 2);
    for (std::size_t i = 0; i + 2 < annual.size(); ++i) {
        Year start = annual[i].first;
        double sum =
            annual[i].second + annual[i + 1].second + annual[i + 2].second;
        windows.emplace_back(YearRange{start, start + 2}, sum);
    }
    return windows;
}

std::vector<double> indexed_series(std::span<const double> series,
                                   std::size_t base_index) {
    if (base_index >= series.size())
        raise(Errc::InvalidRange, "base index out of bounds");
    double base = series[base_index];
    if (base == 0) raise(Errc::UndefinedBase, "base period value is zero");
    std::vector<double> result;
    result.reserve(series.size());
    for (double v : series) result.push_back(100.0 * v / base);
    return result;
}

double annualized_growth(double first, double last, int span_years) {
    if (!(first > 0) || !(last > 0) || span_years < 1)
        raise(Errc::DomainError,
              "growth rate needs positive endpoints and span >= 1");
    return std::pow(last / first, 1.0 / span_years) - 1.0;
}

double participation_per_thousand(double focal, double baseline) {
    if (!(baseline > 0))
        raise(Errc::UndefinedDenominator, "zero baseline");
    if (!(focal >= 0))
        raise(Errc::DomainError, "negative focal count");
    return 1000.0 * focal / baseline;
}

double relative_citation_index(double focal_cites, double focal_docs,
                               double comparison_cites,
                               double comparison_docs) {
    if (!(focal_docs > 0) || !(comparison_docs > 0) || !(comparison_cites > 0))
        raise(Errc::UndefinedDenominator,
              "relative citation index needs positive document counts and "
              "comparison citations");
    if (!(focal_cites >= 0))
        raise(Errc::DomainError, "negative citation count");
    return (focal_cites / focal_docs) / (comparison_cites / comparison_docs);
}

namespace {

std::vector<YearRange> periods_for(const Panel& panel, Smoothing smoothing) {
    YearRange cov = panel.coverage();
    std::vector<YearRange> periods;
    if (smoothing == Smoothing::Annual) {
        for (Year y = cov.first; y <= cov.last; ++y)
            periods.push_back(YearRange{y});
    } else {
        for (Year y = cov.first; y + 2 <= cov.last; ++y)
            periods.push_back(YearRange{y, y + 2});
    }
    return periods;
}

struct CellCounts {
    double focal_in_node, focal_total, baseline_in_node, baseline_total;
};

// The four aggregates behind one VCR point, or nullopt when any is
// structurally absent for the period.
std::optional<CellCounts> gather(const Panel& panel, std::string_view entity,
                                 std::string_view node, Measure measure,
                                 YearRange period,
                                 const AggregateOptions& opts) {
    auto f_node = panel.observed_aggregate(entity, node, measure, period, opts);
    auto f_all =
        panel.observed_aggregate(entity, kAllNodeId, measure, period, opts);
    auto b_node = panel.observed_aggregate(panel.baseline_entity(), node,
                                           measure, period, opts);
    auto b_all = panel.observed_aggregate(panel.baseline_entity(), kAllNodeId,
                                          measure, period, opts);
    if (!f_node || !f_all || !b_node || !b_all) return std::nullopt;
    return CellCounts{double(*f_node), double(*f_all), double(*b_node),
                      double(*b_all)};
}

}  // namespace

VcrPoint vcr_point(const Panel& panel, std::string_view entity,
                   std::string_view node, Measure measure, YearRange period,
                   const AggregateOptions& opts) {
    auto counts = gather(panel, entity, node, measure, period, opts);
    if (!counts)
        raise(Errc::NoData, "no observed data for '" + std::string(node) +
                                "' in " + period.label());
    VcrPoint point;
    point.period = period;
    point.value = vcr_ratio(counts->focal_in_node, counts->focal_total,
                      counts->baseline_in_node, counts->baseline_total);
    point.focal_share = counts->focal_in_node / counts->focal_total;
    point.baseline_share = counts->baseline_in_node / counts->baseline_total;
    return point;
}

VcrSeries vcr_series(const Panel& panel, std::string_view entity,
                     std::string_view node, Measure measure,
                     Smoothing smoothing, const AggregateOptions& opts) {
    VcrSeries series;
    series.entity = std::string(entity);
    series.node = std::string(node);
    series.measure = measure;
    series.smoothing = smoothing;
    for (const YearRange& period : periods_for(panel, smoothing)) {
        auto counts = gather(panel, entity, node, measure, period, opts);
        if (!counts) continue;
        // Zero totals and both-sides-absent nodes leave the period undefined.
        if (counts->focal_total == 0 || counts->baseline_total == 0) continue;
        if (counts->baseline_in_node == 0 && counts->focal_in_node == 0)
            continue;
        VcrPoint point;
        point.period = period;
        point.value = vcr_ratio(counts->focal_in_node, counts->focal_total,
                          counts->baseline_in_node, counts->baseline_total);
        point.focal_share = counts->focal_in_node / counts->focal_total;
        point.baseline_share =
            counts->baseline_in_node / counts->baseline_total;
        series.points.push_back(point);
    }
    if (series.points.empty())
        raise(Errc::InsufficientData,
              "no computable periods for '" + std::string(node) + "' (" +
                  std::string(to_string(measure)) + ")");
    return series;
}

std::vector<std::pair<YearRange, double>> rci_series(
    const Panel& panel, std::string_view entity, std::string_view node,
    Smoothing smoothing, RciComparison comparison,
    const AggregateOptions& opts) {
    std::vector<std::pair<YearRange, double>> result;
    for (const YearRange& period : periods_for(panel, smoothing)) {
        auto f_cites = panel.observed_aggregate(entity, node,
                                                Measure::Citations, period, opts);
        auto f_docs = panel.observed_aggregate(entity, node,
                                               Measure::Documents, period, opts);
        auto b_cites = panel.observed_aggregate(
            panel.baseline_entity(), node, Measure::Citations, period, opts);
        auto b_docs = panel.observed_aggregate(
            panel.baseline_entity(), node, Measure::Documents, period, opts);
        if (!f_cites || !f_docs || !b_cites || !b_docs) continue;
        double comp_cites = double(*b_cites);
        double comp_docs = double(*b_docs);
        if (comparison == RciComparison::RestOfBaseline) {
            comp_cites -= double(*f_cites);
            comp_docs -= double(*f_docs);
        }
        if (*f_docs == 0 || comp_docs <= 0 || comp_cites <= 0) continue;
        result.emplace_back(period,
                            relative_citation_index(double(*f_cites),
                                                    double(*f_docs),
                                                    comp_cites, comp_docs));
    }
    if (result.empty())
        raise(Errc::InsufficientData,
              "no computable periods for the relative citation index of '" +
                  std::string(node) + "'");
    return result;
}

}  // namespace vcr
