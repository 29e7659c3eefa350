#include "vcr/report.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdio>
#include <limits>
#include <map>
#include <mutex>
#include <ostream>
#include <thread>

#if __has_include(<nlohmann/json.hpp>)
#include <nlohmann/json.hpp>
#else
#include "json.hpp"
#endif

#include "vcr/error.hpp"
#include "vcr/student_t.hpp"

namespace vcr {

using ordered_json = nlohmann::ordered_json;

std::string format_double(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

std::string format_display(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.1f", v);
    return buf;
}

std::string format_share_pct(double share) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.1f", 100.0 * share);
    return buf;
}

TableFormat table_format_from_string(std::string_view name) {
    if (name == "csv") return TableFormat::Csv;
    if (name == "json") return TableFormat::Json;
    if (name == "markdown" || name == "md") return TableFormat::Markdown;
    raise(Errc::DomainError, "unknown format '" + std::string(name) + "'");
}

YearRange default_period(const Panel& panel, Smoothing smoothing) {
    YearRange cov = panel.coverage();
    if (smoothing == Smoothing::TriennialMoving && cov.size() >= 3)
        return YearRange{cov.last - 2, cov.last};
    return YearRange{cov.last};
}

namespace {

std::string csv_field(const std::string& field) {
    if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out += "\"";
    return out;
}

std::string opt_field(const std::optional<double>& v) {
    return v ? format_double(*v) : std::string();
}

std::string opt_display(const std::optional<double>& v) {
    return v ? format_display(*v) : std::string();
}

ordered_json opt_json(const std::optional<double>& v) {
    if (v) return *v;
    return nullptr;
}

std::string star_marks(int stars) { return std::string(std::size_t(stars), '*'); }

std::vector<const TaxonomyNode*> selected_nodes(const Panel& panel,
                                                const AnalysisConfig& config) {
    if (config.level) return panel.taxonomy().at_level(*config.level);
    return panel.taxonomy().ordered();
}

Year resolve_target(const Panel& panel, const AnalysisConfig& config) {
    return config.project_to != 0 ? config.project_to : panel.coverage().last;
}

// Trend machinery shared by trend_table, classification_table and
// build_report: fit when possible, and force the verdict to Inconclusive
// below the minimum usable-period count.
struct NodeTrend {
    std::optional<TrendFit> fit;
    Significance outcome = Significance::Inconclusive;
    bool insufficient = false;
    std::string note;
};

// Per-node fan-out: every index writes only its own slot, so the assembled
// table is identical for any thread count. The first exception wins and is
// rethrown on the caller's thread.
template <typename Fn>
void parallel_nodes(std::size_t count, Fn&& fn) {
    unsigned hw = std::thread::hardware_concurrency();
    std::size_t workers = std::min<std::size_t>(count, hw == 0 ? 1 : hw);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < count;) {
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace

std::vector<IndicesRow> indices_table(const Panel& panel,
                                      const AnalysisConfig& config,
                                      Measure measure, YearRange period) {
    std::vector<IndicesRow> rows;
    for (const TaxonomyNode* node : selected_nodes(panel, config)) {
        IndicesRow row;
        row.node_id = node->id;
        row.path = panel.taxonomy().path(node->id);
        try {
            VcrPoint point = vcr_point(panel, config.entity, node->id,
                                       measure, period, config.agg);
            row.focal_share = point.focal_share;
            row.baseline_share = point.baseline_share;
            row.value = point.value;
        } catch (const Error& e) {
            switch (e.code()) {
                case Errc::NoData:
                case Errc::UndefinedDenominator:
                case Errc::InsufficientData:
                    break;  // blank cells, like the source tables
                default:
                    throw;
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

NodeTrend trend_for(const Panel& panel, const AnalysisConfig& config,
                    Measure measure, const std::string& node_id) {
    NodeTrend result;
    VcrSeries series;
    try {
        series = vcr_series(panel, config.entity, node_id, measure,
                            config.trend_smoothing, config.agg);
    } catch (const Error& e) {
        if (e.code() == Errc::InsufficientData || e.code() == Errc::NoData) {
            result.insufficient = true;
            result.note = "no computable periods";
            return result;
        }
        throw;
    }
    Year target = resolve_target(panel, config);
    int n = int(series.points.size());
    try {
        if (config.model == TrendModel::LinearTrend) {
            result.fit = fit_linear(series, target, config.alpha,
                                    config.null_value, config.anchor);
        } else {
            result.fit = fit_constant(series, config.null_value, config.alpha);
        }
    } catch (const Error& e) {
        if (e.code() == Errc::InsufficientData ||
            e.code() == Errc::SingularDesign) {
            result.insufficient = true;
            result.note = "series too short (n=" + std::to_string(n) + ")";
            return result;
        }
        throw;
    }
    if (n < config.min_periods) {
        result.insufficient = true;
        result.note = "below minimum usable periods (n=" + std::to_string(n) +
                      " < " + std::to_string(config.min_periods) + ")";
        result.outcome = Significance::Inconclusive;
    } else {
        result.outcome =
            classify_significance(*result.fit, config.null_value);
    }
    return result;
}

}  // namespace

std::vector<TrendRow> trend_table(const Panel& panel,
                                  const AnalysisConfig& config,
                                  Measure measure) {
    auto nodes = selected_nodes(panel, config);
    std::vector<TrendRow> rows(nodes.size());
    parallel_nodes(nodes.size(), [&](std::size_t i) {
        NodeTrend trend = trend_for(panel, config, measure, nodes[i]->id);
        TrendRow& row = rows[i];
        row.node_id = nodes[i]->id;
        row.path = panel.taxonomy().path(nodes[i]->id);
        row.fit = trend.fit;
        row.outcome = trend.outcome;
        row.insufficient = trend.insufficient;
        row.note = trend.note;
    });
    return rows;
}

std::vector<PlotPoint> plot_series(const Panel& panel,
                                   const AnalysisConfig& config,
                                   Measure measure, std::string_view node) {
    std::string node_id(node);
    VcrSeries series = vcr_series(panel, config.entity, node_id, measure,
                                  config.trend_smoothing, config.agg);
    Year target = resolve_target(panel, config);
    TrendFit fit;
    if (config.model == TrendModel::LinearTrend) {
        fit = fit_linear(series, target, config.alpha, config.null_value,
                         config.anchor);
    } else {
        fit = fit_constant(series, config.null_value, config.alpha);
    }
    double q = fit.degenerate
                   ? 0.0
                   : student_t_quantile(1.0 - config.alpha / 2.0, fit.dof());

    std::map<Year, double> observed;
    for (const VcrPoint& p : series.points)
        observed[anchor_year(p.period, config.anchor)] = p.value;

    Year first = observed.begin()->first;
    Year last = std::max(observed.rbegin()->first, target);
    std::vector<PlotPoint> points;
    for (Year y = first; y <= last; ++y) {
        PlotPoint point;
        point.year = y;
        if (auto it = observed.find(y); it != observed.end())
            point.observed = it->second;
        point.fitted = mean_response_at(fit, y);
        double se = mean_response_se(fit, y);
        point.ci_low = point.fitted - q * se;
        point.ci_high = point.fitted + q * se;
        points.push_back(point);
    }
    return points;
}

std::vector<ClassifyRow> classification_table(const Panel& panel,
                                              const AnalysisConfig& config) {
    auto nodes = selected_nodes(panel, config);
    std::vector<ClassifyRow> rows(nodes.size());
    parallel_nodes(nodes.size(), [&](std::size_t i) {
        const TaxonomyNode* node = nodes[i];
        NodeTrend docs = trend_for(panel, config, Measure::Documents, node->id);
        NodeTrend cites =
            trend_for(panel, config, Measure::Citations, node->id);
        ClassifyRow& row = rows[i];
        row.node_id = node->id;
        row.path = panel.taxonomy().path(node->id);
        row.verdict = make_verdict(node->id, docs.outcome, cites.outcome,
                                   docs.insufficient, cites.insufficient);
        if (docs.fit) row.docs_projection = docs.fit->projection;
        if (cites.fit) row.cites_projection = cites.fit->projection;
    });
    std::sort(rows.begin(), rows.end(),
              [](const ClassifyRow& a, const ClassifyRow& b) {
                  int ra = bucket_rank(a.verdict.bucket);
                  int rb = bucket_rank(b.verdict.bucket);
                  if (ra != rb) return ra > rb;
                  double pa = a.docs_projection.value_or(
                      -std::numeric_limits<double>::infinity());
                  double pb = b.docs_projection.value_or(
                      -std::numeric_limits<double>::infinity());
                  if (pa != pb) return pa > pb;
                  return a.path < b.path;
              });
    return rows;
}

std::vector<ReportRow> build_report(const Panel& panel,
                                    const AnalysisConfig& config) {
    YearRange trienio = default_period(panel, Smoothing::TriennialMoving);
    auto nodes = selected_nodes(panel, config);
    std::vector<ReportRow> rows(nodes.size());
    parallel_nodes(nodes.size(), [&](std::size_t i) {
        const TaxonomyNode* node = nodes[i];
        ReportRow& row = rows[i];
        row.node_id = node->id;
        row.path = panel.taxonomy().path(node->id);
        row.level = node->level;
        for (Measure measure : {Measure::Documents, Measure::Citations}) {
            MeasureCell cell;
            try {
                VcrPoint point = vcr_point(panel, config.entity, node->id,
                                           measure, trienio, config.agg);
                cell.world_share = point.baseline_share;
                cell.vcr_trienio = point.value;
            } catch (const Error& e) {
                if (e.code() != Errc::NoData &&
                    e.code() != Errc::UndefinedDenominator &&
                    e.code() != Errc::InsufficientData)
                    throw;
            }
            NodeTrend trend = trend_for(panel, config, measure, node->id);
            if (trend.fit) {
                cell.vcr_regression = trend.fit->projection;
                cell.p_value = trend.fit->p_value;
                cell.stars = trend.fit->stars;
            }
            cell.outcome = trend.outcome;
            cell.insufficient = trend.insufficient;
            if (measure == Measure::Documents)
                row.docs = cell;
            else
                row.cites = cell;
        }
        row.bucket = combine(row.docs.outcome, row.cites.outcome);
    });
    return rows;
}

// ---- renderers ----------------------------------------------------------

namespace {

void indices_csv(std::span<const IndicesRow> rows, Measure measure,
                 YearRange period, std::ostream& out) {
    out << "node,path,measure,period,focal_share,baseline_share,vcr\n";
    for (const IndicesRow& row : rows) {
        out << csv_field(row.node_id) << ',' << csv_field(row.path) << ','
            << to_string(measure) << ',' << period.label() << ','
            << opt_field(row.focal_share) << ','
            << opt_field(row.baseline_share) << ',' << opt_field(row.value)
            << '\n';
    }
}

void indices_json(std::span<const IndicesRow> rows, Measure measure,
                  YearRange period, std::ostream& out) {
    ordered_json doc = ordered_json::array();
    for (const IndicesRow& row : rows) {
        ordered_json item;
        item["node"] = row.node_id;
        item["path"] = row.path;
        item["measure"] = to_string(measure);
        item["period"] = period.label();
        item["focal_share"] = opt_json(row.focal_share);
        item["baseline_share"] = opt_json(row.baseline_share);
        item["vcr"] = opt_json(row.value);
        doc.push_back(std::move(item));
    }
    out << doc.dump(2) << '\n';
}

void indices_markdown(std::span<const IndicesRow> rows, Measure measure,
                      YearRange period, std::ostream& out) {
    out << "| Node | Baseline share % | Focal share % | VCR |\n";
    out << "|---|---|---|---|\n";
    for (const IndicesRow& row : rows) {
        out << "| " << row.path << " | "
            << (row.baseline_share ? format_share_pct(*row.baseline_share)
                                   : std::string())
            << " | "
            << (row.focal_share ? format_share_pct(*row.focal_share)
                                : std::string())
            << " | " << opt_display(row.value) << " |\n";
    }
    out << "\n(" << to_string(measure) << ", " << period.label() << ")\n";
}

void trend_csv(std::span<const TrendRow> rows, Measure measure,
               std::ostream& out) {
    out << "node,path,measure,model,n,beta0,beta1,residual_sd,target_year,"
           "projection,se_projection,ci_low,ci_high,p_value_vs_1,stars,"
           "outcome,insufficient_data,degenerate\n";
    for (const TrendRow& row : rows) {
        out << csv_field(row.node_id) << ',' << csv_field(row.path) << ','
            << to_string(measure) << ',';
        if (row.fit) {
            const TrendFit& f = *row.fit;
            out << to_string(f.model) << ',' << f.n << ','
                << format_double(f.beta0) << ','
                << (f.beta1 ? format_double(*f.beta1) : std::string()) << ','
                << format_double(f.residual_sd) << ',' << f.target_year << ','
                << format_double(f.projection) << ','
                << format_double(f.se_projection) << ','
                << format_double(f.ci_low) << ',' << format_double(f.ci_high)
                << ',' << format_double(f.p_value) << ',' << f.stars << ','
                << to_string(row.outcome) << ','
                << (row.insufficient ? 1 : 0) << ',' << (f.degenerate ? 1 : 0)
                << '\n';
        } else {
            out << ",,,,,,,,,,," << ',' << to_string(row.outcome) << ",1,\n";
        }
    }
}

void trend_json(std::span<const TrendRow> rows, Measure measure,
                std::ostream& out) {
    ordered_json doc = ordered_json::array();
    for (const TrendRow& row : rows) {
        ordered_json item;
        item["node"] = row.node_id;
        item["path"] = row.path;
        item["measure"] = to_string(measure);
        if (row.fit) {
            const TrendFit& f = *row.fit;
            item["model"] = to_string(f.model);
            item["n"] = f.n;
            item["beta0"] = f.beta0;
            item["beta1"] = f.beta1 ? ordered_json(*f.beta1)
                                    : ordered_json(nullptr);
            item["residual_sd"] = f.residual_sd;
            item["target_year"] = f.target_year;
            item["projection"] = f.projection;
            item["se_projection"] = f.se_projection;
            item["ci_low"] = f.ci_low;
            item["ci_high"] = f.ci_high;
            item["p_value_vs_1"] = f.p_value;
            item["stars"] = f.stars;
            item["degenerate"] = f.degenerate;
        }
        item["outcome"] = to_string(row.outcome);
        item["insufficient_data"] = row.insufficient;
        if (!row.note.empty()) item["note"] = row.note;
        doc.push_back(std::move(item));
    }
    out << doc.dump(2) << '\n';
}

void trend_markdown(std::span<const TrendRow> rows, Measure measure,
                    std::ostream& out) {
    out << "| Node | Projection | 95% CI | p-value | Sig. |\n";
    out << "|---|---|---|---|---|\n";
    for (const TrendRow& row : rows) {
        out << "| " << row.path << " | ";
        if (row.fit) {
            const TrendFit& f = *row.fit;
            out << format_display(f.projection) << " | ["
                << format_display(f.ci_low) << ", "
                << format_display(f.ci_high) << "] | "
                << format_double(f.p_value) << " | " << star_marks(f.stars);
            if (row.insufficient) out << " (insufficient data)";
        } else {
            out << " |  |  | (no data)";
        }
        out << " |\n";
    }
    out << "\n(" << to_string(measure) << ")\n";
}

void classification_csv(std::span<const ClassifyRow> rows, std::ostream& out) {
    out << "node,path,bucket,docs_outcome,cites_outcome,docs_projection,"
           "cites_projection,docs_insufficient,cites_insufficient\n";
    for (const ClassifyRow& row : rows) {
        out << csv_field(row.node_id) << ',' << csv_field(row.path) << ','
            << to_string(row.verdict.bucket) << ','
            << to_string(row.verdict.docs_outcome) << ','
            << to_string(row.verdict.cites_outcome) << ','
            << opt_field(row.docs_projection) << ','
            << opt_field(row.cites_projection) << ','
            << (row.verdict.docs_insufficient ? 1 : 0) << ','
            << (row.verdict.cites_insufficient ? 1 : 0) << '\n';
    }
}

void classification_json(std::span<const ClassifyRow> rows,
                         std::ostream& out) {
    ordered_json doc = ordered_json::array();
    for (const ClassifyRow& row : rows) {
        ordered_json item;
        item["node"] = row.node_id;
        item["path"] = row.path;
        item["bucket"] = to_string(row.verdict.bucket);
        item["docs_outcome"] = to_string(row.verdict.docs_outcome);
        item["cites_outcome"] = to_string(row.verdict.cites_outcome);
        item["docs_projection"] = opt_json(row.docs_projection);
        item["cites_projection"] = opt_json(row.cites_projection);
        item["docs_insufficient"] = row.verdict.docs_insufficient;
        item["cites_insufficient"] = row.verdict.cites_insufficient;
        doc.push_back(std::move(item));
    }
    out << doc.dump(2) << '\n';
}

// Text grid in the style of the summary figure: one row per node, the
// document marker (*) and citation marker (o) placed in the advantage /
// inconclusive / disadvantage column their outcome selects.
void classification_grid(std::span<const ClassifyRow> rows,
                         std::ostream& out) {
    std::size_t width = 4;
    for (const ClassifyRow& row : rows) width = std::max(width, row.path.size());
    out << std::string(width, ' ') << "  advantage  inconclusive  disadvantage\n";
    for (const ClassifyRow& row : rows) {
        std::string adv, inc, dis;
        auto place = [&](Significance s, const char* mark) {
            switch (s) {
                case Significance::AboveSignificant: adv += mark; break;
                case Significance::Inconclusive: inc += mark; break;
                case Significance::BelowSignificant: dis += mark; break;
            }
        };
        place(row.verdict.docs_outcome, "*");
        place(row.verdict.cites_outcome, "o");
        out << row.path << std::string(width - row.path.size(), ' ') << "  "
            << adv << std::string(9 >= adv.size() ? 9 - adv.size() : 0, ' ')
            << "  " << inc
            << std::string(12 >= inc.size() ? 12 - inc.size() : 0, ' ')
            << "  " << dis << '\n';
    }
    out << "\n* documents  o citations\n";
}

void report_csv(std::span<const ReportRow> rows, std::ostream& out) {
    out << "node,path,level,docs_world_share_pct,docs_vcr_trienio,"
           "docs_vcr_regression,docs_stars,cites_world_share_pct,"
           "cites_vcr_trienio,cites_vcr_regression,cites_stars,bucket\n";
    auto shares_pct = [](const std::optional<double>& v) {
        return v ? format_double(*v * 100.0) : std::string();
    };
    for (const ReportRow& row : rows) {
        out << csv_field(row.node_id) << ',' << csv_field(row.path) << ','
            << to_string(row.level) << ',' << shares_pct(row.docs.world_share)
            << ',' << opt_field(row.docs.vcr_trienio) << ','
            << opt_field(row.docs.vcr_regression) << ',' << row.docs.stars
            << ',' << shares_pct(row.cites.world_share) << ','
            << opt_field(row.cites.vcr_trienio) << ','
            << opt_field(row.cites.vcr_regression) << ',' << row.cites.stars
            << ',' << to_string(row.bucket) << '\n';
    }
}

void report_json(std::span<const ReportRow> rows, std::ostream& out) {
    ordered_json doc = ordered_json::array();
    auto cell_json = [](const MeasureCell& cell) {
        ordered_json item;
        item["world_share_pct"] = cell.world_share
                                      ? ordered_json(*cell.world_share * 100.0)
                                      : ordered_json(nullptr);
        item["vcr_trienio"] = opt_json(cell.vcr_trienio);
        item["vcr_regression"] = opt_json(cell.vcr_regression);
        item["p_value_vs_1"] = opt_json(cell.p_value);
        item["stars"] = cell.stars;
        item["outcome"] = to_string(cell.outcome);
        item["insufficient_data"] = cell.insufficient;
        return item;
    };
    for (const ReportRow& row : rows) {
        ordered_json item;
        item["node"] = row.node_id;
        item["path"] = row.path;
        item["level"] = to_string(row.level);
        item["documents"] = cell_json(row.docs);
        item["citations"] = cell_json(row.cites);
        item["bucket"] = to_string(row.bucket);
        doc.push_back(std::move(item));
    }
    out << doc.dump(2) << '\n';
}

void report_markdown(std::span<const ReportRow> rows, std::ostream& out) {
    out << "| Node | % world (docs) | VCR trienio (docs) | VCR regression "
           "(docs) | | % world (cites) | VCR trienio (cites) | VCR "
           "regression (cites) | | Bucket |\n";
    out << "|---|---|---|---|---|---|---|---|---|---|\n";
    auto pct = [](const std::optional<double>& v) {
        return v ? format_share_pct(*v) : std::string();
    };
    for (const ReportRow& row : rows) {
        out << "| " << row.path << " | " << pct(row.docs.world_share) << " | "
            << opt_display(row.docs.vcr_trienio) << " | "
            << opt_display(row.docs.vcr_regression) << " | "
            << star_marks(row.docs.stars) << " | "
            << pct(row.cites.world_share) << " | "
            << opt_display(row.cites.vcr_trienio) << " | "
            << opt_display(row.cites.vcr_regression) << " | "
            << star_marks(row.cites.stars) << " | " << to_string(row.bucket)
            << " |\n";
    }
}

}  // namespace

void render_indices(std::span<const IndicesRow> rows, Measure measure,
                    YearRange period, TableFormat format, std::ostream& out) {
    switch (format) {
        case TableFormat::Csv: indices_csv(rows, measure, period, out); break;
        case TableFormat::Json: indices_json(rows, measure, period, out); break;
        case TableFormat::Markdown:
            indices_markdown(rows, measure, period, out);
            break;
    }
}

void render_trend(std::span<const TrendRow> rows, Measure measure,
                  TableFormat format, std::ostream& out) {
    switch (format) {
        case TableFormat::Csv: trend_csv(rows, measure, out); break;
        case TableFormat::Json: trend_json(rows, measure, out); break;
        case TableFormat::Markdown: trend_markdown(rows, measure, out); break;
    }
}

void render_plot_csv(std::span<const PlotPoint> points, std::string_view node,
                     std::ostream& out) {
    out << "node,year,vcr,fitted,ci_low,ci_high\n";
    for (const PlotPoint& p : points) {
        out << csv_field(std::string(node)) << ',' << p.year << ','
            << (p.observed ? format_double(*p.observed) : std::string()) << ','
            << format_double(p.fitted) << ',' << format_double(p.ci_low) << ','
            << format_double(p.ci_high) << '\n';
    }
}

void render_classification(std::span<const ClassifyRow> rows,
                           TableFormat format, std::ostream& out) {
    switch (format) {
        case TableFormat::Csv: classification_csv(rows, out); break;
        case TableFormat::Json: classification_json(rows, out); break;
        case TableFormat::Markdown: classification_grid(rows, out); break;
    }
}

void render_report(std::span<const ReportRow> rows, TableFormat format,
                   std::ostream& out) {
    switch (format) {
        case TableFormat::Csv: report_csv(rows, out); break;
        case TableFormat::Json: report_json(rows, out); break;
        case TableFormat::Markdown: report_markdown(rows, out); break;
    }
}

void apply_display_clamp(std::vector<TrendRow>& rows) {
    for (TrendRow& row : rows) {
        if (!row.fit) continue;
        row.fit->projection = std::max(0.0, row.fit->projection);
        row.fit->ci_low = std::max(0.0, row.fit->ci_low);
        row.fit->ci_high = std::max(0.0, row.fit->ci_high);
    }
}

void apply_display_clamp(std::vector<ReportRow>& rows) {
    for (ReportRow& row : rows) {
        for (MeasureCell* cell : {&row.docs, &row.cites}) {
            if (cell->vcr_regression && *cell->vcr_regression < 0)
                cell->vcr_regression = 0.0;
        }
    }
}

}  // namespace vcr
