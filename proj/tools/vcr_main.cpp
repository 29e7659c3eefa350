// Command-line front end: ingest -> indices -> trend -> classify -> report.
// Every number printed here comes straight from a library call; the CLI only
// parses flags, routes tables to renderers and maps errors to exit codes.
//
// Exit codes: 0 success, 2 usage or validation error, 3 I/O error,
// 4 insufficient data for every requested node.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>

#include <CLI11.hpp>

#include "vcr/classify.hpp"
#include "vcr/error.hpp"
#include "vcr/indices.hpp"
#include "vcr/ingest.hpp"
#include "vcr/report.hpp"
#include "vcr/trend.hpp"
#include "vcr/validation.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitNoData = 4;

struct CommonFlags {
    std::string input;
    std::string baseline = "World";
    std::string entity;
    std::string measure = "documents";
    std::string level = "big_area";
    std::string format = "csv";
    std::string out_path;
    std::string doc_basis = "documents";
};

vcr::Measure parse_measure(const std::string& name) {
    if (name == "documents") return vcr::Measure::Documents;
    if (name == "citations") return vcr::Measure::Citations;
    vcr::raise(vcr::Errc::DomainError,
               "unknown measure '" + name + "' (documents|citations)");
}

vcr::TaxonomyLevel parse_level(const std::string& name) {
    return vcr::level_from_string(name);
}

vcr::Smoothing parse_smoothing(const std::string& name) {
    if (name == "annual") return vcr::Smoothing::Annual;
    if (name == "triennial") return vcr::Smoothing::TriennialMoving;
    vcr::raise(vcr::Errc::DomainError,
               "unknown smoothing '" + name + "' (annual|triennial)");
}

vcr::DocBasis parse_doc_basis(const std::string& name) {
    if (name == "documents") return vcr::DocBasis::Documents;
    if (name == "citable") return vcr::DocBasis::CitableDocuments;
    vcr::raise(vcr::Errc::DomainError,
               "unknown doc basis '" + name + "' (documents|citable)");
}

vcr::YearRange parse_period(const std::string& text) {
    auto dash = text.find('-');
    try {
        if (dash == std::string::npos) {
            int y = std::stoi(text);
            return vcr::YearRange{y};
        }
        int first = std::stoi(text.substr(0, dash));
        int last = std::stoi(text.substr(dash + 1));
        if (first > last)
            vcr::raise(vcr::Errc::InvalidRange, "period '" + text + "'");
        return vcr::YearRange{first, last};
    } catch (const std::invalid_argument&) {
        vcr::raise(vcr::Errc::DomainError, "bad period '" + text + "'");
    } catch (const std::out_of_range&) {
        vcr::raise(vcr::Errc::DomainError, "bad period '" + text + "'");
    }
}

// Routes table output to --out or stdout; IoError when unwritable.
class OutputSink {
public:
    explicit OutputSink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_)
                vcr::raise(vcr::Errc::IoError, "cannot write '" + path + "'");
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

int exit_code_for(const vcr::Error& e) {
    switch (e.code()) {
        case vcr::Errc::IoError: return kExitIo;
        case vcr::Errc::InsufficientData: return kExitNoData;
        default: return kExitUsage;
    }
}

int cmd_validate(const CommonFlags& flags) {
    vcr::Panel panel = vcr::load_panel(flags.input, flags.baseline);
    std::set<std::string> nodes;
    for (const vcr::PanelRecord* r : panel.records()) nodes.insert(r->node);
    std::cout << panel.record_count() << " rows, " << panel.entities().size()
              << " entities, " << panel.taxonomy().size() << " nodes, "
              << panel.coverage().size() << " years ("
              << panel.coverage().label() << ")\n";
    return kExitOk;
}

int cmd_indices(const CommonFlags& flags, const std::string& window,
                const std::string& period_text) {
    vcr::Panel panel = vcr::load_panel(flags.input, flags.baseline);
    vcr::AnalysisConfig config;
    config.entity = flags.entity;
    config.level = parse_level(flags.level);
    config.agg.doc_basis = parse_doc_basis(flags.doc_basis);
    vcr::Smoothing smoothing = parse_smoothing(window);
    vcr::YearRange period = period_text.empty()
                                ? vcr::default_period(panel, smoothing)
                                : parse_period(period_text);
    vcr::Measure measure = parse_measure(flags.measure);

    auto rows = vcr::indices_table(panel, config, measure, period);
    OutputSink sink(flags.out_path);
    vcr::render_indices(rows, measure, period,
                        vcr::table_format_from_string(flags.format),
                        sink.stream());
    bool any = false;
    for (const auto& row : rows) any = any || row.value.has_value();
    return any ? kExitOk : kExitNoData;
}

void fill_trend_config(vcr::AnalysisConfig& config, const CommonFlags& flags,
                       int project_to, double alpha,
                       const std::string& model,
                       const std::string& smoothing,
                       const std::string& anchor, int min_periods) {
    config.entity = flags.entity;
    config.agg.doc_basis = parse_doc_basis(flags.doc_basis);
    config.project_to = project_to;
    config.alpha = alpha;
    if (model == "constant")
        config.model = vcr::TrendModel::ConstantMean;
    else if (model == "linear")
        config.model = vcr::TrendModel::LinearTrend;
    else
        vcr::raise(vcr::Errc::DomainError,
                   "unknown model '" + model + "' (constant|linear)");
    config.trend_smoothing = parse_smoothing(smoothing);
    if (anchor == "end")
        config.anchor = vcr::TimeAnchor::WindowEnd;
    else if (anchor == "start")
        config.anchor = vcr::TimeAnchor::WindowStart;
    else
        vcr::raise(vcr::Errc::DomainError,
                   "unknown anchor '" + anchor + "' (end|start)");
    config.min_periods = min_periods;
}

int cmd_trend(const CommonFlags& flags, int project_to, double alpha,
              const std::string& model, const std::string& smoothing,
              const std::string& anchor, int min_periods,
              const std::string& plot_dir, bool clamp_display) {
    vcr::Panel panel = vcr::load_panel(flags.input, flags.baseline);
    vcr::AnalysisConfig config;
    config.level = parse_level(flags.level);
    fill_trend_config(config, flags, project_to, alpha, model, smoothing,
                      anchor, min_periods);
    vcr::Measure measure = parse_measure(flags.measure);

    auto rows = vcr::trend_table(panel, config, measure);
    if (!plot_dir.empty()) {
        std::filesystem::create_directories(plot_dir);
        for (const auto& row : rows) {
            if (!row.fit) continue;
            auto points = vcr::plot_series(panel, config, measure, row.node_id);
            std::string name = row.node_id;
            for (char& c : name)
                if (c == '/' || c == ':' || c == ' ') c = '_';
            std::filesystem::path path =
                std::filesystem::path(plot_dir) /
                (name + "_" + std::string(vcr::to_string(measure)) + ".csv");
            std::ofstream out(path, std::ios::binary);
            if (!out)
                vcr::raise(vcr::Errc::IoError,
                           "cannot write '" + path.string() + "'");
            vcr::render_plot_csv(points, row.node_id, out);
        }
    }
    vcr::TableFormat format = vcr::table_format_from_string(flags.format);
    if (clamp_display && format == vcr::TableFormat::Markdown)
        vcr::apply_display_clamp(rows);
    OutputSink sink(flags.out_path);
    vcr::render_trend(rows, measure, format, sink.stream());
    bool any = false;
    for (const auto& row : rows) any = any || row.fit.has_value();
    return any ? kExitOk : kExitNoData;
}

int cmd_classify(const CommonFlags& flags, int project_to, double alpha,
                 const std::string& model, const std::string& smoothing,
                 const std::string& anchor, int min_periods) {
    vcr::Panel panel = vcr::load_panel(flags.input, flags.baseline);
    vcr::AnalysisConfig config;
    config.level = parse_level(flags.level);
    fill_trend_config(config, flags, project_to, alpha, model, smoothing,
                      anchor, min_periods);

    auto rows = vcr::classification_table(panel, config);
    OutputSink sink(flags.out_path);
    vcr::render_classification(rows,
                               vcr::table_format_from_string(flags.format),
                               sink.stream());
    bool any = false;
    for (const auto& row : rows)
        any = any || row.docs_projection || row.cites_projection;
    return any ? kExitOk : kExitNoData;
}

int cmd_report(const CommonFlags& flags, int project_to, double alpha,
               const std::string& model, const std::string& smoothing,
               const std::string& anchor, int min_periods,
               bool all_levels, bool clamp_display) {
    vcr::Panel panel = vcr::load_panel(flags.input, flags.baseline);
    vcr::AnalysisConfig config;
    if (!all_levels) config.level = parse_level(flags.level);
    fill_trend_config(config, flags, project_to, alpha, model, smoothing,
                      anchor, min_periods);

    auto rows = vcr::build_report(panel, config);
    vcr::TableFormat format = vcr::table_format_from_string(flags.format);
    if (clamp_display && format == vcr::TableFormat::Markdown)
        vcr::apply_display_clamp(rows);
    OutputSink sink(flags.out_path);
    vcr::render_report(rows, format, sink.stream());
    bool any = false;
    for (const auto& row : rows)
        any = any || row.docs.vcr_trienio || row.docs.vcr_regression ||
              row.cites.vcr_trienio || row.cites.vcr_regression;
    return any ? kExitOk : kExitNoData;
}

int cmd_simulate(const vcr::SyntheticSpec& spec, double alpha,
                 double null_value, int threads,
                 const std::string& per_rep_path) {
    auto outcomes = vcr::run_replications(spec, alpha, null_value, threads);
    int hits = 0, rejections = 0;
    for (const auto& out : outcomes) {
        hits += out.covered ? 1 : 0;
        rejections += out.rejected ? 1 : 0;
    }
    int n = int(outcomes.size());
    std::cout << "simulate: reps=" << n << " n_periods=" << spec.n_periods
              << " beta0=" << vcr::format_double(spec.beta0)
              << " beta1=" << vcr::format_double(spec.beta1)
              << " noise_sd=" << vcr::format_double(spec.noise_sd) << " noise="
              << vcr::to_string(spec.noise) << " target=" << spec.target_year
              << " alpha=" << vcr::format_double(alpha)
              << " null=" << vcr::format_double(null_value)
              << " seed=" << spec.base_seed << " coverage="
              << vcr::format_double(double(hits) / n) << " rejection="
              << vcr::format_double(double(rejections) / n) << "\n";
    if (!per_rep_path.empty()) {
        std::ofstream out(per_rep_path, std::ios::binary);
        if (!out)
            vcr::raise(vcr::Errc::IoError,
                       "cannot write '" + per_rep_path + "'");
        out << "replication,projection,ci_low,ci_high,covered,rejected\n";
        for (const auto& o : outcomes) {
            out << o.index << ',' << vcr::format_double(o.projection) << ','
                << vcr::format_double(o.ci_low) << ','
                << vcr::format_double(o.ci_high) << ',' << (o.covered ? 1 : 0)
                << ',' << (o.rejected ? 1 : 0) << '\n';
        }
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Revealed-comparative-advantage analytics over bibliometric "
                 "panels"};
    app.require_subcommand(1);
    // key=value config file overriding flag defaults; keys are dotted with
    // the subcommand ("simulate.reps=5000") or grouped in a [subcommand]
    // section. Passed before the subcommand: vcr --config f simulate
    app.set_config("--config", "",
                   "key=value file supplying defaults for any flag");

    CommonFlags flags;
    int project_to = 0;
    double alpha = 0.05;
    std::string model = "linear";
    std::string anchor = "end";
    int min_periods = 5;
    std::string plot_dir;
    bool clamp_display = false;
    bool all_levels = false;

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("input", flags.input, "canonical panel CSV")
            ->required();
        cmd->add_option("--baseline", flags.baseline,
                        "baseline entity name (default World)");
    };
    auto add_analysis = [&](CLI::App* cmd, bool with_measure = true) {
        cmd->add_option("--entity", flags.entity, "focal entity")->required();
        if (with_measure)
            cmd->add_option("--measure", flags.measure,
                            "documents|citations (default documents)");
        cmd->add_option("--level", flags.level,
                        "big_area|area|discipline (default big_area)");
        cmd->add_option("--format", flags.format,
                        "csv|json|markdown (default csv)");
        cmd->add_option("--out", flags.out_path, "output file (default stdout)");
        cmd->add_option("--doc-basis", flags.doc_basis,
                        "documents|citable: column behind the documents "
                        "measure");
    };
    auto add_trend_flags = [&](CLI::App* cmd) {
        cmd->add_option("--project-to", project_to,
                        "projection year (default: last year of coverage)");
        cmd->add_option("--alpha", alpha, "test level (default 0.05)");
        cmd->add_option("--model", model, "constant|linear (default linear)");
        cmd->add_option("--anchor", anchor,
                        "regressor year of smoothed windows: end|start");
        cmd->add_option("--min-periods", min_periods,
                        "fewer usable periods forces an inconclusive verdict");
        cmd->add_flag("--clamp-display", clamp_display,
                      "clamp negative projections to 0 in display output");
    };

    CLI::App* validate = app.add_subcommand(
        "validate", "parse a panel and report its shape");
    add_input(validate);

    CLI::App* indices = app.add_subcommand(
        "indices", "per-node shares and VCR for one period");
    add_input(indices);
    add_analysis(indices);
    std::string window = "triennial";
    std::string period_text;
    indices->add_option("--window", window,
                        "annual|triennial (default triennial)");
    indices->add_option("--period", period_text,
                        "e.g. 2019 or 2017-2019 (default: last window)");

    CLI::App* trend = app.add_subcommand(
        "trend", "trend fits, projections and confidence intervals");
    add_input(trend);
    add_analysis(trend);
    std::string trend_smoothing = "annual";
    trend->add_option("--smoothing", trend_smoothing,
                      "annual|triennial series (default annual)");
    add_trend_flags(trend);
    trend->add_option("--plot-dir", plot_dir,
                      "emit per-node band data CSV files here");

    CLI::App* classify = app.add_subcommand(
        "classify", "joint documents+citations verdict per node");
    add_input(classify);
    add_analysis(classify, /*with_measure=*/false);
    std::string classify_smoothing = "annual";
    classify->add_option("--smoothing", classify_smoothing,
                         "annual|triennial series (default annual)");
    add_trend_flags(classify);

    CLI::App* report = app.add_subcommand(
        "report", "full per-discipline table: shares, VCR, projections, "
                  "verdicts");
    add_input(report);
    add_analysis(report, /*with_measure=*/false);
    std::string report_smoothing = "annual";
    report->add_option("--smoothing", report_smoothing,
                       "annual|triennial series (default annual)");
    add_trend_flags(report);
    report->add_flag("--all-levels", all_levels,
                     "every taxonomy level in taxonomy order (default when "
                     "--level is not given)");

    CLI::App* simulate = app.add_subcommand(
        "simulate", "synthetic-series experiments for the trend machinery");
    vcr::SyntheticSpec spec;
    double sim_alpha = 0.05;
    double sim_null = 1.0;
    int threads = 1;
    std::string noise_kind = "gaussian";
    std::string per_rep_path;
    simulate->add_option("--n", spec.n_periods, "periods per series");
    simulate->add_option("--beta0", spec.beta0, "true intercept");
    simulate->add_option("--beta1", spec.beta1, "true slope");
    simulate->add_option("--noise", spec.noise_sd, "noise scale");
    simulate->add_option("--first-year", spec.first_year, "first period year");
    simulate->add_option("--target", spec.target_year, "projection year");
    simulate->add_option("--reps", spec.replications, "replications");
    simulate->add_option("--seed", spec.base_seed, "base seed");
    simulate->add_option("--alpha", sim_alpha, "test level");
    simulate->add_option("--null", sim_null, "null value under test");
    simulate->add_option("--noise-kind", noise_kind, "gaussian|t3");
    simulate->add_option("--threads", threads,
                         "worker threads (results identical for any count)");
    simulate->add_option("--per-rep", per_rep_path,
                         "write per-replication outcomes CSV here");

    // --level was explicitly set => report honors it; otherwise all levels.
    bool report_level_given = false;
    report->callback([&] {
        report_level_given = report->count("--level") > 0;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (validate->parsed()) return cmd_validate(flags);
        if (indices->parsed()) return cmd_indices(flags, window, period_text);
        if (trend->parsed())
            return cmd_trend(flags, project_to, alpha, model, trend_smoothing,
                             anchor, min_periods, plot_dir, clamp_display);
        if (classify->parsed())
            return cmd_classify(flags, project_to, alpha, model,
                                classify_smoothing, anchor, min_periods);
        if (report->parsed())
            return cmd_report(flags, project_to, alpha, model,
                              report_smoothing, anchor, min_periods,
                              !report_level_given || all_levels,
                              clamp_display);
        if (simulate->parsed()) {
            if (noise_kind == "gaussian")
                spec.noise = vcr::NoiseKind::Gaussian;
            else if (noise_kind == "t3")
                spec.noise = vcr::NoiseKind::StudentT3;
            else
                vcr::raise(vcr::Errc::DomainError,
                           "unknown noise kind '" + noise_kind + "'");
            return cmd_simulate(spec, sim_alpha, sim_null, threads,
                                per_rep_path);
        }
    } catch (const vcr::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
