#pragma once

// Shared test utilities: deterministic panel builders, a tiny process
// runner for CLI checks, and a CSV splitter for asserting on tool output.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "vcr/indices.hpp"
#include "vcr/ingest.hpp"
#include "vcr/panel.hpp"

namespace vcrtest {

inline std::string data_path(const std::string& name) {
    return std::string(VCR_TEST_DATA_DIR) + "/" + name;
}

inline std::string cli_path() { return VCR_CLI_PATH; }

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout + stderr
};

inline RunResult run_command(const std::string& command) {
    RunResult result;
    std::string wrapped = command + " 2>&1";
    FILE* pipe = popen(wrapped.c_str(), "r");
    if (pipe == nullptr) return result;
    std::array<char, 4096> buffer;
    std::size_t got;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.output.append(buffer.data(), got);
    int status = pclose(pipe);
    if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
    return result;
}

inline std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                field.push_back('"');
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                field.push_back(c);
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(field));
            field.clear();
        } else {
            field.push_back(c);
        }
    }
    fields.push_back(std::move(field));
    return fields;
}

inline std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string line;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(std::move(line));
            line.clear();
        } else if (c != '\r') {
            line.push_back(c);
        }
    }
    if (!line.empty()) lines.push_back(std::move(line));
    return lines;
}

// A panel whose disciplines partition each entity's totals exactly: the
// all-fields row of every (entity, year) equals the sum of its disciplines.
// Counts are drawn deterministically from `seed`.
struct PartitionedPanel {
    vcr::Panel panel;
    std::vector<std::string> discipline_ids;
    int n_disciplines = 0;
    vcr::YearRange years;
};

inline PartitionedPanel make_partitioned_panel(std::uint64_t seed,
                                               int n_disciplines = 4,
                                               int n_years = 6,
                                               vcr::Year first_year = 2000) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<vcr::Count> focal_docs(1, 500);
    std::uniform_int_distribution<vcr::Count> extra_docs(1, 5000);
    std::uniform_int_distribution<vcr::Count> focal_cites(1, 2000);
    std::uniform_int_distribution<vcr::Count> extra_cites(1, 20000);

    vcr::Taxonomy taxonomy;
    taxonomy.add({"big:Synthetic", "Synthetic", vcr::TaxonomyLevel::BigArea, ""});
    taxonomy.add({"area:Fields", "Fields", vcr::TaxonomyLevel::Area,
                  "big:Synthetic"});
    PartitionedPanel out;
    for (int d = 0; d < n_disciplines; ++d) {
        std::string name = "Field " + std::to_string(d);
        std::string id = vcr::Taxonomy::make_id(vcr::TaxonomyLevel::Discipline,
                                                name);
        taxonomy.add({id, name, vcr::TaxonomyLevel::Discipline, "area:Fields"});
        out.discipline_ids.push_back(id);
    }

    vcr::PanelBuilder builder("World");
    builder.set_taxonomy(std::move(taxonomy));
    for (vcr::Year y = first_year; y < first_year + n_years; ++y) {
        vcr::Count f_docs_total = 0, f_cites_total = 0;
        vcr::Count w_docs_total = 0, w_cites_total = 0;
        for (const std::string& id : out.discipline_ids) {
            vcr::Count fd = focal_docs(rng);
            vcr::Count fc = focal_cites(rng);
            vcr::Count wd = fd + extra_docs(rng);
            vcr::Count wc = fc + extra_cites(rng);
            builder.add({"Uruguay", id, y, fd, fd, fc});
            builder.add({"World", id, y, wd, wd, wc});
            f_docs_total += fd;
            f_cites_total += fc;
            w_docs_total += wd;
            w_cites_total += wc;
        }
        builder.add({"Uruguay", std::string(vcr::kAllNodeId), y, f_docs_total,
                     f_docs_total, f_cites_total});
        builder.add({"World", std::string(vcr::kAllNodeId), y, w_docs_total,
                     w_docs_total, w_cites_total});
    }
    out.panel = builder.build();
    out.n_disciplines = n_disciplines;
    out.years = vcr::YearRange{first_year, first_year + n_years - 1};
    return out;
}

// A panel with one big area whose focal share follows an engineered linear
// VCR path: focal-in-node counts are chosen so the annual VCR equals
// slope-and-intercept exactly up to integer rounding of the counts.
inline vcr::Panel make_trending_panel(double docs_vcr_start,
                                      double docs_vcr_step,
                                      double cites_vcr_start,
                                      double cites_vcr_step, int n_years = 10,
                                      vcr::Year first_year = 2000) {
    vcr::Taxonomy taxonomy;
    taxonomy.add({"big:Trend", "Trend", vcr::TaxonomyLevel::BigArea, ""});
    vcr::PanelBuilder builder("World");
    builder.set_taxonomy(std::move(taxonomy));

    // Baseline share held at 1/10 with large round counts so the focal
    // counts (vcr * share * total) stay integral for 1-decimal vcr steps.
    const vcr::Count world_total_docs = 1000000, world_node_docs = 100000;
    const vcr::Count world_total_cites = 2000000, world_node_cites = 200000;
    const vcr::Count focal_total_docs = 100000, focal_total_cites = 200000;
    for (int i = 0; i < n_years; ++i) {
        vcr::Year y = first_year + i;
        double vd = docs_vcr_start + docs_vcr_step * i;
        double vc = cites_vcr_start + cites_vcr_step * i;
        auto fd = vcr::Count(vd * 0.1 * focal_total_docs + 0.5);
        auto fc = vcr::Count(vc * 0.1 * focal_total_cites + 0.5);
        builder.add({"World", std::string(vcr::kAllNodeId), y,
                     world_total_docs, world_total_docs, world_total_cites});
        builder.add({"World", "big:Trend", y, world_node_docs, world_node_docs,
                     world_node_cites});
        builder.add({"Uruguay", std::string(vcr::kAllNodeId), y,
                     focal_total_docs, focal_total_docs, focal_total_cites});
        builder.add({"Uruguay", "big:Trend", y, fd, fd, fc});
    }
    return builder.build();
}

}  // namespace vcrtest
