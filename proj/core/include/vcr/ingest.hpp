#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "vcr/panel.hpp"

namespace vcr {

// One line of the canonical comma-delimited panel format. Exactly one of the
// taxonomy columns is the node's own name depending on `level`; ancestors
// are filled in, descendants empty; `all` rows leave all three empty.
struct CanonicalRow {
    std::string entity;
    std::string level;  // "big_area" | "area" | "discipline" | "all"
    std::string big_area;
    std::string area;
    std::string discipline;
    Year year = 0;
    Count documents = 0;
    Count citable_documents = 0;
    Count citations = 0;
};

// The exact header line of the canonical format.
inline constexpr std::string_view kCanonicalHeader =
    "entity,level,big_area,area,discipline,year,documents,citable_documents,"
    "citations";

// Parses the canonical format into a validated Panel. RFC-4180 quoting,
// UTF-8, LF or CRLF. Every diagnostic carries a line number; duplicated
// (entity, node, year) cells report both offending lines.
// Errors: SchemaError, ParseError, DuplicateCell, InconsistentTaxonomy, plus
// the PanelBuilder invariant checks.
Panel parse_canonical(std::istream& in, std::string baseline_entity = "World");

Panel load_panel(const std::filesystem::path& path,
                 std::string baseline_entity = "World");

// Persists a panel in the canonical format, rows in deterministic
// (entity, level, path, year) order. load(save(p)) reproduces p.
void write_panel(const Panel& panel, std::ostream& out);
void save_panel(const Panel& panel, const std::filesystem::path& path);

// Taxonomy placement the public country-rank exports do not embed; the
// caller supplies it per downloaded file.
struct ScimagoContext {
    std::string level;  // canonical level tag
    std::string big_area;
    std::string area;
    std::string discipline;
    Year year = 0;
};

// Adapts one semicolon-delimited country-rank export (one file per
// node-year query) into canonical rows. Column positions are located by
// header name; counts tolerate locale thousands separators ("1.910" and
// "1,910" both mean 1910). `entity` empty converts every country row;
// otherwise only the matching country.
// Errors: MissingColumn (header lacks a required column), ParseError,
// NotFound (entity filter matches no row).
std::vector<CanonicalRow> adapt_scimago(std::istream& in,
                                        std::string_view entity,
                                        const ScimagoContext& context);

// Canonical-row helpers shared by the parser and the writer.
TaxonomyLevel level_from_string(std::string_view level);  // ParseError
std::string node_id_for_row(const CanonicalRow& row);     // ParseError

}  // namespace vcr
