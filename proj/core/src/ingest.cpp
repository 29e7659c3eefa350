#include "vcr/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <tuple>

#include "vcr/error.hpp"

namespace vcr {

namespace {

// RFC-4180 record reader: quoted fields may contain the delimiter, escaped
// quotes ("") and newlines; accepts LF and CRLF. Reports the line each
// record starts on.
class CsvReader {
public:
    CsvReader(std::istream& in, char delimiter)
        : in_(in), delimiter_(delimiter) {}

    // False at end of input. Skips fully empty lines.
    bool next(std::vector<std::string>& fields, std::size_t& line) {
        fields.clear();
        int c = in_.get();
        while (c == '\n' || c == '\r') {
            if (c == '\n') ++line_;
            c = in_.get();
        }
        if (c == std::char_traits<char>::eof()) return false;

        line = line_;
        std::string field;
        bool quoted = false;
        bool record_done = false;
        while (!record_done) {
            if (quoted) {
                if (c == std::char_traits<char>::eof())
                    raise(Errc::ParseError,
                          "line " + std::to_string(line) +
                              ": unterminated quoted field");
                if (c == '"') {
                    int peek = in_.get();
                    if (peek == '"') {
                        field.push_back('"');
                    } else {
                        quoted = false;
                        in_.unget();
                    }
                } else {
                    if (c == '\n') ++line_;
                    field.push_back(char(c));
                }
            } else {
                switch (c) {
                    case '"':
                        quoted = true;
                        break;
                    case '\r':
                        break;  // swallow; the '\n' ends the record
                    case '\n':
                        ++line_;
                        record_done = true;
                        break;
                    case std::char_traits<char>::eof():
                        record_done = true;
                        break;
                    default:
                        if (c == delimiter_) {
                            fields.push_back(std::move(field));
                            field.clear();
                        } else {
                            field.push_back(char(c));
                        }
                }
            }
            if (!record_done) c = in_.get();
        }
        fields.push_back(std::move(field));
        return true;
    }

private:
    std::istream& in_;
    char delimiter_;
    std::size_t line_ = 1;
};

std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out += "\"";
    return out;
}

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
    raise(Errc::ParseError, "line " + std::to_string(line) + ": " + what);
}

Count parse_count(const std::string& text, std::size_t line,
                  const std::string& column) {
    if (text.empty())
        parse_fail(line, "empty " + column);
    Count value = 0;
    for (char c : text) {
        if (c < '0' || c > '9')
            parse_fail(line, "non-integer " + column + " '" + text + "'");
        Count digit = Count(c - '0');
        if (value > (std::numeric_limits<Count>::max() - digit) / 10)
            parse_fail(line, column + " overflows");
        value = value * 10 + digit;
    }
    return value;
}

// Counts in portal exports print with locale thousands separators.
Count parse_separated_count(const std::string& text, std::size_t line,
                            const std::string& column) {
    std::string digits;
    for (char c : text) {
        if (c == '.' || c == ',' || c == ' ') continue;
        digits.push_back(c);
    }
    return parse_count(digits, line, column);
}

Year parse_year(const std::string& text, std::size_t line) {
    if (text.size() != 4 ||
        !std::all_of(text.begin(), text.end(),
                     [](unsigned char c) { return std::isdigit(c); }))
        parse_fail(line, "year must be a 4-digit integer, got '" + text + "'");
    return std::stoi(text);
}

int level_sort_rank(const std::string& level) {
    if (level == "all") return 0;
    if (level == "big_area") return 1;
    if (level == "area") return 2;
    return 3;
}

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return char(std::tolower(c)); });
    return out;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t");
    auto e = s.find_last_not_of(" \t");
    if (b == std::string::npos) return "";
    return s.substr(b, e - b + 1);
}

}  // namespace

TaxonomyLevel level_from_string(std::string_view level) {
    if (level == "big_area") return TaxonomyLevel::BigArea;
    if (level == "area") return TaxonomyLevel::Area;
    if (level == "discipline") return TaxonomyLevel::Discipline;
    raise(Errc::ParseError, "unknown level '" + std::string(level) + "'");
}

std::string node_id_for_row(const CanonicalRow& row) {
    auto want = [&](bool big, bool area, bool disc) {
        if ((!row.big_area.empty()) != big || (!row.area.empty()) != area ||
            (!row.discipline.empty()) != disc)
            raise(Errc::ParseError,
                  "taxonomy columns do not match level '" + row.level + "'");
    };
    if (row.level == "all") {
        want(false, false, false);
        return std::string(kAllNodeId);
    }
    if (row.level == "big_area") {
        want(true, false, false);
        return Taxonomy::make_id(TaxonomyLevel::BigArea, row.big_area);
    }
    if (row.level == "area") {
        want(true, true, false);
        return Taxonomy::make_id(TaxonomyLevel::Area, row.area);
    }
    if (row.level == "discipline") {
        want(true, true, true);
        return Taxonomy::make_id(TaxonomyLevel::Discipline, row.discipline);
    }
    raise(Errc::ParseError, "unknown level '" + row.level + "'");
}

Panel parse_canonical(std::istream& in, std::string baseline_entity) {
    CsvReader reader(in, ',');
    std::vector<std::string> fields;
    std::size_t line = 0;

    if (!reader.next(fields, line))
        raise(Errc::SchemaError, "empty input; expected header '" +
                                     std::string(kCanonicalHeader) + "'");
    {
        std::string got;
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (i) got += ',';
            got += fields[i];
        }
        if (got != kCanonicalHeader)
            raise(Errc::SchemaError, "expected header '" +
                                         std::string(kCanonicalHeader) +
                                         "', got '" + got + "'");
    }

    PanelBuilder builder(std::move(baseline_entity));
    Taxonomy& taxonomy = builder.taxonomy();
    struct Pending {
        PanelRecord record;
        std::size_t line;
    };
    std::vector<Pending> pending;
    std::map<std::tuple<std::string, std::string, Year>, std::size_t> seen;

    while (reader.next(fields, line)) {
        if (fields.size() != 9)
            parse_fail(line, "expected 9 fields, got " +
                                 std::to_string(fields.size()));
        CanonicalRow row;
        row.entity = fields[0];
        row.level = fields[1];
        row.big_area = fields[2];
        row.area = fields[3];
        row.discipline = fields[4];
        row.year = parse_year(fields[5], line);
        row.documents = parse_count(fields[6], line, "documents");
        row.citable_documents =
            parse_count(fields[7], line, "citable_documents");
        row.citations = parse_count(fields[8], line, "citations");
        if (row.entity.empty()) parse_fail(line, "empty entity");

        std::string node_id;
        try {
            node_id = node_id_for_row(row);
            if (row.level == "big_area" || row.level == "area" ||
                row.level == "discipline") {
                // Auto-build ancestors from the row's own columns.
                std::string big_id =
                    Taxonomy::make_id(TaxonomyLevel::BigArea, row.big_area);
                taxonomy.add({big_id, row.big_area, TaxonomyLevel::BigArea, ""});
                if (row.level != "big_area") {
                    std::string area_id =
                        Taxonomy::make_id(TaxonomyLevel::Area, row.area);
                    taxonomy.add(
                        {area_id, row.area, TaxonomyLevel::Area, big_id});
                    if (row.level == "discipline")
                        taxonomy.add({node_id, row.discipline,
                                      TaxonomyLevel::Discipline, area_id});
                }
            }
        } catch (const Error& e) {
            if (e.code() == Errc::InconsistentTaxonomy)
                raise(Errc::InconsistentTaxonomy,
                      "line " + std::to_string(line) + ": " + e.what());
            if (e.code() == Errc::ParseError) throw;
            parse_fail(line, e.what());
        }

        auto key = std::make_tuple(row.entity, node_id, row.year);
        if (auto it = seen.find(key); it != seen.end())
            raise(Errc::DuplicateCell,
                  "duplicate cell (" + row.entity + ", " + node_id + ", " +
                      std::to_string(row.year) + ") on lines " +
                      std::to_string(it->second) + " and " +
                      std::to_string(line));
        seen.emplace(std::move(key), line);

        PanelRecord record;
        record.entity = std::move(row.entity);
        record.node = std::move(node_id);
        record.year = row.year;
        record.documents = row.documents;
        record.citable_documents = row.citable_documents;
        record.citations = row.citations;
        pending.push_back({std::move(record), line});
    }
    if (pending.empty())
        raise(Errc::SchemaError, "no data rows after the header");

    for (Pending& p : pending) {
        try {
            builder.add(std::move(p.record));
        } catch (const Error& e) {
            raise(e.code(), "line " + std::to_string(p.line) + ": " + e.what());
        }
    }
    return builder.build();
}

Panel load_panel(const std::filesystem::path& path,
                 std::string baseline_entity) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        raise(Errc::IoError, "cannot open '" + path.string() + "'");
    return parse_canonical(in, std::move(baseline_entity));
}

namespace {

CanonicalRow row_from_record(const Panel& panel, const PanelRecord& record) {
    CanonicalRow row;
    row.entity = record.entity;
    row.year = record.year;
    row.documents = record.documents;
    row.citable_documents = record.citable_documents;
    row.citations = record.citations;
    if (record.node == kAllNodeId) {
        row.level = "all";
        return row;
    }
    const Taxonomy& tax = panel.taxonomy();
    const TaxonomyNode& node = tax.at(record.node);
    switch (node.level) {
        case TaxonomyLevel::BigArea:
            row.level = "big_area";
            row.big_area = node.name;
            break;
        case TaxonomyLevel::Area: {
            row.level = "area";
            row.area = node.name;
            row.big_area = tax.at(node.parent).name;
            break;
        }
        case TaxonomyLevel::Discipline: {
            row.level = "discipline";
            row.discipline = node.name;
            const TaxonomyNode& area = tax.at(node.parent);
            row.area = area.name;
            row.big_area = tax.at(area.parent).name;
            break;
        }
    }
    return row;
}

}  // namespace

void write_panel(const Panel& panel, std::ostream& out) {
    std::vector<CanonicalRow> rows;
    rows.reserve(panel.record_count());
    for (const PanelRecord* record : panel.records())
        rows.push_back(row_from_record(panel, *record));
    std::sort(rows.begin(), rows.end(),
              [](const CanonicalRow& a, const CanonicalRow& b) {
                  auto key = [](const CanonicalRow& r) {
                      return std::make_tuple(r.entity,
                                             level_sort_rank(r.level),
                                             r.big_area, r.area, r.discipline,
                                             r.year);
                  };
                  return key(a) < key(b);
              });

    out << kCanonicalHeader << '\n';
    for (const CanonicalRow& row : rows) {
        out << csv_quote(row.entity) << ',' << row.level << ','
            << csv_quote(row.big_area) << ',' << csv_quote(row.area) << ','
            << csv_quote(row.discipline) << ',' << row.year << ','
            << row.documents << ',' << row.citable_documents << ','
            << row.citations << '\n';
    }
}

void save_panel(const Panel& panel, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        raise(Errc::IoError, "cannot write '" + path.string() + "'");
    write_panel(panel, out);
    out.flush();
    if (!out)
        raise(Errc::IoError, "short write to '" + path.string() + "'");
}

std::vector<CanonicalRow> adapt_scimago(std::istream& in,
                                        std::string_view entity,
                                        const ScimagoContext& context) {
    CsvReader reader(in, ';');
    std::vector<std::string> fields;
    std::size_t line = 0;
    if (!reader.next(fields, line))
        raise(Errc::SchemaError, "empty export");

    auto column = [&](const std::string& name) -> std::size_t {
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (lower(trim(fields[i])) == lower(name)) return i;
        }
        raise(Errc::MissingColumn, "export lacks a '" + name + "' column");
    };
    std::size_t country_col = column("Country");
    std::size_t documents_col = column("Documents");
    std::size_t citable_col = column("Citable documents");
    std::size_t citations_col = column("Citations");
    std::size_t needed = std::max({country_col, documents_col, citable_col,
                                   citations_col});

    std::vector<CanonicalRow> rows;
    while (reader.next(fields, line)) {
        if (fields.size() <= needed)
            parse_fail(line, "expected at least " + std::to_string(needed + 1) +
                                 " fields, got " +
                                 std::to_string(fields.size()));
        std::string country = trim(fields[country_col]);
        if (!entity.empty() && country != entity) continue;
        CanonicalRow row;
        row.entity = country;
        row.level = context.level;
        row.big_area = context.big_area;
        row.area = context.area;
        row.discipline = context.discipline;
        row.year = context.year;
        row.documents =
            parse_separated_count(fields[documents_col], line, "Documents");
        row.citable_documents = parse_separated_count(fields[citable_col],
                                                      line,
                                                      "Citable documents");
        row.citations =
            parse_separated_count(fields[citations_col], line, "Citations");
        node_id_for_row(row);  // level / column consistency check
        rows.push_back(std::move(row));
    }
    if (rows.empty()) {
        if (!entity.empty())
            raise(Errc::NotFound, "no row for entity '" + std::string(entity) +
                                      "' in the export");
        raise(Errc::SchemaError, "export has no data rows");
    }
    return rows;
}

}  // namespace vcr
