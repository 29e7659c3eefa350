#include "vcr/panel.hpp"

#include <algorithm>
#include <limits>

#include "vcr/error.hpp"

namespace vcr {

namespace {

std::string cell_name(std::string_view entity, std::string_view node,
                      Year year) {
    return "(" + std::string(entity) + ", " + std::string(node) + ", " +
           std::to_string(year) + ")";
}

Count measure_of(const PanelRecord& record, Measure measure,
                 const AggregateOptions& opts) {
    switch (measure) {
        case Measure::Documents:
            return opts.doc_basis == DocBasis::CitableDocuments
                       ? record.citable_documents
                       : record.documents;
        case Measure::Citations:
            return record.citations;
    }
    return 0;
}

}  // namespace

const char* to_string(Measure m) {
    return m == Measure::Documents ? "documents" : "citations";
}

const char* to_string(DocBasis b) {
    return b == DocBasis::Documents ? "documents" : "citable_documents";
}

std::string YearRange::label() const {
    if (single()) return std::to_string(first);
    return std::to_string(first) + "-" + std::to_string(last);
}

bool Panel::has_entity(std::string_view entity) const {
    return std::binary_search(entities_.begin(), entities_.end(), entity);
}

const PanelRecord* Panel::find(std::string_view entity, std::string_view node,
                               Year year) const {
    auto it = cells_.find(
        CellKey{std::string(entity), std::string(node), year});
    return it == cells_.end() ? nullptr : &it->second;
}

void Panel::check_lookup(std::string_view entity, std::string_view node,
                         YearRange years) const {
    if (!has_entity(entity))
        raise(Errc::NotFound, "unknown entity '" + std::string(entity) + "'");
    if (node != kAllNodeId && !taxonomy_.contains(node))
        raise(Errc::NotFound,
              "unknown taxonomy node '" + std::string(node) + "'");
    if (!years.valid())
        raise(Errc::InvalidRange, "empty year range " + years.label());
    if (!coverage_.contains(years))
        raise(Errc::InvalidRange, "years " + years.label() +
                                      " outside coverage " + coverage_.label());
}

std::optional<Count> Panel::observed_aggregate(
    std::string_view entity, std::string_view node, Measure measure,
    YearRange years, const AggregateOptions& opts) const {
    check_lookup(entity, node, years);
    Count total = 0;
    bool observed = false;
    for (Year y = years.first; y <= years.last; ++y) {
        if (const PanelRecord* record = find(entity, node, y)) {
            total += measure_of(*record, measure, opts);
            observed = true;
        }
    }
    if (!observed) return std::nullopt;
    return total;
}

Count Panel::aggregate(std::string_view entity, std::string_view node,
                       Measure measure, YearRange years,
                       const AggregateOptions& opts) const {
    return observed_aggregate(entity, node, measure, years, opts).value_or(0);
}

std::vector<const PanelRecord*> Panel::records() const {
    std::vector<const PanelRecord*> result;
    result.reserve(cells_.size());
    for (const auto& [key, record] : cells_) result.push_back(&record);
    return result;
}

PanelBuilder::PanelBuilder(std::string baseline_entity)
    : baseline_(std::move(baseline_entity)) {
    if (baseline_.empty())
        raise(Errc::DomainError, "baseline entity name must not be empty");
}

PanelBuilder& PanelBuilder::set_taxonomy(Taxonomy taxonomy) {
    taxonomy_ = std::move(taxonomy);
    return *this;
}

PanelBuilder& PanelBuilder::add(PanelRecord record) {
    if (record.entity.empty())
        raise(Errc::ParseError, "record with empty entity");
    if (record.node != kAllNodeId && !taxonomy_.contains(record.node))
        raise(Errc::NotFound, "record references unknown node '" +
                                  record.node + "'");
    if (record.citable_documents > record.documents)
        raise(Errc::InconsistentPanel,
              "citable_documents > documents at " +
                  cell_name(record.entity, record.node, record.year));
    Panel::CellKey key{record.entity, record.node, record.year};
    if (cells_.contains(key))
        raise(Errc::DuplicateCell,
              "duplicate cell " +
                  cell_name(record.entity, record.node, record.year));
    cells_.emplace(std::move(key), std::move(record));
    return *this;
}

Panel PanelBuilder::build() {
    if (cells_.empty())
        raise(Errc::InsufficientData, "panel has no records");

    Panel panel;
    panel.taxonomy_ = std::move(taxonomy_);
    panel.baseline_ = baseline_;

    Year lo = std::numeric_limits<Year>::max();
    Year hi = std::numeric_limits<Year>::min();
    std::set<std::string> entities;
    for (const auto& [key, record] : cells_) {
        lo = std::min(lo, record.year);
        hi = std::max(hi, record.year);
        entities.insert(record.entity);
    }
    panel.coverage_ = YearRange{lo, hi};
    panel.entities_.assign(entities.begin(), entities.end());

    if (!entities.contains(baseline_))
        raise(Errc::InconsistentPanel,
              "baseline entity '" + baseline_ + "' has no records");

    // Baseline must cover every focal cell, and a focal entity can never
    // out-count the baseline in the same cell.
    for (const auto& [key, record] : cells_) {
        if (record.entity == baseline_) continue;
        auto base = cells_.find(
            Panel::CellKey{baseline_, record.node, record.year});
        if (base == cells_.end())
            raise(Errc::InconsistentPanel,
                  "baseline '" + baseline_ + "' missing cell " +
                      cell_name(baseline_, record.node, record.year) +
                      " observed for '" + record.entity + "'");
        const PanelRecord& b = base->second;
        if (record.documents > b.documents ||
            record.citable_documents > b.citable_documents ||
            record.citations > b.citations)
            raise(Errc::InconsistentPanel,
                  "'" + record.entity + "' exceeds baseline at " +
                      cell_name(record.entity, record.node, record.year));
    }

    panel.cells_ = std::move(cells_);
    return panel;
}

}  // namespace vcr
