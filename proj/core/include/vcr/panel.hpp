#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "vcr/taxonomy.hpp"
#include "vcr/types.hpp"

namespace vcr {

// One (entity, node, year) observation. `citations` is the citations
// accumulated to date by the documents published in `year`.
struct PanelRecord {
    std::string entity;
    std::string node;  // taxonomy node id, or kAllNodeId for totals
    Year year = 0;
    Count documents = 0;
    Count citable_documents = 0;
    Count citations = 0;
};

struct AggregateOptions {
    DocBasis doc_basis = DocBasis::Documents;
};

// Immutable bibliometric panel. Construct through PanelBuilder, which
// enforces the cell-level and cross-entity invariants; afterwards any number
// of threads may read concurrently. A default-constructed panel is empty
// and every lookup on it reports NotFound.
class Panel {
public:
    Panel() = default;

    const Taxonomy& taxonomy() const { return taxonomy_; }
    const std::string& baseline_entity() const { return baseline_; }
    YearRange coverage() const { return coverage_; }

    const std::vector<std::string>& entities() const { return entities_; }
    bool has_entity(std::string_view entity) const;

    std::size_t record_count() const { return cells_.size(); }

    // The record at a cell, or nullptr when the cell is structurally absent.
    const PanelRecord* find(std::string_view entity, std::string_view node,
                            Year year) const;

    // Sum of `measure` over the observed cells of (entity, node) in `years`.
    // Returns nullopt when no cell in the range is observed: a missing cell
    // is absent data, not an observed zero.
    // Errors: NotFound (unknown entity or node), InvalidRange (invalid or
    // out-of-coverage range).
    std::optional<Count> observed_aggregate(std::string_view entity,
                                            std::string_view node,
                                            Measure measure, YearRange years,
                                            const AggregateOptions& opts = {}) const;

    // Like observed_aggregate but treats an unobserved range as zero (the
    // additive identity of the sum).
    Count aggregate(std::string_view entity, std::string_view node,
                    Measure measure, YearRange years,
                    const AggregateOptions& opts = {}) const;

    // All records in deterministic (entity, node, year) order.
    std::vector<const PanelRecord*> records() const;

private:
    friend class PanelBuilder;

    struct CellKey {
        std::string entity;
        std::string node;
        Year year;
        auto operator<=>(const CellKey&) const = default;
    };

    Taxonomy taxonomy_;
    std::string baseline_;
    YearRange coverage_;
    std::vector<std::string> entities_;
    std::map<CellKey, PanelRecord, std::less<>> cells_;

    void check_lookup(std::string_view entity, std::string_view node,
                      YearRange years) const;
};

// Accumulates records, then validates the whole panel:
//   - at most one record per (entity, node, year)
//   - citable_documents <= documents per record
//   - the baseline entity covers every (node, year) any other entity has
//   - focal counts never exceed baseline counts in the same cell
class PanelBuilder {
public:
    explicit PanelBuilder(std::string baseline_entity);

    PanelBuilder& set_taxonomy(Taxonomy taxonomy);
    Taxonomy& taxonomy() { return taxonomy_; }

    // DuplicateCell if the cell was already added; InconsistentPanel if
    // citable_documents > documents; NotFound if the node is neither in the
    // taxonomy nor the reserved totals node.
    PanelBuilder& add(PanelRecord record);

    // Runs the cross-record checks and yields the immutable panel.
    // InsufficientData when no records were added.
    Panel build();

private:
    std::string baseline_;
    Taxonomy taxonomy_;
    std::map<Panel::CellKey, PanelRecord, std::less<>> cells_;
};

}  // namespace vcr
