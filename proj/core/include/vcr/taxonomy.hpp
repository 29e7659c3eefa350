#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "vcr/error.hpp"

namespace vcr {

// Three-level subject hierarchy: big area -> thematic area -> discipline.
enum class TaxonomyLevel { BigArea, Area, Discipline };

const char* to_string(TaxonomyLevel level);

// Reserved pseudo-node holding the all-fields totals of an entity. It is not
// part of the taxonomy tree; totals are never derived by summing children
// because the source assigns multi-area journals to every matching area.
inline constexpr std::string_view kAllNodeId = "__ALL__";

struct TaxonomyNode {
    std::string id;      // unique within a Taxonomy
    std::string name;    // display name
    TaxonomyLevel level;
    std::string parent;  // node id; empty only for BigArea
};

class Taxonomy {
public:
    // Level-prefixed so equal names on different levels cannot collide.
    static std::string make_id(TaxonomyLevel level, std::string_view name);

    // Adds a node. Re-adding an identical node is a no-op; the same id with a
    // different parent or level raises InconsistentTaxonomy.
    void add(const TaxonomyNode& node);

    bool contains(std::string_view id) const;
    const TaxonomyNode* find(std::string_view id) const;  // nullptr if unknown
    const TaxonomyNode& at(std::string_view id) const;    // NotFound if unknown

    std::size_t size() const { return nodes_.size(); }
    bool empty() const { return nodes_.empty(); }

    std::vector<const TaxonomyNode*> at_level(TaxonomyLevel level) const;
    std::vector<const TaxonomyNode*> children_of(std::string_view id) const;

    // Depth-first traversal: big areas by name, each followed by its areas by
    // name, each followed by its disciplines by name. This is the canonical
    // report row order.
    std::vector<const TaxonomyNode*> ordered() const;

    // "Big area / Area / Discipline" display path.
    std::string path(std::string_view id) const;

private:
    std::vector<TaxonomyNode> nodes_;  // insertion order
    const TaxonomyNode* lookup(std::string_view id) const;
};

}  // namespace vcr
