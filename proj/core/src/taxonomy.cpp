#include "vcr/taxonomy.hpp"

#include <algorithm>

namespace vcr {

const char* to_string(TaxonomyLevel level) {
    switch (level) {
        case TaxonomyLevel::BigArea: return "big_area";
        case TaxonomyLevel::Area: return "area";
        case TaxonomyLevel::Discipline: return "discipline";
    }
    return "?";
}

std::string Taxonomy::make_id(TaxonomyLevel level, std::string_view name) {
    switch (level) {
        case TaxonomyLevel::BigArea: return "big:" + std::string(name);
        case TaxonomyLevel::Area: return "area:" + std::string(name);
        case TaxonomyLevel::Discipline: return "disc:" + std::string(name);
    }
    raise(Errc::DomainError, "bad taxonomy level");
}

const TaxonomyNode* Taxonomy::lookup(std::string_view id) const {
    for (const auto& node : nodes_) {
        if (node.id == id) return &node;
    }
    return nullptr;
}

void Taxonomy::add(const TaxonomyNode& node) {
    if (node.id.empty()) raise(Errc::InconsistentTaxonomy, "empty node id");
    if (node.level == TaxonomyLevel::BigArea) {
        if (!node.parent.empty())
            raise(Errc::InconsistentTaxonomy,
                  "big area '" + node.name + "' must not have a parent");
    } else {
        const TaxonomyNode* parent = lookup(node.parent);
        if (parent == nullptr)
            raise(Errc::InconsistentTaxonomy,
                  "node '" + node.name + "' references unknown parent '" +
                      node.parent + "'");
        TaxonomyLevel expected = node.level == TaxonomyLevel::Area
                                     ? TaxonomyLevel::BigArea
                                     : TaxonomyLevel::Area;
        if (parent->level != expected)
            raise(Errc::InconsistentTaxonomy,
                  "node '" + node.name + "' has parent at the wrong level");
    }
    if (const TaxonomyNode* existing = lookup(node.id)) {
        if (existing->level != node.level || existing->parent != node.parent)
            raise(Errc::InconsistentTaxonomy,
                  "'" + node.name + "' appears under two parents ('" +
                      existing->parent + "' and '" + node.parent + "')");
        return;  // identical re-add
    }
    nodes_.push_back(node);
}

bool Taxonomy::contains(std::string_view id) const {
    return lookup(id) != nullptr;
}

const TaxonomyNode* Taxonomy::find(std::string_view id) const {
    return lookup(id);
}

const TaxonomyNode& Taxonomy::at(std::string_view id) const {
    const TaxonomyNode* node = lookup(id);
    if (node == nullptr)
        raise(Errc::NotFound, "unknown taxonomy node '" + std::string(id) + "'");
    return *node;
}

std::vector<const TaxonomyNode*> Taxonomy::at_level(TaxonomyLevel level) const {
    std::vector<const TaxonomyNode*> result;
    for (const auto& node : nodes_) {
        if (node.level == level) result.push_back(&node);
    }
    std::sort(result.begin(), result.end(),
              [](const TaxonomyNode* a, const TaxonomyNode* b) {
                  return a->name < b->name;
              });
    return result;
}

std::vector<const TaxonomyNode*> Taxonomy::children_of(
    std::string_view id) const {
    std::vector<const TaxonomyNode*> result;
    for (const auto& node : nodes_) {
        if (node.parent == id) result.push_back(&node);
    }
    std::sort(result.begin(), result.end(),
              [](const TaxonomyNode* a, const TaxonomyNode* b) {
                  return a->name < b->name;
              });
    return result;
}

std::vector<const TaxonomyNode*> Taxonomy::ordered() const {
    std::vector<const TaxonomyNode*> result;
    for (const TaxonomyNode* big : at_level(TaxonomyLevel::BigArea)) {
        result.push_back(big);
        for (const TaxonomyNode* area : children_of(big->id)) {
            result.push_back(area);
            for (const TaxonomyNode* disc : children_of(area->id)) {
                result.push_back(disc);
            }
        }
    }
    return result;
}

std::string Taxonomy::path(std::string_view id) const {
    if (id == kAllNodeId) return "(all fields)";
    const TaxonomyNode& node = at(id);
    std::string result = node.name;
    const TaxonomyNode* cursor = &node;
    while (!cursor->parent.empty()) {
        cursor = &at(cursor->parent);
        result = cursor->name + " / " + result;
    }
    return result;
}

}  // namespace vcr
