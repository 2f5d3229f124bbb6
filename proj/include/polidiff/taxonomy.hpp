#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace polidiff {

// The nine high-level privacy categories every loaded taxonomy must declare,
// in their canonical report order.
const std::vector<std::string>& canonical_categories();

// The five action-first-party values marking data obtained other than
// directly from the user. Fixed; a loaded taxonomy must carry exactly this set.
const std::set<std::string>& action_source_set();

struct AttributeDef {
    std::vector<std::string> values;  // declaration order preserved
    bool has_unspecified = false;

    bool contains(std::string_view value) const;
    bool operator==(const AttributeDef&) const = default;
};

// Immutable after load; safe to share across threads.
class Taxonomy {
public:
    const std::set<std::string>& categories() const { return categories_; }
    const std::map<std::string, AttributeDef>& attributes() const { return attributes_; }
    // P: the ordered non-sentinel purpose values.
    const std::vector<std::string>& purpose_universe() const { return purpose_universe_; }

    bool has_category(std::string_view name) const;
    const AttributeDef* find_attribute(std::string_view name) const;

    // Maps a raw label through the alias table and canonical normalization.
    std::string resolve(std::string_view raw) const;

    std::string to_json() const;

    bool operator==(const Taxonomy&) const = default;

    friend Taxonomy load_taxonomy_from_json(std::string_view json_text);

private:
    std::set<std::string> categories_;
    std::map<std::string, AttributeDef> attributes_;
    std::vector<std::string> purpose_universe_;
    std::map<std::string, std::string> aliases_;
};

// Errors: MissingCategory / MissingAttribute / DuplicateValue, each naming
// the offending identifier; SchemaError for malformed documents.
Taxonomy load_taxonomy(const std::string& path);
Taxonomy load_taxonomy_from_json(std::string_view json_text);

// The bundled default config (OPP-115-derived attribute values).
std::string_view default_taxonomy_json();
Taxonomy default_taxonomy();

}  // namespace polidiff
