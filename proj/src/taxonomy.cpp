#include "polidiff/taxonomy.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "polidiff/errors.hpp"
#include "polidiff/util.hpp"

namespace polidiff {

using nlohmann::ordered_json;

const std::vector<std::string>& canonical_categories() {
    static const std::vector<std::string> kCategories = {
        "first-party-collection-use",
        "third-party-sharing-collection",
        "user-choice-control",
        "international-specific-audiences",
        "data-security",
        "user-access-edit-deletion",
        "data-retention",
        "policy-change",
        "privacy-contact-information",
    };
    return kCategories;
}

const std::set<std::string>& action_source_set() {
    static const std::set<std::string> kActions = {
        "collect-from-user-on-other-websites",
        "receive-from-other-parts-of-company-affiliates",
        "receive-from-other-service-third-party-named",
        "receive-from-other-service-third-party-unnamed",
        "track-user-on-other-websites",
    };
    return kActions;
}

namespace {

// Attributes every query references; load fails if any is absent.
const std::vector<std::string> kRequiredAttributes = {
    "purpose",        "info-type",       "action-first-party",
    "action-third-party", "third-party-entity", "choice-type",
    "choice-scope",   "access-type",     "type-of-policy-change",
    "how-notified",
};

}  // namespace

bool AttributeDef::contains(std::string_view value) const {
    if (has_unspecified && value == "unspecified") return true;
    return std::find(values.begin(), values.end(), value) != values.end();
}

bool Taxonomy::has_category(std::string_view name) const {
    return categories_.count(std::string(name)) > 0;
}

const AttributeDef* Taxonomy::find_attribute(std::string_view name) const {
    auto it = attributes_.find(std::string(name));
    return it == attributes_.end() ? nullptr : &it->second;
}

std::string Taxonomy::resolve(std::string_view raw) const {
    std::string id = canonical_identifier(raw);
    auto it = aliases_.find(id);
    return it == aliases_.end() ? id : it->second;
}

std::string Taxonomy::to_json() const {
    ordered_json doc;
    doc["categories"] = ordered_json::array();
    // canonical order first, extras (none normally) after
    for (const auto& c : canonical_categories())
        if (categories_.count(c)) doc["categories"].push_back(c);
    for (const auto& c : categories_)
        if (std::find(canonical_categories().begin(), canonical_categories().end(), c) ==
            canonical_categories().end())
            doc["categories"].push_back(c);
    doc["attributes"] = ordered_json::object();
    for (const auto& [name, def] : attributes_) {
        doc["attributes"][name] = {{"values", def.values},
                                   {"has_unspecified", def.has_unspecified}};
    }
    doc["purpose_universe"] = purpose_universe_;
    doc["aliases"] = aliases_;
    return doc.dump(2);
}

Taxonomy load_taxonomy_from_json(std::string_view json_text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::SchemaError, std::string("taxonomy config: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("categories") || !doc.contains("attributes") ||
        !doc.contains("purpose_universe"))
        throw Error(ErrorKind::SchemaError,
                    "taxonomy config requires categories, attributes, purpose_universe");

    Taxonomy tax;

    if (doc.contains("aliases")) {
        for (auto& [k, v] : doc["aliases"].items())
            tax.aliases_[canonical_identifier(k)] = canonical_identifier(v.get<std::string>());
    }

    for (const auto& c : doc["categories"]) {
        std::string id = canonical_identifier(c.get<std::string>());
        if (!tax.categories_.insert(id).second)
            throw Error(ErrorKind::DuplicateValue, "duplicate category '" + id + "'", id);
    }
    for (const auto& c : canonical_categories())
        if (!tax.categories_.count(c))
            throw Error(ErrorKind::MissingCategory, "category '" + c + "' not declared", c);

    for (auto& [raw_name, attr_doc] : doc["attributes"].items()) {
        std::string name = canonical_identifier(raw_name);
        AttributeDef def;
        if (!attr_doc.is_object() || !attr_doc.contains("values"))
            throw Error(ErrorKind::SchemaError, "attribute '" + name + "' needs a values list");
        for (const auto& v : attr_doc["values"]) {
            std::string id = canonical_identifier(v.get<std::string>());
            if (id == "unspecified")
                throw Error(ErrorKind::DuplicateValue,
                            "'unspecified' is implied by has_unspecified, not listed", name);
            if (std::find(def.values.begin(), def.values.end(), id) != def.values.end())
                throw Error(ErrorKind::DuplicateValue,
                            "duplicate value '" + id + "' under attribute '" + name + "'", id);
            def.values.push_back(id);
        }
        def.has_unspecified = attr_doc.value("has_unspecified", false);
        tax.attributes_[name] = std::move(def);
    }
    for (const auto& a : kRequiredAttributes)
        if (!tax.attributes_.count(a))
            throw Error(ErrorKind::MissingAttribute, "attribute '" + a + "' not declared", a);

    std::set<std::string> seen_purposes;
    for (const auto& p : doc["purpose_universe"]) {
        std::string id = canonical_identifier(p.get<std::string>());
        if (id == "unspecified")
            throw Error(ErrorKind::SchemaError, "purpose_universe must not include 'unspecified'");
        if (!seen_purposes.insert(id).second)
            throw Error(ErrorKind::DuplicateValue, "duplicate purpose '" + id + "'", id);
        tax.purpose_universe_.push_back(id);
    }
    if (tax.purpose_universe_.empty())
        throw Error(ErrorKind::SchemaError, "purpose_universe must not be empty");

    // S_actions must be declared exactly as the canonical constant.
    const AttributeDef& afp = tax.attributes_.at("action-first-party");
    for (const auto& a : action_source_set())
        if (!afp.contains(a))
            throw Error(ErrorKind::MissingAttribute,
                        "action-first-party is missing source action '" + a + "'", a);

    return tax;
}

Taxonomy load_taxonomy(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::IoError, "cannot open taxonomy config '" + path + "'", path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_taxonomy_from_json(buf.str());
}

Taxonomy default_taxonomy() { return load_taxonomy_from_json(default_taxonomy_json()); }

}  // namespace polidiff
