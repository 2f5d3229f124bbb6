#include "polidiff/query.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "polidiff/errors.hpp"

namespace polidiff {

using nlohmann::ordered_json;

const char* query_kind_name(QueryKind kind) {
    switch (kind) {
        case QueryKind::Coverage: return "coverage";
        case QueryKind::Compliance: return "compliance";
        case QueryKind::Specificity: return "specificity";
    }
    return "?";
}

bool Predicate::eval(const LabeledSegment& segment) const {
    switch (kind) {
        case Kind::All:
            return std::all_of(children.begin(), children.end(),
                               [&](const Predicate& p) { return p.eval(segment); });
        case Kind::Any:
            return std::any_of(children.begin(), children.end(),
                               [&](const Predicate& p) { return p.eval(segment); });
        case Kind::HasCategory:
            return segment.has_category(value);
        case Kind::CategoryAny:
            return std::any_of(values.begin(), values.end(), [&](const std::string& v) {
                return segment.has_category(v);
            });
        case Kind::AttrNonEmpty:
            return !segment.values(attr).empty();
        case Kind::AttrContains:
            return segment.values(attr).count(value) > 0;
        case Kind::AttrExcludes:
            return segment.values(attr).count(value) == 0;
        case Kind::AttrIntersects: {
            const auto& have = segment.values(attr);
            return std::any_of(values.begin(), values.end(), [&](const std::string& v) {
                return have.count(v) > 0;
            });
        }
    }
    return false;
}

namespace {

std::vector<std::string> expand_values(const ordered_json& node) {
    if (node.contains("values_ref")) {
        std::string ref = node["values_ref"].get<std::string>();
        if (ref != "action-source-set")
            throw Error(ErrorKind::SchemaError, "unknown values_ref '" + ref + "'");
        const auto& set = action_source_set();
        return {set.begin(), set.end()};
    }
    if (!node.contains("values"))
        throw Error(ErrorKind::SchemaError, "expected values or values_ref");
    return node["values"].get<std::vector<std::string>>();
}

Predicate parse_predicate(const ordered_json& node) {
    if (!node.is_object() || node.size() != 1)
        throw Error(ErrorKind::SchemaError, "predicate must be a single-key object");
    Predicate p;
    const std::string& key = node.begin().key();
    const ordered_json& body = node.begin().value();
    if (key == "all" || key == "any") {
        p.kind = (key == "all") ? Predicate::Kind::All : Predicate::Kind::Any;
        for (const auto& child : body) p.children.push_back(parse_predicate(child));
    } else if (key == "category") {
        p.kind = Predicate::Kind::HasCategory;
        p.value = body.get<std::string>();
    } else if (key == "category_any") {
        p.kind = Predicate::Kind::CategoryAny;
        p.values = body.get<std::vector<std::string>>();
    } else if (key == "attr_nonempty") {
        p.kind = Predicate::Kind::AttrNonEmpty;
        p.attr = body.get<std::string>();
    } else if (key == "attr_contains" || key == "attr_excludes") {
        p.kind = (key == "attr_contains") ? Predicate::Kind::AttrContains
                                          : Predicate::Kind::AttrExcludes;
        p.attr = body.at("attr").get<std::string>();
        p.value = body.at("value").get<std::string>();
    } else if (key == "attr_intersects") {
        p.kind = Predicate::Kind::AttrIntersects;
        p.attr = body.at("attr").get<std::string>();
        p.values = expand_values(body);
    } else {
        throw Error(ErrorKind::SchemaError, "unknown predicate '" + key + "'");
    }
    return p;
}

Scorer parse_scorer(const ordered_json& node) {
    Scorer s;
    if (node.is_string()) {
        if (node.get<std::string>() != "nonempty")
            throw Error(ErrorKind::SchemaError, "unknown scorer '" + node.get<std::string>() + "'");
        s.kind = Scorer::Kind::NonEmpty;
        return s;
    }
    if (!node.is_object() || node.size() != 1)
        throw Error(ErrorKind::SchemaError, "scorer must be a name or single-key object");
    const std::string& key = node.begin().key();
    const ordered_json& body = node.begin().value();
    if (key == "unspecified_ratio") {
        s.kind = Scorer::Kind::UnspecifiedRatio;
        s.attr = body.at("attr").get<std::string>();
        s.count_empty_in_aux = body.value("count_empty", false);
    } else if (key == "purpose_coverage") {
        s.kind = Scorer::Kind::PurposeCoverage;
        s.attr = body.at("attr").get<std::string>();
    } else {
        throw Error(ErrorKind::SchemaError, "unknown scorer '" + key + "'");
    }
    return s;
}

QueryKind parse_kind(const std::string& name) {
    if (name == "coverage") return QueryKind::Coverage;
    if (name == "compliance") return QueryKind::Compliance;
    if (name == "specificity") return QueryKind::Specificity;
    throw Error(ErrorKind::SchemaError, "unknown query kind '" + name + "'");
}

}  // namespace

const Query* QueryCatalog::find(std::string_view id) const {
    for (const auto& q : queries)
        if (q.id == id) return &q;
    return nullptr;
}

std::vector<const Query*> QueryCatalog::of_kind(QueryKind kind) const {
    std::vector<const Query*> out;
    for (const auto& q : queries)
        if (q.kind == kind) out.push_back(&q);
    return out;
}

QueryCatalog load_query_catalog_from_json(std::string_view json_text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::SchemaError, std::string("query catalog: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("queries"))
        throw Error(ErrorKind::SchemaError, "query catalog requires a queries list");
    QueryCatalog catalog;
    for (const auto& q_doc : doc["queries"]) {
        Query q;
        q.id = q_doc.at("id").get<std::string>();
        if (catalog.find(q.id))
            throw Error(ErrorKind::DuplicateValue, "duplicate query id '" + q.id + "'", q.id);
        q.kind = parse_kind(q_doc.at("kind").get<std::string>());
        q.description = q_doc.value("description", "");
        q.gdpr_ref = q_doc.value("gdpr_ref", "");
        q.filter = parse_predicate(q_doc.at("filter"));
        q.scorer = parse_scorer(q_doc.at("scorer"));
        if (q.kind != QueryKind::Specificity && q.scorer.kind != Scorer::Kind::NonEmpty)
            throw Error(ErrorKind::SchemaError,
                        q.id + ": coverage/compliance queries must score nonempty");
        catalog.queries.push_back(std::move(q));
    }
    return catalog;
}

QueryCatalog load_query_catalog(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::IoError, "cannot open query catalog '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_query_catalog_from_json(buf.str());
}

QueryCatalog default_query_catalog() {
    return load_query_catalog_from_json(default_query_catalog_json());
}

QueryResult evaluate_query(const AnnotatedPolicy& policy, const Query& query,
                           const Taxonomy& taxonomy) {
    QueryResult result;
    result.query_id = query.id;

    std::vector<const LabeledSegment*> matched;
    for (const auto& segment : policy.segments) {
        if (query.filter.eval(segment)) {
            matched.push_back(&segment);
            result.matched.push_back(segment.source.index);
        }
    }

    switch (query.scorer.kind) {
        case Scorer::Kind::NonEmpty:
            result.score = matched.empty() ? 0.0 : 1.0;
            break;
        case Scorer::Kind::UnspecifiedRatio: {
            if (matched.empty()) break;  // NotCovered
            int in_aux = 0;
            for (const auto* segment : matched) {
                const auto& vals = segment->values(query.scorer.attr);
                bool only_unspecified = vals.size() == 1 && vals.count("unspecified") > 0;
                bool silent = query.scorer.count_empty_in_aux && vals.empty();
                if (only_unspecified || silent) {
                    ++in_aux;
                    result.aux_segments.push_back(segment->source.index);
                }
            }
            result.score = 1.0 - static_cast<double>(in_aux) /
                                     static_cast<double>(matched.size());
            break;
        }
        case Scorer::Kind::PurposeCoverage: {
            if (matched.empty()) break;  // NotCovered
            for (const auto& p : taxonomy.purpose_universe()) {
                bool stated = std::any_of(matched.begin(), matched.end(),
                                          [&](const LabeledSegment* s) {
                                              return s->values(query.scorer.attr).count(p) > 0;
                                          });
                if (stated) result.aux_purposes.push_back(p);
            }
            result.score = static_cast<double>(result.aux_purposes.size()) /
                           static_cast<double>(taxonomy.purpose_universe().size());
            break;
        }
    }
    return result;
}

int coverage_score(const AnnotatedPolicy& policy, std::string_view category,
                   const Taxonomy& taxonomy) {
    std::string id = taxonomy.resolve(category);
    if (!taxonomy.has_category(id))
        throw Error(ErrorKind::UnknownCategory, "unknown category '" + id + "'", id);
    for (const auto& segment : policy.segments)
        if (segment.has_category(id)) return 1;
    return 0;
}

namespace {

QueryResult run_of_kind(const AnnotatedPolicy& policy, std::string_view id,
                        const Taxonomy& taxonomy, const QueryCatalog& catalog,
                        QueryKind kind) {
    const Query* query = catalog.find(id);
    if (!query || query->kind != kind)
        throw Error(ErrorKind::UnknownQuery,
                    "no " + std::string(query_kind_name(kind)) + " query '" +
                        std::string(id) + "'",
                    std::string(id));
    return evaluate_query(policy, *query, taxonomy);
}

}  // namespace

QueryResult ico_query(const AnnotatedPolicy& policy, std::string_view id,
                      const Taxonomy& taxonomy, const QueryCatalog& catalog) {
    return run_of_kind(policy, id, taxonomy, catalog, QueryKind::Compliance);
}

QueryResult specificity_query(const AnnotatedPolicy& policy, std::string_view id,
                              const Taxonomy& taxonomy, const QueryCatalog& catalog) {
    return run_of_kind(policy, id, taxonomy, catalog, QueryKind::Specificity);
}

const char* compliance_case_name(ComplianceCase c) {
    switch (c) {
        case ComplianceCase::Worsened: return "worsened";
        case ComplianceCase::StillMissing: return "still-missing";
        case ComplianceCase::StillCovered: return "still-covered";
        case ComplianceCase::Improved: return "improved";
    }
    return "?";
}

const char* specificity_case_name(SpecificityCase c) {
    switch (c) {
        case SpecificityCase::NotCovered: return "not-covered";
        case SpecificityCase::SameSpecificity: return "same-specificity";
        case SpecificityCase::FullySpecified: return "fully-specified";
        case SpecificityCase::Worse: return "worse";
        case SpecificityCase::Improved: return "improved";
    }
    return "?";
}

ComplianceCase classify_compliance_change(int pre_score, int post_score) {
    if (pre_score == 1 && post_score == 0) return ComplianceCase::Worsened;
    if (pre_score == 0 && post_score == 0) return ComplianceCase::StillMissing;
    if (pre_score == 1 && post_score == 1) return ComplianceCase::StillCovered;
    return ComplianceCase::Improved;
}

SpecificityCase classify_specificity_change(std::optional<double> pre_score,
                                            std::optional<double> post_score) {
    constexpr double kEps = 1e-9;
    if (!pre_score && !post_score) return SpecificityCase::NotCovered;
    if (pre_score && !post_score) return SpecificityCase::Worse;
    if (!pre_score && post_score) return SpecificityCase::Improved;
    double pre = *pre_score, post = *post_score;
    if (std::fabs(pre - post) <= kEps) {
        if (std::fabs(pre - 1.0) <= kEps) return SpecificityCase::FullySpecified;
        return SpecificityCase::SameSpecificity;
    }
    return post < pre ? SpecificityCase::Worse : SpecificityCase::Improved;
}

double disagreement_rate(const ScoreTable& results_a, const ScoreTable& results_b) {
    if (results_a.size() != results_b.size())
        throw Error(ErrorKind::ShapeMismatch, "policy sets differ in size");
    if (results_a.empty())
        throw Error(ErrorKind::ShapeMismatch, "empty result tables");

    auto rounded = [](double v) { return std::llround(v * 10000.0); };

    double rate_sum = 0.0;
    for (const auto& [policy_id, queries_a] : results_a) {
        auto it = results_b.find(policy_id);
        if (it == results_b.end())
            throw Error(ErrorKind::ShapeMismatch, "policy '" + policy_id + "' missing on one side",
                        policy_id);
        const auto& queries_b = it->second;
        if (queries_a.size() != queries_b.size() || queries_a.empty())
            throw Error(ErrorKind::ShapeMismatch,
                        "query sets differ for policy '" + policy_id + "'", policy_id);
        int differing = 0;
        for (const auto& [query_id, score_a] : queries_a) {
            auto qit = queries_b.find(query_id);
            if (qit == queries_b.end())
                throw Error(ErrorKind::ShapeMismatch,
                            "query '" + query_id + "' missing on one side", query_id);
            const auto& score_b = qit->second;
            bool differ;
            if (score_a.has_value() != score_b.has_value())
                differ = true;
            else if (!score_a.has_value())
                differ = false;
            else
                differ = rounded(*score_a) != rounded(*score_b);
            if (differ) ++differing;
        }
        rate_sum += static_cast<double>(differing) / static_cast<double>(queries_a.size());
    }
    return rate_sum / static_cast<double>(results_a.size());
}

}  // namespace polidiff
