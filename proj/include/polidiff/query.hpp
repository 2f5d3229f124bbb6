#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polidiff/annotation.hpp"
#include "polidiff/taxonomy.hpp"

namespace polidiff {

enum class QueryKind { Coverage, Compliance, Specificity };

const char* query_kind_name(QueryKind kind);

// First-order filter over a labeled segment, built from the query catalog.
struct Predicate {
    enum class Kind {
        All,             // conjunction of children
        Any,             // disjunction of children
        HasCategory,     // value in categories(s)
        CategoryAny,     // categories(s) intersects values
        AttrNonEmpty,    // attr(s) != {}
        AttrContains,    // value in attr(s)
        AttrExcludes,    // value not in attr(s)
        AttrIntersects,  // attr(s) intersects values
    };
    Kind kind = Kind::All;
    std::string attr;
    std::string value;
    std::vector<std::string> values;
    std::vector<Predicate> children;

    bool eval(const LabeledSegment& segment) const;
};

// Maps the matched set S (plus taxonomy) to a score.
struct Scorer {
    enum class Kind {
        NonEmpty,          // 1 iff |S| > 0 (coverage, compliance)
        UnspecifiedRatio,  // 1 - |S_a|/|S|; S_a = {s : attr(s) == {unspecified}}
        PurposeCoverage,   // |P_s|/|P| over the purpose universe
    };
    Kind kind = Kind::NonEmpty;
    std::string attr;
    // Q5 counts attribute-silent segments in S_a as well.
    bool count_empty_in_aux = false;
};

struct Query {
    std::string id;
    QueryKind kind = QueryKind::Coverage;
    std::string description;
    std::string gdpr_ref;  // reproduced as printed in the source checklist
    Predicate filter;
    Scorer scorer;
};

struct QueryCatalog {
    std::vector<Query> queries;

    const Query* find(std::string_view id) const;
    std::vector<const Query*> of_kind(QueryKind kind) const;
};

QueryCatalog load_query_catalog_from_json(std::string_view json_text);
QueryCatalog load_query_catalog(const std::string& path);
std::string_view default_query_catalog_json();
QueryCatalog default_query_catalog();

// score is nullopt for NotCovered (specificity queries with an empty
// filtered set). Coverage/compliance scores are always 0 or 1.
struct QueryResult {
    std::string query_id;
    std::optional<double> score;
    std::vector<int> matched;                // S, as segment indices
    std::vector<int> aux_segments;           // S_a
    std::vector<std::string> aux_purposes;   // P_s

    bool not_covered() const { return !score.has_value(); }
};

QueryResult evaluate_query(const AnnotatedPolicy& policy, const Query& query,
                           const Taxonomy& taxonomy);

// Checklist entry points. Errors: UnknownCategory / UnknownQuery.
int coverage_score(const AnnotatedPolicy& policy, std::string_view category,
                   const Taxonomy& taxonomy);
QueryResult ico_query(const AnnotatedPolicy& policy, std::string_view id,
                      const Taxonomy& taxonomy, const QueryCatalog& catalog);
QueryResult specificity_query(const AnnotatedPolicy& policy, std::string_view id,
                              const Taxonomy& taxonomy, const QueryCatalog& catalog);

// ---- pre/post change classification --------------------------------------

enum class ComplianceCase { Worsened, StillMissing, StillCovered, Improved };
enum class SpecificityCase { NotCovered, SameSpecificity, FullySpecified, Worse, Improved };

const char* compliance_case_name(ComplianceCase c);
const char* specificity_case_name(SpecificityCase c);

ComplianceCase classify_compliance_change(int pre_score, int post_score);
SpecificityCase classify_specificity_change(std::optional<double> pre_score,
                                            std::optional<double> post_score);

// ---- disagreement rate ----------------------------------------------------

// policy id -> query id -> score (nullopt = NotCovered)
using ScoreTable = std::map<std::string, std::map<std::string, std::optional<double>>>;

// Fraction of queries with differing scores per policy, averaged over
// policies. Scores differ when rounded-to-4-decimals values differ or the
// NotCovered status mismatches. Errors: ShapeMismatch.
double disagreement_rate(const ScoreTable& results_a, const ScoreTable& results_b);

}  // namespace polidiff
