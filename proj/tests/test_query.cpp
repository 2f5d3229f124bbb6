#include <doctest.h>

#include <cmath>

#include "polidiff/errors.hpp"
#include "polidiff/query.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace polidiff;

namespace {

LabeledSegment seg_with(const Taxonomy& tax, std::set<std::string> categories,
                        std::map<std::string, std::set<std::string>> attrs, int index = 0) {
    Segment raw;
    raw.index = index;
    raw.text = "segment";
    for (const auto& c : categories) raw.category_probs[c] = 0.9;
    for (const auto& [attr, values] : attrs)
        for (const auto& v : values) raw.attribute_probs[attr][v] = 0.9;
    return threshold_segment(raw, tax);
}

AnnotatedPolicy policy_of(std::vector<LabeledSegment> segments) {
    AnnotatedPolicy p;
    p.policy_id = "p";
    p.version = "pre";
    for (size_t i = 0; i < segments.size(); ++i) {
        segments[i].source.index = static_cast<int>(i);
        p.segments.push_back(segments[i]);
    }
    return p;
}

}  // namespace

TEST_CASE("catalog carries the 24 queries") {
    QueryCatalog catalog = default_query_catalog();
    CHECK(catalog.queries.size() == 24);
    CHECK(catalog.of_kind(QueryKind::Coverage).size() == 9);
    CHECK(catalog.of_kind(QueryKind::Compliance).size() == 7);
    CHECK(catalog.of_kind(QueryKind::Specificity).size() == 8);
    CHECK(catalog.find("ICO-Q6") != nullptr);
    CHECK(catalog.find("ICO-Q8") == nullptr);
}

TEST_CASE("coverage is existential") {
    Taxonomy tax = default_taxonomy();
    AnnotatedPolicy policy = policy_of({seg_with(tax, {"data-retention"}, {})});
    CHECK(coverage_score(policy, "data-retention", tax) == 1);
    CHECK(coverage_score(policy, "data-security", tax) == 0);
    AnnotatedPolicy empty;
    for (const auto& c : canonical_categories()) CHECK(coverage_score(empty, c, tax) == 0);
    CHECK_THROWS_AS(coverage_score(policy, "no-such-category", tax), Error);
}

TEST_CASE("ICO-Q1: purposes must be concrete") {
    Taxonomy tax = default_taxonomy();
    QueryCatalog catalog = default_query_catalog();
    AnnotatedPolicy good = policy_of({seg_with(
        tax, {"first-party-collection-use"}, {{"purpose", {"advertising"}}})});
    CHECK(ico_query(good, "ICO-Q1", tax, catalog).score == 1.0);

    AnnotatedPolicy unspecified_only = policy_of({seg_with(
        tax, {"first-party-collection-use"}, {{"purpose", {"unspecified"}}})});
    CHECK(ico_query(unspecified_only, "ICO-Q1", tax, catalog).score == 0.0);

    CHECK_THROWS_AS(ico_query(good, "ICO-Q99", tax, catalog), Error);
}

TEST_CASE("ICO-Q6: notified privacy-relevant change") {
    Taxonomy tax = default_taxonomy();
    QueryCatalog catalog = default_query_catalog();
    AnnotatedPolicy policy = policy_of({seg_with(
        tax, {"policy-change"},
        {{"type-of-policy-change", {"privacy-relevant-change"}},
         {"how-notified", {"personal-notice"}}})});
    QueryResult result = ico_query(policy, "ICO-Q6", tax, catalog);
    CHECK(result.score == 1.0);
    CHECK(result.matched == std::vector<int>{0});
}

TEST_CASE("specificity ratio arithmetic") {
    Taxonomy tax = default_taxonomy();
    QueryCatalog catalog = default_query_catalog();
    // |S| = 4, |S_a| = 1 -> 0.75
    AnnotatedPolicy policy = policy_of({
        seg_with(tax, {"first-party-collection-use"},
                 {{"action-first-party", {"collect-on-website"}}}),
        seg_with(tax, {"first-party-collection-use"},
                 {{"action-first-party", {"unspecified"}}}),
        seg_with(tax, {"first-party-collection-use"},
                 {{"action-first-party", {"collect-in-mobile-app"}}}),
        seg_with(tax, {"first-party-collection-use"},
                 {{"action-first-party", {"track-user-on-other-websites"}}}),
    });
    QueryResult result = specificity_query(policy, "SPEC-Q1", tax, catalog);
    REQUIRE(result.score.has_value());
    CHECK(*result.score == doctest::Approx(0.75));
    CHECK(result.matched.size() == 4);
    CHECK(result.aux_segments == std::vector<int>{1});
}

TEST_CASE("SPEC-Q6 purpose coverage over the universe") {
    Taxonomy tax = default_taxonomy();
    QueryCatalog catalog = default_query_catalog();
    AnnotatedPolicy policy = policy_of({seg_with(
        tax, {"first-party-collection-use"},
        {{"purpose", {"advertising", "marketing", "analytics-research"}}})});
    QueryResult result = specificity_query(policy, "SPEC-Q6", tax, catalog);
    REQUIRE(result.score.has_value());
    CHECK(*result.score == doctest::Approx(3.0 / 9.0));
    CHECK(result.aux_purposes.size() == 3);
}

TEST_CASE("SPEC-Q8 retention purpose specificity") {
    Taxonomy tax = default_taxonomy();
    QueryCatalog catalog = default_query_catalog();
    AnnotatedPolicy policy = policy_of({
        seg_with(tax, {"data-retention"}, {{"purpose", {"legal-requirement"}}}),
        seg_with(tax, {"data-retention"}, {{"purpose", {"unspecified"}}}),
    });
    QueryResult result = specificity_query(policy, "SPEC-Q8", tax, catalog);
    REQUIRE(result.score.has_value());
    CHECK(*result.score == doctest::Approx(0.5));
}

TEST_CASE("specificity NotCovered when the filter matches nothing") {
    Taxonomy tax = default_taxonomy();
    QueryCatalog catalog = default_query_catalog();
    AnnotatedPolicy policy = policy_of({seg_with(tax, {"data-security"}, {})});
    for (const char* id : {"SPEC-Q1", "SPEC-Q5", "SPEC-Q6", "SPEC-Q7", "SPEC-Q8"})
        CHECK(specificity_query(policy, id, tax, catalog).not_covered());
}

TEST_CASE("compliance change classification is total and bijective") {
    CHECK(classify_compliance_change(1, 0) == ComplianceCase::Worsened);
    CHECK(classify_compliance_change(0, 0) == ComplianceCase::StillMissing);
    CHECK(classify_compliance_change(1, 1) == ComplianceCase::StillCovered);
    CHECK(classify_compliance_change(0, 1) == ComplianceCase::Improved);
    std::set<ComplianceCase> seen;
    for (int pre : {0, 1})
        for (int post : {0, 1}) seen.insert(classify_compliance_change(pre, post));
    CHECK(seen.size() == 4);
}

TEST_CASE("specificity change classification covers the five cases") {
    using S = SpecificityCase;
    auto nc = std::optional<double>{};
    CHECK(classify_specificity_change(nc, nc) == S::NotCovered);
    CHECK(classify_specificity_change(0.6, 0.6) == S::SameSpecificity);
    CHECK(classify_specificity_change(1.0, 1.0) == S::FullySpecified);
    CHECK(classify_specificity_change(0.8, 0.5) == S::Worse);
    CHECK(classify_specificity_change(0.5, 0.8) == S::Improved);
    CHECK(classify_specificity_change(nc, 0.8) == S::Improved);
    CHECK(classify_specificity_change(0.8, nc) == S::Worse);
}

TEST_CASE("coverage and ICO scores are monotone under added segments") {
    Taxonomy tax = default_taxonomy();
    QueryCatalog catalog = default_query_catalog();
    Rng rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        AnnotatedPolicy policy =
            fixtures::random_policy(rng, tax, "p", "pre", 10);
        AnnotatedPolicy grown = policy;
        LabeledSegment extra = fixtures::random_segment(rng, tax, int(policy.segments.size()));
        grown.segments.push_back(extra);
        for (const Query* q : catalog.of_kind(QueryKind::Coverage)) {
            CHECK(evaluate_query(grown, *q, tax).score.value() >=
                  evaluate_query(policy, *q, tax).score.value());
        }
        for (const Query* q : catalog.of_kind(QueryKind::Compliance)) {
            CHECK(evaluate_query(grown, *q, tax).score.value() >=
                  evaluate_query(policy, *q, tax).score.value());
        }
    }
}

TEST_CASE("SPEC-Q6/Q7 are monotone in added purpose labels") {
    Taxonomy tax = default_taxonomy();
    QueryCatalog catalog = default_query_catalog();
    Rng rng(61);
    for (int trial = 0; trial < 30; ++trial) {
        AnnotatedPolicy policy = fixtures::random_policy(rng, tax, "p", "pre", 12);
        for (const char* id : {"SPEC-Q6", "SPEC-Q7"}) {
            auto before = specificity_query(policy, id, tax, catalog).score;
            AnnotatedPolicy enriched = policy;
            // add one concrete purpose to a random segment
            if (enriched.segments.empty()) continue;
            auto& segment = enriched.segments[rng.below(enriched.segments.size())];
            const auto& universe = tax.purpose_universe();
            segment.attribute_values["purpose"].insert(
                universe[rng.below(universe.size())]);
            auto after = specificity_query(enriched, id, tax, catalog).score;
            if (before.has_value()) {
                REQUIRE(after.has_value());
                CHECK(*after >= *before - 1e-12);
            }
        }
    }
}

TEST_CASE("ratio queries ignore segments outside their filtered set") {
    Taxonomy tax = default_taxonomy();
    QueryCatalog catalog = default_query_catalog();
    Rng rng(67);
    for (int trial = 0; trial < 30; ++trial) {
        AnnotatedPolicy policy = fixtures::random_policy(rng, tax, "p", "pre", 12);
        // a segment with no categories matches no filter
        Segment blank;
        blank.index = static_cast<int>(policy.segments.size());
        blank.text = "nothing labeled here";
        AnnotatedPolicy grown = policy;
        grown.segments.push_back(threshold_segment(blank, tax));
        for (const char* id :
             {"SPEC-Q1", "SPEC-Q2", "SPEC-Q3", "SPEC-Q4", "SPEC-Q5", "SPEC-Q8"}) {
            auto before = specificity_query(policy, id, tax, catalog).score;
            auto after = specificity_query(grown, id, tax, catalog).score;
            CHECK(before.has_value() == after.has_value());
            if (before) CHECK(*before == doctest::Approx(*after).epsilon(1e-12));
        }
    }
}

TEST_CASE("engine equals the brute-force oracle on random fixtures") {
    Taxonomy tax = default_taxonomy();
    QueryCatalog catalog = default_query_catalog();
    auto pairs = fixtures::fixture_policy_pairs(99, 20, tax);
    int mismatches = 0;
    for (const auto& pair : pairs) {
        for (const AnnotatedPolicy* policy : {&pair.pre, &pair.post}) {
            for (const auto& query : catalog.queries) {
                auto engine = evaluate_query(*policy, query, tax).score;
                auto oracle = oracles::brute_force_score(*policy, query.id, tax);
                if (engine.has_value() != oracle.has_value()) ++mismatches;
                else if (engine && std::fabs(*engine - *oracle) > 1e-12) ++mismatches;
            }
        }
    }
    CHECK(mismatches == 0);
}

TEST_CASE("disagreement rate arithmetic") {
    ScoreTable a, b;
    for (int q = 0; q < 10; ++q) {
        std::string id = "Q" + std::to_string(q);
        a["policy"][id] = 1.0;
        b["policy"][id] = (q == 0) ? 0.0 : 1.0;  // one of ten differs
    }
    CHECK(disagreement_rate(a, b) == doctest::Approx(0.1));
    CHECK(disagreement_rate(a, a) == doctest::Approx(0.0));

    ScoreTable c = a, d = a;
    for (int q = 0; q < 10; ++q) d["policy"]["Q" + std::to_string(q)] = 0.0;
    CHECK(disagreement_rate(c, d) == doctest::Approx(1.0));

    // NotCovered vs score counts as differing; rounding to 4 decimals applies
    ScoreTable e = a, f = a;
    f["policy"]["Q0"] = std::nullopt;
    CHECK(disagreement_rate(e, f) == doctest::Approx(0.1));
    f["policy"]["Q0"] = 1.00004;  // rounds to 1.0000
    CHECK(disagreement_rate(e, f) == doctest::Approx(0.0));

    ScoreTable g = a;
    g["other-policy"]["Q0"] = 1.0;
    CHECK_THROWS_AS(disagreement_rate(a, g), Error);
}
