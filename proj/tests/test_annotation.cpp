#include <doctest.h>

#include <filesystem>

#include "polidiff/annotation.hpp"
#include "polidiff/errors.hpp"
#include "polidiff/store.hpp"
#include "polidiff/util.hpp"
#include "support/fixtures.hpp"

using namespace polidiff;

namespace {

Segment make_segment(int index) {
    Segment s;
    s.index = index;
    s.text = "We collect data.";
    return s;
}

}  // namespace

TEST_CASE("thresholding keeps only probabilities strictly above one half") {
    Taxonomy tax = default_taxonomy();
    Segment s = make_segment(0);
    s.category_probs["first-party-collection-use"] = 0.9;
    s.category_probs["data-retention"] = 0.3;
    s.attribute_probs["purpose"]["advertising"] = 0.51;
    s.attribute_probs["purpose"]["marketing"] = 0.5;  // exactly 0.5: excluded
    LabeledSegment labeled = threshold_segment(s, tax);
    CHECK(labeled.categories == std::set<std::string>{"first-party-collection-use"});
    CHECK(labeled.values("purpose") == std::set<std::string>{"advertising"});
}

TEST_CASE("unknown attribute value is rejected with its name") {
    Taxonomy tax = default_taxonomy();
    Segment s = make_segment(0);
    s.attribute_probs["purpose"]["teleportation"] = 0.9;
    try {
        threshold_segment(s, tax);
        FAIL("expected UnknownLabel");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UnknownLabel);
        CHECK(e.subject() == "teleportation");
    }
}

TEST_CASE("thresholding is monotone: raising a probability never removes labels") {
    Taxonomy tax = default_taxonomy();
    Rng rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        Segment s = make_segment(0);
        for (const auto& c : tax.categories())
            s.category_probs[c] = rng.real();
        LabeledSegment before = threshold_segment(s, tax);
        // raise one random category's probability
        auto it = s.category_probs.begin();
        std::advance(it, rng.below(s.category_probs.size()));
        it->second = std::min(1.0, it->second + 0.5);
        LabeledSegment after = threshold_segment(s, tax);
        for (const auto& c : before.categories) CHECK(after.categories.count(c));
    }
}

TEST_CASE("annotation files parse, validate, and round-trip") {
    Taxonomy tax = default_taxonomy();
    const char* doc = R"({
      "policy_id": "example.com-privacy",
      "version": "pre",
      "segments": [
        {"text": "We collect your email address for marketing.",
         "categories": {"first-party-collection-use": 0.93},
         "attributes": {"purpose": {"marketing": 0.88, "advertising": 0.41},
                        "info-type": {"contact": 0.77}}},
        {"text": "We share data with advertisers.",
         "categories": {"third-party-sharing-collection": 0.81},
         "attributes": {"third-party-entity": {"unnamed-third-party": 0.66}}}
      ]
    })";
    AnnotatedPolicy policy = parse_annotations_json(doc, tax);
    CHECK(policy.policy_id == "example.com-privacy");
    CHECK(policy.segments.size() == 2);
    CHECK(policy.segments[0].values("purpose") == std::set<std::string>{"marketing"});
    CHECK(policy.segments[1].has_category("third-party-sharing-collection"));

    auto tmp = std::filesystem::temp_directory_path() / "polidiff-ann-roundtrip.json";
    save_annotations(policy, tmp.string());
    AnnotatedPolicy reloaded = load_annotations(tmp.string(), tax);
    CHECK(reloaded == policy);
    std::filesystem::remove(tmp);
}

TEST_CASE("malformed documents raise SchemaError") {
    Taxonomy tax = default_taxonomy();
    CHECK_THROWS_AS(parse_annotations_json("{not json", tax), Error);
    // probability out of range
    const char* bad = R"({"policy_id": "x", "version": "pre",
        "segments": [{"text": "t", "categories": {"data-security": 1.2}}]})";
    try {
        parse_annotations_json(bad, tax);
        FAIL("expected SchemaError");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::SchemaError);
    }
}

TEST_CASE("segment_text splits on blank lines") {
    auto segments = segment_text("First paragraph here.\n\nSecond paragraph here.");
    CHECK(segments.size() == 2);
    CHECK(segments[0] == "First paragraph here.");
    segments = segment_text("One sentence only.");
    CHECK(segments.size() == 1);
    CHECK_THROWS_AS(segment_text("   \n \n"), Error);
}

TEST_CASE("overlong paragraphs split into runs of at most ten sentences") {
    // 12 paragraphs; paragraph 5 carries 12 sentences -> splits in two
    std::string text;
    for (int p = 0; p < 12; ++p) {
        if (p == 5) {
            for (int s = 0; s < 12; ++s)
                text += "Sentence number " + std::to_string(s) + " is here. ";
        } else {
            text += "Paragraph " + std::to_string(p) + " has a sentence.";
        }
        text += "\n\n";
    }
    auto segments = segment_text(text);
    CHECK(segments.size() == 13);
}

TEST_CASE("segmentation preserves the text modulo whitespace") {
    Rng rng(11);
    const char* words[] = {"data", "policy", "users", "collect", "share",
                           "retain", "process", "consent"};
    for (int trial = 0; trial < 100; ++trial) {
        std::string text;
        int paragraphs = 1 + int(rng.below(6));
        for (int p = 0; p < paragraphs; ++p) {
            int sentences = 1 + int(rng.below(14));
            for (int s = 0; s < sentences; ++s) {
                int len = 3 + int(rng.below(6));
                for (int w = 0; w < len; ++w) {
                    text += words[rng.below(8)];
                    text += (w + 1 < len) ? " " : "";
                }
                text += ". ";
            }
            text += "\n\n";
        }
        std::string joined;
        for (const auto& seg : segment_text(text)) {
            joined += seg;
            joined += ' ';
        }
        CHECK(normalize_whitespace(joined) == normalize_whitespace(text));
    }
}
