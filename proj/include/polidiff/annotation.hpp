#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "polidiff/taxonomy.hpp"

namespace polidiff {

// A policy chunk with the labeler's raw probabilities.
struct Segment {
    int index = 0;
    std::string text;
    std::map<std::string, double> category_probs;
    std::map<std::string, std::map<std::string, double>> attribute_probs;

    bool operator==(const Segment&) const = default;
};

// A Segment after thresholding: only labels with probability strictly
// greater than 0.5 remain. A segment with an empty category set is kept (it
// preserves indexing) but matches no query filter.
struct LabeledSegment {
    Segment source;
    std::set<std::string> categories;
    std::map<std::string, std::set<std::string>> attribute_values;

    bool has_category(std::string_view name) const {
        return categories.count(std::string(name)) > 0;
    }
    // value set for an attribute; empty set when the attribute is unlabeled
    const std::set<std::string>& values(std::string_view attr) const;

    bool operator==(const LabeledSegment&) const = default;
};

struct AnnotatedPolicy {
    std::string policy_id;
    std::string version;  // "pre" | "post"
    std::vector<LabeledSegment> segments;

    bool operator==(const AnnotatedPolicy&) const = default;
};

// > 0.5 strict; rejects labels unknown to the taxonomy (UnknownLabel).
LabeledSegment threshold_segment(const Segment& segment, const Taxonomy& taxonomy);

AnnotatedPolicy parse_annotations_json(std::string_view json_text, const Taxonomy& taxonomy);
AnnotatedPolicy load_annotations(const std::string& path, const Taxonomy& taxonomy);

std::string annotations_to_json(const AnnotatedPolicy& policy);
void save_annotations(const AnnotatedPolicy& policy, const std::string& path);

// Splits policy text into segments: blank-line paragraph boundaries, with
// any paragraph over 10 sentences split into runs of at most 10. The
// concatenation of the result equals the input modulo whitespace.
// Errors: EmptyInput.
std::vector<std::string> segment_text(std::string_view policy_text);

}  // namespace polidiff
