// Deterministic fixture builders shared by the unit and acceptance suites.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polidiff/annotation.hpp"
#include "polidiff/taxonomy.hpp"
#include "polidiff/util.hpp"

namespace fixtures {

using polidiff::AnnotatedPolicy;
using polidiff::LabeledSegment;
using polidiff::Rng;
using polidiff::Segment;
using polidiff::Taxonomy;

// random labeled segment: every category with probability cat_p, every
// attribute value with probability val_p, plus occasional lone "unspecified"
inline LabeledSegment random_segment(Rng& rng, const Taxonomy& taxonomy, int index) {
    Segment segment;
    segment.index = index;
    segment.text = "fixture segment " + std::to_string(index) + ".";
    for (const auto& category : taxonomy.categories())
        if (rng.real() < 0.25) segment.category_probs[category] = 0.6 + 0.4 * rng.real();
        else segment.category_probs[category] = 0.4 * rng.real();
    for (const auto& [attr, def] : taxonomy.attributes()) {
        double mode = rng.real();
        if (mode < 0.35) continue;  // attribute silent
        if (mode < 0.55 && def.has_unspecified) {
            segment.attribute_probs[attr]["unspecified"] = 0.6 + 0.4 * rng.real();
            continue;
        }
        for (const auto& value : def.values)
            if (rng.real() < 0.18)
                segment.attribute_probs[attr][value] = 0.55 + 0.45 * rng.real();
    }
    return threshold_segment(segment, taxonomy);
}

inline AnnotatedPolicy random_policy(Rng& rng, const Taxonomy& taxonomy,
                                     const std::string& policy_id,
                                     const std::string& version, int max_segments) {
    AnnotatedPolicy policy;
    policy.policy_id = policy_id;
    policy.version = version;
    int n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_segments)));
    for (int i = 0; i < n; ++i)
        policy.segments.push_back(random_segment(rng, taxonomy, i));
    return policy;
}

struct FixturePair {
    AnnotatedPolicy pre;
    AnnotatedPolicy post;
};

inline std::vector<FixturePair> fixture_policy_pairs(std::uint64_t seed, int count,
                                                     const Taxonomy& taxonomy,
                                                     int max_segments = 30) {
    Rng rng(seed);
    std::vector<FixturePair> pairs;
    for (int i = 0; i < count; ++i) {
        char id[32];
        std::snprintf(id, sizeof id, "policy-%03d", i);
        pairs.push_back({random_policy(rng, taxonomy, id, "pre", max_segments),
                         random_policy(rng, taxonomy, id, "post", max_segments)});
    }
    return pairs;
}

}  // namespace fixtures
