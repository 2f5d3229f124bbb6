#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polidiff/util.hpp"

namespace polidiff {

// Unit-cost edit distance over Unicode scalar values.
std::size_t levenshtein_distance(std::string_view a, std::string_view b);

// 1 - d/max(|a|,|b|); both empty -> 1.0.
double similarity_ratio(std::string_view a, std::string_view b);

constexpr double kDefaultSignificanceThreshold = 0.95;

// A change is significant when the pair similarity is <= threshold.
bool is_significant_change(double ratio, double threshold = kDefaultSignificanceThreshold);

struct SimilarityPoint {
    YearMonth month;                 // month of the later snapshot
    double ratio_to_previous = 1.0;  // similarity to the previous extracted snapshot
};

struct SimilaritySeries {
    std::string policy_id;
    std::vector<SimilarityPoint> points;  // ordered strictly by month
};

// One extracted snapshot as change detection sees it.
struct TimelineEntry {
    YearMonth month;
    std::string text;
};

SimilaritySeries build_similarity_series(const std::string& policy_id,
                                         const std::vector<TimelineEntry>& timeline);

// The significant-change month closest to the pivot (whole-month distance);
// ties prefer the later month. nullopt when nothing significant changed.
std::optional<YearMonth> key_change_date(const SimilaritySeries& series, YearMonth pivot,
                                         double threshold = kDefaultSignificanceThreshold);

// Which stable version to pick when several precede the key change.
enum class StablePick { Latest, Earliest };

struct SnapshotPair {
    std::string policy_id;
    YearMonth pre_month{};
    YearMonth post_month{};
    std::optional<YearMonth> key_change;
    bool unchanged = false;
};

// pre: the stable version before the key change (similarity to its own
// predecessor above the threshold; the first snapshot counts as stable),
// with a month before the pivot month; falls back to the latest pre-pivot
// snapshot when no stable one exists. post: the most recent snapshot after
// the pivot month. With no significant change anywhere, pre/post are
// latest-before and latest-overall with unchanged = true.
// Errors: NoPair("no-pre") / NoPair("no-post").
SnapshotPair select_pair(const std::string& policy_id,
                         const std::vector<TimelineEntry>& timeline, YearMonth pivot,
                         double threshold = kDefaultSignificanceThreshold,
                         StablePick stable_pick = StablePick::Latest);

}  // namespace polidiff
