#include "polidiff/changedetect.hpp"

#include <algorithm>
#include <cstdlib>

#include "polidiff/errors.hpp"

namespace polidiff {

std::size_t levenshtein_distance(std::string_view a, std::string_view b) {
    std::vector<char32_t> x = utf8_decode(a);
    std::vector<char32_t> y = utf8_decode(b);

    // shared prefix/suffix contributes nothing
    size_t lo = 0;
    while (lo < x.size() && lo < y.size() && x[lo] == y[lo]) ++lo;
    size_t xn = x.size(), yn = y.size();
    while (xn > lo && yn > lo && x[xn - 1] == y[yn - 1]) { --xn; --yn; }
    size_t n = xn - lo, m = yn - lo;
    if (n == 0) return m;
    if (m == 0) return n;
    const char32_t* xs = x.data() + lo;
    const char32_t* ys = y.data() + lo;
    if (n < m) { std::swap(xs, ys); std::swap(n, m); }

    std::vector<std::size_t> row(m + 1);
    for (size_t j = 0; j <= m; ++j) row[j] = j;
    for (size_t i = 1; i <= n; ++i) {
        std::size_t diag = row[0];
        row[0] = i;
        for (size_t j = 1; j <= m; ++j) {
            std::size_t cost = (xs[i - 1] == ys[j - 1]) ? diag : diag + 1;
            diag = row[j];
            row[j] = std::min({row[j] + 1, row[j - 1] + 1, cost});
        }
    }
    return row[m];
}

double similarity_ratio(std::string_view a, std::string_view b) {
    std::size_t la = utf8_decode(a).size();
    std::size_t lb = utf8_decode(b).size();
    std::size_t longest = std::max(la, lb);
    if (longest == 0) return 1.0;
    std::size_t d = levenshtein_distance(a, b);
    return 1.0 - static_cast<double>(d) / static_cast<double>(longest);
}

bool is_significant_change(double ratio, double threshold) { return ratio <= threshold; }

SimilaritySeries build_similarity_series(const std::string& policy_id,
                                         const std::vector<TimelineEntry>& timeline) {
    SimilaritySeries series;
    series.policy_id = policy_id;
    for (size_t i = 1; i < timeline.size(); ++i)
        series.points.push_back(
            {timeline[i].month, similarity_ratio(timeline[i - 1].text, timeline[i].text)});
    return series;
}

std::optional<YearMonth> key_change_date(const SimilaritySeries& series, YearMonth pivot,
                                         double threshold) {
    std::optional<YearMonth> best;
    int best_distance = 0;
    for (const auto& point : series.points) {
        if (!is_significant_change(point.ratio_to_previous, threshold)) continue;
        int distance = std::abs(YearMonth::months_between(pivot, point.month));
        // ties prefer the later month; points are month-ascending, so >= keeps
        // replacing equal-distance candidates with later ones
        if (!best || distance < best_distance ||
            (distance == best_distance && point.month > *best)) {
            best = point.month;
            best_distance = distance;
        }
    }
    return best;
}

SnapshotPair select_pair(const std::string& policy_id,
                         const std::vector<TimelineEntry>& timeline, YearMonth pivot,
                         double threshold, StablePick stable_pick) {
    SnapshotPair pair;
    pair.policy_id = policy_id;

    std::optional<size_t> latest_before_pivot;
    std::optional<size_t> latest_after_pivot;
    for (size_t i = 0; i < timeline.size(); ++i) {
        if (timeline[i].month < pivot) latest_before_pivot = i;
        if (timeline[i].month > pivot) latest_after_pivot = i;
    }
    if (!latest_before_pivot)
        throw Error(ErrorKind::NoPair, "no snapshot before the pivot month", "no-pre");
    if (!latest_after_pivot)
        throw Error(ErrorKind::NoPair, "no snapshot after the pivot month", "no-post");

    SimilaritySeries series = build_similarity_series(policy_id, timeline);
    pair.key_change = key_change_date(series, pivot, threshold);
    pair.post_month = timeline[*latest_after_pivot].month;

    if (!pair.key_change) {
        pair.pre_month = timeline[*latest_before_pivot].month;
        pair.unchanged = true;
        return pair;
    }

    // stable = similarity to own predecessor above the threshold; the first
    // snapshot has no predecessor and counts as stable
    auto is_stable = [&](size_t i) {
        if (i == 0) return true;
        return !is_significant_change(series.points[i - 1].ratio_to_previous, threshold);
    };

    std::optional<size_t> chosen;
    for (size_t i = 0; i < timeline.size(); ++i) {
        if (timeline[i].month >= *pair.key_change) break;
        if (timeline[i].month >= pivot) break;
        if (!is_stable(i)) continue;
        if (!chosen || stable_pick == StablePick::Latest) chosen = i;
        if (stable_pick == StablePick::Earliest) break;
    }
    pair.pre_month = chosen ? timeline[*chosen].month : timeline[*latest_before_pivot].month;
    return pair;
}

}  // namespace polidiff
