#include "polidiff/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "polidiff/errors.hpp"

namespace polidiff {

namespace {

constexpr double kTiny = 1e-300;

void clamp_p(TestResult& result) {
    if (result.p_value < kTiny) {
        result.p_value = kTiny;
        result.p_clamped = true;
    }
    result.p_value = std::min(result.p_value, 1.0);
}

double sample_mean(const std::vector<double>& xs) {
    if (xs.empty()) return 0.0;
    return std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
}

double sample_std(const std::vector<double>& xs) {
    if (xs.size() < 2) return 0.0;
    double mu = sample_mean(xs);
    double ss = 0.0;
    for (double x : xs) ss += (x - mu) * (x - mu);
    return std::sqrt(ss / static_cast<double>(xs.size() - 1));
}

}  // namespace

double bonferroni(double alpha, long m) {
    if (m < 1) throw Error(ErrorKind::ConfigError, "bonferroni needs m >= 1");
    return alpha / static_cast<double>(m);
}

double regularized_gamma_p(double a, double x) {
    if (a <= 0.0 || x < 0.0)
        throw Error(ErrorKind::ConfigError, "incomplete gamma needs a > 0, x >= 0");
    if (x == 0.0) return 0.0;
    if (x >= a + 1.0) return 1.0 - regularized_gamma_q(a, x);
    // series expansion around zero
    double ap = a;
    double sum = 1.0 / a;
    double del = sum;
    for (int i = 0; i < 10000; ++i) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::fabs(del) < std::fabs(sum) * 1e-16) break;
    }
    double log_prefix = -x + a * std::log(x) - std::lgamma(a);
    return sum * std::exp(log_prefix);
}

double regularized_gamma_q(double a, double x) {
    if (a <= 0.0 || x < 0.0)
        throw Error(ErrorKind::ConfigError, "incomplete gamma needs a > 0, x >= 0");
    if (x == 0.0) return 1.0;
    if (x < a + 1.0) return 1.0 - regularized_gamma_p(a, x);
    // Lentz continued fraction
    double b = x + 1.0 - a;
    double c = 1.0 / kTiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 10000; ++i) {
        double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = b + an / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) < 1e-16) break;
    }
    double log_prefix = -x + a * std::log(x) - std::lgamma(a);
    return std::exp(log_prefix) * h;
}

double chi_squared_sf(double statistic, long df) {
    if (df < 1) throw Error(ErrorKind::DegenerateTable, "chi-squared needs df >= 1");
    if (statistic <= 0.0) return 1.0;
    return regularized_gamma_q(static_cast<double>(df) / 2.0, statistic / 2.0);
}

TestResult chi_squared(const std::vector<std::vector<double>>& table, double alpha, long m) {
    size_t rows = table.size();
    if (rows < 2) throw Error(ErrorKind::DegenerateTable, "need at least 2 rows");
    size_t cols = table[0].size();
    if (cols < 2) throw Error(ErrorKind::DegenerateTable, "need at least 2 columns");

    std::vector<double> row_sum(rows, 0.0), col_sum(cols, 0.0);
    double total = 0.0;
    for (size_t r = 0; r < rows; ++r) {
        if (table[r].size() != cols)
            throw Error(ErrorKind::DegenerateTable, "ragged table");
        for (size_t c = 0; c < cols; ++c) {
            double v = table[r][c];
            if (v < 0.0) throw Error(ErrorKind::DegenerateTable, "negative count");
            row_sum[r] += v;
            col_sum[c] += v;
            total += v;
        }
    }
    for (double s : row_sum)
        if (s == 0.0) throw Error(ErrorKind::DegenerateTable, "all-zero row");
    for (double s : col_sum)
        if (s == 0.0) throw Error(ErrorKind::DegenerateTable, "all-zero column");

    TestResult result;
    result.method = "chi-squared";
    result.n = static_cast<long>(total);
    result.df = static_cast<long>((rows - 1) * (cols - 1));
    for (size_t r = 0; r < rows; ++r)
        for (size_t c = 0; c < cols; ++c) {
            double expected = row_sum[r] * col_sum[c] / total;
            double diff = table[r][c] - expected;
            result.statistic += diff * diff / expected;
        }
    result.p_value = chi_squared_sf(result.statistic, result.df);
    result.alpha_effective = bonferroni(alpha, m);
    clamp_p(result);
    result.reject = result.p_value < result.alpha_effective;
    return result;
}

namespace {

// mid-ranks of |d|, plus the tie-group correction term sum(t^3 - t)
std::pair<std::vector<double>, double> rank_absolute(const std::vector<double>& diffs) {
    size_t n = diffs.size();
    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), size_t{0});
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return std::fabs(diffs[a]) < std::fabs(diffs[b]);
    });
    std::vector<double> ranks(n, 0.0);
    double tie_term = 0.0;
    size_t i = 0;
    while (i < n) {
        size_t j = i;
        while (j + 1 < n &&
               std::fabs(diffs[order[j + 1]]) == std::fabs(diffs[order[i]]))
            ++j;
        double avg_rank = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
        double t = static_cast<double>(j - i + 1);
        if (t > 1.0) tie_term += t * t * t - t;
        for (size_t k = i; k <= j; ++k) ranks[order[k]] = avg_rank;
        i = j + 1;
    }
    return {ranks, tie_term};
}

}  // namespace

double wilcoxon_exact_two_sided_p(const std::vector<double>& ranks, double w_plus) {
    // twice the ranks are integers even with mid-rank ties
    std::vector<long> scaled;
    scaled.reserve(ranks.size());
    long max_sum = 0;
    for (double r : ranks) {
        long s = std::lround(2.0 * r);
        scaled.push_back(s);
        max_sum += s;
    }
    // counts[s] = number of sign assignments with scaled W+ == s
    std::vector<double> counts(static_cast<size_t>(max_sum) + 1, 0.0);
    counts[0] = 1.0;
    long reach = 0;
    for (long s : scaled) {
        reach += s;
        for (long v = reach; v >= s; --v) counts[v] += counts[v - s];
    }
    double total = std::ldexp(1.0, static_cast<int>(ranks.size()));  // 2^n
    long w = std::lround(2.0 * w_plus);
    double below = 0.0, above = 0.0;
    for (long v = 0; v <= max_sum; ++v) {
        if (v <= w) below += counts[v];
        if (v >= w) above += counts[v];
    }
    double p = 2.0 * std::min(below, above) / total;
    return std::min(p, 1.0);
}

double wilcoxon_normal_two_sided_p(const std::vector<double>& ranks, double w_plus) {
    // moments straight from the (mid-)ranks; sum(r^2)/4 is the tie-corrected
    // variance, and the fourth cumulant drives an Edgeworth term that keeps
    // small-n mid-range p-values honest
    double rank_sum = 0.0, sum_r2 = 0.0, sum_r4 = 0.0;
    for (double r : ranks) {
        rank_sum += r;
        sum_r2 += r * r;
        sum_r4 += r * r * r * r;
    }
    double mean = rank_sum / 2.0;
    double var = sum_r2 / 4.0;
    if (var <= 0.0) return 1.0;
    double sigma = std::sqrt(var);
    double excess_kurtosis = -2.0 * sum_r4 / (sum_r2 * sum_r2);

    double w = std::min(w_plus, rank_sum - w_plus);
    double z = (w - mean + 0.5) / sigma;  // continuity correction
    double cdf = 0.5 * std::erfc(-z / std::sqrt(2.0));
    double density = std::exp(-0.5 * z * z) / std::sqrt(2.0 * 3.14159265358979323846);
    cdf -= excess_kurtosis / 24.0 * (z * z * z - 3.0 * z) * density;
    double p = 2.0 * cdf;
    return std::min(std::max(p, 0.0), 1.0);
}

TestResult wilcoxon_signed_rank(const std::vector<double>& pre,
                                const std::vector<double>& post, double alpha, long m,
                                ZeroDiffPolicy policy) {
    if (pre.size() != post.size())
        throw Error(ErrorKind::ShapeMismatch, "pre and post differ in length");
    std::vector<double> diffs;
    diffs.reserve(pre.size());
    bool had_zero = false;
    for (size_t i = 0; i < pre.size(); ++i) {
        double d = post[i] - pre[i];
        if (d == 0.0) {
            had_zero = true;
            continue;  // dropped
        }
        diffs.push_back(d);
    }
    if (policy == ZeroDiffPolicy::Fail && had_zero)
        throw Error(ErrorKind::AllZeroDifferences, "zero differences present");
    if (diffs.empty())
        throw Error(ErrorKind::AllZeroDifferences, "all differences are zero");
    if (diffs.size() < 5)
        throw Error(ErrorKind::TooFewPairs,
                    "only " + std::to_string(diffs.size()) + " nonzero pairs, need >= 5");

    auto [ranks, tie_term] = rank_absolute(diffs);
    (void)tie_term;
    double w_plus = 0.0, w_minus = 0.0;
    for (size_t i = 0; i < diffs.size(); ++i)
        (diffs[i] > 0.0 ? w_plus : w_minus) += ranks[i];

    TestResult result;
    result.n = static_cast<long>(diffs.size());
    result.statistic = std::min(w_plus, w_minus);
    if (result.n <= kWilcoxonExactCutoff) {
        result.method = "wilcoxon-exact";
        result.p_value = wilcoxon_exact_two_sided_p(ranks, w_plus);
    } else {
        result.method = "wilcoxon-normal";
        result.p_value = wilcoxon_normal_two_sided_p(ranks, w_plus);
    }
    result.alpha_effective = bonferroni(alpha, m);
    clamp_p(result);
    result.reject = result.p_value < result.alpha_effective;
    result.has_descriptives = true;
    result.pre_mean = sample_mean(pre);
    result.pre_std = sample_std(pre);
    result.post_mean = sample_mean(post);
    result.post_std = sample_std(post);
    return result;
}

}  // namespace polidiff
