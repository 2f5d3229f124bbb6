#pragma once

#include <string>
#include <vector>

namespace polidiff {

struct TestResult {
    double statistic = 0.0;
    double p_value = 1.0;
    long n = 0;                    // sample size (pairs after drops, or grand total)
    long df = 0;                   // chi-squared only
    double alpha_effective = 0.05;
    bool reject = false;
    bool p_clamped = false;        // true when p underflowed below 1e-300
    std::string method;            // "chi-squared" | "wilcoxon-exact" | "wilcoxon-normal"
    // paired descriptives, when applicable
    bool has_descriptives = false;
    double pre_mean = 0.0, pre_std = 0.0;
    double post_mean = 0.0, post_std = 0.0;
};

// alpha / m. Pre: m >= 1.
double bonferroni(double alpha, long m);

// Regularized incomplete gamma functions (relative error <= 1e-10 over the
// tested range); exposed because the chi-squared tail is defined through them.
double regularized_gamma_p(double a, double x);
double regularized_gamma_q(double a, double x);

// Survival function of the chi-squared distribution.
double chi_squared_sf(double statistic, long df);

// Pearson chi-squared over an r x c count table. Errors: DegenerateTable
// (negative counts, r or c < 2, an all-zero row/column).
TestResult chi_squared(const std::vector<std::vector<double>>& table, double alpha = 0.05,
                       long m = 1);

enum class ZeroDiffPolicy {
    Drop,  // discard zero differences (default convention)
    Fail,  // raise AllZeroDifferences when any zero difference is present
};

// Exact two-sided p for the signed-rank statistic: enumerates the sign-flip
// null over the given (tie-averaged) ranks. p = min(1, 2*min(P(W+ <= w), P(W+ >= w))).
double wilcoxon_exact_two_sided_p(const std::vector<double>& ranks, double w_plus);

// Normal approximation with tie and continuity corrections.
double wilcoxon_normal_two_sided_p(const std::vector<double>& ranks, double w_plus);

constexpr long kWilcoxonExactCutoff = 20;

// Wilcoxon signed-rank test for paired samples. Zero differences are handled
// per `policy`; ties are mid-ranked; the null distribution is exact for
// n <= 20 and normal-approximated beyond. statistic = min(W+, W-).
// Errors: ShapeMismatch, AllZeroDifferences, TooFewPairs (n < 5 after drops).
TestResult wilcoxon_signed_rank(const std::vector<double>& pre,
                                const std::vector<double>& post, double alpha = 0.05,
                                long m = 1,
                                ZeroDiffPolicy policy = ZeroDiffPolicy::Drop);

}  // namespace polidiff
