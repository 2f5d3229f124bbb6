#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polidiff/changedetect.hpp"
#include "polidiff/corpus.hpp"
#include "polidiff/query.hpp"
#include "polidiff/stats.hpp"
#include "polidiff/util.hpp"

namespace polidiff {

struct PipelineConfig {
    std::string store_dir = "store";
    std::string out_dir = "report";
    std::uint64_t seed = 42;
    YearMonth pivot{2018, 5};
    double significance_threshold = 0.95;
    StablePick stable_pick = StablePick::Latest;
    double alpha = 0.05;

    // discover
    std::string input_urls_path;
    bool allow_cross_domain = false;
    bool honor_robots = true;

    // fetch
    std::string cdx_url;
    std::string snapshot_url_template;
    YearMonth fetch_from{2016, 1};
    YearMonth fetch_to{2019, 5};
    int workers = 8;
    int politeness_delay_ms = 1000;
    int timeout_ms = 15000;
    int retries = 2;

    // extract
    ExtractOptions extract;

    // gate
    std::string gate_model_path;

    // annotate
    std::string labeler_url;
    std::string annotations_dir;     // ingest pre-built annotation files
    std::string annotations_b_dir;   // optional second source (disagreement)
    int labeler_parallelism = 4;
    int labeler_batch_size = 0;

    // metrics
    std::string dep_annotations_dir;

    // data overrides
    std::string taxonomy_path;   // empty = bundled default
    std::string catalog_path;    // empty = bundled default

    // artifact path overrides (empty = the store defaults)
    std::string pairs_manifest_path;   // <store>/pairs.json
    std::string metrics_csv_path;      // <store>/metrics.csv
    std::string results_out_path;      // <store>/results.json
};

PipelineConfig load_config(const std::string& path);
void apply_config_json(PipelineConfig& config, std::string_view json_text);

Taxonomy config_taxonomy(const PipelineConfig& config);
QueryCatalog config_catalog(const PipelineConfig& config);

// ---- stages ---------------------------------------------------------------
// Every stage is idempotent and individually invocable; reruns skip work that
// is already recorded in the store.

struct StageSummary {
    int processed = 0;
    int skipped = 0;
    int failed = 0;
};

StageSummary run_discover(const PipelineConfig& config);
StageSummary run_fetch(const PipelineConfig& config);
StageSummary run_extract(const PipelineConfig& config);
StageSummary run_gate_stage(const PipelineConfig& config);
StageSummary run_select_pairs(const PipelineConfig& config);
StageSummary run_annotate(const PipelineConfig& config);
StageSummary run_metrics(const PipelineConfig& config);
StageSummary run_query_stage(const PipelineConfig& config, const std::string& which);

// ---- report ---------------------------------------------------------------

struct CaseFractionRow {
    std::string query_id;
    // case name -> percentage; names fixed per kind, row sums to 100
    std::vector<std::pair<std::string, double>> fractions;
};

struct CoverageRow {
    std::string category;
    double pre_fraction = 0.0;
    double post_fraction = 0.0;
    std::optional<TestResult> test;  // absent when the table is degenerate
    std::string note;
};

struct MetricTestRow {
    std::string metric;
    double pre_mean = 0.0, pre_std = 0.0;
    double post_mean = 0.0, post_std = 0.0;
    std::optional<TestResult> test;
    std::string note;
};

struct CorpusReport {
    std::uint64_t seed = 0;
    YearMonth pivot{};
    double significance_threshold = 0.95;
    int n_policies = 0;
    std::vector<CaseFractionRow> compliance_cases;   // ICO-Q1..Q7
    std::vector<CaseFractionRow> specificity_cases;  // SPEC-Q1..Q8
    std::vector<CoverageRow> coverage;               // nine categories
    std::vector<MetricTestRow> metrics_tests;        // five text metrics
    std::vector<double> similarity_deciles;          // 0%,10%,...,100% of pre/post ratio
    std::vector<std::pair<std::string, int>> key_change_histogram;  // incl. "unchanged"
    std::optional<double> disagreement;              // primary vs. second source
    long disagreement_policies = 0;
    long disagreement_queries = 0;
};

// Builds the report from the store artifacts (pairs manifest, metrics,
// query results). Errors: EmptyCorpus.
CorpusReport build_report(const PipelineConfig& config);

// Writes report.json plus the CSV tables; regeneration from the same store
// is byte-identical.
void write_report(const CorpusReport& report, const std::string& out_dir);

// key-change month -> count, including the "unchanged" bucket
std::map<std::string, int> emit_histogram(const std::string& pairs_manifest_path);

// stats subcommands
void run_stats_metrics(const PipelineConfig& config, std::ostream& out);
void run_stats_coverage(const PipelineConfig& config, std::ostream& out);

// discover -> ... -> report. Errors carry stage provenance in the message.
void run_pipeline(const PipelineConfig& config);

}  // namespace polidiff
