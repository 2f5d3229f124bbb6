// polidiff: longitudinal privacy-policy corpus analysis.
//
// Stages: discover -> fetch -> extract -> gate -> select-pairs -> annotate
// -> metrics -> query -> stats -> report. Every stage is resumable and can
// be run on its own; `pipeline` runs them in order.

#include <cstdlib>
#include <filesystem>
#include <iostream>

#include <CLI11.hpp>

#include "polidiff/annotation.hpp"
#include "polidiff/errors.hpp"
#include "polidiff/gate.hpp"
#include "polidiff/gate_fixture.hpp"
#include "polidiff/report.hpp"
#include "polidiff/store.hpp"
#include "polidiff/taxonomy.hpp"

using namespace polidiff;

namespace {

struct GlobalArgs {
    std::string config_path;
    std::string store_dir;
    std::string pivot;
    std::uint64_t seed = 0;
    bool seed_set = false;
};

PipelineConfig make_config(const GlobalArgs& args) {
    PipelineConfig config;
    if (!args.config_path.empty()) config = load_config(args.config_path);
    if (const char* env_store = std::getenv("POLIDIFF_STORE"))
        config.store_dir = env_store;
    if (!args.store_dir.empty()) config.store_dir = args.store_dir;
    if (!args.pivot.empty()) {
        auto parsed = YearMonth::parse(args.pivot);
        if (!parsed) throw Error(ErrorKind::ConfigError, "--pivot must be YYYY-MM");
        config.pivot = *parsed;
    }
    if (args.seed_set) config.seed = args.seed;
    return config;
}

void print_summary(const char* stage, const StageSummary& s) {
    std::cout << stage << ": processed " << s.processed << ", skipped " << s.skipped
              << ", failed " << s.failed << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"longitudinal privacy-policy corpus analysis"};
    app.require_subcommand(1);
    app.fallthrough();  // global options may follow the subcommand name

    GlobalArgs global;
    app.add_option("--config", global.config_path, "pipeline config file (JSON)");
    app.add_option("--store", global.store_dir, "snapshot store directory");
    app.add_option("--pivot", global.pivot, "pivot month YYYY-MM (default 2018-05)");
    auto* seed_opt = app.add_option("--seed", global.seed, "seed for seeded stages");

    // ---- discover ----
    auto* discover = app.add_subcommand("discover", "find policy links on home pages");
    std::string discover_input;
    bool discover_cross = false;
    discover->add_option("--input", discover_input, "file with one URL per line")
        ->required();
    discover->add_flag("--allow-cross-domain", discover_cross,
                       "keep candidates on foreign registrable domains");

    // ---- fetch ----
    auto* fetch = app.add_subcommand("fetch", "download monthly archive snapshots");
    std::string fetch_from, fetch_to, fetch_cdx, fetch_template;
    int fetch_workers = 0, fetch_delay = -1;
    fetch->add_option("--from", fetch_from, "start month YYYY-MM");
    fetch->add_option("--to", fetch_to, "end month YYYY-MM");
    fetch->add_option("--cdx", fetch_cdx, "CDX availability endpoint");
    fetch->add_option("--snapshot-template", fetch_template,
                      "capture URL template with {timestamp} and {url}");
    fetch->add_option("--workers", fetch_workers, "worker pool size (default 8)");
    fetch->add_option("--delay", fetch_delay, "per-host politeness delay ms (default 1000)");

    // ---- extract ----
    auto* extract = app.add_subcommand("extract", "strip boilerplate from stored HTML");
    std::size_t extract_min_chars = 0;
    extract->add_option("--min-chars", extract_min_chars,
                        "minimum cleaned-text length (default 500)");

    // ---- gate ----
    auto* gate = app.add_subcommand("gate", "is-policy gate");
    gate->require_subcommand(1);
    auto* gate_train = gate->add_subcommand("train", "train the gate model");
    std::string gate_corpus, gate_out = "gate-model.bin";
    std::uint64_t gate_seed = 42;
    int gate_epochs = 12;
    double gate_threshold = 0.5;
    gate_train->add_option("--corpus", gate_corpus, "dir with policy/ and other/ subdirs")
        ->required();
    gate_train->add_option("--out", gate_out, "model output path");
    gate_train->add_option("--train-seed", gate_seed, "split/shuffle seed");
    gate_train->add_option("--epochs", gate_epochs, "training epochs");
    gate_train->add_option("--threshold", gate_threshold, "decision threshold (default 0.5)");

    auto* gate_classify = gate->add_subcommand("classify", "classify one text file");
    std::string gate_model, gate_file;
    gate_classify->add_option("--model", gate_model, "model path")->required();
    gate_classify->add_option("file", gate_file, "text file")->required();

    auto* gate_fixture = gate->add_subcommand("fixture", "write the fixture corpus");
    std::string fixture_out;
    int fixture_count = 400;
    std::uint64_t fixture_seed = 42;
    gate_fixture->add_option("--out", fixture_out, "output dir")->required();
    gate_fixture->add_option("--count", fixture_count, "total documents (default 400)");
    gate_fixture->add_option("--fixture-seed", fixture_seed, "generator seed");

    auto* gate_run = gate->add_subcommand("run", "gate every extracted snapshot in the store");
    std::string gate_run_model;
    gate_run->add_option("--model", gate_run_model, "model path")->required();

    // ---- select-pairs ----
    auto* select_pairs = app.add_subcommand("select-pairs",
                                            "pick pre/post snapshots per policy");
    double sp_threshold = -1.0;
    std::string sp_stable;
    select_pairs->add_option("--threshold", sp_threshold,
                             "significance threshold (default 0.95)");
    select_pairs->add_option("--stable-pick", sp_stable,
                             "latest|earliest stable version (default latest)");

    // ---- annotate ----
    auto* annotate = app.add_subcommand("annotate", "label segments via endpoint or files");
    std::string ann_labeler, ann_dir, ann_b_dir;
    annotate->add_option("--labeler", ann_labeler, "labeler endpoint URL");
    annotate->add_option("--annotations", ann_dir, "dir of annotation JSON files");
    annotate->add_option("--annotations-b", ann_b_dir, "second annotation source");

    // ---- metrics ----
    auto* metrics = app.add_subcommand("metrics", "compute the five text metrics per pair");
    std::string metrics_deps, metrics_pairs;
    metrics->add_option("--pairs", metrics_pairs,
                        "pairs manifest (default <store>/pairs.json)");
    metrics->add_option("--dep-annotations", metrics_deps,
                        "dir of dependency sidecar files for the passive index");

    // ---- query ----
    auto* query = app.add_subcommand("query", "run the structured queries");
    std::string query_which = "all", query_taxonomy, query_catalog, query_annotations,
                query_out;
    query->add_option("--queries", query_which, "all|cov|ico|spec (default all)");
    query->add_option("--taxonomy", query_taxonomy, "taxonomy config override");
    query->add_option("--catalog", query_catalog, "query catalog override");
    query->add_option("--annotations", query_annotations,
                      "annotation dir (default: store annotations)");
    query->add_option("--out", query_out, "results file (default <store>/results.json)");

    // ---- stats ----
    auto* stats_cmd = app.add_subcommand("stats", "corpus-level hypothesis tests");
    stats_cmd->require_subcommand(1);
    auto* stats_metrics = stats_cmd->add_subcommand(
        "metrics-test", "Wilcoxon over the five metrics, Bonferroni m=5");
    std::string stats_metrics_csv;
    stats_metrics->add_option("--pairs", stats_metrics_csv,
                              "metrics CSV (default <store>/metrics.csv)");
    auto* stats_coverage = stats_cmd->add_subcommand(
        "coverage-test", "chi-squared over the nine categories, Bonferroni m=9");
    std::string stats_results;
    stats_coverage->add_option("--results", stats_results,
                               "results file (default <store>/results.json)");

    // ---- histogram / report / pipeline ----
    auto* histogram = app.add_subcommand("histogram", "key-change month counts");
    auto* report_cmd = app.add_subcommand("report", "assemble the corpus report");
    std::string report_out;
    report_cmd->add_option("--out", report_out, "report directory (default report)");
    auto* pipeline = app.add_subcommand("pipeline", "run all configured stages in order");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);        // prints help or the usage error
        return code == 0 ? 0 : 1;      // usage errors exit 1
    }
    global.seed_set = seed_opt->count() > 0;

    try {
        PipelineConfig config = make_config(global);

        if (*discover) {
            config.input_urls_path = discover_input;
            config.allow_cross_domain = discover_cross;
            print_summary("discover", run_discover(config));
        } else if (*fetch) {
            if (!fetch_from.empty()) {
                auto parsed = YearMonth::parse(fetch_from);
                if (!parsed) throw Error(ErrorKind::ConfigError, "--from must be YYYY-MM");
                config.fetch_from = *parsed;
            }
            if (!fetch_to.empty()) {
                auto parsed = YearMonth::parse(fetch_to);
                if (!parsed) throw Error(ErrorKind::ConfigError, "--to must be YYYY-MM");
                config.fetch_to = *parsed;
            }
            if (!fetch_cdx.empty()) config.cdx_url = fetch_cdx;
            if (!fetch_template.empty()) config.snapshot_url_template = fetch_template;
            if (fetch_workers > 0) config.workers = fetch_workers;
            if (fetch_delay >= 0) config.politeness_delay_ms = fetch_delay;
            print_summary("fetch", run_fetch(config));
        } else if (*extract) {
            if (extract_min_chars > 0) config.extract.min_chars = extract_min_chars;
            print_summary("extract", run_extract(config));
        } else if (*gate) {
            if (*gate_train) {
                TrainOptions options;
                options.seed = gate_seed;
                options.epochs = gate_epochs;
                options.threshold = gate_threshold;
                LinearTextModel model = train_gate(load_gate_corpus(gate_corpus), options);
                save_model(model, gate_out);
                std::cout << "trained on " << model.train_examples << " docs, held-out accuracy "
                          << model.held_out_accuracy
                          << (model.split_leakage ? " (split leakage: duplicate documents)"
                                                  : "")
                          << "\n";
            } else if (*gate_classify) {
                LinearTextModel model = load_model(gate_model);
                GateVerdict verdict = classify_policy(read_file(gate_file), model);
                std::cout << (verdict.valid ? "valid" : "invalid") << " reason="
                          << (verdict.reason.empty() ? "-" : verdict.reason)
                          << " p=" << verdict.policy_probability << "\n";
            } else if (*gate_fixture) {
                write_gate_fixture(fixture_out, fixture_count, fixture_seed);
                std::cout << "wrote " << fixture_count << " documents to " << fixture_out
                          << "\n";
            } else if (*gate_run) {
                config.gate_model_path = gate_run_model;
                print_summary("gate", run_gate_stage(config));
            }
        } else if (*select_pairs) {
            if (sp_threshold >= 0) config.significance_threshold = sp_threshold;
            if (!sp_stable.empty()) {
                if (sp_stable == "latest") config.stable_pick = StablePick::Latest;
                else if (sp_stable == "earliest") config.stable_pick = StablePick::Earliest;
                else throw Error(ErrorKind::ConfigError, "--stable-pick must be latest|earliest");
            }
            print_summary("select-pairs", run_select_pairs(config));
        } else if (*annotate) {
            if (!ann_labeler.empty()) config.labeler_url = ann_labeler;
            if (!ann_dir.empty()) config.annotations_dir = ann_dir;
            if (!ann_b_dir.empty()) config.annotations_b_dir = ann_b_dir;
            print_summary("annotate", run_annotate(config));
        } else if (*metrics) {
            if (!metrics_pairs.empty()) config.pairs_manifest_path = metrics_pairs;
            if (!metrics_deps.empty()) config.dep_annotations_dir = metrics_deps;
            print_summary("metrics", run_metrics(config));
        } else if (*query) {
            if (!query_taxonomy.empty()) config.taxonomy_path = query_taxonomy;
            if (!query_catalog.empty()) config.catalog_path = query_catalog;
            if (!query_out.empty()) config.results_out_path = query_out;
            if (!query_annotations.empty()) {
                // external annotation dir: ingest, then query from the store
                config.annotations_dir = query_annotations;
                run_annotate(config);
            }
            print_summary("query", run_query_stage(config, query_which));
        } else if (*stats_cmd) {
            if (*stats_metrics) {
                if (!stats_metrics_csv.empty()) config.metrics_csv_path = stats_metrics_csv;
                run_stats_metrics(config, std::cout);
            } else if (*stats_coverage) {
                if (!stats_results.empty()) config.results_out_path = stats_results;
                run_stats_coverage(config, std::cout);
            }
        } else if (*histogram) {
            auto hist = emit_histogram(
                (std::filesystem::path(config.store_dir) / "pairs.json").string());
            std::cout << "month,count\n";
            for (const auto& [month, count] : hist)
                std::cout << month << "," << count << "\n";
        } else if (*report_cmd) {
            if (!report_out.empty()) config.out_dir = report_out;
            CorpusReport report = build_report(config);
            write_report(report, config.out_dir);
            std::cout << "report: " << report.n_policies << " policies -> " << config.out_dir
                      << "\n";
        } else if (*pipeline) {
            run_pipeline(config);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
