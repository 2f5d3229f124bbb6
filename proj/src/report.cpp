#include "polidiff/report.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "polidiff/annotation.hpp"
#include "polidiff/archive.hpp"
#include "polidiff/errors.hpp"
#include "polidiff/gate.hpp"
#include "polidiff/labeler.hpp"
#include "polidiff/store.hpp"
#include "polidiff/textmetrics.hpp"

namespace polidiff {

using nlohmann::ordered_json;
namespace fs = std::filesystem;

// ---- config -----------------------------------------------------------------

void apply_config_json(PipelineConfig& config, std::string_view json_text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::ConfigError, std::string("config: ") + e.what());
    }
    auto month_field = [](const ordered_json& node, const char* key, YearMonth& out) {
        if (!node.contains(key)) return;
        auto parsed = YearMonth::parse(node[key].get<std::string>());
        if (!parsed)
            throw Error(ErrorKind::ConfigError,
                        std::string(key) + " must be YYYY-MM, got " +
                            node[key].get<std::string>());
        out = *parsed;
    };

    if (doc.contains("store")) config.store_dir = doc["store"].get<std::string>();
    if (doc.contains("out")) config.out_dir = doc["out"].get<std::string>();
    if (doc.contains("seed")) config.seed = doc["seed"].get<std::uint64_t>();
    month_field(doc, "pivot", config.pivot);
    if (doc.contains("significance_threshold"))
        config.significance_threshold = doc["significance_threshold"].get<double>();
    if (doc.contains("stable_pick")) {
        std::string pick = doc["stable_pick"].get<std::string>();
        if (pick == "latest") config.stable_pick = StablePick::Latest;
        else if (pick == "earliest") config.stable_pick = StablePick::Earliest;
        else throw Error(ErrorKind::ConfigError, "stable_pick must be latest|earliest");
    }
    if (doc.contains("alpha")) config.alpha = doc["alpha"].get<double>();
    if (doc.contains("taxonomy")) config.taxonomy_path = doc["taxonomy"].get<std::string>();
    if (doc.contains("catalog")) config.catalog_path = doc["catalog"].get<std::string>();

    if (doc.contains("discover")) {
        const auto& d = doc["discover"];
        if (d.contains("input")) config.input_urls_path = d["input"].get<std::string>();
        if (d.contains("allow_cross_domain"))
            config.allow_cross_domain = d["allow_cross_domain"].get<bool>();
        if (d.contains("honor_robots")) config.honor_robots = d["honor_robots"].get<bool>();
    }
    if (doc.contains("fetch")) {
        const auto& f = doc["fetch"];
        if (f.contains("cdx_url")) config.cdx_url = f["cdx_url"].get<std::string>();
        if (f.contains("snapshot_url_template"))
            config.snapshot_url_template = f["snapshot_url_template"].get<std::string>();
        month_field(f, "from", config.fetch_from);
        month_field(f, "to", config.fetch_to);
        if (f.contains("workers")) config.workers = f["workers"].get<int>();
        if (f.contains("politeness_delay_ms"))
            config.politeness_delay_ms = f["politeness_delay_ms"].get<int>();
        if (f.contains("timeout_ms")) config.timeout_ms = f["timeout_ms"].get<int>();
        if (f.contains("retries")) config.retries = f["retries"].get<int>();
    }
    if (doc.contains("extract")) {
        const auto& e = doc["extract"];
        if (e.contains("min_chars")) config.extract.min_chars = e["min_chars"].get<size_t>();
        if (e.contains("max_link_density"))
            config.extract.max_link_density = e["max_link_density"].get<double>();
        if (e.contains("min_chars_per_tag"))
            config.extract.min_chars_per_tag = e["min_chars_per_tag"].get<double>();
        if (e.contains("min_block_chars"))
            config.extract.min_block_chars = e["min_block_chars"].get<size_t>();
    }
    if (doc.contains("gate")) {
        const auto& g = doc["gate"];
        if (g.contains("model")) config.gate_model_path = g["model"].get<std::string>();
    }
    if (doc.contains("annotate")) {
        const auto& a = doc["annotate"];
        if (a.contains("labeler_url")) config.labeler_url = a["labeler_url"].get<std::string>();
        if (a.contains("annotations")) config.annotations_dir = a["annotations"].get<std::string>();
        if (a.contains("annotations_b"))
            config.annotations_b_dir = a["annotations_b"].get<std::string>();
        if (a.contains("parallelism")) config.labeler_parallelism = a["parallelism"].get<int>();
        if (a.contains("batch_size")) config.labeler_batch_size = a["batch_size"].get<int>();
    }
    if (doc.contains("metrics")) {
        const auto& m = doc["metrics"];
        if (m.contains("dep_annotations"))
            config.dep_annotations_dir = m["dep_annotations"].get<std::string>();
    }
}

PipelineConfig load_config(const std::string& path) {
    PipelineConfig config;
    apply_config_json(config, read_file(path));
    return config;
}

Taxonomy config_taxonomy(const PipelineConfig& config) {
    return config.taxonomy_path.empty() ? default_taxonomy()
                                        : load_taxonomy(config.taxonomy_path);
}

QueryCatalog config_catalog(const PipelineConfig& config) {
    return config.catalog_path.empty() ? default_query_catalog()
                                       : load_query_catalog(config.catalog_path);
}

// ---- shared store artifacts ---------------------------------------------------

namespace {

fs::path pairs_path(const PipelineConfig& config) {
    return config.pairs_manifest_path.empty() ? fs::path(config.store_dir) / "pairs.json"
                                              : fs::path(config.pairs_manifest_path);
}
fs::path candidates_path(const PipelineConfig& config) {
    return fs::path(config.store_dir) / "candidates.json";
}
fs::path metrics_json_path(const PipelineConfig& config) {
    return fs::path(config.store_dir) / "metrics.json";
}
fs::path metrics_csv_path(const PipelineConfig& config) {
    return config.metrics_csv_path.empty() ? fs::path(config.store_dir) / "metrics.csv"
                                           : fs::path(config.metrics_csv_path);
}
fs::path results_path(const PipelineConfig& config) {
    return config.results_out_path.empty() ? fs::path(config.store_dir) / "results.json"
                                           : fs::path(config.results_out_path);
}
fs::path annotations_store_dir(const PipelineConfig& config, bool second_source) {
    return fs::path(config.store_dir) / (second_source ? "annotations_b" : "annotations");
}

struct PairRecord {
    std::string policy_id;
    std::optional<YearMonth> key_change;
    bool unchanged = false;
    YearMonth pre{}, post{};
    double pre_post_ratio = 1.0;
};

std::vector<PairRecord> load_pairs(const PipelineConfig& config) {
    fs::path path = pairs_path(config);
    if (!fs::exists(path))
        throw Error(ErrorKind::IoError,
                    "no pairs manifest at " + path.string() + "; run select-pairs first");
    ordered_json doc = ordered_json::parse(read_file(path));
    std::vector<PairRecord> out;
    for (const auto& p : doc.at("policies")) {
        if (p.contains("error")) continue;  // NoPair policies stay listed but unused
        PairRecord rec;
        rec.policy_id = p.at("policy_id").get<std::string>();
        if (!p.at("key_change").is_null())
            rec.key_change = YearMonth::parse(p.at("key_change").get<std::string>());
        rec.unchanged = p.value("unchanged", false);
        rec.pre = *YearMonth::parse(p.at("pre").get<std::string>());
        rec.post = *YearMonth::parse(p.at("post").get<std::string>());
        rec.pre_post_ratio = p.value("pre_post_ratio", 1.0);
        out.push_back(std::move(rec));
    }
    std::sort(out.begin(), out.end(),
              [](const PairRecord& a, const PairRecord& b) { return a.policy_id < b.policy_id; });
    return out;
}

// months eligible for change analysis: extracted and not gate-rejected
std::vector<TimelineEntry> usable_timeline(const SnapshotStore& store,
                                           const PolicyManifest& manifest) {
    std::vector<TimelineEntry> timeline;
    for (const auto& rec : manifest.months) {
        if (rec.status != SnapshotStatus::Extracted) continue;
        if (rec.gate_verdict == "invalid") continue;
        timeline.push_back({rec.month, store.read_text(manifest.policy_id, rec.month)});
    }
    return timeline;
}

void run_parallel(int workers, size_t count, const std::function<void(size_t)>& fn) {
    if (count == 0) return;
    size_t n_threads = std::min<size_t>(std::max(workers, 1), count);
    if (n_threads <= 1) {
        for (size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<size_t> cursor{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto body = [&] {
        while (true) {
            size_t i = cursor.fetch_add(1);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (size_t t = 0; t < n_threads; ++t) pool.emplace_back(body);
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

}  // namespace

// ---- discover -----------------------------------------------------------------

StageSummary run_discover(const PipelineConfig& config) {
    if (config.input_urls_path.empty())
        throw Error(ErrorKind::ConfigError, "discover needs an input URL list");
    StageSummary summary;
    std::vector<std::string> urls;
    for (const auto& line : split_lines(read_file(config.input_urls_path))) {
        std::string t = trim(line);
        if (!t.empty() && t[0] != '#') urls.push_back(t);
    }

    ordered_json sources = ordered_json::array();
    std::mutex sources_mutex;
    std::atomic<int> processed{0}, failed{0};

    run_parallel(config.workers, urls.size(), [&](size_t i) {
        const std::string& raw_url = urls[i];
        ordered_json entry;
        entry["url"] = raw_url;
        entry["links"] = ordered_json::array();
        entry["warnings"] = ordered_json::array();
        auto parsed = Url::parse(raw_url);
        if (!parsed) {
            entry["warnings"].push_back("unparseable URL");
            ++failed;
        } else if (config.honor_robots && !robots_allows(*parsed, config.timeout_ms)) {
            entry["warnings"].push_back("robots.txt disallows");
            ++failed;
        } else {
            try {
                std::string body = http_get(parsed->str(), config.timeout_ms, config.retries,
                                            config.politeness_delay_ms);
                CandidateScan scan = find_candidate_links(
                    body, *parsed, {.allow_cross_domain = config.allow_cross_domain});
                for (const auto& link : scan.links)
                    entry["links"].push_back({{"candidate_url", link.candidate_url},
                                              {"match_reason", link.match_reason}});
                for (const auto& warning : scan.warnings) entry["warnings"].push_back(warning);
                ++processed;
            } catch (const Error& e) {
                entry["warnings"].push_back(e.what());
                ++failed;
            }
        }
        std::lock_guard<std::mutex> lock(sources_mutex);
        sources.push_back(std::move(entry));
    });

    // deterministic output order
    std::sort(sources.begin(), sources.end(), [](const ordered_json& a, const ordered_json& b) {
        return a.at("url").get<std::string>() < b.at("url").get<std::string>();
    });
    ordered_json doc;
    doc["sources"] = std::move(sources);
    write_file_atomic(candidates_path(config), doc.dump(2) + "\n");
    summary.processed = processed;
    summary.failed = failed;
    return summary;
}

// ---- fetch ----------------------------------------------------------------------

StageSummary run_fetch(const PipelineConfig& config) {
    if (config.cdx_url.empty() || config.snapshot_url_template.empty())
        throw Error(ErrorKind::ConfigError, "fetch needs cdx_url and snapshot_url_template");
    if (config.fetch_from > config.fetch_to)
        throw Error(ErrorKind::BadMonthRange, "fetch range is inverted");

    fs::path cands = candidates_path(config);
    if (!fs::exists(cands))
        throw Error(ErrorKind::IoError, "no candidates manifest; run discover first");
    ordered_json doc = ordered_json::parse(read_file(cands));

    // unique candidate URLs across sources
    std::set<std::string> urls;
    for (const auto& source : doc.at("sources"))
        for (const auto& link : source.at("links"))
            urls.insert(link.at("candidate_url").get<std::string>());
    std::vector<std::string> url_list(urls.begin(), urls.end());

    SnapshotStore store(config.store_dir);
    ArchiveClientOptions archive{config.cdx_url, config.snapshot_url_template,
                                 config.timeout_ms, config.retries,
                                 config.politeness_delay_ms};

    std::atomic<int> processed{0}, skipped{0};
    std::mutex store_mutex;  // single-writer store

    run_parallel(config.workers, url_list.size(), [&](size_t i) {
        auto url = Url::parse(url_list[i]);
        if (!url) return;
        std::string policy_id = SnapshotStore::policy_id_for(*url);
        std::vector<YearMonth> already;
        {
            std::lock_guard<std::mutex> lock(store_mutex);
            if (auto manifest = store.manifest(policy_id))
                for (const auto& rec : manifest->months) already.push_back(rec.month);
            skipped += static_cast<int>(already.size());
        }
        FetchResult fetched = fetch_archive_snapshots(policy_id, *url, config.fetch_from,
                                                      config.fetch_to, archive, already);
        std::lock_guard<std::mutex> lock(store_mutex);
        for (const auto& snapshot : fetched.snapshots) {
            bool wrote = store.put_raw(policy_id, url->str(), snapshot.timestamp,
                                       snapshot.archive_url, snapshot.raw_html);
            (wrote ? processed : skipped)++;
        }
        for (const auto& skip : fetched.skipped)
            store.record_skipped(policy_id, url->str(), skip.month, skip.reason);
    });

    StageSummary summary;
    summary.processed = processed;
    summary.skipped = skipped;
    return summary;
}

// ---- extract ----------------------------------------------------------------------

StageSummary run_extract(const PipelineConfig& config) {
    SnapshotStore store(config.store_dir);
    StageSummary summary;
    for (const auto& policy_id : store.policy_ids()) {
        auto manifest = store.manifest(policy_id);
        for (const auto& rec : manifest->months) {
            if (rec.status != SnapshotStatus::Raw) {
                ++summary.skipped;  // already extracted or rejected
                continue;
            }
            try {
                ExtractedText extracted =
                    extract_text(store.read_html(policy_id, rec.month), config.extract);
                store.put_extracted(policy_id, rec.month, extracted.text,
                                    extracted.tos_flagged);
                ++summary.processed;
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::ExtractionEmpty) throw;
                store.mark_rejected(policy_id, rec.month, "too-short");
                ++summary.failed;
            }
        }
    }
    return summary;
}

// ---- gate -------------------------------------------------------------------------

StageSummary run_gate_stage(const PipelineConfig& config) {
    if (config.gate_model_path.empty())
        throw Error(ErrorKind::ConfigError, "gate needs a model path");
    LinearTextModel model = load_model(config.gate_model_path);
    SnapshotStore store(config.store_dir);
    StageSummary summary;
    for (const auto& policy_id : store.policy_ids()) {
        auto manifest = store.manifest(policy_id);
        for (const auto& rec : manifest->months) {
            if (rec.status != SnapshotStatus::Extracted) continue;
            if (!rec.gate_verdict.empty()) {
                ++summary.skipped;
                continue;
            }
            GateVerdict verdict =
                classify_policy(store.read_text(policy_id, rec.month), model);
            store.set_gate_verdict(policy_id, rec.month,
                                   verdict.valid ? "valid" : "invalid", verdict.reason);
            ++summary.processed;
            if (!verdict.valid) ++summary.failed;
        }
    }
    return summary;
}

// ---- select-pairs -------------------------------------------------------------------

StageSummary run_select_pairs(const PipelineConfig& config) {
    SnapshotStore store(config.store_dir);
    StageSummary summary;
    ordered_json policies = ordered_json::array();
    for (const auto& policy_id : store.policy_ids()) {
        auto manifest = store.manifest(policy_id);
        std::vector<TimelineEntry> timeline = usable_timeline(store, *manifest);
        if (timeline.empty()) continue;

        ordered_json entry;
        entry["policy_id"] = policy_id;
        entry["url"] = manifest->url;
        ordered_json months = ordered_json::array();
        for (const auto& t : timeline) months.push_back(t.month.str());
        entry["months"] = std::move(months);

        SimilaritySeries series = build_similarity_series(policy_id, timeline);
        ordered_json similarity = ordered_json::array();
        for (const auto& point : series.points)
            similarity.push_back({{"month", point.month.str()},
                                  {"ratio", std::round(point.ratio_to_previous * 1e6) / 1e6}});
        entry["similarity"] = std::move(similarity);

        try {
            SnapshotPair pair = select_pair(policy_id, timeline, config.pivot,
                                            config.significance_threshold,
                                            config.stable_pick);
            entry["key_change"] =
                pair.key_change ? ordered_json(pair.key_change->str()) : ordered_json(nullptr);
            entry["unchanged"] = pair.unchanged;
            entry["pre"] = pair.pre_month.str();
            entry["post"] = pair.post_month.str();
            const TimelineEntry* pre_entry = nullptr;
            const TimelineEntry* post_entry = nullptr;
            for (const auto& t : timeline) {
                if (t.month == pair.pre_month) pre_entry = &t;
                if (t.month == pair.post_month) post_entry = &t;
            }
            double ratio = similarity_ratio(pre_entry->text, post_entry->text);
            entry["pre_post_ratio"] = std::round(ratio * 1e6) / 1e6;
            ++summary.processed;
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::NoPair) throw;
            entry["error"] = e.subject();  // "no-pre" | "no-post"
            ++summary.failed;
        }
        policies.push_back(std::move(entry));
    }

    ordered_json doc;
    doc["pivot"] = config.pivot.str();
    doc["threshold"] = config.significance_threshold;
    doc["stable_pick"] = config.stable_pick == StablePick::Latest ? "latest" : "earliest";
    doc["policies"] = std::move(policies);
    write_file_atomic(pairs_path(config), doc.dump(2) + "\n");
    return summary;
}

// ---- annotate ------------------------------------------------------------------------

namespace {

StageSummary ingest_annotation_dir(const PipelineConfig& config, const std::string& dir,
                                   bool second_source) {
    Taxonomy taxonomy = config_taxonomy(config);
    StageSummary summary;
    fs::path out_dir = annotations_store_dir(config, second_source);
    fs::create_directories(out_dir);
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".json")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const auto& file : files) {
        AnnotatedPolicy policy = load_annotations(file.string(), taxonomy);
        fs::path out = out_dir / (policy.policy_id + "." + policy.version + ".json");
        save_annotations(policy, out.string());
        ++summary.processed;
    }
    return summary;
}

}  // namespace

StageSummary run_annotate(const PipelineConfig& config) {
    if (!config.annotations_dir.empty()) {
        StageSummary summary = ingest_annotation_dir(config, config.annotations_dir, false);
        if (!config.annotations_b_dir.empty()) {
            StageSummary b = ingest_annotation_dir(config, config.annotations_b_dir, true);
            summary.processed += b.processed;
        }
        return summary;
    }
    if (config.labeler_url.empty())
        throw Error(ErrorKind::ConfigError, "annotate needs labeler_url or annotations dir");

    Taxonomy taxonomy = config_taxonomy(config);
    SnapshotStore store(config.store_dir);
    std::vector<PairRecord> pairs = load_pairs(config);
    LabelerOptions labeler{config.labeler_url, config.timeout_ms, config.retries,
                           config.labeler_batch_size, config.labeler_parallelism};
    fs::path out_dir = annotations_store_dir(config, false);
    fs::create_directories(out_dir);

    StageSummary summary;
    for (const auto& pair : pairs) {
        for (const auto& [version, month] :
             std::vector<std::pair<std::string, YearMonth>>{{"pre", pair.pre},
                                                            {"post", pair.post}}) {
            fs::path out = out_dir / (pair.policy_id + "." + version + ".json");
            if (fs::exists(out)) {
                ++summary.skipped;
                continue;
            }
            std::vector<std::string> segments =
                segment_text(store.read_text(pair.policy_id, month));
            AnnotatedPolicy policy =
                label_policy(pair.policy_id, version, segments, labeler, taxonomy);
            save_annotations(policy, out.string());
            ++summary.processed;
        }
    }
    return summary;
}

// ---- metrics -------------------------------------------------------------------------

namespace {

std::string metrics_csv_row(const std::string& policy_id, const std::string& version,
                            const TextMetrics& m) {
    std::string row = policy_id + "," + version + "," + std::to_string(m.syllables) + "," +
                      std::to_string(m.words) + "," + std::to_string(m.sentences) + ",";
    if (m.words_per_sentence) row += format_fixed4(*m.words_per_sentence);
    row += ",";
    if (m.passive_index) row += format_fixed4(*m.passive_index);
    return row;
}

TextMetrics metrics_for(const PipelineConfig& config, const SnapshotStore& store,
                        const std::string& policy_id, const std::string& version,
                        YearMonth month) {
    std::string text = store.read_text(policy_id, month);
    if (!config.dep_annotations_dir.empty()) {
        fs::path sidecar = fs::path(config.dep_annotations_dir) /
                           (policy_id + "." + version + ".deps");
        if (fs::exists(sidecar))
            return compute_metrics_with_deps(text,
                                             load_dep_annotations(sidecar.string()));
    }
    return compute_metrics(text);
}

}  // namespace

StageSummary run_metrics(const PipelineConfig& config) {
    SnapshotStore store(config.store_dir);
    std::vector<PairRecord> pairs = load_pairs(config);
    StageSummary summary;

    std::string csv = "policy_id,version,syllables,words,sentences,words_per_sentence,"
                      "passive_index\n";
    ordered_json rows = ordered_json::array();
    for (const auto& pair : pairs) {
        for (const auto& [version, month] :
             std::vector<std::pair<std::string, YearMonth>>{{"pre", pair.pre},
                                                            {"post", pair.post}}) {
            TextMetrics m = metrics_for(config, store, pair.policy_id, version, month);
            csv += metrics_csv_row(pair.policy_id, version, m) + "\n";
            ordered_json row;
            row["policy_id"] = pair.policy_id;
            row["version"] = version;
            row["syllables"] = m.syllables;
            row["words"] = m.words;
            row["sentences"] = m.sentences;
            row["words_per_sentence"] =
                m.words_per_sentence ? ordered_json(std::round(*m.words_per_sentence * 1e4) / 1e4)
                                     : ordered_json(nullptr);
            row["passive_index"] =
                m.passive_index ? ordered_json(std::round(*m.passive_index * 1e4) / 1e4)
                                : ordered_json(nullptr);
            rows.push_back(std::move(row));
            ++summary.processed;
        }
    }
    write_file_atomic(metrics_csv_path(config), csv);
    ordered_json doc;
    doc["rows"] = std::move(rows);
    write_file_atomic(metrics_json_path(config), doc.dump(2) + "\n");
    return summary;
}

// ---- query ---------------------------------------------------------------------------

namespace {

std::optional<AnnotatedPolicy> try_load_annotation(const fs::path& dir,
                                                   const std::string& policy_id,
                                                   const std::string& version,
                                                   const Taxonomy& taxonomy) {
    fs::path path = dir / (policy_id + "." + version + ".json");
    if (!fs::exists(path)) return std::nullopt;
    return load_annotations(path.string(), taxonomy);
}

std::vector<std::string> annotated_policy_ids(const fs::path& dir) {
    std::set<std::string> with_pre, with_post;
    if (!fs::exists(dir)) return {};
    for (const auto& entry : fs::directory_iterator(dir)) {
        std::string name = entry.path().filename().string();
        if (name.size() > 9 && name.ends_with(".pre.json"))
            with_pre.insert(name.substr(0, name.size() - 9));
        if (name.size() > 10 && name.ends_with(".post.json"))
            with_post.insert(name.substr(0, name.size() - 10));
    }
    std::vector<std::string> both;
    for (const auto& id : with_pre)
        if (with_post.count(id)) both.push_back(id);
    return both;  // set iteration is already sorted
}

}  // namespace

StageSummary run_query_stage(const PipelineConfig& config, const std::string& which) {
    Taxonomy taxonomy = config_taxonomy(config);
    QueryCatalog catalog = config_catalog(config);

    std::vector<const Query*> selected;
    for (const auto& query : catalog.queries) {
        bool want = which == "all" ||
                    (which == "cov" && query.kind == QueryKind::Coverage) ||
                    (which == "ico" && query.kind == QueryKind::Compliance) ||
                    (which == "spec" && query.kind == QueryKind::Specificity);
        if (want) selected.push_back(&query);
    }
    if (selected.empty())
        throw Error(ErrorKind::UnknownQuery, "query selector must be all|cov|ico|spec", which);

    fs::path dir = annotations_store_dir(config, false);
    std::vector<std::string> ids = annotated_policy_ids(dir);
    if (ids.empty()) throw Error(ErrorKind::EmptyCorpus, "no annotated policy pairs in store");

    StageSummary summary;
    ordered_json records = ordered_json::array();
    for (const auto& policy_id : ids) {
        AnnotatedPolicy pre = *try_load_annotation(dir, policy_id, "pre", taxonomy);
        AnnotatedPolicy post = *try_load_annotation(dir, policy_id, "post", taxonomy);
        for (const Query* query : selected) {
            QueryResult pre_result = evaluate_query(pre, *query, taxonomy);
            QueryResult post_result = evaluate_query(post, *query, taxonomy);
            ordered_json rec;
            rec["policy_id"] = policy_id;
            rec["query_id"] = query->id;
            rec["kind"] = query_kind_name(query->kind);
            rec["pre_score"] = pre_result.score
                                   ? ordered_json(std::round(*pre_result.score * 1e4) / 1e4)
                                   : ordered_json(nullptr);
            rec["post_score"] = post_result.score
                                    ? ordered_json(std::round(*post_result.score * 1e4) / 1e4)
                                    : ordered_json(nullptr);
            if (query->kind == QueryKind::Specificity) {
                rec["case"] = specificity_case_name(
                    classify_specificity_change(pre_result.score, post_result.score));
            } else {
                rec["case"] = compliance_case_name(classify_compliance_change(
                    static_cast<int>(pre_result.score.value_or(0)),
                    static_cast<int>(post_result.score.value_or(0))));
            }
            rec["matched_pre"] = pre_result.matched;
            rec["matched_post"] = post_result.matched;
            records.push_back(std::move(rec));
            ++summary.processed;
        }
    }

    ordered_json doc;
    doc["which"] = which;
    doc["records"] = std::move(records);
    write_file_atomic(results_path(config), doc.dump(2) + "\n");
    return summary;
}

// ---- report --------------------------------------------------------------------------

namespace {

const std::vector<std::string>& compliance_case_order() {
    static const std::vector<std::string> kOrder = {"worsened", "still-missing",
                                                    "still-covered", "improved"};
    return kOrder;
}

const std::vector<std::string>& specificity_case_order() {
    static const std::vector<std::string> kOrder = {
        "not-covered", "same-specificity", "fully-specified", "worse", "improved"};
    return kOrder;
}

double percent(int count, int total) {
    if (total == 0) return 0.0;
    double pct = 100.0 * static_cast<double>(count) / static_cast<double>(total);
    return std::round(pct * 1e4) / 1e4;
}

std::string p_value_string(const TestResult& test) {
    if (test.p_clamped) return "<1e-300";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4e", test.p_value);
    return buf;
}

ScoreTable score_table_for(const fs::path& dir, const std::vector<std::string>& ids,
                           const std::string& version, const Taxonomy& taxonomy,
                           const QueryCatalog& catalog) {
    ScoreTable table;
    for (const auto& policy_id : ids) {
        auto policy = try_load_annotation(dir, policy_id, version, taxonomy);
        if (!policy) continue;
        for (const auto& query : catalog.queries)
            table[policy_id][query.id] = evaluate_query(*policy, query, taxonomy).score;
    }
    return table;
}

}  // namespace

CorpusReport build_report(const PipelineConfig& config) {
    Taxonomy taxonomy = config_taxonomy(config);
    QueryCatalog catalog = config_catalog(config);
    SnapshotStore store(config.store_dir);

    std::vector<PairRecord> pairs = load_pairs(config);
    if (pairs.empty()) throw Error(ErrorKind::EmptyCorpus, "pairs manifest lists no usable pairs");

    CorpusReport report;
    report.seed = config.seed;
    report.pivot = config.pivot;
    report.significance_threshold = config.significance_threshold;
    report.n_policies = static_cast<int>(pairs.size());

    // ---- query cases and coverage fractions, from annotations -----------------
    fs::path ann_dir = annotations_store_dir(config, false);
    std::vector<std::string> annotated = annotated_policy_ids(ann_dir);
    if (annotated.empty())
        throw Error(ErrorKind::EmptyCorpus, "no annotated policy pairs in store");

    struct PairScores {
        std::map<std::string, std::optional<double>> pre, post;
    };
    std::map<std::string, PairScores> scores;
    for (const auto& policy_id : annotated) {
        AnnotatedPolicy pre = *try_load_annotation(ann_dir, policy_id, "pre", taxonomy);
        AnnotatedPolicy post = *try_load_annotation(ann_dir, policy_id, "post", taxonomy);
        for (const auto& query : catalog.queries) {
            scores[policy_id].pre[query.id] = evaluate_query(pre, query, taxonomy).score;
            scores[policy_id].post[query.id] = evaluate_query(post, query, taxonomy).score;
        }
    }
    int n_annotated = static_cast<int>(annotated.size());

    for (const Query* query : catalog.of_kind(QueryKind::Compliance)) {
        std::map<std::string, int> counts;
        for (const auto& policy_id : annotated) {
            ComplianceCase c = classify_compliance_change(
                static_cast<int>(scores[policy_id].pre[query->id].value_or(0)),
                static_cast<int>(scores[policy_id].post[query->id].value_or(0)));
            counts[compliance_case_name(c)]++;
        }
        CaseFractionRow row;
        row.query_id = query->id;
        for (const auto& name : compliance_case_order())
            row.fractions.emplace_back(name, percent(counts[name], n_annotated));
        report.compliance_cases.push_back(std::move(row));
    }

    for (const Query* query : catalog.of_kind(QueryKind::Specificity)) {
        std::map<std::string, int> counts;
        for (const auto& policy_id : annotated) {
            SpecificityCase c = classify_specificity_change(
                scores[policy_id].pre[query->id], scores[policy_id].post[query->id]);
            counts[specificity_case_name(c)]++;
        }
        CaseFractionRow row;
        row.query_id = query->id;
        for (const auto& name : specificity_case_order())
            row.fractions.emplace_back(name, percent(counts[name], n_annotated));
        report.specificity_cases.push_back(std::move(row));
    }

    // coverage fractions + chi-squared, Bonferroni m = 9
    std::vector<const Query*> coverage_queries = catalog.of_kind(QueryKind::Coverage);
    for (size_t i = 0; i < coverage_queries.size(); ++i) {
        const Query* query = coverage_queries[i];
        int pre_covered = 0, post_covered = 0;
        for (const auto& policy_id : annotated) {
            if (scores[policy_id].pre[query->id].value_or(0) > 0.5) ++pre_covered;
            if (scores[policy_id].post[query->id].value_or(0) > 0.5) ++post_covered;
        }
        CoverageRow row;
        row.category = query->filter.value.empty() && !query->filter.children.empty()
                           ? query->filter.children.front().value
                           : query->filter.value;
        row.pre_fraction = percent(pre_covered, n_annotated) / 100.0;
        row.post_fraction = percent(post_covered, n_annotated) / 100.0;
        try {
            row.test = chi_squared(
                {{double(pre_covered), double(n_annotated - pre_covered)},
                 {double(post_covered), double(n_annotated - post_covered)}},
                config.alpha, static_cast<long>(coverage_queries.size()));
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::DegenerateTable) throw;
            row.note = "degenerate-table";
        }
        report.coverage.push_back(std::move(row));
    }

    // ---- text metrics Wilcoxon, Bonferroni m = 5 --------------------------------
    {
        fs::path path = metrics_json_path(config);
        if (!fs::exists(path))
            throw Error(ErrorKind::IoError, "no metrics in store; run metrics first");
        ordered_json doc = ordered_json::parse(read_file(path));
        struct Row {
            double syllables, words, sentences;
            std::optional<double> wps, passive;
        };
        std::map<std::string, std::map<std::string, Row>> by_policy;
        for (const auto& row : doc.at("rows")) {
            Row r{row.at("syllables").get<double>(), row.at("words").get<double>(),
                  row.at("sentences").get<double>(), std::nullopt, std::nullopt};
            if (!row.at("words_per_sentence").is_null())
                r.wps = row.at("words_per_sentence").get<double>();
            if (!row.at("passive_index").is_null())
                r.passive = row.at("passive_index").get<double>();
            by_policy[row.at("policy_id").get<std::string>()]
                     [row.at("version").get<std::string>()] = r;
        }

        struct MetricDef {
            const char* name;
            std::function<std::optional<double>(const Row&)> get;
        };
        std::vector<MetricDef> defs = {
            {"syllables", [](const Row& r) { return std::optional<double>(r.syllables); }},
            {"words", [](const Row& r) { return std::optional<double>(r.words); }},
            {"sentences", [](const Row& r) { return std::optional<double>(r.sentences); }},
            {"words_per_sentence", [](const Row& r) { return r.wps; }},
            {"passive_index", [](const Row& r) { return r.passive; }},
        };
        for (const auto& def : defs) {
            std::vector<double> pre, post;
            for (const auto& [policy_id, versions] : by_policy) {
                auto pre_it = versions.find("pre");
                auto post_it = versions.find("post");
                if (pre_it == versions.end() || post_it == versions.end()) continue;
                auto a = def.get(pre_it->second);
                auto b = def.get(post_it->second);
                if (!a || !b) continue;  // undefined ratios drop from the test
                pre.push_back(*a);
                post.push_back(*b);
            }
            MetricTestRow row;
            row.metric = def.name;
            if (!pre.empty()) {
                // descriptives even when the test cannot run
                TestResult desc;
                desc.has_descriptives = true;
                double n = static_cast<double>(pre.size());
                for (double v : pre) row.pre_mean += v / n;
                for (double v : post) row.post_mean += v / n;
                double ss_pre = 0, ss_post = 0;
                for (double v : pre) ss_pre += (v - row.pre_mean) * (v - row.pre_mean);
                for (double v : post) ss_post += (v - row.post_mean) * (v - row.post_mean);
                if (pre.size() > 1) {
                    row.pre_std = std::sqrt(ss_pre / (n - 1));
                    row.post_std = std::sqrt(ss_post / (n - 1));
                }
            }
            try {
                row.test = wilcoxon_signed_rank(pre, post, config.alpha,
                                                static_cast<long>(defs.size()));
            } catch (const Error& e) {
                if (e.kind() == ErrorKind::AllZeroDifferences) row.note = "all-zero-differences";
                else if (e.kind() == ErrorKind::TooFewPairs) row.note = "too-few-pairs";
                else if (e.kind() == ErrorKind::ShapeMismatch) row.note = "shape-mismatch";
                else throw;
            }
            report.metrics_tests.push_back(std::move(row));
        }
    }

    // ---- similarity deciles and key-change histogram ----------------------------
    {
        std::vector<double> ratios;
        for (const auto& pair : pairs) ratios.push_back(pair.pre_post_ratio);
        std::sort(ratios.begin(), ratios.end());
        for (int decile = 0; decile <= 10; ++decile) {
            double rank = static_cast<double>(decile) / 10.0 *
                          static_cast<double>(ratios.size() - 1);
            size_t lo = static_cast<size_t>(std::floor(rank));
            size_t hi = static_cast<size_t>(std::ceil(rank));
            double frac = rank - static_cast<double>(lo);
            double value = ratios[lo] * (1.0 - frac) + ratios[hi] * frac;
            report.similarity_deciles.push_back(std::round(value * 1e4) / 1e4);
        }

        std::map<std::string, int> hist;
        for (const auto& pair : pairs) {
            if (pair.unchanged || !pair.key_change) hist["unchanged"]++;
            else hist[pair.key_change->str()]++;
        }
        for (const auto& [month, count] : hist)
            if (month != "unchanged") report.key_change_histogram.emplace_back(month, count);
        if (hist.count("unchanged"))
            report.key_change_histogram.emplace_back("unchanged", hist["unchanged"]);
    }

    // ---- disagreement (optional second annotation source) -----------------------
    {
        fs::path b_dir = annotations_store_dir(config, true);
        if (fs::exists(b_dir)) {
            std::vector<std::string> b_ids = annotated_policy_ids(b_dir);
            std::vector<std::string> common;
            for (const auto& id : annotated)
                if (std::find(b_ids.begin(), b_ids.end(), id) != b_ids.end())
                    common.push_back(id);
            if (!common.empty()) {
                // compare post-version scores across sources, all 24 queries
                ScoreTable a = score_table_for(ann_dir, common, "post", taxonomy, catalog);
                ScoreTable b = score_table_for(b_dir, common, "post", taxonomy, catalog);
                report.disagreement = disagreement_rate(a, b);
                report.disagreement_policies = static_cast<long>(common.size());
                report.disagreement_queries = static_cast<long>(catalog.queries.size());
            }
        }
    }

    return report;
}

namespace {

ordered_json test_to_json(const TestResult& test) {
    ordered_json j;
    j["statistic"] = std::round(test.statistic * 1e4) / 1e4;
    j["p_value"] = p_value_string(test);
    j["n"] = test.n;
    if (test.df > 0) j["df"] = test.df;
    j["alpha_effective"] = test.alpha_effective;
    j["reject"] = test.reject;
    j["method"] = test.method;
    return j;
}

}  // namespace

void write_report(const CorpusReport& report, const std::string& out_dir) {
    fs::create_directories(out_dir);

    ordered_json doc;
    doc["header"] = {{"tool", "polidiff"},
                     {"seed", report.seed},
                     {"pivot", report.pivot.str()},
                     {"significance_threshold", report.significance_threshold},
                     {"n_policies", report.n_policies}};

    auto cases_to_json = [](const std::vector<CaseFractionRow>& rows) {
        ordered_json arr = ordered_json::array();
        for (const auto& row : rows) {
            ordered_json j;
            j["query_id"] = row.query_id;
            for (const auto& [name, pct] : row.fractions) j[name] = pct;
            arr.push_back(std::move(j));
        }
        return arr;
    };
    doc["compliance_cases"] = cases_to_json(report.compliance_cases);
    doc["specificity_cases"] = cases_to_json(report.specificity_cases);

    doc["coverage"] = ordered_json::array();
    for (const auto& row : report.coverage) {
        ordered_json j;
        j["category"] = row.category;
        j["pre_fraction"] = row.pre_fraction;
        j["post_fraction"] = row.post_fraction;
        if (row.test) j["test"] = test_to_json(*row.test);
        if (!row.note.empty()) j["note"] = row.note;
        doc["coverage"].push_back(std::move(j));
    }

    doc["metrics_tests"] = ordered_json::array();
    for (const auto& row : report.metrics_tests) {
        ordered_json j;
        j["metric"] = row.metric;
        j["pre_mean"] = std::round(row.pre_mean * 1e4) / 1e4;
        j["pre_std"] = std::round(row.pre_std * 1e4) / 1e4;
        j["post_mean"] = std::round(row.post_mean * 1e4) / 1e4;
        j["post_std"] = std::round(row.post_std * 1e4) / 1e4;
        if (row.test) j["test"] = test_to_json(*row.test);
        if (!row.note.empty()) j["note"] = row.note;
        doc["metrics_tests"].push_back(std::move(j));
    }

    doc["similarity_deciles"] = report.similarity_deciles;
    doc["key_change_histogram"] = ordered_json::array();
    for (const auto& [month, count] : report.key_change_histogram)
        doc["key_change_histogram"].push_back({{"month", month}, {"count", count}});
    if (report.disagreement) {
        doc["disagreement"] = {{"rate", std::round(*report.disagreement * 1e4) / 1e4},
                               {"n_policies", report.disagreement_policies},
                               {"n_queries", report.disagreement_queries}};
    }
    write_file_atomic(fs::path(out_dir) / "report.json", doc.dump(2) + "\n");

    // CSV tables
    {
        std::string csv = "query_id";
        for (const auto& name : compliance_case_order()) csv += "," + name;
        csv += "\n";
        for (const auto& row : report.compliance_cases) {
            csv += row.query_id;
            for (const auto& [name, pct] : row.fractions) csv += "," + format_fixed4(pct);
            csv += "\n";
        }
        write_file_atomic(fs::path(out_dir) / "compliance_cases.csv", csv);
    }
    {
        std::string csv = "query_id";
        for (const auto& name : specificity_case_order()) csv += "," + name;
        csv += "\n";
        for (const auto& row : report.specificity_cases) {
            csv += row.query_id;
            for (const auto& [name, pct] : row.fractions) csv += "," + format_fixed4(pct);
            csv += "\n";
        }
        write_file_atomic(fs::path(out_dir) / "specificity_cases.csv", csv);
    }
    {
        std::string csv = "category,pre_fraction,post_fraction,statistic,df,p_value,reject\n";
        for (const auto& row : report.coverage) {
            csv += row.category + "," + format_fixed4(row.pre_fraction) + "," +
                   format_fixed4(row.post_fraction) + ",";
            if (row.test) {
                csv += format_fixed4(row.test->statistic) + "," +
                       std::to_string(row.test->df) + "," + p_value_string(*row.test) + "," +
                       (row.test->reject ? "true" : "false");
            } else {
                csv += ",,," + row.note;
            }
            csv += "\n";
        }
        write_file_atomic(fs::path(out_dir) / "coverage.csv", csv);
    }
    {
        std::string csv = "metric,pre_mean,pre_std,post_mean,post_std,p_value,reject,note\n";
        for (const auto& row : report.metrics_tests) {
            csv += row.metric + "," + format_fixed4(row.pre_mean) + "," +
                   format_fixed4(row.pre_std) + "," + format_fixed4(row.post_mean) + "," +
                   format_fixed4(row.post_std) + ",";
            if (row.test)
                csv += p_value_string(*row.test) + std::string(",") +
                       (row.test->reject ? "true" : "false") + ",";
            else
                csv += ",,";
            csv += row.note + "\n";
        }
        write_file_atomic(fs::path(out_dir) / "metrics_tests.csv", csv);
    }
    {
        std::string csv = "decile,ratio\n";
        for (size_t i = 0; i < report.similarity_deciles.size(); ++i)
            csv += std::to_string(i * 10) + "," + format_fixed4(report.similarity_deciles[i]) +
                   "\n";
        write_file_atomic(fs::path(out_dir) / "similarity_deciles.csv", csv);
    }
    {
        std::string csv = "month,count\n";
        for (const auto& [month, count] : report.key_change_histogram)
            csv += month + "," + std::to_string(count) + "\n";
        write_file_atomic(fs::path(out_dir) / "key_change_histogram.csv", csv);
    }
    if (report.disagreement) {
        std::string csv = "comparison,rate,n_policies,n_queries\n";
        csv += "primary-vs-b," + format_fixed4(*report.disagreement) + "," +
               std::to_string(report.disagreement_policies) + "," +
               std::to_string(report.disagreement_queries) + "\n";
        write_file_atomic(fs::path(out_dir) / "disagreement.csv", csv);
    }
}

std::map<std::string, int> emit_histogram(const std::string& pairs_manifest_path) {
    std::map<std::string, int> hist;
    if (!fs::exists(pairs_manifest_path))
        throw Error(ErrorKind::IoError, "no pairs manifest at " + pairs_manifest_path);
    ordered_json doc = ordered_json::parse(read_file(pairs_manifest_path));
    for (const auto& p : doc.at("policies")) {
        if (p.contains("error")) continue;
        if (p.value("unchanged", false) || p.at("key_change").is_null())
            hist["unchanged"]++;
        else
            hist[p.at("key_change").get<std::string>()]++;
    }
    return hist;
}

// ---- stats subcommands ----------------------------------------------------------
// These read the emitted artifacts (metrics CSV, results records), so they can
// run over files produced elsewhere.

void run_stats_metrics(const PipelineConfig& config, std::ostream& out) {
    fs::path csv_path = metrics_csv_path(config);
    if (!fs::exists(csv_path))
        throw Error(ErrorKind::IoError, "no metrics CSV at " + csv_path.string());
    std::vector<std::string> lines = split_lines(read_file(csv_path));
    if (lines.empty()) throw Error(ErrorKind::EmptyCorpus, "metrics CSV is empty");

    struct Cells {
        std::map<std::string, std::optional<double>> by_metric;
    };
    std::map<std::string, std::map<std::string, Cells>> by_policy;  // policy -> version
    const std::vector<std::string> metric_names = {
        "syllables", "words", "sentences", "words_per_sentence", "passive_index"};
    for (size_t i = 1; i < lines.size(); ++i) {
        if (is_blank(lines[i])) continue;
        std::vector<std::string> cells;
        size_t start = 0;
        for (size_t j = 0; j <= lines[i].size(); ++j) {
            if (j == lines[i].size() || lines[i][j] == ',') {
                cells.push_back(lines[i].substr(start, j - start));
                start = j + 1;
            }
        }
        if (cells.size() != 7)
            throw Error(ErrorKind::SchemaError, "bad metrics CSV row: " + lines[i]);
        Cells row;
        for (size_t m = 0; m < metric_names.size(); ++m) {
            const std::string& cell = cells[m + 2];
            row.by_metric[metric_names[m]] =
                cell.empty() ? std::optional<double>{} : std::stod(cell);
        }
        by_policy[cells[0]][cells[1]] = row;
    }

    out << "metric,pre_mean,pre_std,post_mean,post_std,p_value,alpha_effective,reject\n";
    for (const auto& metric : metric_names) {
        std::vector<double> pre, post;
        for (const auto& [policy_id, versions] : by_policy) {
            auto pre_it = versions.find("pre");
            auto post_it = versions.find("post");
            if (pre_it == versions.end() || post_it == versions.end()) continue;
            auto a = pre_it->second.by_metric.at(metric);
            auto b = post_it->second.by_metric.at(metric);
            if (!a || !b) continue;
            pre.push_back(*a);
            post.push_back(*b);
        }
        double pre_mu = 0, post_mu = 0, pre_sd = 0, post_sd = 0;
        double n = static_cast<double>(pre.size());
        for (double v : pre) pre_mu += v / n;
        for (double v : post) post_mu += v / n;
        if (pre.size() > 1) {
            double ss_pre = 0, ss_post = 0;
            for (double v : pre) ss_pre += (v - pre_mu) * (v - pre_mu);
            for (double v : post) ss_post += (v - post_mu) * (v - post_mu);
            pre_sd = std::sqrt(ss_pre / (n - 1));
            post_sd = std::sqrt(ss_post / (n - 1));
        }
        out << metric << "," << format_fixed4(pre_mu) << "," << format_fixed4(pre_sd)
            << "," << format_fixed4(post_mu) << "," << format_fixed4(post_sd) << ",";
        try {
            TestResult test = wilcoxon_signed_rank(pre, post, config.alpha,
                                                   static_cast<long>(metric_names.size()));
            out << p_value_string(test) << "," << test.alpha_effective << ","
                << (test.reject ? "true" : "false");
        } catch (const Error& e) {
            out << "n/a,n/a," << error_kind_name(e.kind());
        }
        out << "\n";
    }
}

void run_stats_coverage(const PipelineConfig& config, std::ostream& out) {
    fs::path path = results_path(config);
    if (!fs::exists(path))
        throw Error(ErrorKind::IoError, "no query results at " + path.string());
    ordered_json doc = ordered_json::parse(read_file(path));

    QueryCatalog catalog = config_catalog(config);
    struct Counts {
        int pre_covered = 0, post_covered = 0, n = 0;
        std::string category;
    };
    std::map<std::string, Counts> by_query;
    for (const auto& rec : doc.at("records")) {
        if (rec.at("kind").get<std::string>() != "coverage") continue;
        Counts& c = by_query[rec.at("query_id").get<std::string>()];
        ++c.n;
        if (rec.at("pre_score").get<double>() > 0.5) ++c.pre_covered;
        if (rec.at("post_score").get<double>() > 0.5) ++c.post_covered;
    }
    if (by_query.empty())
        throw Error(ErrorKind::EmptyCorpus, "results carry no coverage records");

    out << "category,pre_fraction,post_fraction,statistic,p_value,alpha_effective,reject\n";
    for (const Query* query : catalog.of_kind(QueryKind::Coverage)) {
        auto it = by_query.find(query->id);
        if (it == by_query.end()) continue;
        const Counts& c = it->second;
        std::string category = query->filter.value;
        out << category << "," << format_fixed4(double(c.pre_covered) / c.n) << ","
            << format_fixed4(double(c.post_covered) / c.n) << ",";
        try {
            TestResult test =
                chi_squared({{double(c.pre_covered), double(c.n - c.pre_covered)},
                             {double(c.post_covered), double(c.n - c.post_covered)}},
                            config.alpha,
                            static_cast<long>(catalog.of_kind(QueryKind::Coverage).size()));
            out << format_fixed4(test.statistic) << "," << p_value_string(test) << ","
                << test.alpha_effective << "," << (test.reject ? "true" : "false");
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::DegenerateTable) throw;
            out << "n/a,n/a,n/a,degenerate-table";
        }
        out << "\n";
    }
}

// ---- pipeline -------------------------------------------------------------------

namespace {

template <typename Fn>
void stage(const char* name, Fn&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        throw Error(e.kind(), std::string("stage ") + name + ": " + e.what(), e.subject());
    }
}

}  // namespace

void run_pipeline(const PipelineConfig& config) {
    if (!config.input_urls_path.empty())
        stage("discover", [&] {
            StageSummary s = run_discover(config);
            std::cout << "discover: " << s.processed << " pages scanned, " << s.failed
                      << " failed\n";
        });
    if (!config.cdx_url.empty())
        stage("fetch", [&] {
            StageSummary s = run_fetch(config);
            std::cout << "fetch: " << s.processed << " snapshots stored, " << s.skipped
                      << " already present\n";
        });
    stage("extract", [&] {
        StageSummary s = run_extract(config);
        std::cout << "extract: " << s.processed << " extracted, " << s.failed
                  << " rejected\n";
    });
    if (!config.gate_model_path.empty())
        stage("gate", [&] {
            StageSummary s = run_gate_stage(config);
            std::cout << "gate: " << s.processed << " classified, " << s.failed
                      << " invalid\n";
        });
    stage("select-pairs", [&] {
        StageSummary s = run_select_pairs(config);
        std::cout << "select-pairs: " << s.processed << " pairs, " << s.failed
                  << " without a pair\n";
        if (s.processed == 0) throw Error(ErrorKind::EmptyCorpus, "no policy pairs");
    });
    if (!config.labeler_url.empty() || !config.annotations_dir.empty())
        stage("annotate", [&] {
            StageSummary s = run_annotate(config);
            std::cout << "annotate: " << s.processed << " files, " << s.skipped
                      << " already present\n";
        });
    stage("metrics", [&] {
        StageSummary s = run_metrics(config);
        std::cout << "metrics: " << s.processed << " rows\n";
    });
    stage("query", [&] {
        StageSummary s = run_query_stage(config, "all");
        std::cout << "query: " << s.processed << " records\n";
    });
    stage("report", [&] {
        CorpusReport report = build_report(config);
        write_report(report, config.out_dir);
        std::cout << "report: " << report.n_policies << " policies -> " << config.out_dir
                  << "\n";
    });
}

}  // namespace polidiff
