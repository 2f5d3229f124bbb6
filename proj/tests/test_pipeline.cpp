#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <httplib.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <thread>

#include "polidiff/annotation.hpp"
#include "polidiff/errors.hpp"
#include "polidiff/gate.hpp"
#include "polidiff/gate_fixture.hpp"
#include "polidiff/report.hpp"
#include "polidiff/store.hpp"
#include "polidiff/util.hpp"

using namespace polidiff;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

std::string policy_paragraphs(const std::string& flavor, int n) {
    std::string text;
    for (int i = 0; i < n; ++i) {
        text += "<p>Clause " + std::to_string(i) + " of the " + flavor +
                ". We collect your email address and device identifiers to provide the "
                "service. We may share your browsing history with analytics providers "
                "for analytics and research. You have the right to access your personal "
                "information at any time. We retain your payment details only for as "
                "long as necessary to comply with legal obligations.</p>\n";
    }
    return text;
}

std::string policy_page(const std::string& flavor, int paragraphs = 6) {
    return "<html><head><title>Privacy Policy</title></head><body>"
           "<nav><a href=\"/x\">x</a><a href=\"/y\">y</a></nav><main><h1>Privacy "
           "Policy</h1>" +
           policy_paragraphs(flavor, paragraphs) +
           "</main><footer><a href=\"/c\">contact</a></footer></body></html>";
}

// serves home pages, a CDX endpoint, captures, and a deterministic labeler
class TestSite {
public:
    TestSite() {
        server_.Get(R"(/site(\d)/)", [](const httplib::Request& req, httplib::Response& res) {
            std::string n = req.matches[1];
            res.set_content("<html><body><a href=\"/site" + n +
                                "/privacy\">Privacy Policy</a>"
                                "<a href=\"/site" + n + "/about\">About</a></body></html>",
                            "text/html");
        });
        server_.Get("/cdx", [this](const httplib::Request& req, httplib::Response& res) {
            std::string url = req.get_param_value("url");
            std::string from = req.get_param_value("from");
            std::string to = req.get_param_value("to");
            json rows = json::array();
            rows.push_back({"timestamp", "original"});
            for (const auto& [capture_url, ts, body] : captures_) {
                if (capture_url != url) continue;
                std::string month = ts.substr(0, 6);
                if (!from.empty() && month < from) continue;
                if (!to.empty() && month > to) continue;
                rows.push_back({ts, capture_url});
            }
            res.set_content(rows.dump(), "application/json");
        });
        server_.Get(R"(/web/(\d+)/(.*))",
                    [this](const httplib::Request& req, httplib::Response& res) {
                        std::string ts = req.matches[1];
                        std::string rest = req.matches[2];
                        for (const auto& [capture_url, capture_ts, body] : captures_) {
                            if (capture_ts == ts &&
                                capture_url.find(rest.substr(rest.find('/'))) !=
                                    std::string::npos) {
                                res.set_content(body, "text/html");
                                return;
                            }
                        }
                        res.status = 404;
                    });
        server_.Post("/label", [](const httplib::Request& req, httplib::Response& res) {
            json request = json::parse(req.body);
            json segments = json::array();
            for (const auto& segment : request["segments"]) {
                std::string text = segment.get<std::string>();
                auto prob = [&](const std::string& label) {
                    return double(fnv1a64(text + "|" + label) % 1000) / 999.0;
                };
                json categories;
                for (const char* c :
                     {"first-party-collection-use", "third-party-sharing-collection",
                      "data-retention", "user-access-edit-deletion", "policy-change"})
                    categories[c] = prob(c);
                json attributes;
                for (const char* v : {"advertising", "marketing", "unspecified"})
                    attributes["purpose"][v] = prob(std::string("purpose.") + v);
                for (const char* v : {"contact", "location", "unspecified"})
                    attributes["info-type"][v] = prob(std::string("info.") + v);
                for (const char* v : {"named-third-party", "unspecified"})
                    attributes["third-party-entity"][v] = prob(std::string("tpe.") + v);
                segments.push_back({{"categories", categories}, {"attributes", attributes}});
            }
            res.set_content(json{{"segments", segments}}.dump(), "application/json");
        });
        port_ = server_.bind_to_any_port("127.0.0.1");
        thread_ = std::thread([this] { server_.listen_after_bind(); });
        server_.wait_until_ready();
    }
    ~TestSite() {
        server_.stop();
        thread_.join();
    }

    void add_capture(const std::string& url, const std::string& ts, std::string body) {
        captures_.push_back({url, ts, std::move(body)});
    }

    std::string base() const { return "http://127.0.0.1:" + std::to_string(port_); }

private:
    httplib::Server server_;
    std::thread thread_;
    int port_ = 0;
    std::vector<std::tuple<std::string, std::string, std::string>> captures_;
};

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

TEST_CASE("full pipeline over a local archive, twice, byte-identical report") {
    TestSite site;
    std::string p1 = site.base() + "/site1/privacy";
    std::string p2 = site.base() + "/site2/privacy";
    std::string p3 = site.base() + "/site3/privacy";

    // site1: real change at 2018-06
    site.add_capture(p1, "20170110000000", policy_page("original wording"));
    site.add_capture(p1, "20170612000000", policy_page("original wording"));
    site.add_capture(p1, "20180115000000", policy_page("original wording"));
    site.add_capture(p1, "20180607000000", policy_page("rewritten consent", 9));
    site.add_capture(p1, "20190203000000", policy_page("rewritten consent", 9));
    // site2: never changes
    site.add_capture(p2, "20170320000000", policy_page("steady terms"));
    site.add_capture(p2, "20180210000000", policy_page("steady terms"));
    site.add_capture(p2, "20180911000000", policy_page("steady terms"));
    // site3: nothing after the pivot
    site.add_capture(p3, "20170501000000", policy_page("abandoned page"));
    site.add_capture(p3, "20180301000000", policy_page("abandoned page"));

    fs::path work = fs::temp_directory_path() / "polidiff-pipeline-test";
    fs::remove_all(work);
    fs::create_directories(work);
    fs::path urls = work / "urls.txt";
    write_file_atomic(urls, site.base() + "/site1/\n" + site.base() + "/site2/\n" +
                                site.base() + "/site3/\n");

    // gate model trained on the bundled fixture corpus
    fs::path model_path = work / "model.bin";
    save_model(train_gate(fixture_to_corpus(generate_gate_fixture(400, 42))),
               model_path.string());

    PipelineConfig config;
    config.store_dir = (work / "store").string();
    config.out_dir = (work / "report").string();
    config.input_urls_path = urls.string();
    config.honor_robots = false;  // test server has no robots.txt route
    config.cdx_url = site.base() + "/cdx";
    config.snapshot_url_template = site.base() + "/web/{timestamp}/{url}";
    config.fetch_from = {2016, 1};
    config.fetch_to = {2019, 5};
    config.workers = 2;
    config.politeness_delay_ms = 0;
    config.gate_model_path = model_path.string();
    config.labeler_url = site.base() + "/label";

    run_pipeline(config);

    // pairs manifest: site1 changed, site2 unchanged, site3 has no post
    auto pairs_doc = json::parse(slurp(fs::path(config.store_dir) / "pairs.json"));
    REQUIRE(pairs_doc["policies"].size() == 3);
    int with_pair = 0, no_post = 0, unchanged = 0;
    for (const auto& p : pairs_doc["policies"]) {
        if (p.contains("error")) {
            CHECK(p["error"] == "no-post");
            ++no_post;
            continue;
        }
        ++with_pair;
        if (p["unchanged"].get<bool>()) ++unchanged;
        else CHECK(p["key_change"] == "2018-06");
    }
    CHECK(with_pair == 2);
    CHECK(no_post == 1);
    CHECK(unchanged == 1);

    auto hist = emit_histogram((fs::path(config.store_dir) / "pairs.json").string());
    CHECK(hist["unchanged"] == 1);
    CHECK(hist["2018-06"] == 1);

    // every annotated policy appears in exactly one case bucket per query
    auto report_doc = json::parse(slurp(fs::path(config.out_dir) / "report.json"));
    for (const auto& row : report_doc["compliance_cases"]) {
        double sum = 0;
        for (const char* c : {"worsened", "still-missing", "still-covered", "improved"})
            sum += row[c].get<double>();
        CHECK(sum == doctest::Approx(100.0).epsilon(1e-4));
    }
    for (const auto& row : report_doc["specificity_cases"]) {
        double sum = 0;
        for (const char* c : {"not-covered", "same-specificity", "fully-specified",
                              "worse", "improved"})
            sum += row[c].get<double>();
        CHECK(sum == doctest::Approx(100.0).epsilon(1e-4));
    }
    CHECK(report_doc["header"]["n_policies"] == 2);
    CHECK(report_doc["similarity_deciles"].size() == 11);

    // regenerate: byte-identical artifacts
    std::vector<std::string> files = {"report.json", "compliance_cases.csv",
                                      "specificity_cases.csv", "coverage.csv",
                                      "metrics_tests.csv", "similarity_deciles.csv",
                                      "key_change_histogram.csv"};
    std::map<std::string, std::string> first_run;
    for (const auto& f : files) first_run[f] = slurp(fs::path(config.out_dir) / f);
    CorpusReport again = build_report(config);
    write_report(again, config.out_dir);
    for (const auto& f : files)
        CHECK(first_run[f] == slurp(fs::path(config.out_dir) / f));

    // stages are resumable: rerunning fetch performs no duplicate writes
    StageSummary refetch = run_fetch(config);
    CHECK(refetch.processed == 0);
    CHECK(refetch.skipped == 10);

    fs::remove_all(work);
}

TEST_CASE("ingest path with a second annotation source reports disagreement") {
    fs::path work = fs::temp_directory_path() / "polidiff-ingest-test";
    fs::remove_all(work);
    fs::create_directories(work / "ann_a");
    fs::create_directories(work / "ann_b");

    PipelineConfig config;
    config.store_dir = (work / "store").string();
    config.out_dir = (work / "report").string();

    // store with two policies, two extracted snapshots each
    SnapshotStore store(config.store_dir);
    std::string long_a(600, 'a');
    std::string long_b(600, 'b');
    for (int i = 0; i < 2; ++i) {
        std::string id = "policy-" + std::to_string(i);
        store.put_raw(id, "http://example.com/" + id, {2018, 1}, "http://a", "<p>x</p>");
        store.put_raw(id, "http://example.com/" + id, {2018, 9}, "http://a", "<p>y</p>");
        store.put_extracted(id, {2018, 1}, "Data is collected. We keep " + long_a, false);
        store.put_extracted(id, {2018, 9}, "Data is shared. We keep " + long_b, false);
    }
    run_select_pairs(config);

    Taxonomy tax = default_taxonomy();
    auto write_annotation = [&](const fs::path& dir, const std::string& policy_id,
                                const std::string& version, double retention_prob) {
        json doc;
        doc["policy_id"] = policy_id;
        doc["version"] = version;
        doc["segments"] = json::array();
        doc["segments"].push_back(
            {{"text", "We retain data for a year."},
             {"categories",
              {{"data-retention", retention_prob}, {"first-party-collection-use", 0.9}}},
             {"attributes", {{"purpose", {{"legal-requirement", 0.9}}}}}});
        write_file_atomic(dir / (policy_id + "." + version + ".json"), doc.dump());
    };
    for (int i = 0; i < 2; ++i) {
        std::string id = "policy-" + std::to_string(i);
        write_annotation(work / "ann_a", id, "pre", 0.9);
        write_annotation(work / "ann_a", id, "post", 0.9);
        write_annotation(work / "ann_b", id, "pre", 0.9);
        // source B disagrees on post data-retention coverage
        write_annotation(work / "ann_b", id, "post", 0.1);
    }
    config.annotations_dir = (work / "ann_a").string();
    config.annotations_b_dir = (work / "ann_b").string();
    run_annotate(config);

    // dependency sidecar for one policy version flips its passive index
    fs::create_directories(work / "deps");
    write_file_atomic(work / "deps" / "policy-0.pre.deps",
                      "0 Data nsubjpass\n1 is auxpass\n2 collected ROOT\n\n"
                      "0 We nsubj\n1 keep ROOT\n2 records dobj\n\n"
                      "0 Files nsubj\n1 sit ROOT\n\n0 They nsubj\n1 wait ROOT\n");
    config.dep_annotations_dir = (work / "deps").string();
    run_metrics(config);
    {
        auto metrics_doc = json::parse(slurp(fs::path(config.store_dir) / "metrics.json"));
        bool found = false;
        for (const auto& row : metrics_doc["rows"]) {
            if (row["policy_id"] == "policy-0" && row["version"] == "pre") {
                CHECK(row["passive_index"].get<double>() == doctest::Approx(25.0));
                found = true;
            }
        }
        CHECK(found);
    }
    // selector subsets: 7 ICO and 9 coverage records per policy pair
    CHECK(run_query_stage(config, "ico").processed == 2 * 7);
    CHECK(run_query_stage(config, "cov").processed == 2 * 9);
    CHECK(run_query_stage(config, "spec").processed == 2 * 8);
    run_query_stage(config, "all");

    CorpusReport report = build_report(config);
    REQUIRE(report.disagreement.has_value());
    // differing queries per policy: COV-7 (data-retention), SPEC-Q8 -> 2 of 24
    CHECK(*report.disagreement == doctest::Approx(2.0 / 24.0).epsilon(1e-6));
    CHECK(report.disagreement_policies == 2);
    CHECK(report.disagreement_queries == 24);

    write_report(report, config.out_dir);
    CHECK(fs::exists(fs::path(config.out_dir) / "disagreement.csv"));

    fs::remove_all(work);
}

TEST_CASE("histogram over an empty pairs manifest is empty") {
    fs::path work = fs::temp_directory_path() / "polidiff-hist-test";
    fs::remove_all(work);
    fs::create_directories(work);
    write_file_atomic(work / "pairs.json",
                      R"({"pivot": "2018-05", "threshold": 0.95, "policies": []})");
    CHECK(emit_histogram((work / "pairs.json").string()).empty());
    CHECK_THROWS_AS(emit_histogram((work / "missing.json").string()), Error);
    fs::remove_all(work);
}

TEST_CASE("robots-skipped months are recorded in the manifest") {
    fs::path work = fs::temp_directory_path() / "polidiff-skip-test";
    fs::remove_all(work);
    SnapshotStore store((work / "store").string());
    store.record_skipped("pid", "http://example.com/privacy", {2018, 3},
                         "robots-disallowed");
    auto manifest = store.manifest("pid");
    REQUIRE(manifest.has_value());
    REQUIRE(manifest->months.size() == 1);
    CHECK(manifest->months[0].status == SnapshotStatus::Rejected);
    CHECK(manifest->months[0].reject_reason == "robots-disallowed");
    // recording twice stays a single entry
    store.record_skipped("pid", "http://example.com/privacy", {2018, 3}, "robots-disallowed");
    CHECK(store.manifest("pid")->months.size() == 1);
    fs::remove_all(work);
}

TEST_CASE("query stage selector validates and EmptyCorpus surfaces") {
    fs::path work = fs::temp_directory_path() / "polidiff-empty-test";
    fs::remove_all(work);
    PipelineConfig config;
    config.store_dir = (work / "store").string();
    fs::create_directories(config.store_dir);
    CHECK_THROWS_AS(run_query_stage(config, "all"), Error);
    try {
        run_query_stage(config, "all");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::EmptyCorpus);
    }
    CHECK_THROWS_AS(run_query_stage(config, "bogus"), Error);
    fs::remove_all(work);
}
