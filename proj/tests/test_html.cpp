#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>

#include "polidiff/corpus.hpp"
#include "polidiff/errors.hpp"
#include "polidiff/html.hpp"
#include "polidiff/store.hpp"
#include "polidiff/url.hpp"

using namespace polidiff;

TEST_CASE("url parsing and resolution") {
    auto base = Url::parse("https://www.example.com/a/b.html?x=1");
    REQUIRE(base.has_value());
    CHECK(base->host == "www.example.com");
    CHECK(base->path == "/a/b.html");
    CHECK(resolve_url(*base, "/privacy")->str() == "https://www.example.com/privacy");
    CHECK(resolve_url(*base, "legal/privacy")->str() ==
          "https://www.example.com/a/legal/privacy");
    CHECK(resolve_url(*base, "../up")->str() == "https://www.example.com/up");
    CHECK(resolve_url(*base, "//cdn.example.com/p")->str() == "https://cdn.example.com/p");
    CHECK(resolve_url(*base, "http://other.org/p")->str() == "http://other.org/p");
    CHECK_FALSE(resolve_url(*base, "javascript:void(0)").has_value());
    CHECK_FALSE(resolve_url(*base, "mailto:a@b.c").has_value());
    CHECK(resolve_url(*base, "/p#frag")->str() == "https://www.example.com/p");
}

TEST_CASE("registrable domains") {
    CHECK(registrable_domain("www.example.com") == "example.com");
    CHECK(registrable_domain("a.b.news.co.uk") == "news.co.uk");
    CHECK(registrable_domain("example.com") == "example.com");
    CHECK(registrable_domain("192.168.0.1") == "192.168.0.1");
}

TEST_CASE("tolerant parsing survives malformed markup") {
    auto doc = html::parse("<p>unclosed <b>bold <p>next</b></p> stray</i> text");
    CHECK(doc != nullptr);
    CHECK(!doc->children.empty());
    CHECK(html::parse("")->children.empty());
    CHECK(html::decode_entities("a &amp; b &lt;c&gt; &#65;&#x42;") == "a & b <c> AB");
}

TEST_CASE("a privacy anchor matching in both places reports url+title") {
    auto base = Url::parse("http://example.com/");
    CandidateScan scan =
        find_candidate_links(R"(<a href="/privacy">Privacy Policy</a>)", *base);
    REQUIRE(scan.links.size() == 1);
    CHECK(scan.links[0].candidate_url == "http://example.com/privacy");
    CHECK(scan.links[0].match_reason.find("privacy@url+title") != std::string::npos);
    CHECK(scan.links[0].match_reason.find("policy@title") != std::string::npos);
}

TEST_CASE("candidate links match the four keywords in href or title") {
    auto base = Url::parse("https://shop.example.com/");
    const char* page = R"(
      <html><body>
        <a href="/about">About us</a>
        <a href="/legal/privacy-notice">Legal</a>
        <a href="/careers">Careers</a>
        <a href="/terms">Privacy Statement</a>
        <a href="/blog">Blog</a>
      </body></html>)";
    CandidateScan scan = find_candidate_links(page, *base);
    REQUIRE(scan.links.size() == 2);
    CHECK(scan.links[0].candidate_url == "https://shop.example.com/legal/privacy-notice");
    CHECK(scan.links[0].match_reason.find("privacy@url") != std::string::npos);
    CHECK(scan.links[0].match_reason.find("notice@url") != std::string::npos);
    CHECK(scan.links[1].candidate_url == "https://shop.example.com/terms");
    CHECK(scan.links[1].match_reason.find("privacy@title") != std::string::npos);
    CHECK(scan.links[1].match_reason.find("statement@title") != std::string::npos);
}

TEST_CASE("candidates dedupe by resolved URL and keep document order") {
    auto base = Url::parse("http://example.com/");
    const char* page = R"(
      <a href="/privacy">Privacy Policy</a>
      <a href="/privacy#section">Privacy again</a>
      <a href="/notice">Notice</a>)";
    CandidateScan scan = find_candidate_links(page, *base);
    REQUIRE(scan.links.size() == 2);
    CHECK(scan.links[0].candidate_url == "http://example.com/privacy");
    CHECK(scan.links[1].candidate_url == "http://example.com/notice");
}

TEST_CASE("cross-domain candidates are dropped unless allowed") {
    auto base = Url::parse("http://example.com/");
    const char* page = R"(<a href="http://other.net/privacy">Privacy</a>)";
    CHECK(find_candidate_links(page, *base).links.empty());
    LinkFinderOptions options;
    options.allow_cross_domain = true;
    CHECK(find_candidate_links(page, *base, options).links.size() == 1);
}

TEST_CASE("no matching anchors or unparseable input yield an empty list") {
    auto base = Url::parse("http://example.com/");
    CHECK(find_candidate_links("<a href=\"/about\">About</a>", *base).links.empty());
    CandidateScan blank = find_candidate_links("   ", *base);
    CHECK(blank.links.empty());
    CHECK(blank.warnings.size() == 1);
}

TEST_CASE("find_candidate_links is idempotent and order-stable") {
    auto base = Url::parse("http://example.com/");
    const char* page = R"(
      <a href="/privacy">Privacy</a><a href="/policy">Policy</a>
      <a href="/statement">Statement</a>)";
    CandidateScan first = find_candidate_links(page, *base);
    CandidateScan second = find_candidate_links(page, *base);
    REQUIRE(first.links.size() == second.links.size());
    for (size_t i = 0; i < first.links.size(); ++i)
        CHECK(first.links[i].candidate_url == second.links[i].candidate_url);
}

namespace {

std::string paragraph(int i) {
    std::string p = "Paragraph " + std::to_string(i) + " explains how we handle data. ";
    p += "It carries enough words to stay above the extraction floor and reads like a "
         "normal policy clause about collection, sharing, and retention of records.";
    return p;
}

std::string fixture_policy_page() {
    std::string page = R"(
<html><head><title>Privacy</title><style>p{color:red}</style>
<script>var tracker = 1;</script></head>
<body>
<header><a href="/">Home</a> <a href="/shop">Shop</a></header>
<nav><ul><li><a href="/a">A</a></li><li><a href="/b">B</a></li></ul></nav>
<main>
)";
    for (int i = 0; i < 8; ++i) page += "<p>" + paragraph(i) + "</p>\n";
    page += R"(</main>
<footer><a href="/contact">Contact</a> <a href="/jobs">Jobs</a> Copyright</footer>
</body></html>)";
    return page;
}

}  // namespace

TEST_CASE("extraction keeps the eight paragraphs and drops the chrome") {
    ExtractedText result = extract_text(fixture_policy_page());
    for (int i = 0; i < 8; ++i)
        CHECK(result.text.find("Paragraph " + std::to_string(i)) != std::string::npos);
    CHECK(result.text.find("Home") == std::string::npos);
    CHECK(result.text.find("Contact") == std::string::npos);
    CHECK(result.text.find("Copyright") == std::string::npos);
    CHECK(result.text.find("tracker") == std::string::npos);
    CHECK(result.text.find("color:red") == std::string::npos);
    CHECK(result.text.find('<') == std::string::npos);
    // paragraph boundaries preserved as blank lines
    CHECK(result.text.find("\n\n") != std::string::npos);
}

TEST_CASE("single long paragraph extracts as its text") {
    std::string body;
    for (int i = 0; i < 60; ++i) body += "Policy text with many ordinary words here. ";
    std::string page = "<html><body><p>" + body + "</p></body></html>";
    ExtractedText result = extract_text(page);
    CHECK(result.text.find("Policy text with many ordinary words") == 0);
}

TEST_CASE("pages with only chrome raise ExtractionEmpty") {
    const char* page = R"(<html><body>
      <nav><a href="/a">A</a><a href="/b">B</a></nav>
      <footer>contact</footer></body></html>)";
    try {
        extract_text(page);
        FAIL("expected ExtractionEmpty");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ExtractionEmpty);
        CHECK(e.subject() == "too-short");
    }
    CHECK_THROWS_AS(extract_text(""), Error);
}

TEST_CASE("terms-of-service heading before the privacy keyword is flagged") {
    std::string page = "<html><body><h1>Terms of Service</h1>";
    for (int i = 0; i < 6; ++i) page += "<p>" + paragraph(i) + "</p>";
    page += "<p>Our privacy practices are described below.</p></body></html>";
    ExtractedText flagged = extract_text(page);
    CHECK(flagged.tos_flagged);

    ExtractedText clean = extract_text(fixture_policy_page());
    CHECK_FALSE(clean.tos_flagged);
}

TEST_CASE("snapshot store round-trip and idempotency") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "polidiff-store-test";
    fs::remove_all(dir);
    SnapshotStore store(dir);

    auto url = Url::parse("https://example.com/privacy");
    std::string id = SnapshotStore::policy_id_for(*url);
    CHECK(store.put_raw(id, url->str(), {2018, 1}, "http://archive/20180101/x",
                        "<html>one</html>"));
    CHECK_FALSE(store.put_raw(id, url->str(), {2018, 1}, "http://archive/other",
                              "<html>two</html>"));  // no duplicate writes
    CHECK(store.read_html(id, {2018, 1}) == "<html>one</html>");

    store.put_extracted(id, {2018, 1}, "clean text", false);
    auto manifest = store.manifest(id);
    REQUIRE(manifest.has_value());
    REQUIRE(manifest->months.size() == 1);
    CHECK(manifest->months[0].status == SnapshotStatus::Extracted);
    CHECK(!manifest->months[0].html_sha256.empty());
    CHECK(!manifest->months[0].text_sha256.empty());
    CHECK(store.read_text(id, {2018, 1}) == "clean text");

    store.mark_rejected(id, {2018, 1}, "too-short");
    CHECK(store.manifest(id)->months[0].reject_reason == "too-short");

    CHECK(store.policy_ids() == std::vector<std::string>{id});
    fs::remove_all(dir);
}
