#include "polidiff/corpus.hpp"

#include <algorithm>
#include <set>

#include "polidiff/errors.hpp"
#include "polidiff/html.hpp"

namespace polidiff {

namespace {

const std::vector<std::string>& policy_keywords() {
    static const std::vector<std::string> kKeywords = {"privacy", "statement",
                                                       "notice", "policy"};
    return kKeywords;
}

void collect_anchors(const html::Node& node, std::vector<const html::Node*>& out) {
    if (node.type == html::Node::Type::Element && node.tag == "a") out.push_back(&node);
    for (const auto& child : node.children) collect_anchors(*child, out);
}

}  // namespace

CandidateScan find_candidate_links(std::string_view home_page_html, const Url& base_url,
                                   const LinkFinderOptions& options) {
    CandidateScan scan;
    if (is_blank(home_page_html)) {
        scan.warnings.push_back("empty document at " + base_url.str());
        return scan;
    }
    auto document = html::parse(home_page_html);

    std::vector<const html::Node*> anchors;
    collect_anchors(*document, anchors);
    if (anchors.empty()) return scan;

    std::set<std::string> seen;
    for (const html::Node* anchor : anchors) {
        std::string href = anchor->attr("href");
        if (trim(href).empty()) continue;
        std::optional<Url> resolved = resolve_url(base_url, href);
        if (!resolved) continue;

        if (!options.allow_cross_domain &&
            registrable_domain(resolved->host) != registrable_domain(base_url.host))
            continue;

        std::string title = anchor->inner_text();
        std::string title_attr = anchor->attr("title");

        std::string reason;
        for (const auto& keyword : policy_keywords()) {
            bool in_url = contains_ci(href, keyword);
            bool in_title = contains_ci(title, keyword) || contains_ci(title_attr, keyword);
            if (!in_url && !in_title) continue;
            if (!reason.empty()) reason += ",";
            reason += keyword + "@";
            if (in_url && in_title) reason += "url+title";
            else if (in_url) reason += "url";
            else reason += "title";
        }
        if (reason.empty()) continue;

        std::string absolute = resolved->str();
        if (!seen.insert(absolute).second) continue;  // first occurrence wins
        scan.links.push_back({base_url.str(), absolute, reason});
    }
    return scan;
}

namespace {

const std::set<std::string, std::less<>>& dropped_tags() {
    static const std::set<std::string, std::less<>> kDropped = {
        "script", "style", "noscript", "nav",    "header", "footer",
        "aside",  "form",  "button",   "select", "iframe", "svg",
        "head",   "template"};
    return kDropped;
}

const std::set<std::string, std::less<>>& dropped_tokens() {
    static const std::set<std::string, std::less<>> kTokens = {
        "nav", "navbar", "navigation", "menu",       "footer",
        "header", "sidebar", "breadcrumb", "breadcrumbs", "cookie-banner"};
    return kTokens;
}

bool marked_as_chrome(const html::Node& node) {
    std::string role = to_lower(node.attr("role"));
    if (role == "navigation" || role == "banner" || role == "contentinfo") return true;
    // exact token match only; "navigate-help" must not trip on "nav"
    for (const char* attr : {"id", "class"}) {
        std::string value = to_lower(node.attr(attr));
        size_t start = 0;
        for (size_t i = 0; i <= value.size(); ++i) {
            if (i == value.size() || std::isspace(static_cast<unsigned char>(value[i]))) {
                std::string token = value.substr(start, i - start);
                if (dropped_tokens().count(token)) return true;
                start = i + 1;
            }
        }
    }
    return false;
}

bool is_block_tag(const std::string& tag) {
    static const std::set<std::string, std::less<>> kBlocks = {
        "p",  "div", "li", "h1", "h2", "h3", "h4", "h5", "h6",
        "td", "th",  "blockquote", "pre", "dd", "dt", "section", "article",
        "main", "body", "html", "ul", "ol", "table", "tr", "figcaption",
        "summary", "details", "center"};
    return kBlocks.count(tag) > 0;
}

bool is_heading_tag(const std::string& tag) {
    return tag.size() == 2 && tag[0] == 'h' && tag[1] >= '1' && tag[1] <= '6';
}

struct BlockStats {
    std::string text;
    std::size_t text_chars = 0;
    std::size_t anchor_chars = 0;
    std::size_t tag_count = 0;
};

//: text and markup accounting for one candidate block
void accumulate(const html::Node& node, BlockStats& stats, bool inside_anchor) {
    if (node.type == html::Node::Type::Text) {
        std::string t = normalize_whitespace(node.text);
        if (t.empty()) return;
        if (!stats.text.empty()) stats.text += ' ';
        stats.text += t;
        stats.text_chars += t.size();
        if (inside_anchor) stats.anchor_chars += t.size();
        return;
    }
    if (node.type == html::Node::Type::Element) {
        ++stats.tag_count;
        if (node.tag == "br") {
            if (!stats.text.empty() && stats.text.back() != ' ') stats.text += ' ';
        }
        inside_anchor = inside_anchor || node.tag == "a";
    }
    for (const auto& child : node.children) accumulate(*child, stats, inside_anchor);
}

// true when the node contains a nested block element (then it is a container,
// and its children are the paragraph candidates)
bool has_block_child(const html::Node& node) {
    for (const auto& child : node.children) {
        if (child->type == html::Node::Type::Element && is_block_tag(child->tag))
            return true;
    }
    return false;
}

struct Paragraph {
    std::string text;
    bool heading = false;
};

void walk(const html::Node& node, const ExtractOptions& options,
          std::vector<Paragraph>& out) {
    if (node.type == html::Node::Type::Element) {
        if (dropped_tags().count(node.tag)) return;
        if (marked_as_chrome(node)) return;
    }

    bool leaf_block = node.type == html::Node::Type::Element &&
                      is_block_tag(node.tag) && !has_block_child(node);
    if (leaf_block) {
        BlockStats stats;
        for (const auto& child : node.children) accumulate(*child, stats, false);
        if (stats.text_chars == 0) return;
        bool heading = is_heading_tag(node.tag);
        bool short_exempt = heading || node.tag == "li" || node.tag == "td" ||
                            node.tag == "th" || node.tag == "dt" || node.tag == "dd";
        double link_density = static_cast<double>(stats.anchor_chars) /
                              static_cast<double>(stats.text_chars);
        double chars_per_tag = static_cast<double>(stats.text_chars) /
                               static_cast<double>(stats.tag_count + 1);
        if (link_density > options.max_link_density) return;
        if (chars_per_tag < options.min_chars_per_tag) return;
        if (!short_exempt && stats.text_chars < options.min_block_chars) return;
        out.push_back({std::move(stats.text), heading});
        return;
    }

    for (const auto& child : node.children) walk(*child, options, out);

    // text sitting directly in a container still counts as a paragraph
    if (node.type == html::Node::Type::Text) {
        std::string t = normalize_whitespace(node.text);
        if (t.size() >= options.min_block_chars) out.push_back({std::move(t), false});
    }
}

}  // namespace

const char* snapshot_status_name(SnapshotStatus status) {
    switch (status) {
        case SnapshotStatus::Raw: return "raw";
        case SnapshotStatus::Extracted: return "extracted";
        case SnapshotStatus::Rejected: return "rejected";
    }
    return "?";
}

std::optional<SnapshotStatus> snapshot_status_from_name(std::string_view name) {
    if (name == "raw") return SnapshotStatus::Raw;
    if (name == "extracted") return SnapshotStatus::Extracted;
    if (name == "rejected") return SnapshotStatus::Rejected;
    return std::nullopt;
}

ExtractedText extract_text(std::string_view raw_html, const ExtractOptions& options) {
    if (is_blank(raw_html))
        throw Error(ErrorKind::ExtractionEmpty, "empty input document", "too-short");

    auto document = html::parse(raw_html);
    std::vector<Paragraph> paragraphs;
    walk(*document, options, paragraphs);

    ExtractedText result;
    for (const auto& para : paragraphs) {
        if (!result.text.empty()) result.text += "\n\n";
        result.text += para.text;
    }
    if (result.text.size() < options.min_chars)
        throw Error(ErrorKind::ExtractionEmpty,
                    "cleaned text has " + std::to_string(result.text.size()) +
                        " chars, floor is " + std::to_string(options.min_chars),
                    "too-short");

    // flag texts where a terms-of-service heading precedes the first privacy keyword
    size_t first_privacy = std::string::npos;
    {
        std::string lowered = to_lower(result.text);
        first_privacy = lowered.find("privacy");
    }
    size_t running = 0;
    for (const auto& para : paragraphs) {
        if (para.heading &&
            (contains_ci(para.text, "terms of service") ||
             contains_ci(para.text, "terms and conditions") ||
             contains_ci(para.text, "terms of use"))) {
            if (first_privacy == std::string::npos || running < first_privacy) {
                result.tos_flagged = true;
                break;
            }
        }
        running += para.text.size() + 2;
    }
    return result;
}

}  // namespace polidiff
