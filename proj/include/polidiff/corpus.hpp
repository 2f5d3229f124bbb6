#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polidiff/url.hpp"
#include "polidiff/util.hpp"

namespace polidiff {

// A privacy-policy link candidate found on a home page.
struct CandidateLink {
    std::string source_url;
    std::string candidate_url;  // absolute, resolved
    std::string match_reason;   // e.g. "privacy@url", "statement@title"
};

struct CandidateScan {
    std::vector<CandidateLink> links;
    std::vector<std::string> warnings;
};

struct LinkFinderOptions {
    bool allow_cross_domain = false;
};

// Anchors whose href or link text matches any of {privacy, statement,
// notice, policy}, case-insensitive, deduplicated by resolved absolute URL,
// document order preserved. Unparseable input yields an empty list plus a
// warning record; it never throws.
CandidateScan find_candidate_links(std::string_view home_page_html, const Url& base_url,
                                   const LinkFinderOptions& options = {});

// ---- text extraction -----------------------------------------------------

struct ExtractOptions {
    // below this many characters the result counts as empty (rejected "too-short")
    std::size_t min_chars = 500;
    // blocks whose anchor-text share exceeds this are dropped as link farms
    double max_link_density = 0.66;
    // blocks with fewer text chars per contained tag are dropped as markup soup
    double min_chars_per_tag = 8.0;
    // prose blocks shorter than this are dropped (headings and list items exempt)
    std::size_t min_block_chars = 25;
};

struct ExtractedText {
    std::string text;       // paragraphs separated by blank lines
    bool tos_flagged = false;  // a terms-of-service heading precedes the first
                               // privacy keyword; operator decides disposition
};

// Removes script/style/nav/header/footer and low-density blocks, keeps body
// text with paragraph boundaries as blank lines.
// Errors: ExtractionEmpty when the cleaned text is under options.min_chars.
ExtractedText extract_text(std::string_view raw_html, const ExtractOptions& options = {});

// Snapshot lifecycle inside the store.
enum class SnapshotStatus { Raw, Extracted, Rejected };

const char* snapshot_status_name(SnapshotStatus status);
std::optional<SnapshotStatus> snapshot_status_from_name(std::string_view name);

struct PolicySnapshot {
    std::string policy_id;
    YearMonth timestamp{};
    std::string archive_url;
    std::string raw_html;
    std::string extracted_text;
    SnapshotStatus status = SnapshotStatus::Raw;
    std::string reject_reason;
    bool tos_flagged = false;
};

}  // namespace polidiff
