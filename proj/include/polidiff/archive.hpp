#pragma once

#include <string>
#include <vector>

#include "polidiff/corpus.hpp"
#include "polidiff/url.hpp"
#include "polidiff/util.hpp"

namespace polidiff {

struct ArchiveClientOptions {
    // CDX-style availability endpoint; GET with url/from/to query parameters
    // returning a JSON array of [timestamp, original] rows (a header row is
    // tolerated).
    std::string cdx_url;
    // capture download template with {timestamp} and {url} placeholders
    std::string snapshot_url_template;
    int timeout_ms = 15000;
    int retries = 2;                // attempts = retries + 1
    int politeness_delay_ms = 0;    // per-host spacing between requests
};

struct ArchiveCapture {
    std::string timestamp;  // YYYYMMDDhhmmss
    std::string original_url;
    YearMonth month() const;
};

// All captures in [from, to], ascending by timestamp.
// Errors: BadMonthRange (from > to), ArchiveUnreachable (after retries).
std::vector<ArchiveCapture> list_captures(const Url& target, YearMonth from, YearMonth to,
                                          const ArchiveClientOptions& options);

struct SkippedMonth {
    YearMonth month{};
    std::string reason;  // "robots-disallowed", ...
};

struct FetchResult {
    std::vector<PolicySnapshot> snapshots;  // at most one per month, earliest capture
    std::vector<SkippedMonth> skipped;
};

// Downloads the earliest capture of each month in range. Months without
// captures are absent. A robots-refused capture (HTTP 403) is recorded in
// `skipped` and does not fail the fetch. Months listed in `already_stored`
// are not downloaded again.
FetchResult fetch_archive_snapshots(const std::string& policy_id, const Url& target,
                                    YearMonth from, YearMonth to,
                                    const ArchiveClientOptions& options,
                                    const std::vector<YearMonth>& already_stored = {});

// Plain GET helper used by the discover stage (live home pages); honors a
// per-host politeness delay. Returns the body or throws ArchiveUnreachable.
std::string http_get(const std::string& absolute_url, int timeout_ms, int retries,
                     int politeness_delay_ms);

// robots.txt check for live fetches: fetches <scheme>://<host>/robots.txt and
// evaluates User-agent: * Disallow rules against the URL path. Unreachable
// robots.txt counts as allowed.
bool robots_allows(const Url& url, int timeout_ms);

}  // namespace polidiff
