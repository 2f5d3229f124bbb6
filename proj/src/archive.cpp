#include "polidiff/archive.hpp"

#include <chrono>
#include <map>
#include <mutex>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "polidiff/errors.hpp"

namespace polidiff {

namespace {

// per-host politeness: remember the last request time and sleep out the gap
class PolitenessGate {
public:
    void wait(const std::string& host, int delay_ms) {
        if (delay_ms <= 0) return;
        std::chrono::steady_clock::time_point wake;
        {
            std::lock_guard<std::mutex> lock(mutex_);
            auto now = std::chrono::steady_clock::now();
            auto& next_ok = next_ok_[host];
            if (next_ok < now) next_ok = now;
            wake = next_ok;
            next_ok += std::chrono::milliseconds(delay_ms);
        }
        std::this_thread::sleep_until(wake);
    }

private:
    std::mutex mutex_;
    std::map<std::string, std::chrono::steady_clock::time_point> next_ok_;
};

PolitenessGate& politeness() {
    static PolitenessGate gate;
    return gate;
}

struct SplitUrl {
    std::string origin;  // scheme://host:port
    std::string path_query;
    std::string host;
};

SplitUrl split_absolute(const std::string& absolute) {
    auto parsed = Url::parse(absolute);
    if (!parsed)
        throw Error(ErrorKind::ArchiveUnreachable, "unsupported URL '" + absolute + "'");
    SplitUrl out;
    out.origin = parsed->scheme + "://" + parsed->host;
    if (!parsed->port.empty()) out.origin += ":" + parsed->port;
    out.path_query = parsed->path;
    if (!parsed->query.empty()) out.path_query += "?" + parsed->query;
    out.host = parsed->host;
    return out;
}

std::string percent_encode(std::string_view s) {
    static const char* hex = "0123456789ABCDEF";
    std::string out;
    for (unsigned char c : s) {
        if (std::isalnum(c) || c == '-' || c == '_' || c == '.' || c == '~') {
            out.push_back(static_cast<char>(c));
        } else {
            out.push_back('%');
            out.push_back(hex[c >> 4]);
            out.push_back(hex[c & 0xF]);
        }
    }
    return out;
}

// GET with retries; 403 is surfaced to the caller (robots), other failures
// retry and finally throw.
httplib::Result get_with_retries(const std::string& absolute, int timeout_ms, int retries,
                                 int politeness_delay_ms) {
    SplitUrl split = split_absolute(absolute);
    for (int attempt = 0; attempt <= retries; ++attempt) {
        politeness().wait(split.host, politeness_delay_ms);
        httplib::Client client(split.origin);
        client.set_connection_timeout(0, timeout_ms * 1000);
        client.set_read_timeout(timeout_ms / 1000, (timeout_ms % 1000) * 1000);
        client.set_follow_location(true);
        auto res = client.Get(split.path_query);
        if (res && (res->status == 200 || res->status == 403)) return res;
        if (attempt == retries) {
            std::string detail = res ? ("HTTP " + std::to_string(res->status))
                                     : httplib::to_string(res.error());
            throw Error(ErrorKind::ArchiveUnreachable,
                        "GET " + absolute + " failed after " +
                            std::to_string(retries + 1) + " attempts (" + detail + ")");
        }
    }
    throw Error(ErrorKind::ArchiveUnreachable, "unreachable");
}

std::string replace_all(std::string haystack, std::string_view needle,
                        std::string_view replacement) {
    size_t pos = 0;
    while ((pos = haystack.find(needle, pos)) != std::string::npos) {
        haystack.replace(pos, needle.size(), replacement);
        pos += replacement.size();
    }
    return haystack;
}

}  // namespace

YearMonth ArchiveCapture::month() const {
    if (timestamp.size() < 6) return {};
    int y = std::stoi(timestamp.substr(0, 4));
    int m = std::stoi(timestamp.substr(4, 2));
    return {y, m};
}

std::string http_get(const std::string& absolute_url, int timeout_ms, int retries,
                     int politeness_delay_ms) {
    auto res = get_with_retries(absolute_url, timeout_ms, retries, politeness_delay_ms);
    if (res->status != 200)
        throw Error(ErrorKind::ArchiveUnreachable,
                    "GET " + absolute_url + " -> HTTP " + std::to_string(res->status));
    return res->body;
}

bool robots_allows(const Url& url, int timeout_ms) {
    std::string origin = url.scheme + "://" + url.host;
    if (!url.port.empty()) origin += ":" + url.port;
    httplib::Client client(origin);
    client.set_connection_timeout(0, timeout_ms * 1000);
    client.set_read_timeout(timeout_ms / 1000, (timeout_ms % 1000) * 1000);
    auto res = client.Get("/robots.txt");
    if (!res || res->status != 200) return true;  // no robots.txt, allowed

    bool star_group = false;
    for (const auto& raw_line : split_lines(res->body)) {
        std::string line = trim(raw_line.substr(0, raw_line.find('#')));
        if (line.empty()) continue;
        size_t colon = line.find(':');
        if (colon == std::string::npos) continue;
        std::string field = to_lower(trim(line.substr(0, colon)));
        std::string value = trim(line.substr(colon + 1));
        if (field == "user-agent") {
            star_group = (value == "*");
        } else if (field == "disallow" && star_group && !value.empty()) {
            if (url.path.rfind(value, 0) == 0) return false;
        }
    }
    return true;
}

std::vector<ArchiveCapture> list_captures(const Url& target, YearMonth from, YearMonth to,
                                          const ArchiveClientOptions& options) {
    if (from > to)
        throw Error(ErrorKind::BadMonthRange,
                    "from " + from.str() + " is after to " + to.str());
    char range_from[16], range_to[16];
    std::snprintf(range_from, sizeof range_from, "%04d%02d", from.year, from.month);
    std::snprintf(range_to, sizeof range_to, "%04d%02d", to.year, to.month);

    std::string query_url = options.cdx_url + "?url=" + percent_encode(target.str()) +
                            "&from=" + range_from + "&to=" + range_to +
                            "&output=json&fl=timestamp,original";
    std::string body = http_get(query_url, options.timeout_ms, options.retries,
                                options.politeness_delay_ms);

    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(body);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::ArchiveUnreachable,
                    std::string("CDX response is not JSON: ") + e.what());
    }
    std::vector<ArchiveCapture> captures;
    if (!doc.is_array()) return captures;
    for (const auto& row : doc) {
        if (!row.is_array() || row.size() < 2) continue;
        std::string ts = row[0].get<std::string>();
        if (ts == "timestamp") continue;  // header row
        captures.push_back({ts, row[1].get<std::string>()});
    }
    std::sort(captures.begin(), captures.end(),
              [](const ArchiveCapture& a, const ArchiveCapture& b) {
                  return a.timestamp < b.timestamp;
              });
    // range re-check; some endpoints ignore from/to
    std::erase_if(captures, [&](const ArchiveCapture& c) {
        YearMonth m = c.month();
        return m < from || m > to;
    });
    return captures;
}

FetchResult fetch_archive_snapshots(const std::string& policy_id, const Url& target,
                                    YearMonth from, YearMonth to,
                                    const ArchiveClientOptions& options,
                                    const std::vector<YearMonth>& already_stored) {
    FetchResult result;
    std::vector<ArchiveCapture> captures = list_captures(target, from, to, options);

    // earliest capture of each month not yet stored
    std::map<std::string, ArchiveCapture> by_month;
    for (const auto& capture : captures) {
        YearMonth month = capture.month();
        if (std::find(already_stored.begin(), already_stored.end(), month) !=
            already_stored.end())
            continue;
        std::string key = month.str();
        if (!by_month.count(key)) by_month[key] = capture;
    }

    for (const auto& [month_key, capture] : by_month) {
        std::string snapshot_url =
            replace_all(replace_all(options.snapshot_url_template, "{timestamp}",
                                    capture.timestamp),
                        "{url}", capture.original_url);
        auto res = get_with_retries(snapshot_url, options.timeout_ms, options.retries,
                                    options.politeness_delay_ms);
        YearMonth month = *YearMonth::parse(month_key);
        if (res->status == 403) {
            result.skipped.push_back({month, "robots-disallowed"});
            continue;
        }
        PolicySnapshot snapshot;
        snapshot.policy_id = policy_id;
        snapshot.timestamp = month;
        snapshot.archive_url = snapshot_url;
        snapshot.raw_html = res->body;
        snapshot.status = SnapshotStatus::Raw;
        result.snapshots.push_back(std::move(snapshot));
    }
    return result;
}

}  // namespace polidiff
