#include "polidiff/url.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <vector>

#include "polidiff/util.hpp"

namespace polidiff {

namespace {

// collapse "." and ".." path segments
std::string normalize_path(std::string_view path) {
    std::vector<std::string> segments;
    bool trailing_slash = !path.empty() && path.back() == '/';
    size_t i = 0;
    while (i < path.size()) {
        while (i < path.size() && path[i] == '/') ++i;
        size_t start = i;
        while (i < path.size() && path[i] != '/') ++i;
        std::string seg(path.substr(start, i - start));
        if (seg.empty() || seg == ".") continue;
        if (seg == "..") {
            if (!segments.empty()) segments.pop_back();
        } else {
            segments.push_back(std::move(seg));
        }
    }
    std::string out = "/";
    for (size_t k = 0; k < segments.size(); ++k) {
        out += segments[k];
        if (k + 1 < segments.size()) out += '/';
    }
    if (trailing_slash && out.back() != '/') out += '/';
    return out;
}

std::string_view strip_fragment(std::string_view s) {
    size_t hash = s.find('#');
    return hash == std::string_view::npos ? s : s.substr(0, hash);
}

}  // namespace

std::string Url::str() const {
    std::string out = scheme + "://" + host;
    if (!port.empty()) out += ":" + port;
    out += path.empty() ? "/" : path;
    if (!query.empty()) out += "?" + query;
    return out;
}

std::optional<Url> Url::parse(std::string_view raw) {
    raw = strip_fragment(raw);
    size_t scheme_end = raw.find("://");
    if (scheme_end == std::string_view::npos || scheme_end == 0) return std::nullopt;
    Url url;
    url.scheme = to_lower(raw.substr(0, scheme_end));
    if (url.scheme != "http" && url.scheme != "https") return std::nullopt;
    size_t rest = scheme_end + 3;
    size_t authority_end = raw.find_first_of("/?", rest);
    std::string_view authority = raw.substr(
        rest, authority_end == std::string_view::npos ? raw.size() - rest
                                                      : authority_end - rest);
    // userinfo is not supported; ':' splits host and port
    size_t colon = authority.rfind(':');
    if (colon != std::string_view::npos &&
        authority.find(']') == std::string_view::npos) {  // not IPv6
        url.host = to_lower(authority.substr(0, colon));
        url.port = std::string(authority.substr(colon + 1));
    } else {
        url.host = to_lower(authority);
    }
    if (url.host.empty()) return std::nullopt;
    if ((url.scheme == "http" && url.port == "80") ||
        (url.scheme == "https" && url.port == "443"))
        url.port.clear();
    if (authority_end == std::string_view::npos) {
        url.path = "/";
        return url;
    }
    std::string_view tail = raw.substr(authority_end);
    size_t qmark = tail.find('?');
    if (qmark == std::string_view::npos) {
        url.path = normalize_path(tail);
    } else {
        url.path = normalize_path(tail.substr(0, qmark));
        url.query = std::string(tail.substr(qmark + 1));
    }
    if (url.path.empty()) url.path = "/";
    return url;
}

std::optional<Url> resolve_url(const Url& base, std::string_view href) {
    href = strip_fragment(href);
    std::string trimmed = trim(href);
    if (trimmed.empty()) return std::nullopt;
    std::string lowered = to_lower(trimmed);
    for (std::string_view bad : {"javascript:", "mailto:", "data:", "tel:", "ftp:"})
        if (lowered.rfind(bad, 0) == 0) return std::nullopt;

    if (lowered.rfind("http://", 0) == 0 || lowered.rfind("https://", 0) == 0)
        return Url::parse(trimmed);
    if (trimmed.rfind("//", 0) == 0)  // protocol-relative
        return Url::parse(base.scheme + ":" + trimmed);

    Url url = base;
    url.query.clear();
    if (trimmed[0] == '/') {
        size_t qmark = trimmed.find('?');
        url.path = normalize_path(qmark == std::string::npos ? trimmed
                                                             : trimmed.substr(0, qmark));
        if (qmark != std::string::npos) url.query = trimmed.substr(qmark + 1);
        return url;
    }
    if (trimmed[0] == '?') {
        url.path = base.path;
        url.query = trimmed.substr(1);
        return url;
    }
    // merge with the base path directory
    std::string dir = base.path.substr(0, base.path.rfind('/') + 1);
    size_t qmark = trimmed.find('?');
    std::string rel = qmark == std::string::npos ? trimmed : trimmed.substr(0, qmark);
    url.path = normalize_path(dir + rel);
    if (qmark != std::string::npos) url.query = trimmed.substr(qmark + 1);
    return url;
}

std::string registrable_domain(std::string_view host) {
    static const std::set<std::string, std::less<>> kTwoLevelSuffixes = {
        "co.uk", "org.uk", "gov.uk", "ac.uk",  "me.uk",  "co.jp", "or.jp",
        "ne.jp", "ac.jp",  "com.au", "net.au", "org.au", "co.nz", "com.br",
        "com.cn", "com.mx", "co.in",  "co.za",  "com.sg", "com.tr", "com.ar",
        "com.hk", "co.kr",  "com.tw",
    };
    std::string h = to_lower(host);
    // bare IPv4 stays whole
    if (!h.empty() && std::all_of(h.begin(), h.end(), [](unsigned char c) {
            return std::isdigit(c) || c == '.';
        }))
        return h;
    std::vector<std::string> labels;
    size_t start = 0;
    for (size_t i = 0; i <= h.size(); ++i) {
        if (i == h.size() || h[i] == '.') {
            labels.push_back(h.substr(start, i - start));
            start = i + 1;
        }
    }
    if (labels.size() <= 2) return h;
    std::string last_two = labels[labels.size() - 2] + "." + labels.back();
    size_t take = kTwoLevelSuffixes.count(last_two) ? 3 : 2;
    std::string out;
    for (size_t i = labels.size() - take; i < labels.size(); ++i) {
        if (!out.empty()) out += '.';
        out += labels[i];
    }
    return out;
}

}  // namespace polidiff
