#include "polidiff/util.hpp"

#include <array>
#include <cctype>
#include <cstdio>
#include <cstring>

#include "polidiff/errors.hpp"

namespace polidiff {

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::MissingCategory: return "MissingCategory";
        case ErrorKind::MissingAttribute: return "MissingAttribute";
        case ErrorKind::DuplicateValue: return "DuplicateValue";
        case ErrorKind::SchemaError: return "SchemaError";
        case ErrorKind::UnknownLabel: return "UnknownLabel";
        case ErrorKind::EndpointUnavailable: return "EndpointUnavailable";
        case ErrorKind::MalformedResponse: return "MalformedResponse";
        case ErrorKind::EmptyInput: return "EmptyInput";
        case ErrorKind::ArchiveUnreachable: return "ArchiveUnreachable";
        case ErrorKind::RobotsDisallowed: return "RobotsDisallowed";
        case ErrorKind::ExtractionEmpty: return "ExtractionEmpty";
        case ErrorKind::BadMonthRange: return "BadMonthRange";
        case ErrorKind::TooShort: return "TooShort";
        case ErrorKind::InsufficientData: return "InsufficientData";
        case ErrorKind::NoPair: return "NoPair";
        case ErrorKind::UnknownCategory: return "UnknownCategory";
        case ErrorKind::UnknownQuery: return "UnknownQuery";
        case ErrorKind::ShapeMismatch: return "ShapeMismatch";
        case ErrorKind::DegenerateTable: return "DegenerateTable";
        case ErrorKind::AllZeroDifferences: return "AllZeroDifferences";
        case ErrorKind::TooFewPairs: return "TooFewPairs";
        case ErrorKind::EmptyCorpus: return "EmptyCorpus";
        case ErrorKind::ConfigError: return "ConfigError";
        case ErrorKind::IoError: return "IoError";
    }
    return "Error";
}

std::string to_lower(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (unsigned char c : s) out.push_back(static_cast<char>(std::tolower(c)));
    return out;
}

std::string trim(std::string_view s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

bool is_blank(std::string_view s) {
    for (unsigned char c : s)
        if (!std::isspace(c)) return false;
    return true;
}

std::vector<std::string> split_lines(std::string_view text) {
    std::vector<std::string> lines;
    size_t start = 0;
    for (size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == '\n') {
            std::string_view line = text.substr(start, i - start);
            if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
            lines.emplace_back(line);
            start = i + 1;
        }
    }
    return lines;
}

std::string normalize_whitespace(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    bool in_space = true;  // swallows leading whitespace
    for (unsigned char c : s) {
        if (std::isspace(c)) {
            if (!in_space) out.push_back(' ');
            in_space = true;
        } else {
            out.push_back(static_cast<char>(c));
            in_space = false;
        }
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    return out;
}

std::string canonical_identifier(std::string_view name) {
    std::string out;
    out.reserve(name.size());
    for (unsigned char c : name) {
        char mapped;
        if (c == ' ' || c == '/' || c == '_' || c == '&' || c == '\t') {
            mapped = '-';
        } else if (std::isalnum(c)) {
            mapped = static_cast<char>(std::tolower(c));
        } else if (c == '-') {
            mapped = '-';
        } else {
            continue;  // punctuation and non-ASCII dropped
        }
        if (mapped == '-' && (out.empty() || out.back() == '-')) continue;
        out.push_back(mapped);
    }
    while (!out.empty() && out.back() == '-') out.pop_back();
    return out;
}

bool contains_ci(std::string_view haystack, std::string_view needle) {
    if (needle.empty()) return true;
    if (haystack.size() < needle.size()) return false;
    for (size_t i = 0; i + needle.size() <= haystack.size(); ++i) {
        size_t j = 0;
        while (j < needle.size() &&
               std::tolower(static_cast<unsigned char>(haystack[i + j])) ==
                   std::tolower(static_cast<unsigned char>(needle[j])))
            ++j;
        if (j == needle.size()) return true;
    }
    return false;
}

std::vector<char32_t> utf8_decode(std::string_view s) {
    std::vector<char32_t> out;
    out.reserve(s.size());
    size_t i = 0;
    while (i < s.size()) {
        unsigned char c = static_cast<unsigned char>(s[i]);
        char32_t cp = 0xFFFD;
        size_t len = 1;
        if (c < 0x80) {
            cp = c;
        } else if ((c & 0xE0) == 0xC0 && i + 1 < s.size() &&
                   (s[i + 1] & 0xC0) == 0x80) {
            cp = ((c & 0x1F) << 6) | (s[i + 1] & 0x3F);
            len = 2;
            if (cp < 0x80) cp = 0xFFFD;
        } else if ((c & 0xF0) == 0xE0 && i + 2 < s.size() &&
                   (s[i + 1] & 0xC0) == 0x80 && (s[i + 2] & 0xC0) == 0x80) {
            cp = ((c & 0x0F) << 12) | ((s[i + 1] & 0x3F) << 6) | (s[i + 2] & 0x3F);
            len = 3;
            if (cp < 0x800) cp = 0xFFFD;
        } else if ((c & 0xF8) == 0xF0 && i + 3 < s.size() &&
                   (s[i + 1] & 0xC0) == 0x80 && (s[i + 2] & 0xC0) == 0x80 &&
                   (s[i + 3] & 0xC0) == 0x80) {
            cp = ((c & 0x07) << 18) | ((s[i + 1] & 0x3F) << 12) |
                 ((s[i + 2] & 0x3F) << 6) | (s[i + 3] & 0x3F);
            len = 4;
            if (cp < 0x10000 || cp > 0x10FFFF) cp = 0xFFFD;
        }
        out.push_back(cp);
        i += len;
    }
    return out;
}

std::string utf8_encode(const std::vector<char32_t>& cps) {
    std::string out;
    out.reserve(cps.size());
    for (char32_t cp : cps) {
        if (cp < 0x80) {
            out.push_back(static_cast<char>(cp));
        } else if (cp < 0x800) {
            out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
            out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
        } else if (cp < 0x10000) {
            out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
            out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
            out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
        } else {
            out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
            out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
            out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
            out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
        }
    }
    return out;
}

std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string YearMonth::str() const {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02d", year, month);
    return buf;
}

std::optional<YearMonth> YearMonth::parse(std::string_view s) {
    if (s.size() != 7 || s[4] != '-') return std::nullopt;
    for (size_t i : {0u, 1u, 2u, 3u, 5u, 6u})
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
    int y = (s[0] - '0') * 1000 + (s[1] - '0') * 100 + (s[2] - '0') * 10 + (s[3] - '0');
    int m = (s[5] - '0') * 10 + (s[6] - '0');
    if (m < 1 || m > 12) return std::nullopt;
    return YearMonth{y, m};
}

std::string format_fixed4(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    // avoid the "-0.0000" artifact so regenerated reports stay byte-identical
    if (std::strcmp(buf, "-0.0000") == 0) return "0.0000";
    return buf;
}

}  // namespace polidiff
