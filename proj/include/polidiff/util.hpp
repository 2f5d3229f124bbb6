#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace polidiff {

// ---- string helpers ----------------------------------------------------

std::string to_lower(std::string_view s);
std::string trim(std::string_view s);
bool is_blank(std::string_view s);
std::vector<std::string> split_lines(std::string_view text);

// Collapse every whitespace run to a single space and trim the ends.
std::string normalize_whitespace(std::string_view s);

// Canonical identifier form: lowercase; spaces, slashes and underscores
// become hyphens; "&" becomes "-"; runs of hyphens collapse.
std::string canonical_identifier(std::string_view name);

bool contains_ci(std::string_view haystack, std::string_view needle);

// ---- UTF-8 -------------------------------------------------------------

// Decodes UTF-8 into Unicode scalar values; invalid bytes decode as U+FFFD.
std::vector<char32_t> utf8_decode(std::string_view s);
std::string utf8_encode(const std::vector<char32_t>& cps);

// ---- hashing -----------------------------------------------------------

std::string sha256_hex(std::string_view data);

// 64-bit FNV-1a, used for feature hashing and duplicate detection.
std::uint64_t fnv1a64(std::string_view data);

// ---- deterministic RNG --------------------------------------------------
// splitmix64: identical sequences on every platform, used by fixture
// generators and property tests so frozen expectations stay valid.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // uniform integer in [0, n)
    std::uint64_t below(std::uint64_t n) { return n ? next_u64() % n : 0; }
    // uniform real in [0, 1)
    double real() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

// ---- year-month --------------------------------------------------------

struct YearMonth {
    int year = 0;
    int month = 0;  // 1..12

    auto operator<=>(const YearMonth&) const = default;

    // signed whole-month distance: (b - a)
    static int months_between(YearMonth a, YearMonth b) {
        return (b.year - a.year) * 12 + (b.month - a.month);
    }

    YearMonth next() const {
        return month == 12 ? YearMonth{year + 1, 1} : YearMonth{year, month + 1};
    }

    std::string str() const;                              // "YYYY-MM"
    static std::optional<YearMonth> parse(std::string_view s);  // "YYYY-MM"
};

// Fixed 4-decimal float formatting used by every report artifact.
std::string format_fixed4(double v);

}  // namespace polidiff
