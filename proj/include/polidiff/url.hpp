#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace polidiff {

struct Url {
    std::string scheme;  // lowercase
    std::string host;    // lowercase
    std::string port;    // empty when default
    std::string path;    // always starts with '/' when host present
    std::string query;   // without '?'

    std::string str() const;
    static std::optional<Url> parse(std::string_view raw);
};

// RFC 3986-style relative resolution (fragments dropped). Returns nullopt
// for non-fetchable schemes (mailto:, javascript:, data:) and unparseable
// input.
std::optional<Url> resolve_url(const Url& base, std::string_view href);

// eTLD+1 approximation: last two labels, three for a small table of
// two-level public suffixes (co.uk, com.au, ...). IPs map to themselves.
std::string registrable_domain(std::string_view host);

}  // namespace polidiff
