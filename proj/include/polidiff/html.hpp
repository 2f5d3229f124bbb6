#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace polidiff {
namespace html {

// Tolerant HTML tree. Malformed markup is repaired, never rejected: stray
// close tags are ignored, unclosed elements are closed by their ancestors,
// p/li auto-close on the next block.
struct Node {
    enum class Type { Document, Element, Text };
    Type type = Type::Document;
    std::string tag;  // lowercase, elements only
    std::map<std::string, std::string> attrs;
    std::string text;  // text nodes only, entities decoded
    std::vector<std::unique_ptr<Node>> children;

    std::string attr(std::string_view name) const;
    // concatenated text of the subtree, space-joined
    std::string inner_text() const;
};

std::unique_ptr<Node> parse(std::string_view markup);

// decodes a small set of named entities plus numeric references
std::string decode_entities(std::string_view s);

}  // namespace html
}  // namespace polidiff
