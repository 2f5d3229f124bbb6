#include "polidiff/html.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "polidiff/util.hpp"

namespace polidiff {
namespace html {

namespace {

const std::set<std::string, std::less<>>& void_tags() {
    static const std::set<std::string, std::less<>> kVoid = {
        "area", "base", "br", "col", "embed", "hr", "img", "input",
        "link", "meta", "param", "source", "track", "wbr"};
    return kVoid;
}

const std::set<std::string, std::less<>>& raw_text_tags() {
    static const std::set<std::string, std::less<>> kRaw = {"script", "style",
                                                            "textarea", "title"};
    return kRaw;
}

// tags that implicitly close an open <p>
const std::set<std::string, std::less<>>& p_closers() {
    static const std::set<std::string, std::less<>> kClosers = {
        "address", "article", "aside", "blockquote", "div", "dl", "fieldset",
        "footer", "form", "h1", "h2", "h3", "h4", "h5", "h6", "header", "hr",
        "main", "nav", "ol", "p", "pre", "section", "table", "ul", "li"};
    return kClosers;
}

struct Parser {
    std::string_view input;
    size_t pos = 0;

    bool eof() const { return pos >= input.size(); }
    char peek(size_t ahead = 0) const {
        return pos + ahead < input.size() ? input[pos + ahead] : '\0';
    }

    std::string read_tag_name() {
        std::string name;
        while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) ||
                          peek() == '-' || peek() == ':'))
            name.push_back(static_cast<char>(std::tolower(
                static_cast<unsigned char>(input[pos++]))));
        return name;
    }

    void skip_spaces() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos;
    }

    std::map<std::string, std::string> read_attrs(bool& self_closing) {
        std::map<std::string, std::string> attrs;
        self_closing = false;
        while (!eof() && peek() != '>') {
            skip_spaces();
            if (peek() == '>') break;
            if (peek() == '/') {
                ++pos;
                self_closing = true;
                continue;
            }
            std::string name;
            while (!eof() && peek() != '=' && peek() != '>' && peek() != '/' &&
                   !std::isspace(static_cast<unsigned char>(peek())))
                name.push_back(static_cast<char>(std::tolower(
                    static_cast<unsigned char>(input[pos++]))));
            if (name.empty()) {
                ++pos;  // junk byte, skip
                continue;
            }
            skip_spaces();
            std::string value;
            if (peek() == '=') {
                ++pos;
                skip_spaces();
                if (peek() == '"' || peek() == '\'') {
                    char quote = input[pos++];
                    while (!eof() && peek() != quote) value.push_back(input[pos++]);
                    if (!eof()) ++pos;
                } else {
                    while (!eof() && peek() != '>' &&
                           !std::isspace(static_cast<unsigned char>(peek())))
                        value.push_back(input[pos++]);
                }
            }
            attrs[name] = decode_entities(value);
        }
        return attrs;
    }
};

}  // namespace

std::string decode_entities(std::string_view s) {
    static const std::map<std::string, std::string, std::less<>> kNamed = {
        {"amp", "&"},    {"lt", "<"},      {"gt", ">"},     {"quot", "\""},
        {"apos", "'"},   {"nbsp", " "},    {"copy", "\xC2\xA9"},
        {"reg", "\xC2\xAE"}, {"trade", "\xE2\x84\xA2"}, {"mdash", "\xE2\x80\x94"},
        {"ndash", "\xE2\x80\x93"}, {"hellip", "\xE2\x80\xA6"},
        {"rsquo", "\xE2\x80\x99"}, {"lsquo", "\xE2\x80\x98"},
        {"rdquo", "\xE2\x80\x9D"}, {"ldquo", "\xE2\x80\x9C"}};
    std::string out;
    out.reserve(s.size());
    size_t i = 0;
    while (i < s.size()) {
        if (s[i] != '&') {
            out.push_back(s[i++]);
            continue;
        }
        size_t semi = s.find(';', i + 1);
        if (semi == std::string_view::npos || semi - i > 10) {
            out.push_back(s[i++]);
            continue;
        }
        std::string_view body = s.substr(i + 1, semi - i - 1);
        if (!body.empty() && body[0] == '#') {
            long cp = 0;
            bool ok = body.size() > 1;
            if (body.size() > 2 && (body[1] == 'x' || body[1] == 'X')) {
                for (size_t k = 2; k < body.size() && ok; ++k) {
                    char c = static_cast<char>(std::tolower(
                        static_cast<unsigned char>(body[k])));
                    if (std::isdigit(static_cast<unsigned char>(c)))
                        cp = cp * 16 + (c - '0');
                    else if (c >= 'a' && c <= 'f')
                        cp = cp * 16 + (c - 'a' + 10);
                    else
                        ok = false;
                }
            } else {
                for (size_t k = 1; k < body.size() && ok; ++k) {
                    if (std::isdigit(static_cast<unsigned char>(body[k])))
                        cp = cp * 10 + (body[k] - '0');
                    else
                        ok = false;
                }
            }
            if (ok && cp > 0 && cp <= 0x10FFFF) {
                out += utf8_encode({static_cast<char32_t>(cp)});
                i = semi + 1;
                continue;
            }
        } else {
            auto it = kNamed.find(body);
            if (it != kNamed.end()) {
                out += it->second;
                i = semi + 1;
                continue;
            }
        }
        out.push_back(s[i++]);
    }
    return out;
}

std::string Node::attr(std::string_view name) const {
    auto it = attrs.find(std::string(name));
    return it == attrs.end() ? std::string() : it->second;
}

std::string Node::inner_text() const {
    if (type == Type::Text) return text;
    std::string out;
    for (const auto& child : children) {
        std::string t = child->inner_text();
        if (t.empty()) continue;
        if (!out.empty()) out += ' ';
        out += t;
    }
    return out;
}

std::unique_ptr<Node> parse(std::string_view markup) {
    auto document = std::make_unique<Node>();
    document->type = Node::Type::Document;

    std::vector<Node*> stack = {document.get()};
    Parser p{markup};

    auto append_text = [&](std::string_view raw) {
        if (raw.empty()) return;
        std::string decoded = decode_entities(raw);
        if (is_blank(decoded)) return;
        auto node = std::make_unique<Node>();
        node->type = Node::Type::Text;
        node->text = std::move(decoded);
        stack.back()->children.push_back(std::move(node));
    };

    while (!p.eof()) {
        if (p.peek() != '<') {
            size_t start = p.pos;
            while (!p.eof() && p.peek() != '<') ++p.pos;
            append_text(markup.substr(start, p.pos - start));
            continue;
        }
        // comments, doctype, CDATA
        if (p.peek(1) == '!') {
            if (markup.substr(p.pos, 4) == "<!--") {
                size_t end = markup.find("-->", p.pos + 4);
                p.pos = end == std::string_view::npos ? markup.size() : end + 3;
            } else {
                size_t end = markup.find('>', p.pos);
                p.pos = end == std::string_view::npos ? markup.size() : end + 1;
            }
            continue;
        }
        if (p.peek(1) == '?') {  // processing instruction
            size_t end = markup.find('>', p.pos);
            p.pos = end == std::string_view::npos ? markup.size() : end + 1;
            continue;
        }
        if (p.peek(1) == '/') {
            p.pos += 2;
            std::string name = p.read_tag_name();
            size_t end = markup.find('>', p.pos);
            p.pos = end == std::string_view::npos ? markup.size() : end + 1;
            // pop to the matching element if one is open; ignore otherwise
            for (size_t i = stack.size(); i-- > 1;) {
                if (stack[i]->tag == name) {
                    stack.resize(i);
                    break;
                }
            }
            continue;
        }
        if (!std::isalpha(static_cast<unsigned char>(p.peek(1)))) {
            // stray '<' in text
            append_text(markup.substr(p.pos, 1));
            ++p.pos;
            continue;
        }

        ++p.pos;  // consume '<'
        std::string name = p.read_tag_name();
        bool self_closing = false;
        auto attrs = p.read_attrs(self_closing);
        if (!p.eof()) ++p.pos;  // consume '>'

        // implicit closes
        if (p_closers().count(name)) {
            for (size_t i = stack.size(); i-- > 1;) {
                if (stack[i]->tag == "p" || (name == "li" && stack[i]->tag == "li")) {
                    stack.resize(i);
                    break;
                }
                if (p_closers().count(stack[i]->tag)) break;
            }
        }

        auto node = std::make_unique<Node>();
        node->type = Node::Type::Element;
        node->tag = name;
        node->attrs = std::move(attrs);
        Node* raw_node = node.get();
        stack.back()->children.push_back(std::move(node));

        if (self_closing || void_tags().count(name)) continue;

        if (raw_text_tags().count(name)) {
            // swallow everything to the matching close tag
            std::string close = "</" + name;
            size_t end = p.pos;
            while (true) {
                end = markup.find('<', end);
                if (end == std::string_view::npos) {
                    end = markup.size();
                    break;
                }
                std::string candidate = to_lower(markup.substr(end, close.size()));
                if (candidate == close) break;
                ++end;
            }
            if (name == "title" || name == "textarea") {
                auto text_node = std::make_unique<Node>();
                text_node->type = Node::Type::Text;
                text_node->text = decode_entities(markup.substr(p.pos, end - p.pos));
                raw_node->children.push_back(std::move(text_node));
            }
            size_t close_end = markup.find('>', end);
            p.pos = close_end == std::string_view::npos ? markup.size() : close_end + 1;
            continue;
        }

        stack.push_back(raw_node);
    }
    return document;
}

}  // namespace html
}  // namespace polidiff
