#include "polidiff/annotation.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "polidiff/errors.hpp"
#include "polidiff/textmetrics.hpp"
#include "polidiff/util.hpp"

namespace polidiff {

using nlohmann::ordered_json;

const std::set<std::string>& LabeledSegment::values(std::string_view attr) const {
    static const std::set<std::string> kEmpty;
    auto it = attribute_values.find(std::string(attr));
    return it == attribute_values.end() ? kEmpty : it->second;
}

LabeledSegment threshold_segment(const Segment& segment, const Taxonomy& taxonomy) {
    LabeledSegment out;
    out.source = segment;
    for (const auto& [name, prob] : segment.category_probs) {
        std::string id = taxonomy.resolve(name);
        if (!taxonomy.has_category(id))
            throw Error(ErrorKind::UnknownLabel, "unknown category '" + id + "'", id);
        if (prob > 0.5) out.categories.insert(id);
    }
    for (const auto& [attr_name, value_probs] : segment.attribute_probs) {
        std::string attr = taxonomy.resolve(attr_name);
        const AttributeDef* def = taxonomy.find_attribute(attr);
        if (!def)
            throw Error(ErrorKind::UnknownLabel, "unknown attribute '" + attr + "'", attr);
        for (const auto& [value_name, prob] : value_probs) {
            std::string value = taxonomy.resolve(value_name);
            if (!def->contains(value))
                throw Error(ErrorKind::UnknownLabel,
                            "value '" + value + "' not in attribute '" + attr + "'", value);
            if (prob > 0.5) out.attribute_values[attr].insert(value);
        }
    }
    return out;
}

namespace {

double read_prob(const ordered_json& v, const std::string& where) {
    if (!v.is_number())
        throw Error(ErrorKind::SchemaError, "probability must be a number at " + where);
    double p = v.get<double>();
    if (p < 0.0 || p > 1.0)
        throw Error(ErrorKind::SchemaError,
                    "probability " + std::to_string(p) + " outside [0,1] at " + where);
    return p;
}

Segment parse_segment(const ordered_json& doc, int index) {
    Segment seg;
    seg.index = index;
    if (!doc.is_object() || !doc.contains("text"))
        throw Error(ErrorKind::SchemaError, "segment needs a text field");
    seg.text = doc["text"].get<std::string>();
    if (trim(seg.text).empty())
        throw Error(ErrorKind::SchemaError, "segment text is empty after trimming");
    if (doc.contains("categories"))
        for (auto& [name, prob] : doc["categories"].items())
            seg.category_probs[name] = read_prob(prob, "category " + name);
    if (doc.contains("attributes"))
        for (auto& [attr, value_probs] : doc["attributes"].items()) {
            if (!value_probs.is_object())
                throw Error(ErrorKind::SchemaError, "attribute " + attr + " must map values");
            for (auto& [value, prob] : value_probs.items())
                seg.attribute_probs[attr][value] = read_prob(prob, attr + "/" + value);
        }
    return seg;
}

}  // namespace

AnnotatedPolicy parse_annotations_json(std::string_view json_text, const Taxonomy& taxonomy) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::SchemaError, std::string("annotation file: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("policy_id") || !doc.contains("version") ||
        !doc.contains("segments"))
        throw Error(ErrorKind::SchemaError,
                    "annotation file requires policy_id, version, segments");
    AnnotatedPolicy policy;
    policy.policy_id = doc["policy_id"].get<std::string>();
    policy.version = doc["version"].get<std::string>();
    if (policy.version != "pre" && policy.version != "post")
        throw Error(ErrorKind::SchemaError,
                    "version must be 'pre' or 'post', got '" + policy.version + "'");
    int index = 0;
    for (const auto& seg_doc : doc["segments"])
        policy.segments.push_back(threshold_segment(parse_segment(seg_doc, index++), taxonomy));
    return policy;
}

AnnotatedPolicy load_annotations(const std::string& path, const Taxonomy& taxonomy) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::IoError, "cannot open annotation file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_annotations_json(buf.str(), taxonomy);
}

std::string annotations_to_json(const AnnotatedPolicy& policy) {
    ordered_json doc;
    doc["policy_id"] = policy.policy_id;
    doc["version"] = policy.version;
    doc["segments"] = ordered_json::array();
    for (const auto& seg : policy.segments) {
        ordered_json s;
        s["text"] = seg.source.text;
        s["categories"] = ordered_json::object();
        for (const auto& [name, prob] : seg.source.category_probs)
            s["categories"][name] = prob;
        s["attributes"] = ordered_json::object();
        for (const auto& [attr, value_probs] : seg.source.attribute_probs) {
            ordered_json values = ordered_json::object();
            for (const auto& [value, prob] : value_probs) values[value] = prob;
            s["attributes"][attr] = std::move(values);
        }
        doc["segments"].push_back(std::move(s));
    }
    return doc.dump(2);
}

void save_annotations(const AnnotatedPolicy& policy, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::IoError, "cannot write annotation file '" + path + "'");
    out << annotations_to_json(policy) << '\n';
}

std::vector<std::string> segment_text(std::string_view policy_text) {
    if (trim(policy_text).empty())
        throw Error(ErrorKind::EmptyInput, "policy text is empty");

    constexpr int kMaxSentencesPerSegment = 10;

    // paragraphs: maximal runs of non-blank lines
    std::vector<std::string> paragraphs;
    std::string current;
    for (const auto& line : split_lines(policy_text)) {
        if (is_blank(line)) {
            if (!trim(current).empty()) paragraphs.push_back(current);
            current.clear();
        } else {
            if (!current.empty()) current.push_back('\n');
            current += line;
        }
    }
    if (!trim(current).empty()) paragraphs.push_back(current);

    std::vector<std::string> segments;
    for (const std::string& para : paragraphs) {
        std::vector<SentenceSpan> spans = sentence_spans(para);
        if (static_cast<int>(spans.size()) <= kMaxSentencesPerSegment) {
            segments.push_back(trim(para));
            continue;
        }
        // oversized paragraph: emit runs of at most 10 sentence spans,
        // slicing the original text so nothing is lost
        for (size_t i = 0; i < spans.size(); i += kMaxSentencesPerSegment) {
            size_t last = std::min(spans.size(), i + kMaxSentencesPerSegment) - 1;
            size_t begin = (i == 0) ? 0 : spans[i].begin;
            size_t end = (last + 1 == spans.size()) ? para.size() : spans[last].end;
            std::string chunk = trim(std::string_view(para).substr(begin, end - begin));
            if (!chunk.empty()) segments.push_back(std::move(chunk));
        }
    }
    return segments;
}

}  // namespace polidiff
