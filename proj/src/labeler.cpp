#include "polidiff/labeler.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "polidiff/errors.hpp"
#include "polidiff/url.hpp"

namespace polidiff {

namespace {

using nlohmann::json;

struct Endpoint {
    std::string origin;
    std::string path;
};

Endpoint split_endpoint(const std::string& url) {
    auto parsed = Url::parse(url);
    if (!parsed)
        throw Error(ErrorKind::EndpointUnavailable, "bad labeler URL '" + url + "'");
    Endpoint ep;
    ep.origin = parsed->scheme + "://" + parsed->host;
    if (!parsed->port.empty()) ep.origin += ":" + parsed->port;
    ep.path = parsed->path;
    return ep;
}

double checked_prob(const json& v, const std::string& where) {
    if (!v.is_number())
        throw Error(ErrorKind::MalformedResponse, "non-numeric probability at " + where);
    double p = v.get<double>();
    if (p < 0.0 || p > 1.0)
        throw Error(ErrorKind::MalformedResponse,
                    "probability " + std::to_string(p) + " outside [0,1] at " + where);
    return p;
}

// one POST round-trip for a batch of segment texts
std::vector<Segment> label_batch(const Endpoint& endpoint,
                                 const std::vector<std::string>& texts, int base_index,
                                 const LabelerOptions& options) {
    json request;
    request["segments"] = texts;
    std::string body = request.dump();

    httplib::Result res;
    for (int attempt = 0; attempt <= options.retries; ++attempt) {
        httplib::Client client(endpoint.origin);
        client.set_connection_timeout(0, options.timeout_ms * 1000);
        client.set_read_timeout(options.timeout_ms / 1000,
                                (options.timeout_ms % 1000) * 1000);
        res = client.Post(endpoint.path, body, "application/json");
        if (res && res->status == 200) break;
        if (attempt == options.retries) {
            std::string detail = res ? "HTTP " + std::to_string(res->status)
                                     : httplib::to_string(res.error());
            throw Error(ErrorKind::EndpointUnavailable,
                        "labeler unreachable after " + std::to_string(options.retries + 1) +
                            " attempts (" + detail + ")");
        }
    }

    json doc;
    try {
        doc = json::parse(res->body);
    } catch (const json::exception& e) {
        throw Error(ErrorKind::MalformedResponse, std::string("response not JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("segments") || !doc["segments"].is_array())
        throw Error(ErrorKind::MalformedResponse, "response lacks a segments array");
    if (doc["segments"].size() != texts.size())
        throw Error(ErrorKind::MalformedResponse,
                    "response has " + std::to_string(doc["segments"].size()) +
                        " segments for " + std::to_string(texts.size()) + " inputs");

    std::vector<Segment> out;
    out.reserve(texts.size());
    for (size_t i = 0; i < texts.size(); ++i) {
        const json& labels = doc["segments"][i];
        Segment seg;
        seg.index = base_index + static_cast<int>(i);
        seg.text = texts[i];
        if (labels.contains("categories"))
            for (auto& [name, prob] : labels["categories"].items())
                seg.category_probs[name] = checked_prob(prob, "categories/" + name);
        if (labels.contains("attributes"))
            for (auto& [attr, value_probs] : labels["attributes"].items()) {
                if (!value_probs.is_object())
                    throw Error(ErrorKind::MalformedResponse,
                                "attribute " + attr + " must map values to probabilities");
                for (auto& [value, prob] : value_probs.items())
                    seg.attribute_probs[attr][value] =
                        checked_prob(prob, attr + "/" + value);
            }
        out.push_back(std::move(seg));
    }
    return out;
}

}  // namespace

AnnotatedPolicy label_policy(const std::string& policy_id, const std::string& version,
                             const std::vector<std::string>& segment_texts,
                             const LabelerOptions& options, const Taxonomy& taxonomy) {
    AnnotatedPolicy policy;
    policy.policy_id = policy_id;
    policy.version = version;
    if (segment_texts.empty()) return policy;  // no network call

    Endpoint endpoint = split_endpoint(options.url);

    size_t batch_size = options.batch_size > 0 ? static_cast<size_t>(options.batch_size)
                                               : segment_texts.size();
    struct Batch {
        size_t begin, end;
    };
    std::vector<Batch> batches;
    for (size_t i = 0; i < segment_texts.size(); i += batch_size)
        batches.push_back({i, std::min(i + batch_size, segment_texts.size())});

    std::vector<Segment> segments(segment_texts.size());
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::atomic<size_t> cursor{0};

    auto worker = [&] {
        while (true) {
            size_t b = cursor.fetch_add(1);
            if (b >= batches.size()) return;
            {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (failure) return;
            }
            try {
                std::vector<std::string> texts(segment_texts.begin() + batches[b].begin,
                                               segment_texts.begin() + batches[b].end);
                std::vector<Segment> labeled = label_batch(
                    endpoint, texts, static_cast<int>(batches[b].begin), options);
                for (size_t i = 0; i < labeled.size(); ++i)
                    segments[batches[b].begin + i] = std::move(labeled[i]);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                return;
            }
        }
    };

    size_t n_workers = std::min<size_t>(std::max(options.parallelism, 1), batches.size());
    std::vector<std::thread> pool;
    for (size_t i = 0; i < n_workers; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);

    for (const auto& segment : segments)
        policy.segments.push_back(threshold_segment(segment, taxonomy));
    return policy;
}

}  // namespace polidiff
