#pragma once

#include <string>
#include <vector>

#include "polidiff/annotation.hpp"

namespace polidiff {

struct LabelerOptions {
    std::string url;       // full endpoint URL, e.g. http://127.0.0.1:8080/label
    int timeout_ms = 15000;
    int retries = 2;       // attempts per batch = retries + 1
    int batch_size = 0;    // 0 = all segments in one request
    int parallelism = 4;   // concurrent batch requests
};

// POSTs segment texts to the labeler endpoint and thresholds the returned
// probability maps. One Segment per input text, reassembled in input order.
// Empty input returns an empty policy without touching the network.
// Errors: EndpointUnavailable (after retries), MalformedResponse (bad shape
// or probability outside [0,1]).
AnnotatedPolicy label_policy(const std::string& policy_id, const std::string& version,
                             const std::vector<std::string>& segment_texts,
                             const LabelerOptions& options, const Taxonomy& taxonomy);

}  // namespace polidiff
