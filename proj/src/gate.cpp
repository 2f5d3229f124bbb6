#include "polidiff/gate.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <set>

#include "polidiff/errors.hpp"
#include "polidiff/store.hpp"
#include "polidiff/textmetrics.hpp"
#include "polidiff/util.hpp"

namespace polidiff {

namespace detail {
const std::vector<std::pair<std::string_view, std::string_view>>& language_seeds();
}

// ---- language detection ----------------------------------------------------

namespace {

// lowercase letters (ASCII + Latin-1 letters), everything else is a space
std::vector<char32_t> normalize_for_trigrams(std::string_view text) {
    std::vector<char32_t> out;
    out.reserve(text.size());
    bool in_space = true;
    for (char32_t cp : utf8_decode(text)) {
        char32_t mapped = 0;
        if (cp >= 'A' && cp <= 'Z') mapped = cp + 32;
        else if (cp >= 'a' && cp <= 'z') mapped = cp;
        else if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) mapped = cp + 32;  // À-Þ
        else if (cp >= 0xDF && cp <= 0xFF && cp != 0xF7) mapped = cp;       // ß-ÿ
        else if (cp >= 0x100 && cp <= 0x17F) mapped = cp;  // Latin Extended-A as-is
        if (mapped == 0) {
            if (!in_space) out.push_back(U' ');
            in_space = true;
        } else {
            out.push_back(mapped);
            in_space = false;
        }
    }
    return out;
}

using TrigramVector = std::map<std::uint64_t, double>;

TrigramVector trigram_vector(std::string_view text) {
    std::vector<char32_t> cps = normalize_for_trigrams(text);
    TrigramVector counts;
    if (cps.size() < 3) return counts;
    for (size_t i = 0; i + 2 < cps.size(); ++i) {
        std::uint64_t key = (std::uint64_t(cps[i]) << 42) |
                            (std::uint64_t(cps[i + 1]) << 21) | std::uint64_t(cps[i + 2]);
        counts[key] += 1.0;
    }
    double norm = 0.0;
    for (const auto& [key, value] : counts) norm += value * value;
    norm = std::sqrt(norm);
    for (auto& [key, value] : counts) value /= norm;
    return counts;
}

double cosine(const TrigramVector& a, const TrigramVector& b) {
    const TrigramVector& small = a.size() <= b.size() ? a : b;
    const TrigramVector& large = a.size() <= b.size() ? b : a;
    double dot = 0.0;
    for (const auto& [key, value] : small) {
        auto it = large.find(key);
        if (it != large.end()) dot += value * it->second;
    }
    return dot;
}

const std::vector<std::pair<std::string, TrigramVector>>& language_profiles() {
    static const std::vector<std::pair<std::string, TrigramVector>> kProfiles = [] {
        std::vector<std::pair<std::string, TrigramVector>> profiles;
        for (const auto& [name, seed] : detail::language_seeds())
            profiles.emplace_back(std::string(name), trigram_vector(seed));
        return profiles;
    }();
    return kProfiles;
}

}  // namespace

const std::vector<std::string>& bundled_language_names() {
    static const std::vector<std::string> kNames = [] {
        std::vector<std::string> names;
        for (const auto& [name, profile] : language_profiles()) names.push_back(name);
        return names;
    }();
    return kNames;
}

LanguageVerdict detect_language(std::string_view text) {
    if (utf8_decode(text).size() < 100)
        throw Error(ErrorKind::TooShort, "language detection needs >= 100 characters");
    TrigramVector input = trigram_vector(text);
    LanguageVerdict verdict;
    for (const auto& [name, profile] : language_profiles()) {
        double similarity = cosine(input, profile);
        if (similarity > verdict.confidence) {
            verdict.confidence = similarity;
            verdict.best_language = name;
        }
    }
    verdict.is_english = verdict.best_language == "english" && verdict.confidence >= 0.6;
    return verdict;
}

// ---- hashed-feature logistic model ------------------------------------------

std::vector<std::pair<std::uint32_t, float>> hash_features(std::string_view text,
                                                           int dimension_bits) {
    std::uint32_t mask = (std::uint32_t{1} << dimension_bits) - 1;
    std::vector<std::string> tokens;
    for (const auto& raw : tokenize_words(text)) {
        std::string t = to_lower(raw);
        std::erase_if(t, [](unsigned char c) { return !std::isalnum(c); });
        if (!t.empty()) tokens.push_back(std::move(t));
    }

    std::map<std::uint32_t, float> accum;
    auto add = [&](std::string_view feature) {
        std::uint64_t h = fnv1a64(feature);
        float sign = (h & 1) ? 1.0f : -1.0f;
        std::uint32_t index = static_cast<std::uint32_t>(h >> 1) & mask;
        accum[index] += sign;
    };
    for (const auto& t : tokens) add(t);
    for (size_t i = 0; i + 1 < tokens.size(); ++i) add(tokens[i] + "\x1f" + tokens[i + 1]);

    double norm = 0.0;
    for (const auto& [index, value] : accum) norm += double(value) * double(value);
    norm = std::sqrt(norm);
    std::vector<std::pair<std::uint32_t, float>> features;
    features.reserve(accum.size());
    for (const auto& [index, value] : accum)
        if (value != 0.0f)
            features.emplace_back(index, norm > 0 ? float(value / norm) : 0.0f);
    return features;
}

namespace {

double sigmoid(double z) { return 1.0 / (1.0 + std::exp(-z)); }

double score_features(const LinearTextModel& model,
                      const std::vector<std::pair<std::uint32_t, float>>& features) {
    double z = model.bias;
    for (const auto& [index, value] : features) z += model.weights[index] * value;
    return sigmoid(z);
}

}  // namespace

double model_score(const LinearTextModel& model, std::string_view text) {
    return score_features(model, hash_features(text, model.dimension_bits));
}

GateVerdict classify_policy(std::string_view text, const LinearTextModel& model) {
    GateVerdict verdict;
    try {
        LanguageVerdict language = detect_language(text);
        verdict.is_english = language.is_english;
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::TooShort) throw;
        verdict.reason = "too-short";
        return verdict;
    }
    if (!verdict.is_english) {
        verdict.reason = "non-english";  // model never consulted
        return verdict;
    }
    verdict.policy_probability = model_score(model, text);
    verdict.valid = verdict.policy_probability > model.threshold;
    if (!verdict.valid) verdict.reason = "not-policy";
    return verdict;
}

LinearTextModel train_gate(const std::vector<LabeledDoc>& corpus,
                           const TrainOptions& options) {
    std::vector<size_t> positives, negatives;
    for (size_t i = 0; i < corpus.size(); ++i)
        (corpus[i].is_policy ? positives : negatives).push_back(i);
    if (positives.size() < 50)
        throw Error(ErrorKind::InsufficientData,
                    "need >= 50 policy examples, have " + std::to_string(positives.size()));
    if (negatives.size() < 50)
        throw Error(ErrorKind::InsufficientData,
                    "need >= 50 non-policy examples, have " + std::to_string(negatives.size()));

    Rng rng(options.seed);
    auto shuffle = [&rng](std::vector<size_t>& xs) {
        for (size_t i = xs.size(); i > 1; --i)
            std::swap(xs[i - 1], xs[rng.below(i)]);
    };

    // stratified seeded 80/20 split
    shuffle(positives);
    shuffle(negatives);
    std::vector<size_t> train_set, test_set;
    auto take = [&](std::vector<size_t>& xs) {
        size_t n_test = static_cast<size_t>(
            std::llround(options.test_fraction * static_cast<double>(xs.size())));
        for (size_t i = 0; i < xs.size(); ++i)
            (i < n_test ? test_set : train_set).push_back(xs[i]);
    };
    take(positives);
    take(negatives);

    // duplicate documents crossing the split leak test information
    std::set<std::uint64_t> train_hashes;
    for (size_t i : train_set) train_hashes.insert(fnv1a64(corpus[i].text));
    bool leakage = std::any_of(test_set.begin(), test_set.end(), [&](size_t i) {
        return train_hashes.count(fnv1a64(corpus[i].text)) > 0;
    });

    LinearTextModel model;
    model.dimension_bits = options.dimension_bits;
    model.weights.assign(model.dimension(), 0.0);
    model.threshold = options.threshold;
    model.seed = options.seed;
    model.epochs = options.epochs;
    model.train_examples = train_set.size();
    model.test_examples = test_set.size();
    model.split_leakage = leakage;

    std::vector<std::vector<std::pair<std::uint32_t, float>>> features(corpus.size());
    for (size_t i : train_set) features[i] = hash_features(corpus[i].text, model.dimension_bits);
    for (size_t i : test_set) features[i] = hash_features(corpus[i].text, model.dimension_bits);

    for (int epoch = 0; epoch < options.epochs; ++epoch) {
        shuffle(train_set);
        double lr = options.learning_rate / (1.0 + 0.3 * epoch);
        for (size_t i : train_set) {
            double y = corpus[i].is_policy ? 1.0 : 0.0;
            double g = score_features(model, features[i]) - y;
            for (const auto& [index, value] : features[i]) {
                double& w = model.weights[index];
                w -= lr * (g * value + options.l2 * w);
            }
            model.bias -= lr * g;
        }
    }

    size_t correct = 0;
    for (size_t i : test_set) {
        bool predicted = score_features(model, features[i]) > model.threshold;
        if (predicted == corpus[i].is_policy) ++correct;
    }
    model.held_out_accuracy = test_set.empty()
                                  ? 0.0
                                  : static_cast<double>(correct) /
                                        static_cast<double>(test_set.size());
    return model;
}

// ---- model file --------------------------------------------------------------

namespace {

constexpr char kModelMagic[4] = {'P', 'G', 'M', '1'};

template <typename T>
void put(std::string& out, T value) {
    char buf[sizeof(T)];
    std::memcpy(buf, &value, sizeof(T));
    out.append(buf, sizeof(T));
}

template <typename T>
T take(std::string_view data, size_t& pos) {
    if (pos + sizeof(T) > data.size())
        throw Error(ErrorKind::SchemaError, "truncated model file");
    T value;
    std::memcpy(&value, data.data() + pos, sizeof(T));
    pos += sizeof(T);
    return value;
}

}  // namespace

void save_model(const LinearTextModel& model, const std::string& path) {
    std::string blob;
    blob.append(kModelMagic, 4);
    put<std::uint32_t>(blob, 1);  // version
    put<std::uint32_t>(blob, static_cast<std::uint32_t>(model.dimension_bits));
    put<double>(blob, model.bias);
    put<double>(blob, model.threshold);
    put<std::uint64_t>(blob, model.seed);
    put<std::uint32_t>(blob, static_cast<std::uint32_t>(model.epochs));
    put<double>(blob, model.held_out_accuracy);
    put<std::uint64_t>(blob, model.train_examples);
    put<std::uint64_t>(blob, model.test_examples);
    put<std::uint8_t>(blob, model.split_leakage ? 1 : 0);

    std::uint64_t nonzero = 0;
    for (double w : model.weights)
        if (w != 0.0) ++nonzero;
    put<std::uint64_t>(blob, nonzero);
    for (std::uint32_t i = 0; i < model.weights.size(); ++i) {
        if (model.weights[i] == 0.0) continue;
        put<std::uint32_t>(blob, i);
        put<double>(blob, model.weights[i]);
    }
    write_file_atomic(path, blob);
}

LinearTextModel load_model(const std::string& path) {
    std::string blob = read_file(path);
    if (blob.size() < 4 || std::memcmp(blob.data(), kModelMagic, 4) != 0)
        throw Error(ErrorKind::SchemaError, "not a model file: " + path);
    size_t pos = 4;
    std::uint32_t version = take<std::uint32_t>(blob, pos);
    if (version != 1)
        throw Error(ErrorKind::SchemaError,
                    "unsupported model version " + std::to_string(version));
    LinearTextModel model;
    model.dimension_bits = static_cast<int>(take<std::uint32_t>(blob, pos));
    model.bias = take<double>(blob, pos);
    model.threshold = take<double>(blob, pos);
    model.seed = take<std::uint64_t>(blob, pos);
    model.epochs = static_cast<int>(take<std::uint32_t>(blob, pos));
    model.held_out_accuracy = take<double>(blob, pos);
    model.train_examples = take<std::uint64_t>(blob, pos);
    model.test_examples = take<std::uint64_t>(blob, pos);
    model.split_leakage = take<std::uint8_t>(blob, pos) != 0;
    model.weights.assign(model.dimension(), 0.0);
    std::uint64_t nonzero = take<std::uint64_t>(blob, pos);
    for (std::uint64_t k = 0; k < nonzero; ++k) {
        std::uint32_t index = take<std::uint32_t>(blob, pos);
        double weight = take<double>(blob, pos);
        if (index >= model.weights.size())
            throw Error(ErrorKind::SchemaError, "weight index out of range");
        model.weights[index] = weight;
    }
    return model;
}

std::vector<LabeledDoc> load_gate_corpus(const std::string& dir) {
    namespace fs = std::filesystem;
    std::vector<LabeledDoc> corpus;
    for (const auto& [subdir, is_policy] :
         std::vector<std::pair<std::string, bool>>{{"policy", true}, {"other", false}}) {
        fs::path class_dir = fs::path(dir) / subdir;
        if (!fs::exists(class_dir))
            throw Error(ErrorKind::IoError, "missing corpus directory " + class_dir.string());
        std::vector<fs::path> files;
        for (const auto& entry : fs::directory_iterator(class_dir))
            if (entry.is_regular_file()) files.push_back(entry.path());
        std::sort(files.begin(), files.end());
        for (const auto& file : files) corpus.push_back({read_file(file), is_policy});
    }
    return corpus;
}

}  // namespace polidiff
