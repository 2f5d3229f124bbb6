#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace polidiff {

// ---- language detection ----------------------------------------------------

struct LanguageVerdict {
    bool is_english = false;
    double confidence = 0.0;    // cosine similarity of the winning profile
    std::string best_language;  // "english", "german", ...
};

// Character-trigram cosine similarity against the bundled profiles. English
// requires the English profile to win with similarity >= 0.6.
// Errors: TooShort (< 100 characters).
LanguageVerdict detect_language(std::string_view text);

const std::vector<std::string>& bundled_language_names();

// ---- linear is-policy model -------------------------------------------------

struct LinearTextModel {
    int dimension_bits = 18;          // D = 2^dimension_bits
    std::vector<double> weights;      // dense, size D
    double bias = 0.0;
    double threshold = 0.5;
    // training metadata, recorded in the model file
    std::uint64_t seed = 0;
    int epochs = 0;
    double held_out_accuracy = 0.0;
    std::uint64_t train_examples = 0;
    std::uint64_t test_examples = 0;
    bool split_leakage = false;  // duplicate documents crossed the 80/20 split

    std::size_t dimension() const { return std::size_t{1} << dimension_bits; }
};

// Signed-hash unigram+bigram features, L2-normalized per document.
// (index, value) pairs, deterministic for a given text and dimension.
std::vector<std::pair<std::uint32_t, float>> hash_features(std::string_view text,
                                                           int dimension_bits);

// P(policy) for a document under the model.
double model_score(const LinearTextModel& model, std::string_view text);

struct GateVerdict {
    bool is_english = false;
    double policy_probability = 0.0;
    bool valid = false;
    std::string reason;  // "", "non-english", "not-policy", "too-short"
};

// Language check first (it short-circuits: the policy model is never
// consulted for non-English text), then the linear model at the decision
// threshold.
GateVerdict classify_policy(std::string_view text, const LinearTextModel& model);

struct LabeledDoc {
    std::string text;
    bool is_policy = false;
};

struct TrainOptions {
    std::uint64_t seed = 42;
    int epochs = 12;
    double learning_rate = 0.2;
    double l2 = 1e-6;
    int dimension_bits = 18;
    double test_fraction = 0.2;  // held out, stratified per class
    double threshold = 0.5;
};

// Logistic-loss SGD to a fixed epoch budget; the 80/20 split is seeded and
// recorded in the model. Errors: InsufficientData (< 50 examples per class).
LinearTextModel train_gate(const std::vector<LabeledDoc>& corpus,
                           const TrainOptions& options = {});

// Versioned binary container: dimension, weights (sparse, full-precision),
// bias, threshold, training metadata. Round-trips bit-exactly.
void save_model(const LinearTextModel& model, const std::string& path);
LinearTextModel load_model(const std::string& path);

// Corpus directory layout: <dir>/policy/*.txt and <dir>/other/*.txt.
std::vector<LabeledDoc> load_gate_corpus(const std::string& dir);

}  // namespace polidiff
