#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace polidiff {

// The five per-policy text features. Ratio fields are absent (flagged
// undefined) when their denominator is zero.
struct TextMetrics {
    long syllables = 0;
    long words = 0;
    long sentences = 0;
    std::optional<double> words_per_sentence;
    std::optional<double> passive_index;  // percentage in [0, 100]
};

// One sentence-sized slice of the input. Spans partition the text: every
// byte belongs to exactly one span (or to inter-span whitespace), so callers
// that need full coverage (the segmenter) and callers that count sentences
// share one boundary rule.
struct SentenceSpan {
    std::size_t begin = 0;
    std::size_t end = 0;
    // Ends at a terminator boundary, or is a terminator-less line of >= 3
    // words (a bullet or heading).
    bool counts_as_sentence = false;
};

std::vector<SentenceSpan> sentence_spans(std::string_view text);

// The spans that count, as trimmed strings. Empty text -> empty list.
std::vector<std::string> tokenize_sentences(std::string_view text);

// Whitespace-delimited tokens that contain at least one alphanumeric
// character; pure punctuation is not a word.
std::vector<std::string> tokenize_words(std::string_view text);

// Vowel-group heuristic. Tokens without a letter count zero; any token with
// a letter counts at least one.
long count_syllables(std::string_view word);

// Lexical passive rule: a form of "be" followed within three tokens by a
// past participle, skipping adverbs. Exposed for tests.
bool sentence_is_passive(std::string_view sentence);

// Percentage of sentences matching the passive rule; nullopt when the text
// has no sentences.
std::optional<double> passive_index(std::string_view text);

TextMetrics compute_metrics(std::string_view text);

// ---- dependency-annotation mode -----------------------------------------
// Sidecar format: one token per line ("index<TAB or space>token<...>label"),
// blank line between sentences. A sentence is passive when an nsubjpass
// token is later followed by an auxpass token; an aux between them is
// accepted but not required (simple passives often lack it).

struct DepToken {
    int index = 0;
    std::string token;
    std::string label;
};
using DepSentence = std::vector<DepToken>;

std::vector<DepSentence> load_dep_annotations(const std::string& path);
std::vector<DepSentence> parse_dep_annotations(std::string_view text);
bool dep_sentence_is_passive(const DepSentence& sentence);
std::optional<double> passive_index_from_deps(const std::vector<DepSentence>& sentences);

// compute_metrics with the passive index replaced by the parse-based value.
TextMetrics compute_metrics_with_deps(std::string_view text,
                                      const std::vector<DepSentence>& sentences);

}  // namespace polidiff
