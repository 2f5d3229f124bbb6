#include "polidiff/textmetrics.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "polidiff/errors.hpp"
#include "polidiff/util.hpp"

namespace polidiff {

namespace {

bool is_word_char(unsigned char c) { return !std::isspace(c); }
bool is_alnum(unsigned char c) { return std::isalnum(c); }

bool token_is_word(std::string_view tok) {
    return std::any_of(tok.begin(), tok.end(),
                       [](unsigned char c) { return is_alnum(c); });
}

int count_word_tokens(std::string_view s) {
    int words = 0;
    size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && !is_word_char(s[i])) ++i;
        size_t start = i;
        while (i < s.size() && is_word_char(s[i])) ++i;
        if (i > start && token_is_word(s.substr(start, i - start))) ++words;
    }
    return words;
}

// Dotted or listed abbreviations whose trailing period does not end a
// sentence. Single letters (initials) are handled separately.
const std::set<std::string, std::less<>>& abbreviation_stoplist() {
    static const std::set<std::string, std::less<>> kAbbrev = {
        "e.g", "i.e", "etc", "vs", "cf",   "al",  "Inc", "Ltd", "Co",
        "Corp", "Mr",  "Mrs", "Ms", "Dr",  "Prof", "St",  "No",  "Art",
        "Sec",  "Fig", "approx", "dept", "est",
    };
    return kAbbrev;
}

bool period_is_abbreviation(std::string_view text, size_t dot) {
    // maximal letter run immediately before the period
    size_t end = dot;
    size_t begin = end;
    while (begin > 0 && std::isalpha(static_cast<unsigned char>(text[begin - 1]))) --begin;
    if (begin == end) return false;  // ". ." or digit before the dot
    std::string_view token = text.substr(begin, end - begin);
    if (token.size() == 1) return true;  // initials: "J. Smith"
    if (begin > 0 && text[begin - 1] == '.') {
        // dotted form: compare "e.g", "i.e", "U.S" style with the stoplist,
        // and treat any single-letter dotted chain as an abbreviation
        size_t chain_begin = begin - 1;
        while (chain_begin > 0 &&
               (std::isalpha(static_cast<unsigned char>(text[chain_begin - 1])) ||
                text[chain_begin - 1] == '.'))
            --chain_begin;
        std::string chain(text.substr(chain_begin, end - chain_begin));
        if (abbreviation_stoplist().count(chain)) return true;
        std::string lowered = to_lower(chain);
        if (abbreviation_stoplist().count(lowered)) return true;
        // "u.s" and friends: every letter run in the chain has length 1
        bool all_single = true;
        size_t run = 0;
        for (char c : chain) {
            if (c == '.') {
                if (run > 1) all_single = false;
                run = 0;
            } else {
                ++run;
            }
        }
        if (run > 1) all_single = false;
        if (all_single) return true;
    }
    if (abbreviation_stoplist().count(token)) return true;
    return abbreviation_stoplist().count(to_lower(token)) > 0;
}

bool is_terminator(char c) { return c == '.' || c == '!' || c == '?'; }

}  // namespace

std::vector<SentenceSpan> sentence_spans(std::string_view text) {
    std::vector<SentenceSpan> spans;
    size_t start = 0;
    size_t i = 0;

    auto flush = [&](size_t end, bool terminator_boundary) {
        // trim the span to its non-space extent
        size_t b = start, e = end;
        while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
        while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
        if (b < e) {
            bool counts = terminator_boundary ||
                          count_word_tokens(text.substr(b, e - b)) >= 3;
            spans.push_back({b, e, counts});
        }
        start = end;
    };

    while (i < text.size()) {
        char c = text[i];
        if (c == '\n') {
            flush(i, false);
            ++i;
            start = i;
            continue;
        }
        if (!is_terminator(c)) {
            ++i;
            continue;
        }
        if (c == '.' && period_is_abbreviation(text, i)) {
            ++i;
            continue;
        }
        // absorb the terminator run and trailing closers
        size_t j = i + 1;
        while (j < text.size() && (is_terminator(text[j]) || text[j] == ')' ||
                                   text[j] == ']' || text[j] == '"' || text[j] == '\''))
            ++j;
        if (j >= text.size()) {
            flush(j, true);
            i = j;
            continue;
        }
        // boundary iff whitespace follows and the next visible char starts a
        // new sentence (capital or digit), or the whitespace includes a newline
        size_t k = j;
        bool saw_newline = false;
        while (k < text.size() && std::isspace(static_cast<unsigned char>(text[k]))) {
            if (text[k] == '\n') saw_newline = true;
            ++k;
        }
        if (k == j) {  // no whitespace after terminator ("3.5", "example.com")
            i = j;
            continue;
        }
        unsigned char next = (k < text.size()) ? static_cast<unsigned char>(text[k]) : 0;
        if (saw_newline || k == text.size() || std::isupper(next) || std::isdigit(next) ||
            next == '"' || next == '\'' || next == '(' || next == '-' || next == '*') {
            flush(j, true);
            i = start = k;
        } else {
            i = j;
        }
    }
    flush(text.size(), false);
    return spans;
}

std::vector<std::string> tokenize_sentences(std::string_view text) {
    std::vector<std::string> out;
    for (const auto& span : sentence_spans(text)) {
        if (!span.counts_as_sentence) continue;
        out.push_back(
            normalize_whitespace(text.substr(span.begin, span.end - span.begin)));
    }
    return out;
}

std::vector<std::string> tokenize_words(std::string_view text) {
    std::vector<std::string> words;
    size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && !is_word_char(text[i])) ++i;
        size_t start = i;
        while (i < text.size() && is_word_char(text[i])) ++i;
        if (i > start) {
            std::string_view tok = text.substr(start, i - start);
            if (token_is_word(tok)) words.emplace_back(tok);
        }
    }
    return words;
}

long count_syllables(std::string_view word) {
    // letters only, lowercased
    std::string w;
    w.reserve(word.size());
    for (unsigned char c : word)
        if (std::isalpha(c)) w.push_back(static_cast<char>(std::tolower(c)));
    if (w.empty()) return 0;

    auto is_vowel_at = [&](size_t i) {
        char c = w[i];
        if (c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u') return true;
        if (c == 'y') return i != 0;  // word-initial y is a consonant
        return false;
    };

    long runs = 0;
    bool in_run = false;
    for (size_t i = 0; i < w.size(); ++i) {
        if (is_vowel_at(i)) {
            if (!in_run) ++runs;
            in_run = true;
        } else {
            in_run = false;
        }
    }

    // terminal silent e: its own run, not part of a consonant+"le" ending
    size_t n = w.size();
    if (n >= 2 && w[n - 1] == 'e' && !is_vowel_at(n - 2)) {
        bool consonant_le = n >= 3 && w[n - 2] == 'l' && !is_vowel_at(n - 3);
        if (!consonant_le) --runs;
    }
    return std::max<long>(runs, 1);
}

namespace {

const std::set<std::string, std::less<>>& be_forms() {
    static const std::set<std::string, std::less<>> kBe = {
        "is", "are", "was", "were", "be", "been", "being", "am"};
    return kBe;
}

bool is_adverb(std::string_view tok) {
    static const std::set<std::string, std::less<>> kAdverbs = {
        "not", "never", "also", "often", "always", "still", "just",
        "now", "then", "already", "sometimes", "hereby", "since"};
    if (tok.size() >= 3 && tok.substr(tok.size() - 2) == "ly") return true;
    return kAdverbs.count(tok) > 0;
}

bool is_past_participle(std::string_view tok) {
    static const std::set<std::string, std::less<>> kIrregular = {
        "made",  "done",   "given",  "taken",  "seen",    "shown",   "known",
        "held",  "kept",   "sent",   "found",  "told",    "sold",    "built",
        "put",   "set",    "read",   "paid",   "met",     "lost",    "won",
        "gone",  "begun",  "brought", "bought", "caught",  "taught",  "thought",
        "understood", "dealt", "felt", "left",  "meant",   "spent",   "sought",
        "fought", "bound",  "hidden", "chosen", "written", "driven",  "eaten",
        "fallen", "forgotten", "frozen", "gotten", "broken", "spoken", "stolen",
        "thrown", "worn",   "torn",   "drawn",  "grown",   "sworn",   "fed",
        "led",   "lent",   "bent",   "burnt",  "learnt",  "hit",     "cut",
        "shut",  "let",    "cost",   "hurt",   "beaten",  "become",  "run",
        "withheld", "housed", "used"};
    if (kIrregular.count(tok)) return true;
    if (tok.size() >= 4 && tok.substr(tok.size() - 2) == "ed") return true;
    if (tok.size() >= 5 && tok.substr(tok.size() - 2) == "en") return true;
    return false;
}

std::string clean_token(std::string_view raw) {
    size_t b = 0, e = raw.size();
    while (b < e && !is_alnum(static_cast<unsigned char>(raw[b]))) ++b;
    while (e > b && !is_alnum(static_cast<unsigned char>(raw[e - 1]))) --e;
    return to_lower(raw.substr(b, e - b));
}

}  // namespace

bool sentence_is_passive(std::string_view sentence) {
    std::vector<std::string> tokens;
    for (const auto& raw : tokenize_words(sentence)) {
        std::string t = clean_token(raw);
        if (!t.empty()) tokens.push_back(std::move(t));
    }
    for (size_t i = 0; i < tokens.size(); ++i) {
        if (!be_forms().count(tokens[i])) continue;
        for (size_t j = i + 1; j < tokens.size() && j <= i + 3; ++j) {
            if (is_adverb(tokens[j])) continue;
            if (is_past_participle(tokens[j])) return true;
            break;  // first non-adverb token decides
        }
    }
    return false;
}

std::optional<double> passive_index(std::string_view text) {
    std::vector<std::string> sentences = tokenize_sentences(text);
    if (sentences.empty()) return std::nullopt;
    long passive = 0;
    for (const auto& s : sentences)
        if (sentence_is_passive(s)) ++passive;
    return 100.0 * static_cast<double>(passive) / static_cast<double>(sentences.size());
}

TextMetrics compute_metrics(std::string_view text) {
    TextMetrics m;
    std::vector<std::string> words = tokenize_words(text);
    m.words = static_cast<long>(words.size());
    for (const auto& w : words) m.syllables += count_syllables(w);

    std::vector<std::string> sentences = tokenize_sentences(text);
    m.sentences = static_cast<long>(sentences.size());
    if (m.sentences > 0) {
        m.words_per_sentence =
            static_cast<double>(m.words) / static_cast<double>(m.sentences);
        long passive = 0;
        for (const auto& s : sentences)
            if (sentence_is_passive(s)) ++passive;
        m.passive_index = 100.0 * static_cast<double>(passive) /
                          static_cast<double>(m.sentences);
    }
    return m;
}

std::vector<DepSentence> parse_dep_annotations(std::string_view text) {
    std::vector<DepSentence> sentences;
    DepSentence current;
    for (const auto& line : split_lines(text)) {
        if (is_blank(line)) {
            if (!current.empty()) sentences.push_back(std::move(current));
            current.clear();
            continue;
        }
        std::istringstream row(line);
        DepToken tok;
        if (!(row >> tok.index >> tok.token >> tok.label))
            throw Error(ErrorKind::SchemaError,
                        "dependency annotation line needs 'index token label': " + line);
        current.push_back(std::move(tok));
    }
    if (!current.empty()) sentences.push_back(std::move(current));
    return sentences;
}

std::vector<DepSentence> load_dep_annotations(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::IoError, "cannot open dep annotations '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_dep_annotations(buf.str());
}

bool dep_sentence_is_passive(const DepSentence& sentence) {
    // nsubjpass later followed by auxpass; an aux in between is fine but not
    // required (some parse schemes emit none for simple passives)
    bool saw_subject = false;
    for (const auto& tok : sentence) {
        if (tok.label == "nsubjpass") saw_subject = true;
        else if (saw_subject && tok.label == "auxpass") return true;
    }
    return false;
}

std::optional<double> passive_index_from_deps(const std::vector<DepSentence>& sentences) {
    if (sentences.empty()) return std::nullopt;
    long passive = 0;
    for (const auto& s : sentences)
        if (dep_sentence_is_passive(s)) ++passive;
    return 100.0 * static_cast<double>(passive) / static_cast<double>(sentences.size());
}

TextMetrics compute_metrics_with_deps(std::string_view text,
                                      const std::vector<DepSentence>& sentences) {
    TextMetrics m = compute_metrics(text);
    m.passive_index = passive_index_from_deps(sentences);
    return m;
}

}  // namespace polidiff
