#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polidiff/textmetrics.hpp"
#include "polidiff/util.hpp"

using namespace polidiff;

TEST_CASE("sentence tokenization basics") {
    CHECK(tokenize_sentences("We collect data. We share data.").size() == 2);
    CHECK(tokenize_sentences("").empty());
    CHECK(tokenize_sentences("   \n  ").empty());
    CHECK(tokenize_sentences("Is this collected? Yes! Data matters.").size() == 3);
}

TEST_CASE("abbreviations do not split sentences") {
    auto sentences = tokenize_sentences(
        "We use trackers (e.g. Cookies and pixels) to measure reach. "
        "Contact Acme Inc. New York for details.");
    CHECK(sentences.size() == 2);
    // "No." heading style also stays whole
    sentences = tokenize_sentences("See Art. 13 of the regulation. We comply fully.");
    CHECK(sentences.size() == 2);
}

TEST_CASE("bullets and headings count as sentences only with three words") {
    auto sentences = tokenize_sentences(
        "Privacy Policy\nWhat we collect from you\nWe store your address.");
    // "Privacy Policy" has 2 words: not a sentence; the other two count
    CHECK(sentences.size() == 2);
}

TEST_CASE("decimals and URLs do not split") {
    CHECK(tokenize_sentences("The rate is 3.5 percent this year.").size() == 1);
    CHECK(tokenize_sentences("Visit example.com for details.").size() == 1);
}

TEST_CASE("syllable heuristic on reference words") {
    CHECK(count_syllables("data") == 2);       // a, a
    CHECK(count_syllables("privacy") == 3);    // i, a, y
    CHECK(count_syllables("") == 0);
    CHECK(count_syllables("---") == 0);
    CHECK(count_syllables("we") == 1);         // silent e floor
    CHECK(count_syllables("whole") == 1);      // o, silent e
    CHECK(count_syllables("table") == 2);      // consonant + le keeps the e
    CHECK(count_syllables("apple") == 2);
    CHECK(count_syllables("yellow") == 2);     // initial y is a consonant
    CHECK(count_syllables("collected") == 3);  // o, e, e
    CHECK(count_syllables("information") == 4);
    CHECK(count_syllables("rhythm") == 1);     // y vocalic mid-word
}

TEST_CASE("passive rule on reference sentences") {
    CHECK(sentence_is_passive("Data is collected."));
    CHECK(sentence_is_passive("Your address was stored by the provider."));
    CHECK(sentence_is_passive("Records are routinely deleted."));
    CHECK(sentence_is_passive("The request has been processed."));
    CHECK_FALSE(sentence_is_passive("We collect data."));
    CHECK_FALSE(sentence_is_passive("The light is red."));
    CHECK_FALSE(sentence_is_passive("This is a database."));
}

TEST_CASE("passive index percentages") {
    CHECK(*passive_index("Data is collected.") == doctest::Approx(100.0));
    CHECK(*passive_index("We collect data.") == doctest::Approx(0.0));
    CHECK(*passive_index("Data is collected. We collect data.") == doctest::Approx(50.0));
    CHECK_FALSE(passive_index("").has_value());
}

TEST_CASE("compute_metrics on a tiny text") {
    TextMetrics m = compute_metrics("We collect data.");
    CHECK(m.words == 3);
    CHECK(m.sentences == 1);
    CHECK(*m.words_per_sentence == doctest::Approx(3.0));
    TextMetrics empty = compute_metrics("");
    CHECK(empty.words == 0);
    CHECK(empty.sentences == 0);
    CHECK_FALSE(empty.words_per_sentence.has_value());
    CHECK_FALSE(empty.passive_index.has_value());
}

TEST_CASE("words are never fewer than sentences on sentence-shaped text") {
    Rng rng(5);
    const char* words[] = {"data", "users", "we", "collect", "retain", "process"};
    for (int trial = 0; trial < 50; ++trial) {
        std::string text;
        int n = 1 + int(rng.below(8));
        for (int s = 0; s < n; ++s) {
            int len = 1 + int(rng.below(7));
            for (int w = 0; w < len; ++w) {
                text += words[rng.below(6)];
                text += (w + 1 < len) ? " " : "";
            }
            text += ". ";
        }
        TextMetrics m = compute_metrics(text);
        CHECK(m.words >= m.sentences);
    }
}

TEST_CASE("counts are additive under newline concatenation") {
    Rng rng(17);
    const char* words[] = {"policy", "change", "notice", "consent", "e.g.",
                           "information", "we", "your", "data"};
    auto random_text = [&] {
        std::string text;
        int n = 1 + int(rng.below(5));
        for (int s = 0; s < n; ++s) {
            int len = 3 + int(rng.below(6));
            for (int w = 0; w < len; ++w) {
                text += words[rng.below(9)];
                text += (w + 1 < len) ? " " : "";
            }
            text += rng.below(4) == 0 ? "\n" : ". ";
        }
        return text;
    };
    for (int trial = 0; trial < 100; ++trial) {
        std::string a = random_text();
        std::string b = random_text();
        TextMetrics ma = compute_metrics(a);
        TextMetrics mb = compute_metrics(b);
        TextMetrics joined = compute_metrics(a + "\n" + b);
        CHECK(joined.syllables == ma.syllables + mb.syllables);
        CHECK(joined.words == ma.words + mb.words);
        CHECK(joined.sentences == ma.sentences + mb.sentences);
    }
}

TEST_CASE("passive index ignores trailing non-sentence whitespace") {
    std::string text = "Data is collected. We collect data.";
    CHECK(*passive_index(text) == *passive_index(text + "\n  \n\t"));
}

TEST_CASE("dependency sidecar mode") {
    const char* sidecar =
        "0 Data nsubjpass\n"
        "1 is auxpass\n"
        "2 collected ROOT\n"
        "\n"
        "0 We nsubj\n"
        "1 collect ROOT\n"
        "2 data dobj\n";
    auto sentences = parse_dep_annotations(sidecar);
    REQUIRE(sentences.size() == 2);
    CHECK(dep_sentence_is_passive(sentences[0]));
    CHECK_FALSE(dep_sentence_is_passive(sentences[1]));
    CHECK(*passive_index_from_deps(sentences) == doctest::Approx(50.0));

    // aux between subject and passive auxiliary is accepted
    auto with_aux = parse_dep_annotations(
        "0 Data nsubjpass\n1 will aux\n2 be auxpass\n3 collected ROOT\n");
    CHECK(dep_sentence_is_passive(with_aux[0]));
}

TEST_CASE("twenty-sentence fixture matches hand-computed counts") {
    // Hand-tallied against the stated rules: vowel-group syllables with
    // silent-e and consonant+le handling, word = token with an alphanumeric,
    // sentences split at terminators.
    const std::string fixture =
        "We value your privacy.\n"                         // words 4, syl 1+2+1+3=7
        "Data is collected when you visit.\n"              // words 6, syl 2+1+3+1+1+2=10
        "We store your name.\n"                            // words 4, syl 1+1+1+1=4
        "Cookies track usage.\n"                           // words 3, syl 2+1+2=5
        "You can opt out.\n"                               // words 4, syl 1+1+1+1=4
        "Partners receive data.\n"                         // words 3, syl 2+2+2=6
        "We keep records for a year.\n"                    // words 6, syl 1+1+2+1+1+1=7
        "Access is provided on request.\n"                 // words 5, syl 2+1+3+1+2=9
        "You may delete your account.\n"                   // words 5, syl 1+1+2+1+2=7
        "Changes are posted here.\n"                       // words 4, syl 2+1+2+1=6
        "Contact us with questions.\n"                     // words 4, syl 2+1+1+2=6
        "We use secure servers.\n"                         // words 4, syl 1+1+2+2=6
        "Payment data is encrypted.\n"                     // words 4, syl 2+2+1+3=8
        "We respect legal limits.\n"                       // words 4, syl 1+2+2+2=7
        "Children need parental consent.\n"                // words 4, syl 2+1+3+2=8
        "Marketing mail is optional.\n"                    // words 4, syl 3+1+1+3=8
        "Your choices are honored.\n"                      // words 4, syl 1+2+1+3=7
        "Logs expire after thirty days.\n"                 // words 5, syl 1+2+2+2+1=8
        "The policy is updated yearly.\n"                  // words 5, syl 1+3+1+3+2=10
        "Thank you for reading.\n";                        // words 4, syl 1+1+1+2=5
    TextMetrics m = compute_metrics(fixture);
    CHECK(m.sentences == 20);
    CHECK(m.words == 86);
    CHECK(m.syllables == 138);
    CHECK(*m.words_per_sentence == doctest::Approx(86.0 / 20.0));
    // passive sentences: "Data is collected...", "Access is provided...",
    // "Changes are posted...", "Payment data is encrypted...",
    // "...are honored", "...is updated" -> 6 of 20
    CHECK(*m.passive_index == doctest::Approx(30.0));
}
