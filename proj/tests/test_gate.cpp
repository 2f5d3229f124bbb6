#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <filesystem>

#include "polidiff/errors.hpp"
#include "polidiff/gate.hpp"
#include "polidiff/gate_fixture.hpp"

using namespace polidiff;

namespace {

std::string english_prose() {
    return "The committee published its annual survey of coastal towns on Friday. "
           "Researchers compared fishing records from three decades and found that "
           "harbor traffic doubled while average catch size declined. Local officials "
           "promised new investment in storage facilities, and several captains "
           "described plans to share equipment during the winter season. Meanwhile the "
           "museum announced an exhibition about shipbuilding, with lectures every "
           "Tuesday evening and guided tours for schools. Visitors can register online "
           "or buy tickets at the door. The report ends with a reminder that weather "
           "patterns remain difficult to predict, and that early planning saves both "
           "money and effort for everyone involved. Gardeners in the region already "
           "prepare for spring, ordering seeds and repairing fences before the first "
           "warm week arrives. The library will stay open late during the holidays so "
           "that students can finish their projects in quiet rooms.";
}

std::string german_prose() {
    return "Der Ausschuss ver\xC3\xB6""ffentlichte am Freitag seine j\xC3\xA4hrliche "
           "Untersuchung der K\xC3\xBCstenst\xC3\xA4""dte. Forscher verglichen "
           "Fangberichte aus drei Jahrzehnten und stellten fest, dass der Hafenverkehr "
           "sich verdoppelte, w\xC3\xA4hrend die durchschnittliche Fangmenge "
           "zur\xC3\xBC""ckging. Die Beh\xC3\xB6rden versprachen neue Investitionen in "
           "Lagerh\xC3\xA4user, und mehrere Kapit\xC3\xA4ne beschrieben Pl\xC3\xA4ne, im "
           "Winter Ger\xC3\xA4te zu teilen. Das Museum k\xC3\xBCndigte eine Ausstellung "
           "\xC3\xBC""ber den Schiffbau an, mit Vortr\xC3\xA4gen jeden Dienstagabend und "
           "F\xC3\xBChrungen f\xC3\xBCr Schulen. Besucher k\xC3\xB6nnen sich im Internet "
           "anmelden oder Karten an der Kasse kaufen. Der Bericht endet mit dem Hinweis, "
           "dass das Wetter schwer vorherzusagen bleibt und dass fr\xC3\xBChe Planung "
           "allen Beteiligten Geld und M\xC3\xBChe spart.";
}

std::string french_policy() {
    std::string text;
    while (text.size() < 1200)
        text += "La pr\xC3\xA9sente politique de confidentialit\xC3\xA9 explique quelles "
                "informations nous collectons, combien de temps nous les conservons et "
                "les choix offerts \xC3\xA0 chaque utilisateur du service. ";
    return text;
}

}  // namespace

TEST_CASE("language detection separates English from German") {
    LanguageVerdict en = detect_language(english_prose());
    CHECK(en.is_english);
    CHECK(en.confidence >= 0.6);
    CHECK(en.best_language == "english");

    LanguageVerdict de = detect_language(german_prose());
    CHECK_FALSE(de.is_english);
    CHECK(de.best_language == "german");

    CHECK_THROWS_AS(detect_language("too short to judge"), Error);
    try {
        detect_language("short");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::TooShort);
    }
}

TEST_CASE("fixture corpus is deterministic and balanced") {
    auto docs_a = generate_gate_fixture(400, 42);
    auto docs_b = generate_gate_fixture(400, 42);
    REQUIRE(docs_a.size() == 400);
    CHECK(docs_a[0].text == docs_b[0].text);
    CHECK(docs_a[399].text == docs_b[399].text);
    int policies = 0;
    for (const auto& doc : docs_a) policies += doc.is_policy ? 1 : 0;
    CHECK(policies == 200);
    // different seed changes the corpus
    auto docs_c = generate_gate_fixture(400, 43);
    CHECK(docs_a[0].text != docs_c[0].text);
}

TEST_CASE("training on the 400-doc fixture reaches the accuracy bar") {
    auto start = std::chrono::steady_clock::now();
    auto corpus = fixture_to_corpus(generate_gate_fixture(400, 42));
    TrainOptions options;
    options.seed = 42;
    LinearTextModel model = train_gate(corpus, options);
    CHECK(model.held_out_accuracy >= 0.95);
    CHECK(model.train_examples == 320);
    CHECK(model.test_examples == 80);
    CHECK(model.seed == 42);
    CHECK_FALSE(model.split_leakage);
    auto elapsed = std::chrono::steady_clock::now() - start;
    CHECK(std::chrono::duration_cast<std::chrono::seconds>(elapsed).count() < 60);
}

TEST_CASE("insufficient data per class is rejected") {
    auto corpus = fixture_to_corpus(generate_gate_fixture(80, 7));  // 40 per class
    CHECK_THROWS_AS(train_gate(corpus), Error);
    try {
        train_gate(corpus);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InsufficientData);
    }
}

TEST_CASE("duplicate documents trip the leakage flag") {
    auto corpus = fixture_to_corpus(generate_gate_fixture(200, 9));
    // duplicate everything: some copies land on both sides of the split
    std::vector<LabeledDoc> doubled = corpus;
    doubled.insert(doubled.end(), corpus.begin(), corpus.end());
    LinearTextModel model = train_gate(doubled);
    CHECK(model.split_leakage);
    CHECK(model.held_out_accuracy > 0.5);  // training itself succeeds
}

TEST_CASE("classification verdicts and gate ordering") {
    auto corpus = fixture_to_corpus(generate_gate_fixture(400, 42));
    LinearTextModel model = train_gate(corpus);

    auto fixture = generate_gate_fixture(10, 1234);
    GateVerdict policy_verdict = classify_policy(fixture[0].text, model);  // policy doc
    CHECK(policy_verdict.valid);
    CHECK(policy_verdict.is_english);

    GateVerdict article_verdict = classify_policy(fixture[9].text, model);  // article doc
    CHECK_FALSE(article_verdict.valid);
    CHECK(article_verdict.reason == "not-policy");

    // non-English short-circuits: reason set, model probability untouched
    GateVerdict french_verdict = classify_policy(french_policy(), model);
    CHECK_FALSE(french_verdict.valid);
    CHECK(french_verdict.reason == "non-english");
    CHECK(french_verdict.policy_probability == 0.0);
}

TEST_CASE("model files round-trip with identical scores") {
    namespace fs = std::filesystem;
    auto corpus = fixture_to_corpus(generate_gate_fixture(400, 42));
    LinearTextModel model = train_gate(corpus);

    fs::path path = fs::temp_directory_path() / "polidiff-gate-model.bin";
    save_model(model, path.string());
    LinearTextModel reloaded = load_model(path.string());
    CHECK(reloaded.dimension_bits == model.dimension_bits);
    CHECK(reloaded.seed == model.seed);
    CHECK(reloaded.held_out_accuracy == model.held_out_accuracy);

    auto probes = generate_gate_fixture(20, 777);
    for (const auto& probe : probes) {
        double a = model_score(model, probe.text);
        double b = model_score(reloaded, probe.text);
        CHECK(std::fabs(a - b) <= 1e-12);
    }
    fs::remove(path);
}

TEST_CASE("classification is deterministic given a model") {
    auto corpus = fixture_to_corpus(generate_gate_fixture(200, 5));
    LinearTextModel model = train_gate(corpus);
    std::string text = english_prose();
    CHECK(model_score(model, text) == model_score(model, text));
}
