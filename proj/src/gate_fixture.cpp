#include "polidiff/gate_fixture.hpp"

#include <array>
#include <filesystem>

#include "polidiff/store.hpp"
#include "polidiff/util.hpp"

namespace polidiff {

namespace {

// slot vocabularies ----------------------------------------------------------

const std::array<const char*, 10> kDataTypes = {
    "email address", "postal address", "phone number", "payment details",
    "device identifiers", "IP address", "browsing history", "location data",
    "account settings", "survey responses"};

const std::array<const char*, 8> kPurposes = {
    "to provide the service", "to personalize your experience",
    "for advertising", "for marketing communications", "for analytics and research",
    "to comply with legal obligations", "to secure our systems",
    "to develop new features"};

const std::array<const char*, 8> kThirdParties = {
    "advertising partners", "analytics providers", "payment processors",
    "delivery companies", "affiliated companies", "social networks",
    "cloud hosting providers", "business partners"};

const std::array<const char*, 6> kRights = {
    "access", "correct", "delete", "export", "restrict the processing of",
    "object to the use of"};

const std::array<const char*, 8> kCompanies = {
    "Northwind", "Acme Retail", "Blue Harbor Media", "Summit Apps",
    "Lakeside Games", "Evergreen Travel", "Copper Kettle Foods", "Starlight Music"};

// policy sentence templates; %d data type, %p purpose, %t third party, %r right,
// %c company
const std::array<const char*, 22> kPolicySentences = {
    "We collect your %d %p.",
    "When you register, %c asks for your %d.",
    "We may share your %d with %t %p.",
    "Our %t may place cookies on your device to measure how the service is used.",
    "You have the right to %r your personal information at any time.",
    "We retain your %d only for as long as necessary %p.",
    "If we change this privacy policy, we will notify you by email before the change takes effect.",
    "You may opt out of marketing messages by following the link in any message or by contacting us.",
    "We use industry standard safeguards to protect your %d against unauthorized access.",
    "This policy applies to all visitors, including children only where the law permits.",
    "We do not sell your %d to unaffiliated third parties.",
    "Our service is hosted by %t who process data on our behalf under contract.",
    "You can review and update your %d in the account settings page.",
    "We obtain your %d from third party sources, such as %t, to keep records accurate.",
    "Cookies and similar technologies help us remember your preferences.",
    "Where required by law, we ask for your consent before collecting your %d.",
    "Users in the European Union have additional rights, including the right to lodge a complaint.",
    "Aggregated statistics that do not identify you may be shared %p.",
    "To exercise your rights, contact our privacy team at the address below.",
    "We transfer data across borders only with appropriate safeguards in place.",
    "%c keeps a record of consent choices for auditing purposes.",
    "If you delete your account, we remove your %d within thirty days.",
};

const std::array<const char*, 8> kPolicyHeadings = {
    "Information We Collect", "How We Use Information", "Sharing With Third Parties",
    "Your Choices And Rights", "Data Retention", "Security", "Changes To This Policy",
    "Contact Us"};

// non-policy article material ------------------------------------------------

const std::array<const char*, 10> kTopics = {
    "the mountain trail", "the harvest festival", "the city derby",
    "the new concert hall", "the sourdough starter", "the vintage car rally",
    "the coral reef expedition", "the chess tournament", "the autumn marathon",
    "the pottery workshop"};

const std::array<const char*, 10> kPlaces = {
    "Riverton", "the old quarter", "the northern valley", "Harbor Square",
    "the county fairground", "the lakeside village", "the botanical garden",
    "the market street", "the university campus", "the coastal road"};

const std::array<const char*, 22> kArticleSentences = {
    "The season opened with a surprise victory at %P.",
    "Local volunteers spent the weekend preparing %T for visitors.",
    "Rain delayed the start, but the crowd at %P stayed cheerful.",
    "Our reporter followed %T for three days and came back with these notes.",
    "The recipe needs ripe tomatoes, fresh basil, and a slow afternoon.",
    "Knead the dough until it springs back, then let it rest near the window.",
    "The coach praised the young defender after the final whistle.",
    "Tickets for %T sold out within an hour of the announcement.",
    "The orchestra rehearsed late into the night before the premiere at %P.",
    "A gentle climb leads from %P to a ridge with wide views of the valley.",
    "The committee announced the winners during a ceremony at %P.",
    "Fold the egg whites carefully so the batter keeps its air.",
    "The museum extended its exhibition after record attendance.",
    "Cyclists should carry spare tubes on the gravel section near %P.",
    "The striker scored twice, and the home side held on for the draw.",
    "Plant the bulbs before the first frost and mulch them well.",
    "The festival ended with fireworks over %P.",
    "Critics called the performance at %T the finest in a decade.",
    "Simmer the broth for two hours, skimming from time to time.",
    "The trail is marked with blue signs from the bridge at %P.",
    "Next month the league resumes with a derby everyone circled in the calendar.",
    "The gallery opens a retrospective of local painters this Saturday.",
};

const std::array<const char*, 8> kArticleHeadings = {
    "Match Report", "Weekend Guide", "From The Kitchen", "Travel Notes",
    "Community News", "Season Preview", "Review", "Events Calendar"};

std::string fill_template(const char* tmpl, Rng& rng) {
    std::string out;
    for (const char* p = tmpl; *p; ++p) {
        if (*p != '%') {
            out.push_back(*p);
            continue;
        }
        ++p;
        switch (*p) {
            case 'd': out += kDataTypes[rng.below(kDataTypes.size())]; break;
            case 'p': out += kPurposes[rng.below(kPurposes.size())]; break;
            case 't': out += kThirdParties[rng.below(kThirdParties.size())]; break;
            case 'r': out += kRights[rng.below(kRights.size())]; break;
            case 'c': out += kCompanies[rng.below(kCompanies.size())]; break;
            case 'T': out += kTopics[rng.below(kTopics.size())]; break;
            case 'P': out += kPlaces[rng.below(kPlaces.size())]; break;
            default: out.push_back(*p); break;
        }
    }
    return out;
}

template <size_t N, size_t H>
std::string make_doc(Rng& rng, const std::array<const char*, N>& sentences,
                     const std::array<const char*, H>& headings, const char* title) {
    std::string text = title;
    text += "\n";
    int n_sections = 3 + static_cast<int>(rng.below(4));
    for (int s = 0; s < n_sections; ++s) {
        text += "\n";
        text += headings[rng.below(H)];
        text += "\n\n";
        int n_sentences = 4 + static_cast<int>(rng.below(6));
        for (int i = 0; i < n_sentences; ++i) {
            if (i > 0) text += " ";
            text += fill_template(sentences[rng.below(N)], rng);
        }
        text += "\n";
    }
    return text;
}

}  // namespace

std::vector<FixtureDoc> generate_gate_fixture(int count, std::uint64_t seed) {
    std::vector<FixtureDoc> docs;
    docs.reserve(static_cast<size_t>(count));
    Rng rng(seed);
    int n_policy = count / 2;
    for (int i = 0; i < count; ++i) {
        bool is_policy = i < n_policy;
        char name[32];
        std::snprintf(name, sizeof name, "%s-%03d.txt", is_policy ? "policy" : "other", i);
        std::string title = is_policy
                                ? std::string(kCompanies[rng.below(kCompanies.size())]) +
                                      " Privacy Policy"
                                : std::string("Notes on ") + kTopics[rng.below(kTopics.size())];
        std::string text =
            is_policy ? make_doc(rng, kPolicySentences, kPolicyHeadings, title.c_str())
                      : make_doc(rng, kArticleSentences, kArticleHeadings, title.c_str());
        docs.push_back({name, std::move(text), is_policy});
    }
    return docs;
}

void write_gate_fixture(const std::string& dir, int count, std::uint64_t seed) {
    namespace fs = std::filesystem;
    fs::create_directories(fs::path(dir) / "policy");
    fs::create_directories(fs::path(dir) / "other");
    for (const auto& doc : generate_gate_fixture(count, seed)) {
        fs::path path = fs::path(dir) / (doc.is_policy ? "policy" : "other") / doc.name;
        write_file_atomic(path, doc.text);
    }
}

std::vector<LabeledDoc> fixture_to_corpus(const std::vector<FixtureDoc>& docs) {
    std::vector<LabeledDoc> corpus;
    corpus.reserve(docs.size());
    for (const auto& doc : docs) corpus.push_back({doc.text, doc.is_policy});
    return corpus;
}

}  // namespace polidiff
