#include "polidiff/query.hpp"

namespace polidiff {

// The 24 structured queries: nine category-coverage checks, the seven
// "Right to be Informed" checklist items, and the eight specificity
// measures. "values_ref": "action-source-set" expands to the fixed set of
// indirect-collection action values.
std::string_view default_query_catalog_json() {
    static const std::string_view kJson = R"JSON({
  "queries": [
    {
      "id": "COV-1", "kind": "coverage",
      "description": "Service provider's collection and use of user data.",
      "filter": {"category": "first-party-collection-use"},
      "scorer": "nonempty"
    },
    {
      "id": "COV-2", "kind": "coverage",
      "description": "Sharing and collection of user data with third parties.",
      "filter": {"category": "third-party-sharing-collection"},
      "scorer": "nonempty"
    },
    {
      "id": "COV-3", "kind": "coverage",
      "description": "Options for choices and control users have for their collected data.",
      "filter": {"category": "user-choice-control"},
      "scorer": "nonempty"
    },
    {
      "id": "COV-4", "kind": "coverage",
      "description": "Practices related to a specific group of users.",
      "filter": {"category": "international-specific-audiences"},
      "scorer": "nonempty"
    },
    {
      "id": "COV-5", "kind": "coverage",
      "description": "The protection mechanisms for user's data.",
      "filter": {"category": "data-security"},
      "scorer": "nonempty"
    },
    {
      "id": "COV-6", "kind": "coverage",
      "description": "Options for users to access, edit or delete their stored data.",
      "filter": {"category": "user-access-edit-deletion"},
      "scorer": "nonempty"
    },
    {
      "id": "COV-7", "kind": "coverage",
      "description": "The period and purpose of storing user's data.",
      "filter": {"category": "data-retention"},
      "scorer": "nonempty"
    },
    {
      "id": "COV-8", "kind": "coverage",
      "description": "Communicating changes to the privacy policy to the users.",
      "filter": {"category": "policy-change"},
      "scorer": "nonempty"
    },
    {
      "id": "COV-9", "kind": "coverage",
      "description": "The contact information for privacy related matters.",
      "filter": {"category": "privacy-contact-information"},
      "scorer": "nonempty"
    },
    {
      "id": "ICO-Q1", "kind": "compliance", "gdpr_ref": "13(1.c)",
      "description": "The purposes of processing user data.",
      "filter": {"all": [
        {"category": "first-party-collection-use"},
        {"attr_nonempty": "purpose"},
        {"attr_excludes": {"attr": "purpose", "value": "unspecified"}}
      ]},
      "scorer": "nonempty"
    },
    {
      "id": "ICO-Q2", "kind": "compliance", "gdpr_ref": "14(1.d)",
      "description": "The categories of obtained personal data (if personal data is not obtained from the individual it relates to).",
      "filter": {"all": [
        {"category": "first-party-collection-use"},
        {"attr_intersects": {"attr": "action-first-party", "values_ref": "action-source-set"}},
        {"attr_excludes": {"attr": "info-type", "value": "unspecified"}}
      ]},
      "scorer": "nonempty"
    },
    {
      "id": "ICO-Q3", "kind": "compliance", "gdpr_ref": "14(1.e)",
      "description": "The recipients of the user's personal data.",
      "filter": {"all": [
        {"category": "third-party-sharing-collection"},
        {"attr_nonempty": "third-party-entity"},
        {"attr_excludes": {"attr": "third-party-entity", "value": "unspecified"}}
      ]},
      "scorer": "nonempty"
    },
    {
      "id": "ICO-Q4", "kind": "compliance", "gdpr_ref": "17(1.b)",
      "description": "The right for the user to withdraw consent from data processing.",
      "filter": {"all": [
        {"category_any": ["first-party-collection-use", "user-choice-control"]},
        {"attr_intersects": {"attr": "choice-type",
                             "values": ["opt-out-link", "opt-out-via-contacting-company"]}},
        {"attr_contains": {"attr": "choice-scope", "value": "first-party-use"}}
      ]},
      "scorer": "nonempty"
    },
    {
      "id": "ICO-Q5", "kind": "compliance", "gdpr_ref": "15(1.g)",
      "description": "The source of the personal data (if the personal data is not obtained from the individual it relates to).",
      "filter": {"all": [
        {"category": "first-party-collection-use"},
        {"attr_intersects": {"attr": "action-first-party", "values_ref": "action-source-set"}}
      ]},
      "scorer": "nonempty"
    },
    {
      "id": "ICO-Q6", "kind": "compliance", "gdpr_ref": "13(3)",
      "description": "If we plan to use personal data for a new purpose, we update our privacy information and communicate the changes to individuals before starting any new processing.",
      "filter": {"all": [
        {"category": "policy-change"},
        {"attr_contains": {"attr": "type-of-policy-change", "value": "privacy-relevant-change"}},
        {"attr_nonempty": "how-notified"},
        {"attr_excludes": {"attr": "how-notified", "value": "unspecified"}}
      ]},
      "scorer": "nonempty"
    },
    {
      "id": "ICO-Q7", "kind": "compliance", "gdpr_ref": "15(1)",
      "description": "Individuals have the right to access their personal data.",
      "filter": {"all": [
        {"category": "user-access-edit-deletion"},
        {"attr_intersects": {"attr": "access-type",
                             "values": ["view", "export", "edit-information"]}}
      ]},
      "scorer": "nonempty"
    },
    {
      "id": "SPEC-Q1", "kind": "specificity",
      "description": "Quantify how specifically the policy indicates how the first party is obtaining user data.",
      "filter": {"all": [
        {"category": "first-party-collection-use"},
        {"attr_nonempty": "action-first-party"}
      ]},
      "scorer": {"unspecified_ratio": {"attr": "action-first-party"}}
    },
    {
      "id": "SPEC-Q2", "kind": "specificity",
      "description": "Quantify how specifically the policy indicates how the third party is collecting user data.",
      "filter": {"all": [
        {"category": "third-party-sharing-collection"},
        {"attr_nonempty": "action-third-party"}
      ]},
      "scorer": {"unspecified_ratio": {"attr": "action-third-party"}}
    },
    {
      "id": "SPEC-Q3", "kind": "specificity",
      "description": "Quantify how specifically the policy indicates the type of information accessed by the first party.",
      "filter": {"all": [
        {"category": "first-party-collection-use"},
        {"attr_nonempty": "info-type"}
      ]},
      "scorer": {"unspecified_ratio": {"attr": "info-type"}}
    },
    {
      "id": "SPEC-Q4", "kind": "specificity",
      "description": "Quantify how specifically the policy indicates the type of information shared with the third party.",
      "filter": {"all": [
        {"category": "third-party-sharing-collection"},
        {"attr_nonempty": "info-type"}
      ]},
      "scorer": {"unspecified_ratio": {"attr": "info-type"}}
    },
    {
      "id": "SPEC-Q5", "kind": "specificity",
      "description": "Quantify how specifically the policy indicates how the third party is receiving user information.",
      "filter": {"category": "third-party-sharing-collection"},
      "scorer": {"unspecified_ratio": {"attr": "third-party-entity", "count_empty": true}}
    },
    {
      "id": "SPEC-Q6", "kind": "specificity",
      "description": "Quantify how specifically the policy covers first party collection purposes relative to all possible purposes in our taxonomy.",
      "filter": {"category": "first-party-collection-use"},
      "scorer": {"purpose_coverage": {"attr": "purpose"}}
    },
    {
      "id": "SPEC-Q7", "kind": "specificity",
      "description": "Quantify how specifically the policy covers third party sharing purposes relative to all possible purposes in our taxonomy.",
      "filter": {"category": "third-party-sharing-collection"},
      "scorer": {"purpose_coverage": {"attr": "purpose"}}
    },
    {
      "id": "SPEC-Q8", "kind": "specificity",
      "description": "Quantify how specifically the policy indicates the purpose for data retention.",
      "filter": {"all": [
        {"category": "data-retention"},
        {"attr_nonempty": "purpose"}
      ]},
      "scorer": {"unspecified_ratio": {"attr": "purpose"}}
    }
  ]
})JSON";
    return kJson;
}

}  // namespace polidiff
