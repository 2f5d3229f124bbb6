#include "polidiff/taxonomy.hpp"

namespace polidiff {

// Default label universe. Categories follow the nine high-level privacy
// categories of the OPP-115 annotation scheme; attribute values follow the
// OPP-115 release, normalized to lowercase-hyphen identifiers. The purpose
// universe lists the nine concrete purposes ("other" and the "unspecified"
// sentinel stay out of P by definition).
std::string_view default_taxonomy_json() {
    static const std::string_view kJson = R"JSON({
  "categories": [
    "first-party-collection-use",
    "third-party-sharing-collection",
    "user-choice-control",
    "international-specific-audiences",
    "data-security",
    "user-access-edit-deletion",
    "data-retention",
    "policy-change",
    "privacy-contact-information"
  ],
  "attributes": {
    "purpose": {
      "values": [
        "basic-service-feature",
        "additional-service-feature",
        "advertising",
        "marketing",
        "analytics-research",
        "personalization-customization",
        "service-operation-and-security",
        "legal-requirement",
        "merger-acquisition",
        "other"
      ],
      "has_unspecified": true
    },
    "info-type": {
      "values": [
        "contact",
        "location",
        "demographic",
        "financial",
        "health",
        "ip-address-device-ids",
        "cookies-tracking-elements",
        "computer-information",
        "survey-data",
        "user-online-activities",
        "user-profile",
        "social-media-data",
        "personal-identifier",
        "generic-personal-information",
        "other"
      ],
      "has_unspecified": true
    },
    "action-first-party": {
      "values": [
        "collect-on-website",
        "collect-in-mobile-app",
        "collect-on-mobile-website",
        "collect-from-user-on-other-websites",
        "receive-from-other-parts-of-company-affiliates",
        "receive-from-other-service-third-party-named",
        "receive-from-other-service-third-party-unnamed",
        "track-user-on-other-websites",
        "other"
      ],
      "has_unspecified": true
    },
    "action-third-party": {
      "values": [
        "collect-on-first-party-website-app",
        "track-on-first-party-website-app",
        "receive-shared-with",
        "see",
        "other"
      ],
      "has_unspecified": true
    },
    "third-party-entity": {
      "values": [
        "named-third-party",
        "unnamed-third-party",
        "other-part-of-company-affiliate",
        "other-users",
        "public",
        "other"
      ],
      "has_unspecified": true
    },
    "choice-type": {
      "values": [
        "browser-device-privacy-controls",
        "dont-use-service-feature",
        "first-party-privacy-controls-settings",
        "third-party-privacy-controls-settings",
        "opt-in",
        "opt-out-link",
        "opt-out-via-contacting-company",
        "other"
      ],
      "has_unspecified": true
    },
    "choice-scope": {
      "values": [
        "collection",
        "use",
        "both",
        "first-party-collection",
        "first-party-use",
        "third-party-sharing-collection",
        "third-party-use"
      ],
      "has_unspecified": true
    },
    "access-type": {
      "values": [
        "view",
        "export",
        "edit-information",
        "deactivate-account",
        "delete-account-partial",
        "delete-account-full",
        "none",
        "other"
      ],
      "has_unspecified": true
    },
    "type-of-policy-change": {
      "values": [
        "privacy-relevant-change",
        "non-privacy-relevant-change",
        "in-case-of-merger-acquisition"
      ],
      "has_unspecified": true
    },
    "how-notified": {
      "values": [
        "general-notice-in-privacy-policy",
        "general-notice-on-website",
        "personal-notice",
        "no-notification"
      ],
      "has_unspecified": true
    }
  },
  "purpose_universe": [
    "basic-service-feature",
    "additional-service-feature",
    "advertising",
    "marketing",
    "analytics-research",
    "personalization-customization",
    "service-operation-and-security",
    "legal-requirement",
    "merger-acquisition"
  ],
  "aliases": {
    "op-out-link": "opt-out-link",
    "op-out-via-contacting-company": "opt-out-via-contacting-company",
    "first-party": "first-party-collection-use",
    "third-party": "third-party-sharing-collection"
  }
})JSON";
    return kJson;
}

}  // namespace polidiff
