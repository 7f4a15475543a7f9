/**
 * Inline help registry: one entry per recommended documentation field,
 * exactly covering the fields the completeness score counts.
 */

export interface GuidanceEntry {
  fieldPointer: string;
  section: string;
  title: string;
  body: string;
  example: string;
}

export const GUIDANCE: GuidanceEntry[] = [
  // privacy (4)
  {
    fieldPointer: "/privacy/*/sensitivity/description",
    section: "privacy",
    title: "Sensitivity overview",
    body:
      "Summarize what kinds of sensitive personal information appear in the data " +
      "and why. Think about attributes that could harm people if mishandled: " +
      "health, finances, beliefs, identity.",
    example: "Responses include political leaning and approximate income bands.",
  },
  {
    fieldPointer: "/privacy/*/sensitivity/types",
    section: "privacy",
    title: "Sensitivity types",
    body:
      "List each sensitive attribute as its own entry with a short description, " +
      "so screening tools can match against named categories.",
    example: 'name: "political opinions" — self-reported party preference per respondent.',
  },
  {
    fieldPointer: "/privacy/*/confidentiality/description",
    section: "privacy",
    title: "Confidentiality measures",
    body:
      "Describe what was done to protect data subjects from re-identification: " +
      "pseudonymization, aggregation, suppression of rare combinations.",
    example: "Names replaced by random ids; locations coarsened to region level.",
  },
  {
    fieldPointer: "/privacy/*/confidentiality/path",
    section: "privacy",
    title: "Confidentiality reference",
    body: "Link the full confidentiality or de-identification procedure if published.",
    example: "https://example.org/datasets/survey/confidentiality",
  },
  // useTerms (2)
  {
    fieldPointer: "/useTerms/description",
    section: "useTerms",
    title: "Terms of use",
    body:
      "State the conditions under which the data may be accessed, used and " +
      "shared, beyond what the license alone covers.",
    example: "Research use only; commercial use requires written permission.",
  },
  {
    fieldPointer: "/useTerms/restrictions",
    section: "useTerms",
    title: "Restrictions",
    body:
      "Enumerate concrete restrictions one by one: prohibited analyses, " +
      "redistribution limits, consent or anonymization requirements.",
    example: "No attempts to re-identify individuals.",
  },
  // dataAccess (3)
  {
    fieldPointer: "/dataAccess/description",
    section: "dataAccess",
    title: "Access procedure",
    body: "Explain how to obtain the data: portal, request form, approval steps.",
    example: "Download after registering a research account at the portal.",
  },
  {
    fieldPointer: "/dataAccess/anonymousAccess",
    section: "dataAccess",
    title: "Anonymous access",
    body: "Can the data be fetched without identifying yourself? Pick yes or no.",
    example: "No — every download is tied to an approved account.",
  },
  {
    fieldPointer: "/dataAccess/registrationRequired",
    section: "dataAccess",
    title: "Registration required",
    body:
      "Does access require signing up? Registration and anonymous access are " +
      "mutually exclusive.",
    example: "Yes — institutional email required at sign-up.",
  },
  // collection (4)
  {
    fieldPointer: "/procedures/collection/*/description",
    section: "collection",
    title: "Collection procedure",
    body:
      "Describe how the data was gathered end to end, in enough detail that " +
      "someone could replicate the collection.",
    example: "Quarterly online survey of registered volunteers, 2021-2023.",
  },
  {
    fieldPointer: "/procedures/collection/*/methods",
    section: "collection",
    title: "Collection methods",
    body: "Name each instrument used: surveys, interviews, sensors, web scraping.",
    example: 'name: "focus group" — moderated 90-minute sessions of 8 participants.',
  },
  {
    fieldPointer: "/procedures/collection/*/consent",
    section: "collection",
    title: "Consent records",
    body:
      "Document how consent was obtained from data subjects, with links to the " +
      "forms used. This is what compliance reviews look for first.",
    example: 'title: "consent form" — signed digitally before each session.',
  },
  {
    fieldPointer: "/procedures/collection/*/contributors",
    section: "collection",
    title: "Collection contributors",
    body: "Who performed the collection: your team, another organization, a vendor.",
    example: "Fieldwork by Example Research Ltd on our behalf.",
  },
  // processing (3)
  {
    fieldPointer: "/procedures/processing/*/description",
    section: "processing",
    title: "Processing procedure",
    body:
      "Describe cleaning and transformation so users can spot effects on their " +
      "analysis: dropped records, imputation, normalization.",
    example: "Rows with missing consent flags removed; ages bucketed to 5-year bins.",
  },
  {
    fieldPointer: "/procedures/processing/*/methods",
    section: "processing",
    title: "Processing methods",
    body: "Name each processing technique: aggregation, anonymization, labeling.",
    example: 'name: "anonymization" — k-anonymity with k=5 over quasi-identifiers.',
  },
  {
    fieldPointer: "/procedures/processing/*/contributors",
    section: "processing",
    title: "Processing contributors",
    body: "Who ran the processing, if different from the collectors or publishers.",
    example: "Data engineering team, Example Lab.",
  },
  // update (4)
  {
    fieldPointer: "/procedures/update/isUpdated",
    section: "update",
    title: "Static or updated",
    body:
      "Is this a frozen snapshot or a periodically refreshed dataset? A static " +
      "dataset is fully documented with just this flag.",
    example: "Updated — new survey waves are appended.",
  },
  {
    fieldPointer: "/procedures/update/periodicity",
    section: "update",
    title: "Update schedule",
    body: "How often updates land: a cadence or a trigger.",
    example: "Quarterly, within two weeks of each survey wave closing.",
  },
  {
    fieldPointer: "/procedures/update/method",
    section: "update",
    title: "Update method",
    body: "Whether updates are incremental or a full refresh of the dataset.",
    example: "incremental",
  },
  {
    fieldPointer: "/procedures/update/versioning",
    section: "update",
    title: "Versioning",
    body: "How versions are numbered and where old versions remain available.",
    example: "Semantic versions; prior releases kept as tagged archives.",
  },
  // useCases (2)
  {
    fieldPointer: "/useCases/permitted",
    section: "useCases",
    title: "Permitted use cases",
    body: "Spell out what the dataset is suited for, to guide appropriate reuse.",
    example: "Benchmarking opinion-aggregation models at region level.",
  },
  {
    fieldPointer: "/useCases/prohibited",
    section: "useCases",
    title: "Prohibited use cases",
    body:
      "State what the data must not be used for; this is the strongest signal " +
      "reviewers and automated screening act on.",
    example: "Profiling or targeting individual respondents.",
  },
];

export function guidanceFor(section: string): GuidanceEntry[] {
  return GUIDANCE.filter((g) => g.section === section);
}
