/** The fixed ten-step flow, one step per documentation section. */

export interface StepDef {
  number: number;
  id: string;
  title: string;
  blurb: string;
}

export const STEPS: StepDef[] = [
  {
    number: 1,
    id: "upload",
    title: "Upload & Infer",
    blurb: "Drop in your data files; structure, types and samples are prefilled for you.",
  },
  {
    number: 2,
    id: "package",
    title: "Package",
    blurb: "Name, version and provenance of the dataset as a whole.",
  },
  {
    number: 3,
    id: "resources",
    title: "Resources",
    blurb: "Review the inferred files, field types and sample values.",
  },
  {
    number: 4,
    id: "privacy",
    title: "Privacy & Use Terms",
    blurb: "Sensitive content, confidentiality measures, and the terms of use.",
  },
  {
    number: 5,
    id: "data-access",
    title: "Data Access",
    blurb: "How people reach the data: anonymous or registered, and where.",
  },
  {
    number: 6,
    id: "collection",
    title: "Collection",
    blurb: "How the data was gathered, by whom, and with what consent.",
  },
  {
    number: 7,
    id: "processing",
    title: "Processing",
    blurb: "Cleaning, aggregation, anonymization and labeling steps.",
  },
  {
    number: 8,
    id: "update",
    title: "Update",
    blurb: "Static snapshot or periodically refreshed, and how versions work.",
  },
  {
    number: 9,
    id: "use-cases",
    title: "Use Cases",
    blurb: "What the dataset is meant for, and what it must not be used for.",
  },
  {
    number: 10,
    id: "review",
    title: "Review & Export",
    blurb: "Validation results, completeness badges, policy preview, download.",
  },
];

export const UPLOAD_STEP = 1;
export const RESOURCES_STEP = 3;
export const REVIEW_STEP = 10;
export const STEP_COUNT = STEPS.length;
