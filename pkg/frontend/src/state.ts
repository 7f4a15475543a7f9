/** Wizard state and its pure transitions; the draft lives only here. */

import { ApiClient } from "./api.js";
import { serializeDatasheet } from "./canonical.js";
import { mergeInferred } from "./merge.js";
import { RESOURCES_STEP, STEP_COUNT } from "./steps.js";
import {
  JsonObject,
  UploadPayload,
  ValidationReport,
  Verdict,
} from "./types.js";

export interface WizardState {
  currentStep: number;
  draft: JsonObject;
  liveReport: ValidationReport | null;
  verdictPreview: Verdict | null;
  dirty: boolean;
}

export function initialState(template: JsonObject): WizardState {
  return {
    currentStep: 1,
    draft: template,
    liveReport: null,
    verdictPreview: null,
    dirty: false,
  };
}

export function goToStep(state: WizardState, step: number): WizardState {
  const clamped = Math.min(Math.max(step, 1), STEP_COUNT);
  return { ...state, currentStep: clamped };
}

export function applyInferredResources(
  state: WizardState,
  resources: JsonObject[],
): WizardState {
  if (resources.length === 0) {
    return state;
  }
  return {
    ...state,
    draft: mergeInferred(state.draft, resources),
    currentStep: RESOURCES_STEP,
    dirty: true,
  };
}

export interface PrefillResult {
  state: WizardState;
  error: string | null;
}

/**
 * Post every file to the inference endpoint and merge the results.
 * Any failure leaves the draft untouched and surfaces a banner message.
 */
export async function prefillFromInference(
  state: WizardState,
  files: UploadPayload[],
  api: ApiClient,
): Promise<PrefillResult> {
  if (files.length === 0) {
    return { state, error: null };
  }
  const resources: JsonObject[] = [];
  for (const file of files) {
    try {
      resources.push(await api.infer(file));
    } catch (e) {
      return { state, error: e instanceof Error ? e.message : String(e) };
    }
  }
  try {
    return { state: applyInferredResources(state, resources), error: null };
  } catch (e) {
    return { state, error: e instanceof Error ? e.message : String(e) };
  }
}

/** Exactly the bytes the download delivers and the API validates. */
export function exportText(state: WizardState): string {
  return serializeDatasheet(state.draft);
}

export function exportFilename(state: WizardState): string {
  const name = typeof state.draft.name === "string" && state.draft.name !== ""
    ? state.draft.name
    : "datasheet";
  return `${name}.datasheet.json`;
}

export interface ReviewResult {
  state: WizardState;
  exported: string;
  error: string | null;
}

/**
 * Step 10: validate the canonical text (and preview the policy verdict
 * when the server has one), never blocking export on warnings.
 */
export async function reviewAndExport(
  state: WizardState,
  api: ApiClient,
  withVerdict = true,
): Promise<ReviewResult> {
  const exported = exportText(state);
  let next = state;
  let error: string | null = null;
  try {
    const report = await api.validateText(exported);
    next = { ...next, liveReport: report };
  } catch (e) {
    error = e instanceof Error ? e.message : String(e);
  }
  if (withVerdict) {
    try {
      const verdict = await api.evaluate(state.draft);
      next = { ...next, verdictPreview: verdict };
    } catch {
      // no policy configured on the server; the preview simply stays empty
      next = { ...next, verdictPreview: null };
    }
  }
  return { state: next, exported, error };
}

export function completenessBadge(report: ValidationReport | null, section: string): string {
  if (report === null || !(section in report.completeness)) {
    return "–";
  }
  return `${Math.round(report.completeness[section] * 100)}%`;
}
