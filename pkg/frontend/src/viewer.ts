/** Read-only viewer logic: parse, validate, badge extraction. */

import { ApiClient, ApiRequestError } from "./api.js";
import { canonicalJson } from "./canonical.js";
import { JsonObject, ValidationReport, isObject } from "./types.js";

export type ViewerResult =
  | { kind: "error"; message: string }
  | { kind: "ok"; datasheet: JsonObject; report: ValidationReport };

/**
 * Parse and validate pasted or uploaded datasheet text. Syntax errors
 * are reported locally; structural errors come back from the service
 * with pointer-level messages.
 */
export async function loadViewer(text: string, api: ApiClient): Promise<ViewerResult> {
  let value: unknown;
  try {
    value = JSON.parse(text);
  } catch (e) {
    return { kind: "error", message: `not valid JSON: ${(e as Error).message}` };
  }
  if (!isObject(value as never)) {
    return { kind: "error", message: "a datasheet must be a JSON object" };
  }
  try {
    const report = await api.validateText(text);
    return { kind: "ok", datasheet: value as JsonObject, report };
  } catch (e) {
    if (e instanceof ApiRequestError) {
      return { kind: "error", message: e.message };
    }
    return { kind: "error", message: e instanceof Error ? e.message : String(e) };
  }
}

/** Pretty text block for a section subtree, reusing canonical layout. */
export function sectionText(datasheet: JsonObject, key: string): string {
  if (!(key in datasheet)) return "";
  return canonicalJson(datasheet[key]);
}
