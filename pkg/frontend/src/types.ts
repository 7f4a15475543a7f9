/** Shared JSON and API response shapes. */

export type JsonValue =
  | string
  | number
  | boolean
  | null
  | JsonValue[]
  | { [key: string]: JsonValue };

export type JsonObject = { [key: string]: JsonValue };

export interface Issue {
  pointer: string;
  severity: "error" | "warning" | "info";
  code: string;
  message: string;
}

export interface ValidationReport {
  valid: boolean;
  overall: number;
  completeness: Record<string, number>;
  issues: Issue[];
}

export interface RuleResult {
  id: string;
  passed: boolean;
  action: "none" | "review" | "reject";
  matchedValues: string[];
  message: string;
}

export interface Verdict {
  decision: "accept" | "review" | "reject";
  ruleResults: RuleResult[];
}

export interface UploadPayload {
  name: string;
  data: Blob;
}

export function isObject(value: JsonValue | undefined): value is JsonObject {
  return typeof value === "object" && value !== null && !Array.isArray(value);
}

export function asArray(value: JsonValue | undefined): JsonValue[] {
  return Array.isArray(value) ? value : [];
}
