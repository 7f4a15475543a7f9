/**
 * Fold inferred resources into the draft, mirroring the backend's merge
 * semantics: matching names are replaced field-by-field but keep any
 * human-authored column descriptions; new names append after existing
 * resources, both sides in stable order.
 */

import { JsonObject, JsonValue, asArray, isObject } from "./types.js";

function fieldDescriptions(resource: JsonObject): Map<string, JsonValue> {
  const out = new Map<string, JsonValue>();
  const schema = resource.schema;
  if (!isObject(schema)) return out;
  for (const field of asArray(schema.fields)) {
    if (isObject(field) && typeof field.name === "string" && field.description !== undefined) {
      out.set(field.name, field.description);
    }
  }
  return out;
}

function mergeResource(old: JsonObject, incoming: JsonObject): JsonObject {
  const schema = incoming.schema;
  if (!isObject(old.schema) || !isObject(schema) || !Array.isArray(schema.fields)) {
    return incoming;
  }
  const kept = fieldDescriptions(old);
  const fields = schema.fields.map((field) => {
    if (
      isObject(field) &&
      typeof field.name === "string" &&
      field.description === undefined &&
      kept.has(field.name)
    ) {
      return { ...field, description: kept.get(field.name)! };
    }
    return field;
  });
  return { ...incoming, schema: { ...schema, fields } };
}

export function mergeInferred(draft: JsonObject, inferred: JsonObject[]): JsonObject {
  if (inferred.length === 0) return draft;
  const seen = new Set<JsonValue>();
  for (const r of inferred) {
    if (seen.has(r.name)) throw new Error(`duplicate resource name: ${String(r.name)}`);
    seen.add(r.name);
  }
  const byName = new Map(inferred.map((r) => [r.name, r]));
  const existing = asArray(draft.resources);
  const merged: JsonValue[] = existing.map((old) => {
    if (isObject(old) && byName.has(old.name)) {
      const incoming = byName.get(old.name)!;
      byName.delete(old.name);
      return mergeResource(old, incoming);
    }
    return old;
  });
  for (const r of inferred) {
    if (byName.has(r.name)) merged.push(r);
  }
  return { ...draft, resources: merged };
}
