/** Minimal JSON Pointer helpers for binding form fields to the draft. */

import { JsonObject, JsonValue, isObject } from "./types.js";

export function tokens(pointer: string): string[] {
  if (pointer === "") return [];
  return pointer
    .slice(1)
    .split("/")
    .map((t) => t.replace(/~1/g, "/").replace(/~0/g, "~"));
}

export function getPointer(doc: JsonValue, pointer: string): JsonValue | undefined {
  let node: JsonValue | undefined = doc;
  for (const token of tokens(pointer)) {
    if (Array.isArray(node)) {
      node = node[Number(token)];
    } else if (isObject(node)) {
      node = node[token];
    } else {
      return undefined;
    }
  }
  return node;
}

/** Set a value, creating intermediate objects/arrays along the way. */
export function setPointer(doc: JsonObject, pointer: string, value: JsonValue): void {
  const parts = tokens(pointer);
  if (parts.length === 0) throw new Error("cannot replace the whole document");
  let node: JsonValue = doc;
  for (let i = 0; i < parts.length - 1; i++) {
    const token = parts[i];
    const next = parts[i + 1];
    if (Array.isArray(node)) {
      const idx = Number(token);
      if (node[idx] === undefined) node[idx] = /^\d+$/.test(next) ? [] : {};
      node = node[idx];
    } else if (isObject(node)) {
      if (node[token] === undefined) node[token] = /^\d+$/.test(next) ? [] : {};
      node = node[token];
    } else {
      throw new Error(`cannot descend into scalar at /${parts.slice(0, i).join("/")}`);
    }
  }
  const last = parts[parts.length - 1];
  if (Array.isArray(node)) {
    node[Number(last)] = value;
  } else if (isObject(node)) {
    node[last] = value;
  } else {
    throw new Error(`cannot set under a scalar: ${pointer}`);
  }
}

/** Remove a key (or list element) so the canonical form omits it. */
export function removePointer(doc: JsonObject, pointer: string): void {
  const parts = tokens(pointer);
  if (parts.length === 0) return;
  const parentPointer =
    parts.length > 1 ? "/" + parts.slice(0, -1).map(escapeToken).join("/") : "";
  const parent = parentPointer === "" ? doc : getPointer(doc, parentPointer);
  const last = parts[parts.length - 1];
  if (Array.isArray(parent)) {
    parent.splice(Number(last), 1);
  } else if (isObject(parent)) {
    delete parent[last];
  }
}

export function escapeToken(token: string): string {
  return token.replace(/~/g, "~0").replace(/\//g, "~1");
}
