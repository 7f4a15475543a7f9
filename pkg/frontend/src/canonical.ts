/**
 * Canonical datasheet serialization, byte-compatible with the backend.
 *
 * The datasheet file format fixes the key order of every record type,
 * two-space indentation, LF line endings and a trailing newline, with
 * unknown keys appended after the known ones in recursively sorted
 * order. Reproducing it here lets the wizard download exactly the
 * bytes the validation endpoint saw.
 */

import { JsonObject, JsonValue, isObject } from "./types.js";

interface RecordSpec {
  order: string[];
  children: Record<string, string>;
}

// child entries: "spec" applies to a record value, "spec[]" to each list item
const SPECS: Record<string, RecordSpec> = {
  datasheet: {
    order: [
      "name", "title", "description", "version", "created", "homepage",
      "keywords", "licenses", "contributors", "sources", "resources",
      "privacy", "useTerms", "dataAccess", "procedures", "useCases",
    ],
    children: {
      licenses: "license[]",
      contributors: "contributor[]",
      sources: "source[]",
      resources: "resource[]",
      privacy: "privacyEntry[]",
      useTerms: "useTerms",
      dataAccess: "dataAccess",
      procedures: "procedures",
      useCases: "useCase[]",
    },
  },
  license: { order: ["name", "title", "path"], children: {} },
  contributor: {
    order: ["name", "role", "organization", "email", "path"],
    children: {},
  },
  source: { order: ["title", "path", "description"], children: {} },
  resource: {
    order: ["name", "path", "format", "mediatype", "encoding", "bytes", "hash", "schema"],
    children: { schema: "tableSchema" },
  },
  tableSchema: {
    order: ["fields", "missingValues"],
    children: { fields: "field[]" },
  },
  field: { order: ["name", "type", "description", "sampleValues"], children: {} },
  privacyEntry: {
    order: ["sensitivity", "confidentiality"],
    children: { sensitivity: "sensitivity", confidentiality: "confidentiality" },
  },
  sensitivity: {
    order: ["description", "types"],
    children: { types: "sensitivityType[]" },
  },
  sensitivityType: { order: ["name", "description"], children: {} },
  confidentiality: { order: ["path", "description"], children: {} },
  useTerms: { order: ["description", "path", "restrictions"], children: {} },
  dataAccess: {
    order: ["anonymousAccess", "registrationRequired", "description", "path"],
    children: {},
  },
  procedures: {
    order: ["collection", "processing", "update"],
    children: {
      collection: "collectionProcedure[]",
      processing: "processingProcedure[]",
      update: "updateProcedure",
    },
  },
  collectionProcedure: {
    order: ["description", "path", "contributors", "methods", "consent"],
    children: { contributors: "contributor[]", methods: "method[]", consent: "consent[]" },
  },
  processingProcedure: {
    order: ["description", "methods", "contributors"],
    children: { methods: "method[]", contributors: "contributor[]" },
  },
  updateProcedure: {
    order: ["isUpdated", "periodicity", "method", "methodDescription", "versioning", "contributors"],
    children: { contributors: "contributor[]" },
  },
  method: { order: ["name", "description", "path"], children: {} },
  consent: { order: ["title", "description", "path"], children: {} },
  useCase: { order: ["title", "description", "kind"], children: {} },
};

type Entry = [string, Ordered];
type Ordered =
  | { kind: "record"; entries: Entry[] }
  | { kind: "list"; items: Ordered[] }
  | { kind: "scalar"; value: string | number | boolean | null };

function orderGeneric(value: JsonValue): Ordered {
  if (Array.isArray(value)) {
    return { kind: "list", items: value.map(orderGeneric) };
  }
  if (isObject(value)) {
    const entries: Entry[] = Object.keys(value)
      .sort()
      .map((k) => [k, orderGeneric(value[k])]);
    return { kind: "record", entries };
  }
  return { kind: "scalar", value };
}

function orderChild(value: JsonValue, childSpec: string | undefined): Ordered {
  if (childSpec === undefined) {
    return orderGeneric(value);
  }
  if (childSpec.endsWith("[]")) {
    const itemSpec = childSpec.slice(0, -2);
    if (Array.isArray(value)) {
      return { kind: "list", items: value.map((item) => orderChild(item, itemSpec)) };
    }
    return orderGeneric(value);
  }
  if (isObject(value)) {
    return orderRecord(value, childSpec);
  }
  return orderGeneric(value);
}

function orderRecord(value: JsonObject, specName: string): Ordered {
  const spec = SPECS[specName];
  const entries: Entry[] = [];
  for (const key of spec.order) {
    const child = value[key];
    if (child === null || child === undefined) {
      continue; // known keys never hold null; absent means omitted
    }
    entries.push([key, orderChild(child, spec.children[key])]);
  }
  const unknown = Object.keys(value)
    .filter((k) => !spec.order.includes(k) && value[k] !== undefined)
    .sort();
  for (const key of unknown) {
    entries.push([key, orderGeneric(value[key])]);
  }
  return { kind: "record", entries };
}

/**
 * Format a number the way the backend's serializer does. Integers keep
 * their digits; fractional values use shortest-roundtrip digits, with
 * exponent notation (two-digit, zero-padded exponent) outside the
 * fixed-notation range.
 */
export function formatNumber(n: number): string {
  if (!Number.isFinite(n)) {
    throw new Error(`not a JSON number: ${n}`);
  }
  if (Number.isInteger(n) && Math.abs(n) < 1e21) {
    return String(n);
  }
  const [mantissa, expPart] = n.toExponential().split("e");
  const exp = parseInt(expPart, 10);
  if (exp < -4 || exp >= 16) {
    const sign = exp < 0 ? "-" : "+";
    return `${mantissa}e${sign}${String(Math.abs(exp)).padStart(2, "0")}`;
  }
  return String(n);
}

function emit(node: Ordered, indent: number, out: string[]): void {
  const pad = "  ".repeat(indent + 1);
  const closePad = "  ".repeat(indent);
  if (node.kind === "scalar") {
    const v = node.value;
    out.push(typeof v === "number" ? formatNumber(v) : JSON.stringify(v));
    return;
  }
  if (node.kind === "list") {
    if (node.items.length === 0) {
      out.push("[]");
      return;
    }
    out.push("[\n");
    node.items.forEach((item, i) => {
      out.push(pad);
      emit(item, indent + 1, out);
      out.push(i < node.items.length - 1 ? ",\n" : "\n");
    });
    out.push(closePad + "]");
    return;
  }
  if (node.entries.length === 0) {
    out.push("{}");
    return;
  }
  out.push("{\n");
  node.entries.forEach(([key, child], i) => {
    out.push(pad + JSON.stringify(key) + ": ");
    emit(child, indent + 1, out);
    out.push(i < node.entries.length - 1 ? ",\n" : "\n");
  });
  out.push(closePad + "}");
}

function stringify(node: Ordered): string {
  const out: string[] = [];
  emit(node, 0, out);
  return out.join("") + "\n";
}

/** Canonical text for a whole datasheet document. */
export function serializeDatasheet(draft: JsonObject): string {
  return stringify(orderRecord(draft, "datasheet"));
}

/** Canonical text for any JSON value with generic (sorted-key) ordering. */
export function canonicalJson(value: JsonValue): string {
  return stringify(orderGeneric(value));
}
