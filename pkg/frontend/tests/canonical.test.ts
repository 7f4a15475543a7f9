import { describe, expect, it } from "vitest";

import { canonicalJson, formatNumber, serializeDatasheet } from "../src/canonical.js";
import { JsonObject } from "../src/types.js";
import { fixtureJson, fixtureText } from "./helpers.js";

interface CanonicalCase {
  doc: JsonObject;
  canonical: string;
}

describe("serializeDatasheet", () => {
  const cases = fixtureJson<CanonicalCase[]>("canonical_cases.json");

  it.each(cases.map((c, i) => [String(c.doc.name ?? i), c] as const))(
    "is byte-identical to the backend for %s",
    (_name, c) => {
      expect(serializeDatasheet(c.doc)).toBe(c.canonical);
    },
  );

  it("reproduces the served template exactly", () => {
    const text = fixtureText("template.json");
    expect(serializeDatasheet(JSON.parse(text))).toBe(text);
  });

  it("is independent of object key insertion order", () => {
    const a: JsonObject = { title: "T", name: "x", "x-b": 2, "x-a": 1 };
    const b: JsonObject = { "x-a": 1, "x-b": 2, name: "x", title: "T" };
    expect(serializeDatasheet(a)).toBe(serializeDatasheet(b));
  });

  it("omits null or undefined known keys", () => {
    const doc: JsonObject = { name: "x", title: null as never };
    expect(serializeDatasheet(doc)).toBe('{\n  "name": "x"\n}\n');
  });

  it("ends with a trailing newline and uses LF only", () => {
    const text = serializeDatasheet({ name: "x" });
    expect(text.endsWith("\n")).toBe(true);
    expect(text.includes("\r")).toBe(false);
  });
});

describe("formatNumber", () => {
  it.each([
    [0, "0"],
    [-7, "-7"],
    [9007199254740991, "9007199254740991"],
    [0.1, "0.1"],
    [2.5, "2.5"],
    [0.0001, "0.0001"],
    [1e-5, "1e-05"],
    [1.5e-7, "1.5e-07"],
    [123456.789, "123456.789"],
    [-0.001, "-0.001"],
    [6.02e23, "6.02e+23"],
  ])("formats %s as %s", (value, expected) => {
    expect(formatNumber(value)).toBe(expected);
  });
});

describe("canonicalJson", () => {
  it("sorts keys recursively", () => {
    expect(canonicalJson({ b: { d: 1, c: 2 }, a: [] })).toBe(
      '{\n  "a": [],\n  "b": {\n    "c": 2,\n    "d": 1\n  }\n}\n',
    );
  });
});
