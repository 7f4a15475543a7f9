import { describe, expect, it } from "vitest";

import { ApiRequestError } from "../src/api.js";
import { JsonObject, ValidationReport } from "../src/types.js";
import { loadViewer } from "../src/viewer.js";
import { renderDatasheet } from "../src/viewer_page.js";
import { fixtureJson, fixtureText, stubApi } from "./helpers.js";

describe("loadViewer", () => {
  it("accepts the fixture datasheet and returns the report", async () => {
    const api = stubApi();
    const result = await loadViewer(fixtureText("rai_sample.json"), api);
    expect(result.kind).toBe("ok");
    if (result.kind === "ok") {
      expect(result.report.completeness.privacy).toBe(1);
    }
  });

  it("reports JSON syntax errors locally", async () => {
    const api = stubApi();
    const result = await loadViewer("{nope", api);
    expect(result.kind).toBe("error");
    if (result.kind === "error") expect(result.message).toMatch(/not valid JSON/);
  });

  it("surfaces pointer-level messages for structural errors", async () => {
    const recorded = fixtureJson<{ code: string; message: string; status: number }>(
      "parse_error_empty.json",
    );
    const api = stubApi({
      async validateText() {
        throw new ApiRequestError(recorded.status, recorded.code, recorded.message);
      },
    });
    const result = await loadViewer("{}", api);
    expect(result.kind).toBe("error");
    if (result.kind === "error") expect(result.message).toMatch(/"name"/);
  });
});

describe("renderDatasheet", () => {
  const doc = fixtureJson<JsonObject>("rai_sample.json");
  const report = fixtureJson<ValidationReport>("rai_sample_report.json");

  it("shows the privacy completeness badge at 100%", () => {
    const html = renderDatasheet(doc, report);
    expect(html).toMatch(/data-section="privacy"[^>]*>\s*Privacy 100%/);
  });

  it("lists the sensitive content by name", () => {
    const html = renderDatasheet(doc, report);
    expect(html).toContain("political opinions");
    expect(html).toContain("focus group");
  });

  it("offers no editing affordances", () => {
    const html = renderDatasheet(doc, report);
    expect(html).not.toContain("<input");
    expect(html).not.toContain("<textarea");
    expect(html).not.toContain("data-action=");
  });
});
