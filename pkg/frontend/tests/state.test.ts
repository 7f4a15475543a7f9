import { describe, expect, it } from "vitest";

import { ApiRequestError } from "../src/api.js";
import {
  completenessBadge,
  exportFilename,
  exportText,
  goToStep,
  initialState,
  prefillFromInference,
  reviewAndExport,
} from "../src/state.js";
import { RESOURCES_STEP } from "../src/steps.js";
import { JsonObject, ValidationReport } from "../src/types.js";
import { fixtureJson, fixtureText, stubApi } from "./helpers.js";

const upload = { name: "fixture.csv", data: new Blob([fixtureText("fixture.csv")]) };

describe("step navigation", () => {
  it("clamps to the ten fixed steps", () => {
    let s = initialState(fixtureJson("template.json"));
    expect(s.currentStep).toBe(1);
    s = goToStep(s, 99);
    expect(s.currentStep).toBe(10);
    s = goToStep(s, -3);
    expect(s.currentStep).toBe(1);
  });
});

describe("prefillFromInference", () => {
  it("merges the API's inferred resource and advances to the resources step", async () => {
    const api = stubApi();
    const state = initialState(fixtureJson("template.json"));
    const result = await prefillFromInference(state, [upload], api);

    expect(result.error).toBeNull();
    expect(result.state.currentStep).toBe(RESOURCES_STEP);
    expect(result.state.dirty).toBe(true);
    // the draft now carries exactly what /api/v1/infer returned
    const expected = fixtureJson("infer_response.json");
    expect(result.state.draft.resources).toEqual([expected]);
    const fields = ((expected.schema as JsonObject).fields as JsonObject[]).map(
      (f) => [f.name, f.type],
    );
    expect(fields).toEqual([
      ["a", "integer"],
      ["b", "integer"],
    ]);
  });

  it("leaves the state untouched for zero files", async () => {
    const api = stubApi();
    const state = initialState(fixtureJson("template.json"));
    const result = await prefillFromInference(state, [], api);
    expect(result.state).toBe(state);
    expect(result.error).toBeNull();
    expect(api.calls.inferred).toEqual([]);
  });

  it("keeps the draft unchanged and surfaces the message on API errors", async () => {
    const api = stubApi({
      async infer() {
        throw new ApiRequestError(413, "payload-too-large",
          "upload exceeds the 104857600 byte limit");
      },
    });
    const state = initialState(fixtureJson("template.json"));
    const result = await prefillFromInference(state, [upload], api);
    expect(result.state).toBe(state);
    expect(result.error).toMatch(/exceeds the 104857600 byte limit/);
  });
});

describe("reviewAndExport", () => {
  it("validates exactly the bytes the download delivers", async () => {
    const api = stubApi();
    const state = goToStep(initialState(fixtureJson("template.json")), 10);
    const result = await reviewAndExport(state, api);

    expect(api.calls.validatedBodies).toHaveLength(1);
    expect(result.exported).toBe(api.calls.validatedBodies[0]);
    expect(result.exported).toBe(exportText(result.state));
    expect(result.state.liveReport).not.toBeNull();
    expect(result.state.verdictPreview?.decision).toBe("review");
  });

  it("untouched drafts export the template bytes verbatim", () => {
    const state = initialState(fixtureJson("template.json"));
    expect(exportText(state)).toBe(fixtureText("template.json"));
  });

  it("still exports when validation reports errors", async () => {
    const invalidReport: ValidationReport = {
      valid: false,
      overall: 0,
      completeness: {},
      issues: [{ pointer: "/resources", severity: "error", code: "empty-resources", message: "" }],
    };
    const api = stubApi({
      async validateText() {
        return invalidReport;
      },
    });
    const state = initialState(fixtureJson("template.json"));
    const result = await reviewAndExport(state, api);
    expect(result.state.liveReport?.valid).toBe(false);
    expect(result.exported.length).toBeGreaterThan(0);
    expect(result.error).toBeNull();
  });

  it("leaves the verdict empty when the server has no policy", async () => {
    const api = stubApi({
      async evaluate() {
        throw new ApiRequestError(400, "no-policy", "no policy configured");
      },
    });
    const state = initialState(fixtureJson("template.json"));
    const result = await reviewAndExport(state, api);
    expect(result.state.verdictPreview).toBeNull();
    expect(result.error).toBeNull();
  });
});

describe("export helpers", () => {
  it("names the download after the dataset", () => {
    const state = initialState(fixtureJson("template.json"));
    expect(exportFilename(state)).toBe("new-dataset.datasheet.json");
  });

  it("renders badges from the completeness map", () => {
    const report = fixtureJson<ValidationReport>("rai_sample_report.json");
    expect(completenessBadge(report, "privacy")).toBe("100%");
    expect(completenessBadge(report, "useCases")).toBe("0%");
    expect(completenessBadge(null, "privacy")).toBe("–");
  });
});
