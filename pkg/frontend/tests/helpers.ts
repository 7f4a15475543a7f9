import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

import { ApiClient } from "../src/api.js";
import { JsonObject, ValidationReport, Verdict } from "../src/types.js";

const FIXTURES = join(dirname(fileURLToPath(import.meta.url)), "fixtures");

export function fixtureText(name: string): string {
  return readFileSync(join(FIXTURES, name), "utf-8");
}

export function fixtureJson<T = JsonObject>(name: string): T {
  return JSON.parse(fixtureText(name)) as T;
}

export interface StubCalls {
  inferred: string[];
  validatedBodies: string[];
  evaluated: JsonObject[];
}

/** ApiClient double that replays recorded backend responses. */
export function stubApi(overrides: Partial<ApiClient> = {}): ApiClient & { calls: StubCalls } {
  const calls: StubCalls = { inferred: [], validatedBodies: [], evaluated: [] };
  const base: ApiClient = {
    async template() {
      return fixtureJson("template.json");
    },
    async infer(upload) {
      calls.inferred.push(upload.name);
      return fixtureJson("infer_response.json");
    },
    async validateText(body) {
      calls.validatedBodies.push(body);
      return fixtureJson<ValidationReport>("rai_sample_report.json");
    },
    async evaluate(datasheet) {
      calls.evaluated.push(datasheet);
      return fixtureJson<Verdict>("evaluate_template.json");
    },
  };
  return Object.assign({}, base, overrides, { calls });
}
