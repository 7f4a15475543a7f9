/** Thin client for the local datasheet service under /api/v1. */

import { JsonObject, UploadPayload, ValidationReport, Verdict } from "./types.js";

export class ApiRequestError extends Error {
  constructor(
    public status: number,
    public code: string,
    message: string,
  ) {
    super(message);
  }
}

export interface ApiClient {
  template(): Promise<JsonObject>;
  infer(upload: UploadPayload): Promise<JsonObject>;
  /** Validate exact canonical text so the checked bytes equal the export. */
  validateText(body: string): Promise<ValidationReport>;
  evaluate(datasheet: JsonObject, policy?: JsonObject): Promise<Verdict>;
}

async function fail(response: Response): Promise<never> {
  let code = "error";
  let message = `request failed with status ${response.status}`;
  try {
    const body = await response.json();
    if (typeof body.code === "string") code = body.code;
    if (typeof body.message === "string") message = body.message;
  } catch {
    // non-JSON error body; keep the generic message
  }
  throw new ApiRequestError(response.status, code, message);
}

export function httpApi(base = ""): ApiClient {
  return {
    async template() {
      const response = await fetch(`${base}/api/v1/template`);
      if (!response.ok) await fail(response);
      return response.json();
    },

    async infer(upload) {
      const form = new FormData();
      form.append("file", upload.data, upload.name);
      const response = await fetch(`${base}/api/v1/infer`, { method: "POST", body: form });
      if (!response.ok) await fail(response);
      return response.json();
    },

    async validateText(body) {
      const response = await fetch(`${base}/api/v1/validate`, {
        method: "POST",
        headers: { "content-type": "application/json" },
        body,
      });
      if (!response.ok) await fail(response);
      return response.json();
    },

    async evaluate(datasheet, policy) {
      const payload: JsonObject = { datasheet };
      if (policy !== undefined) payload.policy = policy;
      const response = await fetch(`${base}/api/v1/evaluate`, {
        method: "POST",
        headers: { "content-type": "application/json" },
        body: JSON.stringify(payload),
      });
      if (!response.ok) await fail(response);
      return response.json();
    },
  };
}
