/** Read-only viewer page: paste or upload a datasheet, see it scored. */

import { ApiClient } from "./api.js";
import { el, esc } from "./dom.js";
import { completenessBadge } from "./state.js";
import { JsonObject, ValidationReport, asArray, isObject } from "./types.js";
import { loadViewer, sectionText } from "./viewer.js";

const SECTION_LABELS: Record<string, string> = {
  privacy: "Privacy",
  useTerms: "Use terms",
  dataAccess: "Data access",
  collection: "Collection",
  processing: "Processing",
  update: "Update",
  useCases: "Use cases",
};

export class ViewerPage {
  constructor(
    private root: HTMLElement,
    private api: ApiClient,
  ) {}

  render(): void {
    this.root.innerHTML = `
      <div class="viewer">
        <h2>Datasheet viewer</h2>
        <p class="blurb">Paste datasheet JSON (or open a file) to inspect it read-only
           with validation results and completeness badges.</p>
        <input type="file" id="viewer-file">
        <textarea id="viewer-text" rows="8" placeholder='{"name": "my-dataset", ...}'></textarea>
        <button type="button" id="viewer-go">Render</button>
        <div id="viewer-output"></div>
      </div>`;
    this.bind();
  }

  private bind(): void {
    const fileInput = this.root.querySelector<HTMLInputElement>("#viewer-file")!;
    const textInput = this.root.querySelector<HTMLTextAreaElement>("#viewer-text")!;
    fileInput.addEventListener("change", async () => {
      const file = fileInput.files?.[0];
      if (file) textInput.value = await file.text();
    });
    this.root
      .querySelector<HTMLButtonElement>("#viewer-go")!
      .addEventListener("click", () => void this.show(textInput.value));
  }

  private async show(text: string): Promise<void> {
    const output = this.root.querySelector<HTMLElement>("#viewer-output")!;
    const result = await loadViewer(text, this.api);
    if (result.kind === "error") {
      output.innerHTML = "";
      output.appendChild(
        el(`<div class="banner error-panel">Cannot render: ${esc(result.message)}</div>`),
      );
      return;
    }
    output.innerHTML = renderDatasheet(result.datasheet, result.report);
  }
}

export function renderDatasheet(doc: JsonObject, report: ValidationReport): string {
  const badges = Object.keys(SECTION_LABELS)
    .map(
      (s) => `<span class="badge" data-section="${esc(s)}">
        ${esc(SECTION_LABELS[s])} ${completenessBadge(report, s)}</span>`,
    )
    .join("");
  const resources = asArray(doc.resources)
    .map((r) => {
      if (!isObject(r)) return "";
      const fields = isObject(r.schema)
        ? asArray(r.schema.fields)
            .map((f) =>
              isObject(f)
                ? `<li><code>${esc(f.name)}</code>: ${esc(f.type)}${
                    typeof f.description === "string" && f.description
                      ? ` — ${esc(f.description)}`
                      : ""
                  }</li>`
                : "",
            )
            .join("")
        : "";
      return `<div class="record">
        <strong>${esc(r.name)}</strong>
        <span class="meta">${esc(r.format)} · ${esc(r.bytes)} bytes</span>
        <ul>${fields}</ul>
      </div>`;
    })
    .join("");
  const raiSections = Object.keys(SECTION_LABELS)
    .filter((s) => !["collection", "processing", "update"].includes(s))
    .map((s) => section(doc, s, SECTION_LABELS[s]))
    .join("");
  const procedureSections = ["collection", "processing", "update"]
    .map((s) => {
      const procedures = doc.procedures;
      if (!isObject(procedures) || !(s in procedures)) return "";
      return `<details open><summary>${esc(SECTION_LABELS[s])}</summary>
        <pre>${esc(sectionText(procedures as JsonObject, s))}</pre></details>`;
    })
    .join("");
  const issues = report.issues
    .map(
      (i) => `<li class="issue ${esc(i.severity)}"><code>${esc(i.code)}</code>
        at <code>${esc(i.pointer || "/")}</code>: ${esc(i.message)}</li>`,
    )
    .join("");
  return `
    <h3>${esc(typeof doc.title === "string" ? doc.title : doc.name)}</h3>
    <p>${esc(typeof doc.description === "string" ? doc.description : "")}</p>
    <p>Status: ${report.valid ? '<span class="ok">valid</span>' : '<span class="bad">has errors</span>'}
       · overall completeness ${Math.round(report.overall * 100)}%</p>
    <div class="badges">${badges}</div>
    <h4>Resources</h4>${resources || "<p class='hint'>none</p>"}
    <h4>Responsible AI documentation</h4>
    ${raiSections}${procedureSections}
    <h4>Findings</h4><ul class="issues">${issues || "<li>none</li>"}</ul>`;
}

function section(doc: JsonObject, key: string, label: string): string {
  if (!(key in doc)) return "";
  return `<details open><summary>${esc(label)}</summary>
    <pre>${esc(sectionText(doc, key))}</pre></details>`;
}
