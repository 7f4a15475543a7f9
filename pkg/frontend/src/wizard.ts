/** Wizard page: step navigation, draft editing, review & export. */

import { ApiClient } from "./api.js";
import { attr, download, esc } from "./dom.js";
import { renderStepForm } from "./forms.js";
import { getPointer, removePointer, setPointer } from "./pointer.js";
import {
  WizardState,
  applyInferredResources,
  completenessBadge,
  exportFilename,
  exportText,
  goToStep,
  initialState,
  prefillFromInference,
  reviewAndExport,
} from "./state.js";
import { REVIEW_STEP, STEPS, UPLOAD_STEP } from "./steps.js";
import { JsonObject, UploadPayload } from "./types.js";

const SECTION_LABELS: Record<string, string> = {
  privacy: "Privacy",
  useTerms: "Use terms",
  dataAccess: "Data access",
  collection: "Collection",
  processing: "Processing",
  update: "Update",
  useCases: "Use cases",
};

export class WizardPage {
  private state: WizardState;
  private banner = "";

  constructor(
    private root: HTMLElement,
    private api: ApiClient,
    template: JsonObject,
  ) {
    this.state = initialState(template);
  }

  render(): void {
    const step = STEPS[this.state.currentStep - 1];
    const nav = STEPS.map(
      (s) => `<li class="${s.number === step.number ? "active" : ""}"
                  data-step="${s.number}">${s.number}. ${esc(s.title)}</li>`,
    ).join("");
    this.root.innerHTML = `
      <div class="wizard">
        <ol class="step-nav">${nav}</ol>
        <section class="step-panel">
          ${this.banner ? `<div class="banner">${esc(this.banner)}</div>` : ""}
          <h2>${step.number}. ${esc(step.title)}</h2>
          <p class="blurb">${esc(step.blurb)}</p>
          <div class="step-body">${this.renderBody()}</div>
          <div class="step-actions">
            <button type="button" data-nav="-1" ${step.number === 1 ? "disabled" : ""}>Back</button>
            <button type="button" data-nav="+1" ${step.number === REVIEW_STEP ? "disabled" : ""}>
              Next</button>
          </div>
        </section>
      </div>`;
    this.bind();
  }

  private renderBody(): string {
    const n = this.state.currentStep;
    if (n === UPLOAD_STEP) {
      return `
        <p>Pick CSV, TSV, JSON or JSONL files. Structure, field types, sample
           values, sizes and checksums are extracted automatically so you can
           focus on the responsible-AI sections.</p>
        <input type="file" id="upload-input" multiple>
        <button type="button" id="upload-go">Infer &amp; prefill</button>`;
    }
    if (n === REVIEW_STEP) {
      return this.renderReview();
    }
    return renderStepForm(n, this.state.draft);
  }

  private renderReview(): string {
    const report = this.state.liveReport;
    const verdict = this.state.verdictPreview;
    const badges = Object.keys(SECTION_LABELS)
      .map(
        (s) => `<span class="badge" data-section="${attr(s)}">
          ${esc(SECTION_LABELS[s])} ${completenessBadge(report, s)}</span>`,
      )
      .join("");
    const issues = report
      ? report.issues
          .map(
            (i) => `<li class="issue ${esc(i.severity)}">
              <code>${esc(i.code)}</code> at <code>${esc(i.pointer || "/")}</code>:
              ${esc(i.message)}</li>`,
          )
          .join("")
      : "";
    const validity = report
      ? report.valid
        ? '<span class="ok">valid</span>'
        : '<span class="bad">has errors</span> (export is still possible)'
      : "not checked yet";
    const verdictHtml = verdict
      ? `<p>Policy verdict preview: <strong class="verdict-${esc(verdict.decision)}">
           ${esc(verdict.decision)}</strong></p>
         <ul>${verdict.ruleResults
           .map(
             (r) => `<li>${esc(r.id)}: ${r.passed ? "pass" : `fail (${esc(r.action)})`}
               ${r.passed ? "" : `— ${esc(r.message)}`}</li>`,
           )
           .join("")}</ul>`
      : "<p>No policy configured on the server, so there is no verdict preview.</p>";
    return `
      <button type="button" id="run-review">Validate draft</button>
      <button type="button" id="download-draft">Download datasheet</button>
      <p>Status: ${validity}</p>
      <div class="badges">${badges}</div>
      ${verdictHtml}
      <ul class="issues">${issues}</ul>`;
  }

  private bind(): void {
    this.root.querySelectorAll<HTMLElement>(".step-nav li").forEach((li) => {
      li.addEventListener("click", () => {
        this.state = goToStep(this.state, Number(li.dataset.step));
        this.banner = "";
        this.render();
      });
    });
    this.root.querySelectorAll<HTMLButtonElement>("[data-nav]").forEach((button) => {
      button.addEventListener("click", () => {
        this.state = goToStep(this.state, this.state.currentStep + Number(button.dataset.nav));
        this.banner = "";
        this.render();
      });
    });

    const uploadGo = this.root.querySelector<HTMLButtonElement>("#upload-go");
    if (uploadGo) {
      uploadGo.addEventListener("click", () => void this.handleUpload());
    }
    const runReview = this.root.querySelector<HTMLButtonElement>("#run-review");
    if (runReview) {
      runReview.addEventListener("click", () => void this.handleReview());
    }
    const downloadDraft = this.root.querySelector<HTMLButtonElement>("#download-draft");
    if (downloadDraft) {
      downloadDraft.addEventListener("click", () => {
        download(exportFilename(this.state), exportText(this.state));
      });
    }

    // field bindings: text-ish controls commit on change
    this.root.querySelectorAll<HTMLElement>("[data-pointer]").forEach((node) => {
      const pointer = node.dataset.pointer!;
      if (node instanceof HTMLInputElement && node.type === "text") {
        node.addEventListener("change", () => this.commitText(pointer, node));
      } else if (node instanceof HTMLTextAreaElement) {
        node.addEventListener("change", () => this.commitText(pointer, node));
      } else if (node instanceof HTMLSelectElement) {
        node.addEventListener("change", () => {
          if (node.value === "") {
            removePointer(this.state.draft, pointer);
          } else {
            setPointer(this.state.draft, pointer, node.value);
          }
          this.state = { ...this.state, dirty: true };
        });
      } else if (node.classList.contains("tri-state")) {
        node.querySelectorAll<HTMLInputElement>("input[type=radio]").forEach((radio) => {
          radio.addEventListener("change", () => {
            if (radio.value === "unset") {
              removePointer(this.state.draft, pointer);
            } else {
              setPointer(this.state.draft, pointer, radio.value === "yes");
            }
            this.state = { ...this.state, dirty: true };
          });
        });
      }
    });

    // list actions re-render the panel
    this.root.querySelectorAll<HTMLButtonElement>("[data-action]").forEach((button) => {
      button.addEventListener("click", () => {
        const pointer = button.dataset.pointer!;
        const action = button.dataset.action!;
        if (action === "remove") {
          removePointer(this.state.draft, pointer);
        } else if (action === "add-string") {
          const items = getPointer(this.state.draft, pointer);
          const index = Array.isArray(items) ? items.length : 0;
          setPointer(this.state.draft, `${pointer}/${index}`, "");
        } else if (action === "add-record") {
          const template = JSON.parse(button.dataset.template ?? "{}") as JsonObject;
          const items = getPointer(this.state.draft, pointer);
          const index = Array.isArray(items) ? items.length : 0;
          setPointer(this.state.draft, `${pointer}/${index}`, template);
        }
        this.state = { ...this.state, dirty: true };
        this.render();
      });
    });
  }

  private commitText(pointer: string, node: HTMLInputElement | HTMLTextAreaElement): void {
    if (node.dataset.kind === "optional-text" && node.value === "") {
      removePointer(this.state.draft, pointer);
    } else {
      setPointer(this.state.draft, pointer, node.value);
    }
    this.state = { ...this.state, dirty: true };
  }

  private async handleUpload(): Promise<void> {
    const input = this.root.querySelector<HTMLInputElement>("#upload-input");
    const files: UploadPayload[] = Array.from(input?.files ?? []).map((f) => ({
      name: f.name,
      data: f,
    }));
    const result = await prefillFromInference(this.state, files, this.api);
    this.state = result.state;
    this.banner = result.error ?? "";
    this.render();
  }

  private async handleReview(): Promise<void> {
    const result = await reviewAndExport(this.state, this.api);
    this.state = result.state;
    this.banner = result.error ?? "";
    this.render();
  }

  /** Used by tests to drive the page without DOM events. */
  applyResources(resources: JsonObject[]): void {
    this.state = applyInferredResources(this.state, resources);
  }

  get currentState(): WizardState {
    return this.state;
  }
}
