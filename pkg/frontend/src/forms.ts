/**
 * Form markup for each wizard step, bound to the draft via
 * data-pointer attributes. Text edits land on change events; list
 * add/remove actions re-render the panel.
 */

import { attr, esc } from "./dom.js";
import { guidanceFor } from "./guidance.js";
import { getPointer } from "./pointer.js";
import { JsonObject, JsonValue, asArray, isObject } from "./types.js";

function textInput(doc: JsonObject, pointer: string, label: string, opts: {
  textarea?: boolean;
  optional?: boolean;
  placeholder?: string;
} = {}): string {
  const value = getPointer(doc, pointer);
  const current = typeof value === "string" ? value : "";
  const common =
    `data-pointer="${attr(pointer)}" data-kind="${opts.optional ? "optional-text" : "text"}"` +
    ` placeholder="${attr(opts.placeholder ?? "")}"`;
  const control = opts.textarea
    ? `<textarea rows="3" ${common}>${esc(current)}</textarea>`
    : `<input type="text" value="${attr(current)}" ${common}>`;
  return `<label class="form-field"><span>${esc(label)}</span>${control}</label>`;
}

function triStateInput(doc: JsonObject, pointer: string, label: string): string {
  const value = getPointer(doc, pointer);
  const checked = (v: string) =>
    (v === "unset" && value === undefined) ||
    (v === "yes" && value === true) ||
    (v === "no" && value === false)
      ? " checked"
      : "";
  const name = pointer.replace(/\W+/g, "-");
  return `<fieldset class="form-field tri-state" data-pointer="${attr(pointer)}">
    <legend>${esc(label)}</legend>
    <label><input type="radio" name="${name}" value="yes"${checked("yes")}> yes</label>
    <label><input type="radio" name="${name}" value="no"${checked("no")}> no</label>
    <label><input type="radio" name="${name}" value="unset"${checked("unset")}> not documented</label>
  </fieldset>`;
}

function selectInput(doc: JsonObject, pointer: string, label: string, options: string[]): string {
  const value = getPointer(doc, pointer);
  const opts = ['<option value="">(unset)</option>']
    .concat(
      options.map(
        (o) => `<option value="${attr(o)}"${value === o ? " selected" : ""}>${esc(o)}</option>`,
      ),
    )
    .join("");
  return `<label class="form-field"><span>${esc(label)}</span>
    <select data-pointer="${attr(pointer)}" data-kind="select">${opts}</select></label>`;
}

function stringListInput(doc: JsonObject, pointer: string, label: string): string {
  const items = asArray(getPointer(doc, pointer));
  const rows = items
    .map(
      (item, i) => `<div class="list-row">
        <input type="text" value="${attr(typeof item === "string" ? item : "")}"
               data-pointer="${attr(`${pointer}/${i}`)}" data-kind="text">
        <button type="button" data-action="remove" data-pointer="${attr(`${pointer}/${i}`)}">×</button>
      </div>`,
    )
    .join("");
  return `<div class="form-field"><span>${esc(label)}</span>${rows}
    <button type="button" class="add" data-action="add-string" data-pointer="${attr(pointer)}">
      + add</button></div>`;
}

function guidancePanel(section: string): string {
  const entries = guidanceFor(section)
    .map(
      (g) => `<details class="guidance" data-field="${attr(g.fieldPointer)}">
        <summary>${esc(g.title)}</summary>
        <p>${esc(g.body)}</p>
        <p class="example">Example: ${esc(g.example)}</p>
      </details>`,
    )
    .join("");
  return `<aside class="guidance-panel">${entries}</aside>`;
}

function recordList(
  doc: JsonObject,
  pointer: string,
  label: string,
  template: JsonObject,
  renderItem: (base: string, item: JsonValue) => string,
): string {
  const items = asArray(getPointer(doc, pointer));
  const rows = items
    .map(
      (item, i) => `<div class="record" data-record="${attr(`${pointer}/${i}`)}">
        <div class="record-head">
          <strong>#${i + 1}</strong>
          <button type="button" data-action="remove" data-pointer="${attr(`${pointer}/${i}`)}">remove</button>
        </div>
        ${renderItem(`${pointer}/${i}`, item)}
      </div>`,
    )
    .join("");
  return `<div class="record-list"><h3>${esc(label)}</h3>${rows}
    <button type="button" class="add" data-action="add-record"
            data-template="${attr(JSON.stringify(template))}"
            data-pointer="${attr(pointer)}">+ add ${esc(label.toLowerCase())}</button></div>`;
}

function contributorList(doc: JsonObject, pointer: string, label: string): string {
  return recordList(doc, pointer, label, { name: "", role: "contributor" }, (base) =>
    [
      textInput(doc, `${base}/name`, "Name"),
      selectInput(doc, `${base}/role`, "Role", [
        "author",
        "maintainer",
        "publisher",
        "wrangler",
        "contributor",
      ]),
      textInput(doc, `${base}/organization`, "Organization", { optional: true }),
      textInput(doc, `${base}/email`, "Email", { optional: true }),
    ].join(""),
  );
}

function methodList(doc: JsonObject, pointer: string): string {
  return recordList(doc, pointer, "Methods", { name: "", description: "" }, (base) =>
    [
      textInput(doc, `${base}/name`, "Method name"),
      textInput(doc, `${base}/description`, "Description", { textarea: true }),
      textInput(doc, `${base}/path`, "Reference link", { optional: true }),
    ].join(""),
  );
}

export function renderStepForm(step: number, doc: JsonObject): string {
  switch (step) {
    case 2:
      return `<div class="step-grid"><div>
        ${textInput(doc, "/name", "Name (lowercase slug)")}
        ${textInput(doc, "/title", "Title")}
        ${textInput(doc, "/description", "Description", { textarea: true })}
        ${textInput(doc, "/version", "Version")}
        ${textInput(doc, "/created", "Created (YYYY-MM-DD)")}
        ${textInput(doc, "/homepage", "Homepage", { optional: true })}
        ${stringListInput(doc, "/keywords", "Keywords")}
        ${recordList(doc, "/licenses", "Licenses", { name: "" }, (base) =>
          [
            textInput(doc, `${base}/name`, "License id (SPDX)"),
            textInput(doc, `${base}/title`, "Title", { optional: true }),
            textInput(doc, `${base}/path`, "Link", { optional: true }),
          ].join(""),
        )}
        ${recordList(doc, "/sources", "Sources", { title: "" }, (base) =>
          [
            textInput(doc, `${base}/title`, "Source title"),
            textInput(doc, `${base}/path`, "Link", { optional: true }),
            textInput(doc, `${base}/description`, "Description", { optional: true, textarea: true }),
          ].join(""),
        )}
        ${contributorList(doc, "/contributors", "Contributors")}
      </div></div>`;

    case 3:
      return renderResources(doc);

    case 4:
      return `<div class="step-grid"><div>
        <h3>Privacy</h3>
        ${textInput(doc, "/privacy/0/sensitivity/description", "Sensitivity overview", { textarea: true })}
        ${recordList(doc, "/privacy/0/sensitivity/types", "Sensitivity types",
          { name: "", description: "" }, (base) =>
          [
            textInput(doc, `${base}/name`, "Type name"),
            textInput(doc, `${base}/description`, "Description", { textarea: true }),
          ].join(""),
        )}
        ${textInput(doc, "/privacy/0/confidentiality/description", "Confidentiality measures", { textarea: true })}
        ${textInput(doc, "/privacy/0/confidentiality/path", "Confidentiality link", { optional: true })}
        <h3>Use terms</h3>
        ${textInput(doc, "/useTerms/description", "Terms of use", { textarea: true })}
        ${textInput(doc, "/useTerms/path", "Terms link", { optional: true })}
        ${stringListInput(doc, "/useTerms/restrictions", "Restrictions")}
      </div>${guidancePanel("privacy")}${guidancePanel("useTerms")}</div>`;

    case 5:
      return `<div class="step-grid"><div>
        ${triStateInput(doc, "/dataAccess/anonymousAccess", "Anonymous access possible?")}
        ${triStateInput(doc, "/dataAccess/registrationRequired", "Registration required?")}
        ${textInput(doc, "/dataAccess/description", "Access procedure", { textarea: true })}
        ${textInput(doc, "/dataAccess/path", "Access link", { optional: true })}
      </div>${guidancePanel("dataAccess")}</div>`;

    case 6:
      return `<div class="step-grid"><div>
        ${recordList(doc, "/procedures/collection", "Collection procedures",
          { description: "", contributors: [], methods: [], consent: [] }, (base) =>
          [
            textInput(doc, `${base}/description`, "Procedure description", { textarea: true }),
            textInput(doc, `${base}/path`, "Reference link", { optional: true }),
            methodList(doc, `${base}/methods`),
            recordList(doc, `${base}/consent`, "Consent records",
              { title: "", description: "" }, (cbase) =>
              [
                textInput(doc, `${cbase}/title`, "Consent title"),
                textInput(doc, `${cbase}/description`, "Description", { textarea: true }),
                textInput(doc, `${cbase}/path`, "Form link", { optional: true }),
              ].join(""),
            ),
            contributorList(doc, `${base}/contributors`, "Collection contributors"),
          ].join(""),
        )}
      </div>${guidancePanel("collection")}</div>`;

    case 7:
      return `<div class="step-grid"><div>
        ${recordList(doc, "/procedures/processing", "Processing procedures",
          { description: "", methods: [], contributors: [] }, (base) =>
          [
            textInput(doc, `${base}/description`, "Procedure description", { textarea: true }),
            methodList(doc, `${base}/methods`),
            contributorList(doc, `${base}/contributors`, "Processing contributors"),
          ].join(""),
        )}
      </div>${guidancePanel("processing")}</div>`;

    case 8:
      return `<div class="step-grid"><div>
        ${triStateInput(doc, "/procedures/update/isUpdated", "Is the dataset updated?")}
        ${textInput(doc, "/procedures/update/periodicity", "Update schedule", { optional: true })}
        ${selectInput(doc, "/procedures/update/method", "Update method",
          ["incremental", "full-refresh", "other"])}
        ${textInput(doc, "/procedures/update/methodDescription", "Method details", {
          optional: true, textarea: true })}
        ${textInput(doc, "/procedures/update/versioning", "Versioning", { optional: true })}
        ${contributorList(doc, "/procedures/update/contributors", "Update contributors")}
      </div>${guidancePanel("update")}</div>`;

    case 9:
      return `<div class="step-grid"><div>
        ${recordList(doc, "/useCases", "Use cases", { title: "", kind: "permitted" }, (base) =>
          [
            textInput(doc, `${base}/title`, "Title"),
            textInput(doc, `${base}/description`, "Description", { textarea: true }),
            selectInput(doc, `${base}/kind`, "Kind", ["permitted", "prohibited"]),
          ].join(""),
        )}
      </div>${guidancePanel("useCases")}</div>`;

    default:
      return "";
  }
}

function renderResources(doc: JsonObject): string {
  const resources = asArray(doc.resources);
  if (resources.length === 0) {
    return `<p class="hint">No resources yet — upload data files in step 1,
      or continue and add them later.</p>`;
  }
  const cards = resources
    .map((r, i) => {
      if (!isObject(r)) return "";
      const schema = isObject(r.schema) ? r.schema : null;
      const fieldRows = schema
        ? asArray(schema.fields)
            .map((f, j) => {
              if (!isObject(f)) return "";
              const samples = asArray(f.sampleValues)
                .map((s) => esc(typeof s === "string" ? s : ""))
                .join(", ");
              return `<tr>
                <td><code>${esc(f.name)}</code></td>
                <td>${esc(f.type)}</td>
                <td class="samples">${samples}</td>
                <td><input type="text" placeholder="describe this field"
                      value="${attr(typeof f.description === "string" ? f.description : "")}"
                      data-pointer="/resources/${i}/schema/fields/${j}/description"
                      data-kind="optional-text"></td>
              </tr>`;
            })
            .join("")
        : "";
      const table = schema
        ? `<table class="fields"><thead>
             <tr><th>field</th><th>type</th><th>samples</th><th>description</th></tr>
           </thead><tbody>${fieldRows}</tbody></table>`
        : "<p class='hint'>No table schema for this format.</p>";
      return `<div class="record resource-card">
        <div class="record-head"><strong>${esc(r.name)}</strong>
          <span class="meta">${esc(r.format)} · ${esc(r.mediatype)} · ${esc(r.bytes)} bytes ·
            ${esc(r.encoding)}</span>
          <button type="button" data-action="remove" data-pointer="/resources/${i}">remove</button>
        </div>
        ${textInput(doc, `/resources/${i}/path`, "Path / URL")}
        ${table}
      </div>`;
    })
    .join("");
  return `<div class="record-list">${cards}</div>`;
}

export { guidancePanel };
