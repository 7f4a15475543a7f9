/** Entry point: hash routing between the wizard and the viewer. */

import { httpApi } from "./api.js";
import { el } from "./dom.js";
import { ViewerPage } from "./viewer_page.js";
import { WizardPage } from "./wizard.js";

const api = httpApi();

async function boot(): Promise<void> {
  const app = document.getElementById("app")!;
  const nav = el(`
    <nav class="top-nav">
      <strong>Datasheet studio</strong>
      <a href="#/wizard">Author</a>
      <a href="#/viewer">View</a>
    </nav>`);
  document.body.prepend(nav);

  let wizard: WizardPage | null = null;

  const route = async () => {
    if (location.hash.startsWith("#/viewer")) {
      new ViewerPage(app, api).render();
      return;
    }
    if (wizard === null) {
      try {
        const template = await api.template();
        wizard = new WizardPage(app, api, template);
      } catch (e) {
        app.innerHTML = `<div class="banner">Cannot reach the datasheet service:
          ${(e as Error).message}. Start it with <code>ods serve</code>.</div>`;
        return;
      }
    }
    wizard.render();
  };

  window.addEventListener("hashchange", () => void route());
  await route();
}

void boot();
