// Draft Support: paste a proposal title/keywords and text, get back the
// readability comparison, the related in-force laws, and the landscape of
// foundation citations.

import { ApiClient, ApiError, LatestOnly } from "../api.js";
import {
  errorBox,
  foundationList,
  profileCards,
  relevantLawList,
  reportBlock,
  statsTable,
} from "../components.js";
import { clear, el } from "../dom.js";
import type { ViewState } from "../state.js";

export function draftSupportView(client: ApiClient, state: ViewState): HTMLElement {
  const root = el("section", { class: "view draft-support" });
  const titleInput = el("input", {
    class: "draft-title",
    placeholder: "titolo o parole chiave",
    value: state.draftSupport.title,
  });
  const textArea = el("textarea", { class: "draft-text", rows: "6", placeholder: "testo della proposta" });
  textArea.value = state.draftSupport.text;
  const submit = el("button", { class: "draft-go", disabled: "disabled" }, ["Analizza"]);
  const output = el("div", { class: "draft-output" });

  const latest = new LatestOnly();

  function syncSubmit(): void {
    state.draftSupport.title = titleInput.value;
    state.draftSupport.text = textArea.value;
    if (titleInput.value.trim() || textArea.value.trim()) {
      submit.removeAttribute("disabled");
    } else {
      submit.setAttribute("disabled", "disabled");
    }
  }

  async function analyze(): Promise<void> {
    const request = { title: titleInput.value.trim(), text: textArea.value.trim() };
    clear(output);
    try {
      const payload = await latest.run(async () => {
        const report = await client.analyzeDraft(request);
        const landscape = await client.landscape({
          input: request.title || request.text,
          as_of: report.as_of,
        });
        return { report, landscape };
      });
      if (!payload) return;
      state.draftSupport.report = payload.report;
      state.draftSupport.landscape = payload.landscape;
      output.append(
        el("h3", {}, ["Profilo della proposta"]),
        profileCards(payload.report.profile),
        el("h3", {}, ["Confronto con le leggi affini"]),
        statsTable(payload.report.comparison),
        el("h3", {}, ["Leggi rilevanti"]),
        relevantLawList(payload.report.relevant_laws),
        el("h3", {}, ["Fondamenti normativi"]),
        foundationList(payload.landscape.foundations),
        el("h3", {}, ["Rapporto"]),
        reportBlock(payload.report.report_text, payload.report.report_fallback),
      );
    } catch (error) {
      if (error instanceof ApiError) {
        clear(output);
        output.append(errorBox(`${error.code}: ${error.message}`));
        return;
      }
      throw error;
    }
  }

  titleInput.addEventListener("input", syncSubmit);
  textArea.addEventListener("input", syncSubmit);
  submit.addEventListener("click", () => void analyze());
  syncSubmit();

  root.append(
    el("h2", {}, ["Supporto alla redazione"]),
    el("div", { class: "controls" }, [titleInput]),
    textArea,
    el("div", { class: "controls" }, [submit]),
    output,
  );
  return root;
}
