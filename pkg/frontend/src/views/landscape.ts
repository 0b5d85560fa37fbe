// Normative landscape: topics extracted and expanded from the input, the
// closest in-force laws, and their shared foundation citations.

import { ApiClient, ApiError, LatestOnly } from "../api.js";
import { errorBox, foundationList, relevantLawList } from "../components.js";
import { clear, el } from "../dom.js";
import type { ViewState } from "../state.js";

export function landscapeView(client: ApiClient, state: ViewState): HTMLElement {
  const root = el("section", { class: "view landscape" });
  const input = el("input", {
    class: "landscape-input",
    placeholder: "titolo o parole chiave della proposta",
    value: state.landscape.input,
  });
  const submit = el("button", { class: "landscape-go", disabled: "disabled" }, ["Esplora"]);
  const output = el("div", { class: "landscape-output" });
  const latest = new LatestOnly();

  function syncSubmit(): void {
    state.landscape.input = input.value;
    if (input.value.trim()) submit.removeAttribute("disabled");
    else submit.setAttribute("disabled", "disabled");
  }

  async function explore(): Promise<void> {
    clear(output);
    try {
      const payload = await latest.run(() => client.landscape({ input: input.value.trim() }));
      if (!payload) return;
      state.landscape.result = payload;
      const topics = el("div", { class: "topics" });
      topics.append(
        el("p", { class: "seed-topics" }, [`Temi: ${payload.topics.seed_topics.join(", ")}`]),
        el("p", { class: "expanded-topics" }, [
          `Temi estesi: ${payload.topics.expanded_topics.join(", ")}`,
        ]),
      );
      if (payload.topics.expansion_failed) {
        topics.append(el("p", { class: "badge expansion-warning" }, ["estensione non disponibile"]));
      }
      output.append(
        topics,
        el("h3", {}, [`Leggi in vigore al ${payload.as_of}`]),
        relevantLawList(payload.relevant_laws),
        el("h3", {}, ["Fondamenti normativi"]),
        foundationList(payload.foundations),
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

  input.addEventListener("input", syncSubmit);
  submit.addEventListener("click", () => void explore());
  syncSubmit();

  root.append(
    el("h2", {}, ["Panorama normativo"]),
    el("div", { class: "controls" }, [input, submit]),
    output,
  );
  return root;
}
