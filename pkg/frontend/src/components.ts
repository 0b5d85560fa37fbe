// Shared rendering blocks: indicator cards, comparison tables, relevant
// laws, and foundation lists. All numbers pass through show() untouched.

import { el, show } from "./dom.js";
import type {
  FoundationCitation,
  ReadabilityProfile,
  RelevantLawSet,
  StatsBundle,
} from "./types.js";

export const PROFILE_LABELS: Record<keyof ReadabilityProfile, string> = {
  word_count: "Parole",
  sentence_count: "Frasi",
  letter_count: "Lettere",
  syllable_count: "Sillabe",
  avg_word_length: "Lunghezza media parola",
  avg_sentence_length: "Lunghezza media frase",
  gerund_ratio: "Gerundi",
  adjective_ratio: "Aggettivi",
  pronoun_ratio: "Pronomi",
  flesch: "Flesch",
  gulpease: "Gulpease",
  embedding_index: "Subordinazione",
  center_embedding_index: "Subordinazione incassata",
};

export function profileCards(profile: ReadabilityProfile): HTMLElement {
  const grid = el("div", { class: "cards" });
  for (const key of Object.keys(PROFILE_LABELS) as (keyof ReadabilityProfile)[]) {
    grid.append(
      el("div", { class: "card", "data-metric": key }, [
        el("div", { class: "card-label" }, [PROFILE_LABELS[key]]),
        el("div", { class: "card-value" }, [show(profile[key])]),
      ]),
    );
  }
  return grid;
}

export function statsTable(bundle: StatsBundle): HTMLElement {
  const table = el("table", { class: "stats" });
  table.append(
    el("tr", {}, [
      el("th", {}, ["Metrica"]),
      el("th", {}, ["Valore"]),
      el("th", {}, ["Media"]),
      el("th", {}, ["Dev. std"]),
      el("th", {}, ["z"]),
      el("th", {}, ["Percentile"]),
    ]),
  );
  for (const [name, stats] of Object.entries(bundle.metrics)) {
    table.append(
      el("tr", { "data-metric": name }, [
        el("td", {}, [name]),
        el("td", {}, [show(stats.subject_value)]),
        el("td", {}, [show(stats.set_mean)]),
        el("td", {}, [show(stats.set_std)]),
        el("td", {}, [show(stats.z_score)]),
        el("td", {}, [show(stats.percentile)]),
      ]),
    );
  }
  const caption = el("p", { class: "stats-caption" }, [
    `Confronto: ${bundle.set_descriptor} (${show(bundle.set_size)} testi)`,
  ]);
  return el("div", {}, [caption, table]);
}

export function relevantLawList(set: RelevantLawSet): HTMLElement {
  const list = el("ol", { class: "relevant-laws" });
  for (const entry of set.entries) {
    list.append(
      el("li", { "data-law": entry.law_id }, [
        el("span", { class: "law-id" }, [entry.law_id]),
        el("span", { class: "similarity" }, [show(entry.similarity)]),
      ]),
    );
  }
  return list;
}

export function foundationList(foundations: FoundationCitation[]): HTMLElement {
  const list = el("ul", { class: "foundations" });
  for (const f of foundations) {
    // Bar width is layout, not a displayed number; the text shows the
    // payload values as-is.
    const bar = el("div", { class: "bar" });
    bar.style.width = `${f.relative_frequency * 100}%`;
    list.append(
      el("li", { "data-target": f.target_id }, [
        el("span", { class: "target" }, [f.target_id]),
        el("span", { class: "freq" }, [show(f.relative_frequency)]),
        el("span", { class: "count" }, [show(f.citing_count)]),
        el("div", { class: "bar-track" }, [bar]),
      ]),
    );
  }
  return list;
}

export function reportBlock(text: string, usedFallback: boolean): HTMLElement {
  const block = el("div", { class: "report" });
  if (usedFallback) {
    block.append(el("span", { class: "badge fallback-badge" }, ["rapporto modello"]));
  }
  block.append(el("pre", { class: "report-text" }, [text]));
  return block;
}

export function errorBox(message: string): HTMLElement {
  return el("div", { class: "error", role: "alert" }, [message]);
}
