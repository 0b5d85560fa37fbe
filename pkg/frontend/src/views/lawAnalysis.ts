// Law Analysis: search the corpus, inspect a law's indicators, pick a
// comparison set, and read the generated report.

import { ApiClient, ApiError, LatestOnly } from "../api.js";
import { errorBox, profileCards, reportBlock, statsTable } from "../components.js";
import { clear, el, show } from "../dom.js";
import type { ViewState } from "../state.js";
import type { ComparisonSelector } from "../types.js";

export function lawAnalysisView(client: ApiClient, state: ViewState): HTMLElement {
  const root = el("section", { class: "view law-analysis" });
  const searchInput = el("input", {
    class: "law-search",
    placeholder: "cerca per titolo",
    value: state.lawAnalysis.query,
  });
  const yearInput = el("input", { class: "law-year", placeholder: "anno", size: "6" });
  const domainInput = el("input", { class: "law-domain", placeholder: "ambito", size: "16" });
  const searchButton = el("button", { class: "law-search-go" }, ["Cerca"]);
  const results = el("div", { class: "law-results" });
  const detail = el("div", { class: "law-detail" });
  const reportArea = el("div", { class: "law-report" });

  const comparisonYear = el("input", { class: "report-year", placeholder: "anno confronto", size: "6" });
  const comparisonDomain = el("input", { class: "report-domain", placeholder: "ambito confronto", size: "16" });
  const reportButton = el("button", { class: "report-go", disabled: "disabled" }, ["Genera rapporto"]);

  const listLatest = new LatestOnly();
  const reportLatest = new LatestOnly();
  let selectedLaw: string | null = null;

  async function search(): Promise<void> {
    state.lawAnalysis.query = searchInput.value;
    const query: Record<string, unknown> = { limit: 50 };
    if (searchInput.value.trim()) query.q = searchInput.value.trim();
    if (yearInput.value.trim()) query.year = Number(yearInput.value);
    if (domainInput.value.trim()) query.domain = domainInput.value.trim();
    const laws = await listLatest.run(() => client.listLaws(query));
    if (!laws) return;
    state.lawAnalysis.laws = laws;
    clear(results);
    const list = el("ul", { class: "law-list" });
    for (const law of laws.items) {
      const link = el("a", { href: "#", class: "law-link", "data-law": law.law_id }, [
        `${law.title} (${law.law_id})`,
      ]);
      link.addEventListener("click", (event) => {
        event.preventDefault();
        void select(law.law_id);
      });
      list.append(el("li", {}, [link]));
    }
    results.append(el("p", { class: "law-total" }, [`${show(laws.total)} leggi`]), list);
  }

  async function select(lawId: string): Promise<void> {
    selectedLaw = lawId;
    reportButton.removeAttribute("disabled");
    clear(detail);
    try {
      const payload = await client.lawDetail(lawId);
      state.lawAnalysis.detail = payload;
      detail.append(
        el("h3", {}, [payload.title]),
        el("p", { class: "law-meta" }, [
          `${payload.law_id} · ${payload.publication_date ?? "-"} · ${payload.ministry_domain ?? "-"} · ${show(payload.article_count)} articoli`,
        ]),
        profileCards(payload.profile),
      );
    } catch (error) {
      if (error instanceof ApiError) {
        detail.append(errorBox(`${error.code}: ${error.message}`));
        return;
      }
      throw error;
    }
  }

  async function requestReport(): Promise<void> {
    if (!selectedLaw) return;
    const comparison: ComparisonSelector = {};
    if (comparisonYear.value.trim()) comparison.year = Number(comparisonYear.value);
    if (comparisonDomain.value.trim()) comparison.domain = comparisonDomain.value.trim();
    const lawId = selectedLaw;
    try {
      const payload = await reportLatest.run(() => client.lawReport(lawId, { comparison }));
      if (!payload) return;
      state.lawAnalysis.report = payload;
      clear(reportArea);
      reportArea.append(statsTable(payload.stats), reportBlock(payload.report_text, payload.report_fallback));
    } catch (error) {
      if (error instanceof ApiError) {
        clear(reportArea);
        reportArea.append(errorBox(`${error.code}: ${error.message}`));
        return;
      }
      throw error;
    }
  }

  searchButton.addEventListener("click", () => void search());
  reportButton.addEventListener("click", () => void requestReport());
  // Re-request on picker change so the report always matches the filters.
  comparisonYear.addEventListener("change", () => void requestReport());
  comparisonDomain.addEventListener("change", () => void requestReport());

  root.append(
    el("h2", {}, ["Analisi delle leggi"]),
    el("div", { class: "controls" }, [searchInput, yearInput, domainInput, searchButton]),
    results,
    detail,
    el("div", { class: "controls report-picker" }, [comparisonYear, comparisonDomain, reportButton]),
    reportArea,
  );
  return root;
}
