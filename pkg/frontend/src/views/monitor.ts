// Monitor: time-series queries over the legislative system with chart,
// table, and CSV download (bytes passed through unchanged).

import { ApiClient, ApiError, LatestOnly, TimeseriesQuery } from "../api.js";
import { renderLineChart } from "../chart.js";
import { errorBox } from "../components.js";
import { downloadBlob } from "../csv.js";
import { clear, el, show } from "../dom.js";
import type { ViewState } from "../state.js";
import type { Granularity, TimeseriesMetric } from "../types.js";

const METRICS: TimeseriesMetric[] = [
  "laws_enacted",
  "in_force_count",
  "avg_outgoing_citations",
  "new_citations",
];

export function monitorView(client: ApiClient, state: ViewState): HTMLElement {
  const root = el("section", { class: "view monitor" });

  const metricSelect = el("select", { class: "monitor-metric" });
  for (const metric of METRICS) {
    metricSelect.append(el("option", { value: metric }, [metric]));
  }
  metricSelect.value = state.monitor.metric;
  const granularitySelect = el("select", { class: "monitor-granularity" });
  for (const granularity of ["year", "month"]) {
    granularitySelect.append(el("option", { value: granularity }, [granularity]));
  }
  granularitySelect.value = state.monitor.granularity;
  const fromInput = el("input", { class: "monitor-from", value: state.monitor.from, size: "12" });
  const toInput = el("input", { class: "monitor-to", value: state.monitor.to, size: "12" });
  const loadButton = el("button", { class: "monitor-go" }, ["Aggiorna"]);
  const csvButton = el("button", { class: "monitor-csv" }, ["Scarica CSV"]);
  const message = el("div", { class: "monitor-message" });
  const chartArea = el("div", { class: "monitor-chart" });
  const tableArea = el("div", { class: "monitor-table" });

  const latest = new LatestOnly();

  function currentQuery(): TimeseriesQuery | null {
    clear(message);
    const from = fromInput.value.trim();
    const to = toInput.value.trim();
    if (!from || !to || from > to) {
      message.append(errorBox("intervallo di date non valido"));
      return null;
    }
    state.monitor.metric = metricSelect.value;
    state.monitor.granularity = granularitySelect.value;
    state.monitor.from = from;
    state.monitor.to = to;
    return {
      metric: metricSelect.value as TimeseriesMetric,
      granularity: granularitySelect.value as Granularity,
      from,
      to,
    };
  }

  async function query(): Promise<void> {
    const request = currentQuery();
    if (!request) return;
    try {
      const payload = await latest.run(() => client.timeseries(request));
      if (!payload) return;
      state.monitor.series = payload;
      clear(chartArea);
      chartArea.append(renderLineChart(payload.points));
      clear(tableArea);
      const table = el("table", { class: "series" });
      table.append(el("tr", {}, [el("th", {}, ["periodo"]), el("th", {}, ["valore"])]));
      for (const point of payload.points) {
        table.append(
          el("tr", {}, [el("td", {}, [point.period]), el("td", {}, [show(point.value)])]),
        );
      }
      tableArea.append(table);
    } catch (error) {
      if (error instanceof ApiError) {
        clear(chartArea);
        clear(tableArea);
        message.append(errorBox(`${error.code}: ${error.message}`));
        return;
      }
      throw error;
    }
  }

  async function downloadCsv(): Promise<void> {
    const request = currentQuery();
    if (!request) return;
    const blob = await client.timeseriesCsv(request);
    downloadBlob(blob, `${request.metric}-${request.granularity}.csv`);
  }

  loadButton.addEventListener("click", () => void query());
  csvButton.addEventListener("click", () => void downloadCsv());
  metricSelect.addEventListener("change", () => void query());
  granularitySelect.addEventListener("change", () => void query());

  root.append(
    el("h2", {}, ["Monitoraggio del sistema"]),
    el("div", { class: "controls" }, [metricSelect, granularitySelect, fromInput, toInput, loadButton, csvButton]),
    message,
    chartArea,
    tableArea,
  );
  return root;
}
