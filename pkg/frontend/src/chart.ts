// SVG line chart for gap-filled time series. Points are drawn exactly as
// returned (one vertex per period, no interpolation or smoothing); the
// only numbers rendered as text are values and periods taken verbatim
// from the payload.

import type { TimeseriesPoint } from "./types.js";

const WIDTH = 640;
const HEIGHT = 240;
const PAD = 36;

const SVG_NS = "http://www.w3.org/2000/svg";

export function renderLineChart(points: TimeseriesPoint[]): SVGSVGElement {
  const svg = document.createElementNS(SVG_NS, "svg");
  svg.setAttribute("viewBox", `0 0 ${WIDTH} ${HEIGHT}`);
  svg.setAttribute("class", "chart");
  svg.setAttribute("role", "img");
  if (points.length === 0) return svg;

  const values = points.map((p) => p.value);
  let min = values[0];
  let max = values[0];
  for (const v of values) {
    if (v < min) min = v;
    if (v > max) max = v;
  }
  const span = max - min || 1;
  const step = points.length > 1 ? (WIDTH - 2 * PAD) / (points.length - 1) : 0;

  const coords = points.map((p, i) => {
    const x = PAD + i * step;
    const y = HEIGHT - PAD - ((p.value - min) / span) * (HEIGHT - 2 * PAD);
    return `${x},${y}`;
  });

  const line = document.createElementNS(SVG_NS, "polyline");
  line.setAttribute("points", coords.join(" "));
  line.setAttribute("fill", "none");
  line.setAttribute("stroke", "currentColor");
  line.setAttribute("stroke-width", "2");
  svg.appendChild(line);

  // Axis labels reuse payload values verbatim (min/max are selected, not
  // computed).
  const labels: Array<[string, number, number]> = [
    [String(max), PAD - 4, PAD],
    [String(min), PAD - 4, HEIGHT - PAD],
  ];
  for (const [text, x, y] of labels) {
    const label = document.createElementNS(SVG_NS, "text");
    label.setAttribute("x", String(x));
    label.setAttribute("y", String(y));
    label.setAttribute("text-anchor", "end");
    label.setAttribute("class", "chart-axis");
    label.textContent = text;
    svg.appendChild(label);
  }

  const first = document.createElementNS(SVG_NS, "text");
  first.setAttribute("x", String(PAD));
  first.setAttribute("y", String(HEIGHT - PAD + 16));
  first.setAttribute("class", "chart-axis");
  first.textContent = points[0].period;
  svg.appendChild(first);

  const last = document.createElementNS(SVG_NS, "text");
  last.setAttribute("x", String(WIDTH - PAD));
  last.setAttribute("y", String(HEIGHT - PAD + 16));
  last.setAttribute("text-anchor", "end");
  last.setAttribute("class", "chart-axis");
  last.textContent = points[points.length - 1].period;
  svg.appendChild(last);

  return svg;
}
