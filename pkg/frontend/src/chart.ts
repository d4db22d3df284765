import { el, fmt, svgDocument, textEl } from "./svg.js";

export interface Point {
  x: number;
  y: number;
  /** Half-width of a symmetric error bar around y. */
  yErr?: number;
}

export interface Series {
  label: string;
  color: string;
  points: Point[];
}

export interface Panel {
  title: string;
  xLabel: string;
  yLabel: string;
  series: Series[];
  logX?: boolean;
}

export interface BarPanel {
  title: string;
  xLabel: string;
  yLabel: string;
  categories: string[];
  series: { label: string; color: string; values: (number | null)[]; errs?: (number | null)[] }[];
}

export const PANEL_WIDTH = 480;
export const PANEL_HEIGHT = 320;
const MARGIN = { top: 30, right: 14, bottom: 46, left: 58 };

function niceNum(range: number, round: boolean): number {
  const exp = Math.floor(Math.log10(range));
  const frac = range / 10 ** exp;
  let nice: number;
  if (round) nice = frac < 1.5 ? 1 : frac < 3 ? 2 : frac < 7 ? 5 : 10;
  else nice = frac <= 1 ? 1 : frac <= 2 ? 2 : frac <= 5 ? 5 : 10;
  return nice * 10 ** exp;
}

/** Rounded tick positions covering [lo, hi]. */
export function niceTicks(lo: number, hi: number, count = 5): number[] {
  if (!(hi > lo)) {
    const pad = lo === 0 ? 1 : Math.abs(lo) / 2;
    return niceTicks(lo - pad, lo + pad, count);
  }
  const step = niceNum(niceNum(hi - lo, false) / (count - 1), true);
  const start = Math.floor(lo / step) * step;
  const n = Math.ceil((hi - start) / step + 0.5);
  const ticks: number[] = [];
  for (let i = 0; i <= n; i++) {
    ticks.push(Number((start + i * step).toFixed(10)));
  }
  return ticks;
}

export function tickLabel(v: number): string {
  if (v === 0) return "0";
  const a = Math.abs(v);
  if (a >= 100000 || a < 0.001) return v.toExponential(0).replace("e+", "e");
  const s = v.toPrecision(6);
  return s.includes(".") ? s.replace(/0+$/, "").replace(/\.$/, "") : s;
}

type Scale = (v: number) => number;

function linear(d0: number, d1: number, r0: number, r1: number): Scale {
  const span = d1 - d0 || 1;
  return (v) => r0 + ((v - d0) / span) * (r1 - r0);
}

function frame(p: { title: string; xLabel: string; yLabel: string }, width: number, height: number): string {
  const cx = MARGIN.left + (width - MARGIN.left - MARGIN.right) / 2;
  return [
    textEl(cx, 18, p.title, { "text-anchor": "middle", "font-size": 13, "font-weight": "bold" }),
    textEl(cx, height - 10, p.xLabel, { "text-anchor": "middle" }),
    el(
      "g",
      { transform: `translate(14,${MARGIN.top + (height - MARGIN.top - MARGIN.bottom) / 2}) rotate(-90)` },
      textEl(0, 0, p.yLabel, { "text-anchor": "middle" }),
    ),
  ].join("\n");
}

function yAxis(ticks: number[], ys: Scale, x0: number, x1: number): string {
  const parts: string[] = [];
  for (const t of ticks) {
    const y = ys(t);
    parts.push(el("line", { x1: x0, y1: y, x2: x1, y2: y, stroke: "#dddddd", "stroke-width": 1 }));
    parts.push(el("line", { x1: x0 - 4, y1: y, x2: x0, y2: y, stroke: "#222222", "stroke-width": 1 }));
    parts.push(textEl(x0 - 7, y + 4, tickLabel(t), { "text-anchor": "end" }));
  }
  return parts.join("\n");
}

function axisLines(x0: number, x1: number, y0: number, y1: number): string {
  return [
    el("line", { x1: x0, y1: y0, x2: x1, y2: y0, stroke: "#222222", "stroke-width": 1 }),
    el("line", { x1: x0, y1: y0, x2: x0, y2: y1, stroke: "#222222", "stroke-width": 1 }),
  ].join("\n");
}

function legend(series: { label: string; color: string }[], x: number, y: number): string {
  return series
    .map((s, i) => {
      const yy = y + i * 15;
      return (
        el("line", { x1: x, y1: yy - 4, x2: x + 16, y2: yy - 4, stroke: s.color, "stroke-width": 2 }) +
        textEl(x + 21, yy, s.label)
      );
    })
    .join("\n");
}

function errorBar(x: number, yLo: number, yHi: number, color: string): string {
  return [
    el("line", { x1: x, y1: yLo, x2: x, y2: yHi, stroke: color, "stroke-width": 1 }),
    el("line", { x1: x - 3, y1: yLo, x2: x + 3, y2: yLo, stroke: color, "stroke-width": 1 }),
    el("line", { x1: x - 3, y1: yHi, x2: x + 3, y2: yHi, stroke: color, "stroke-width": 1 }),
  ].join("");
}

function panelBody(p: Panel, width: number, height: number): string {
  if (p.series.length === 0 || p.series.every((s) => s.points.length === 0)) {
    throw new Error(`figure '${p.title}' has no data to plot`);
  }
  const x0 = MARGIN.left;
  const x1 = width - MARGIN.right;
  const y0 = height - MARGIN.bottom;
  const y1 = MARGIN.top;

  const xVal = (v: number): number => {
    if (!p.logX) return v;
    if (v <= 0) throw new Error(`figure '${p.title}': log-scale x requires positive values, got ${v}`);
    return Math.log10(v);
  };
  const xsRaw = p.series.flatMap((s) => s.points.map((pt) => xVal(pt.x)));
  const ysRaw = p.series.flatMap((s) => s.points.map((pt) => pt.y + (pt.yErr ?? 0)));
  let xTicks: number[];
  if (p.logX) {
    const lo = Math.floor(Math.min(...xsRaw));
    const hi = Math.ceil(Math.max(...xsRaw));
    xTicks = [];
    for (let k = lo; k <= (hi > lo ? hi : lo + 1); k++) xTicks.push(k);
  } else {
    xTicks = niceTicks(Math.min(...xsRaw), Math.max(...xsRaw));
  }
  const yTicks = niceTicks(0, Math.max(...ysRaw, 1e-9) * 1.02);
  const xs = linear(xTicks[0]!, xTicks[xTicks.length - 1]!, x0, x1);
  const ys = linear(0, yTicks[yTicks.length - 1]!, y0, y1);

  const parts = [frame(p, width, height), yAxis(yTicks, ys, x0, x1)];
  for (const t of xTicks) {
    const x = xs(t);
    parts.push(el("line", { x1: x, y1: y0, x2: x, y2: y0 + 4, stroke: "#222222", "stroke-width": 1 }));
    parts.push(
      textEl(x, y0 + 16, tickLabel(p.logX ? 10 ** t : t), { "text-anchor": "middle" }),
    );
  }
  parts.push(axisLines(x0, x1, y0, y1));

  for (const s of p.series) {
    const pts = [...s.points].sort((a, b) => a.x - b.x);
    const coords = pts.map((pt) => `${fmt(xs(xVal(pt.x)))},${fmt(ys(pt.y))}`).join(" ");
    if (pts.length > 1) {
      parts.push(el("polyline", { points: coords, fill: "none", stroke: s.color, "stroke-width": 1.5 }));
    }
    for (const pt of pts) {
      if (pt.yErr !== undefined && pt.yErr > 0) {
        parts.push(errorBar(xs(xVal(pt.x)), ys(pt.y - pt.yErr), ys(pt.y + pt.yErr), s.color));
      }
      parts.push(el("circle", { cx: xs(xVal(pt.x)), cy: ys(pt.y), r: 2.5, fill: s.color }));
    }
  }
  parts.push(legend(p.series, x0 + 8, y1 + 12));
  return parts.join("\n");
}

export function renderPanels(panels: Panel[], width = PANEL_WIDTH, height = PANEL_HEIGHT): string {
  const body = panels
    .map((p, i) => el("g", { transform: `translate(${i * width},0)` }, panelBody(p, width, height)))
    .join("\n");
  return svgDocument(width * panels.length, height, body);
}

export function renderChart(panel: Panel): string {
  return renderPanels([panel]);
}

export function renderBarChart(p: BarPanel, width = PANEL_WIDTH, height = PANEL_HEIGHT): string {
  if (p.categories.length === 0 || p.series.length === 0) {
    throw new Error(`figure '${p.title}' has no data to plot`);
  }
  const x0 = MARGIN.left;
  const x1 = width - MARGIN.right;
  const y0 = height - MARGIN.bottom;
  const y1 = MARGIN.top;

  const tops = p.series.flatMap((s) =>
    s.values.map((v, i) => (v === null ? 0 : v + (s.errs?.[i] ?? 0))),
  );
  const yTicks = niceTicks(0, Math.max(...tops, 1e-9) * 1.02);
  const ys = linear(0, yTicks[yTicks.length - 1]!, y0, y1);

  const band = (x1 - x0) / p.categories.length;
  const group = band * 0.8;
  const barW = group / p.series.length;

  const parts = [frame(p, width, height), yAxis(yTicks, ys, x0, x1)];
  p.categories.forEach((c, i) => {
    parts.push(textEl(x0 + band * (i + 0.5), y0 + 16, c, { "text-anchor": "middle" }));
  });
  parts.push(axisLines(x0, x1, y0, y1));

  p.series.forEach((s, k) => {
    s.values.forEach((v, i) => {
      if (v === null) return;
      const bx = x0 + band * i + (band - group) / 2 + barW * k;
      parts.push(
        el("rect", { x: bx, y: ys(v), width: barW, height: y0 - ys(v), fill: s.color }),
      );
      const err = s.errs?.[i];
      if (err !== null && err !== undefined && err > 0) {
        parts.push(errorBar(bx + barW / 2, ys(v - err), ys(v + err), "#222222"));
      }
    });
  });
  parts.push(legend(p.series, x0 + 8, y1 + 12));
  return svgDocument(width, height, parts.join("\n"));
}
