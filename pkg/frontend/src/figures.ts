import { num, requireColumns, type Table } from "./csv.js";
import { methodColor, sortMethods } from "./colors.js";
import {
  renderBarChart,
  renderChart,
  renderPanels,
  type BarPanel,
  type Panel,
  type Point,
  type Series,
} from "./chart.js";

export const FIGURE_IDS = [
  "fig3_centrality_over_time",
  "fig4_network_size",
  "fig5_topologies",
  "fig6_temporal",
  "fig7_finit",
  "fig8_pmax_theta",
  "fig9_uncertainty",
  "fig10_pmin",
  "fig11_runtime",
] as const;

export type FigureId = (typeof FIGURE_IDS)[number];

const AGGREGATE_COLUMNS = [
  "method",
  "dimension",
  "value",
  "replications",
  "mean_success_ratio",
  "ci95_half_width",
];

function one(figureId: string, tables: Table[]): Table {
  if (tables.length !== 1) {
    throw new Error(`${figureId} expects 1 input CSV, got ${tables.length}`);
  }
  return tables[0]!;
}

function soleDimension(table: Table, figureId: string, accepted: string[]): string {
  const found = [...new Set(table.rows.map((r) => r["dimension"]!))].sort();
  if (found.length !== 1) {
    throw new Error(
      `${figureId}: ${table.path} mixes sweep dimensions {${found.join(", ")}}; expected a single one`,
    );
  }
  const dim = found[0]!;
  if (!accepted.includes(dim)) {
    throw new Error(
      `${figureId}: expected dimension '${accepted.join("' or '")}', found '${dim}' in ${table.path}`,
    );
  }
  return dim;
}

/** Per-method success-ratio series (x = sweep value) from one aggregate CSV. */
function aggregateSeries(
  table: Table,
  figureId: string,
  accepted: string[],
): { dim: string; series: Series[] } {
  requireColumns(table, AGGREGATE_COLUMNS);
  const dim = soleDimension(table, figureId, accepted);
  const byMethod = new Map<string, Point[]>();
  for (const row of table.rows) {
    const method = row["method"]!;
    let points = byMethod.get(method);
    if (points === undefined) {
      points = [];
      byMethod.set(method, points);
    }
    points.push({
      x: num(table, row, "value"),
      y: num(table, row, "mean_success_ratio"),
      yErr: num(table, row, "ci95_half_width"),
    });
  }
  const series = sortMethods([...byMethod.keys()]).map((label) => ({
    label,
    color: methodColor(label),
    points: byMethod.get(label)!,
  }));
  return { dim, series };
}

function ratioPanel(title: string, xLabel: string, series: Series[]): Panel {
  return { title, xLabel, yLabel: "Mean success ratio", series };
}

function fig3(tables: Table[]): string {
  const t = one("fig3_centrality_over_time", tables);
  requireColumns(t, ["method", "period", "centrality"]);
  const acc = new Map<string, Map<number, { sum: number; n: number }>>();
  for (const row of t.rows) {
    const method = row["method"]!;
    const period = num(t, row, "period");
    let periods = acc.get(method);
    if (periods === undefined) {
      periods = new Map();
      acc.set(method, periods);
    }
    const cell = periods.get(period) ?? { sum: 0, n: 0 };
    cell.sum += num(t, row, "centrality");
    cell.n += 1;
    periods.set(period, cell);
  }
  const series = sortMethods([...acc.keys()]).map((label) => ({
    label,
    color: methodColor(label),
    points: [...acc.get(label)!.entries()]
      .sort((a, b) => a[0] - b[0])
      .map(([period, cell]) => ({ x: period, y: cell.sum / cell.n })),
  }));
  return renderChart({
    title: "Mean centrality of seeded nodes by period",
    xLabel: "Period",
    yLabel: "Mean seed centrality",
    series,
  });
}

function fig6(tables: Table[]): string {
  const t = one("fig6_temporal", tables);
  requireColumns(t, ["run_id", "method", "period", "success"]);
  const periods = [...new Set(t.rows.map((r) => num(t, r, "period")))].sort((a, b) => a - b);
  const methods = new Map<string, { runs: Set<string>; wins: Map<number, number> }>();
  for (const row of t.rows) {
    const method = row["method"]!;
    let m = methods.get(method);
    if (m === undefined) {
      m = { runs: new Set(), wins: new Map() };
      methods.set(method, m);
    }
    m.runs.add(row["run_id"]!);
    const period = num(t, row, "period");
    m.wins.set(period, (m.wins.get(period) ?? 0) + num(t, row, "success"));
  }
  const series = sortMethods([...methods.keys()]).map((label) => {
    const m = methods.get(label)!;
    let cum = 0;
    const points = periods.map((p) => {
      cum += m.wins.get(p) ?? 0;
      return { x: p, y: cum / m.runs.size };
    });
    return { label, color: methodColor(label), points };
  });
  return renderChart({
    title: "Cumulative successful infections over time",
    xLabel: "Period",
    yLabel: "Mean cumulative successes per run",
    series,
  });
}

function fig5(tables: Table[]): string {
  const t = one("fig5_topologies", tables);
  requireColumns(t, AGGREGATE_COLUMNS);
  soleDimension(t, "fig5_topologies", ["network"]);
  const baseName = (path: string): string => path.split("/").pop()!.replace(/\.[^.]*$/, "");
  const categories = [...new Set(t.rows.map((r) => baseName(r["value"]!)))].sort();
  const index = new Map(categories.map((c, i) => [c, i]));
  const byMethod = new Map<string, { values: (number | null)[]; errs: (number | null)[] }>();
  for (const row of t.rows) {
    const method = row["method"]!;
    let cells = byMethod.get(method);
    if (cells === undefined) {
      cells = {
        values: categories.map(() => null),
        errs: categories.map(() => null),
      };
      byMethod.set(method, cells);
    }
    const i = index.get(baseName(row["value"]!))!;
    cells.values[i] = num(t, row, "mean_success_ratio");
    cells.errs[i] = num(t, row, "ci95_half_width");
  }
  const panel: BarPanel = {
    title: "Success ratio by network",
    xLabel: "Network",
    yLabel: "Mean success ratio",
    categories,
    series: sortMethods([...byMethod.keys()]).map((label) => ({
      label,
      color: methodColor(label),
      ...byMethod.get(label)!,
    })),
  };
  return renderBarChart(panel);
}

function fig8(tables: Table[]): string {
  if (tables.length !== 2) {
    throw new Error(`fig8_pmax_theta expects 2 input CSVs, got ${tables.length}`);
  }
  const parsed = tables.map((t) => aggregateSeries(t, "fig8_pmax_theta", ["pmax_mean", "theta_mean"]));
  const byDim = new Map(parsed.map((p) => [p.dim, p.series]));
  if (!byDim.has("pmax_mean") || !byDim.has("theta_mean")) {
    throw new Error(
      `fig8_pmax_theta expects one 'pmax_mean' sweep and one 'theta_mean' sweep, got {${parsed
        .map((p) => p.dim)
        .sort()
        .join(", ")}}`,
    );
  }
  return renderPanels([
    ratioPanel("Success ratio vs p_max", "Mean p_max", byDim.get("pmax_mean")!),
    ratioPanel("Success ratio vs theta", "Mean theta", byDim.get("theta_mean")!),
  ]);
}

function fig11(tables: Table[]): string {
  const t = one("fig11_runtime", tables);
  requireColumns(t, ["method", "dimension", "value", "mean_runtime_ms"]);
  soleDimension(t, "fig11_runtime", ["sample_size"]);
  const byMethod = new Map<string, Point[]>();
  for (const row of t.rows) {
    const method = row["method"]!;
    let points = byMethod.get(method);
    if (points === undefined) {
      points = [];
      byMethod.set(method, points);
    }
    points.push({ x: num(t, row, "value"), y: num(t, row, "mean_runtime_ms") });
  }
  const series = sortMethods([...byMethod.keys()]).map((label) => ({
    label,
    color: methodColor(label),
    points: byMethod.get(label)!,
  }));
  return renderChart({
    title: "Mean runtime vs network size",
    xLabel: "Network size (nodes)",
    yLabel: "Mean runtime (ms)",
    series,
    logX: true,
  });
}

function simpleSweep(figureId: string, accepted: string[], title: string, xLabel: (dim: string) => string) {
  return (tables: Table[]): string => {
    const t = one(figureId, tables);
    const { dim, series } = aggregateSeries(t, figureId, accepted);
    return renderChart(ratioPanel(title, xLabel(dim), series));
  };
}

const BUILDERS: Record<FigureId, (tables: Table[]) => string> = {
  fig3_centrality_over_time: fig3,
  fig4_network_size: simpleSweep(
    "fig4_network_size",
    ["sample_size"],
    "Success ratio vs network size",
    () => "Network size (nodes)",
  ),
  fig5_topologies: fig5,
  fig6_temporal: fig6,
  fig7_finit: simpleSweep(
    "fig7_finit",
    ["f_init"],
    "Success ratio vs initial spreader count",
    () => "Initial spreaders (f_init)",
  ),
  fig8_pmax_theta: fig8,
  fig9_uncertainty: simpleSweep(
    "fig9_uncertainty",
    ["theta_std", "pmax_std"],
    "Success ratio under parameter-view noise",
    (dim) => `Estimator noise (${dim})`,
  ),
  fig10_pmin: simpleSweep(
    "fig10_pmin",
    ["p_min"],
    "Success ratio vs p_min",
    () => "Spontaneous infection probability (p_min)",
  ),
  fig11_runtime: fig11,
};

export function buildFigure(figureId: string, tables: Table[]): string {
  const builder = (BUILDERS as Record<string, (tables: Table[]) => string>)[figureId];
  if (builder === undefined) {
    throw new Error(
      `unknown figure id '${figureId}' (known: ${FIGURE_IDS.join(", ")})`,
    );
  }
  return builder(tables);
}
