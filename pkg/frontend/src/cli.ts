#!/usr/bin/env node
import { mkdirSync, readFileSync, writeFileSync } from "node:fs";
import * as path from "node:path";
import { pathToFileURL } from "node:url";
import { parseArgs } from "node:util";

import { readCsv } from "./csv.js";
import { buildFigure } from "./figures.js";

const USAGE = "usage: lvm-figs --spec <figures.json> --out <dir> [--format svg]";

interface FigureRequest {
  id: string;
  inputs: string[];
  output: string;
}

function parseSpec(specPath: string): FigureRequest[] {
  let raw: string;
  try {
    raw = readFileSync(specPath, "utf8");
  } catch (err) {
    throw new Error(`cannot read spec file ${specPath}: ${(err as Error).message}`);
  }
  let doc: unknown;
  try {
    doc = JSON.parse(raw);
  } catch (err) {
    throw new Error(`${specPath}: invalid JSON: ${(err as Error).message}`);
  }
  const figures = (doc as { figures?: unknown }).figures;
  if (!Array.isArray(figures) || figures.length === 0) {
    throw new Error(`${specPath}: expected a non-empty 'figures' array`);
  }
  return figures.map((entry, i) => {
    const e = entry as Partial<FigureRequest>;
    if (typeof e.id !== "string" || e.id === "") {
      throw new Error(`${specPath}: figures[${i}] is missing a string 'id'`);
    }
    if (!Array.isArray(e.inputs) || e.inputs.length === 0 || !e.inputs.every((p) => typeof p === "string")) {
      throw new Error(`${specPath}: figures[${i}] ('${e.id}') needs a non-empty string array 'inputs'`);
    }
    if (typeof e.output !== "string" || e.output === "") {
      throw new Error(`${specPath}: figures[${i}] ('${e.id}') is missing a string 'output'`);
    }
    return { id: e.id, inputs: e.inputs, output: e.output };
  });
}

export function runCli(argv: string[]): number {
  let values: { spec?: string; out?: string; format?: string };
  try {
    ({ values } = parseArgs({
      args: argv,
      options: {
        spec: { type: "string" },
        out: { type: "string" },
        format: { type: "string", default: "svg" },
      },
    }));
  } catch (err) {
    console.error(`error: ${(err as Error).message}`);
    console.error(USAGE);
    return 1;
  }
  if (values.spec === undefined || values.out === undefined) {
    console.error(`error: --spec and --out are required`);
    console.error(USAGE);
    return 1;
  }
  if (values.format !== "svg") {
    console.error(
      `error: unsupported format '${values.format}': only 'svg' is built in; render SVG and rasterize with an external tool`,
    );
    return 1;
  }
  try {
    const requests = parseSpec(values.spec);
    const specDir = path.dirname(path.resolve(values.spec));
    for (const req of requests) {
      const tables = req.inputs.map((p) =>
        readCsv(path.isAbsolute(p) ? p : path.join(specDir, p)),
      );
      const svg = buildFigure(req.id, tables);
      const outPath = path.join(values.out, req.output);
      mkdirSync(path.dirname(outPath), { recursive: true });
      writeFileSync(outPath, svg, "utf8");
      console.log(`${req.id} -> ${outPath}`);
    }
  } catch (err) {
    console.error(`error: ${(err as Error).message}`);
    return 1;
  }
  return 0;
}

if (process.argv[1] !== undefined && import.meta.url === pathToFileURL(process.argv[1]).href) {
  process.exit(runCli(process.argv.slice(2)));
}
