import { readFileSync } from "node:fs";

/** A parsed CSV: header row plus string-valued records, all validated. */
export interface Table {
  readonly path: string;
  readonly columns: readonly string[];
  readonly rows: readonly Record<string, string>[];
}

export class CsvError extends Error {}

export function parseCsv(text: string, path = "<string>"): Table {
  const lines = text.split(/\r?\n/).filter((line) => line.length > 0);
  if (lines.length === 0) {
    throw new CsvError(`${path}: empty CSV`);
  }
  const columns = lines[0]!.split(",");
  const rows = lines.slice(1).map((line, i) => {
    const cells = line.split(",");
    if (cells.length !== columns.length) {
      throw new CsvError(
        `${path}: line ${i + 2} has ${cells.length} fields, expected ${columns.length}`,
      );
    }
    return Object.fromEntries(columns.map((c, k) => [c, cells[k]!]));
  });
  if (rows.length === 0) {
    throw new CsvError(`${path}: no data rows`);
  }
  return { path, columns, rows };
}

export function readCsv(path: string): Table {
  let text: string;
  try {
    text = readFileSync(path, "utf8");
  } catch (err) {
    throw new CsvError(`cannot read ${path}: ${(err as Error).message}`);
  }
  return parseCsv(text, path);
}

export function requireColumns(table: Table, needed: readonly string[]): void {
  const missing = needed.filter((c) => !table.columns.includes(c));
  if (missing.length > 0) {
    throw new CsvError(
      `${table.path}: missing required column(s) ${missing.join(", ")} ` +
        `(have: ${table.columns.join(", ")})`,
    );
  }
}

export function num(table: Table, row: Record<string, string>, column: string): number {
  const raw = row[column];
  const v = Number(raw);
  if (raw === undefined || raw === "" || Number.isNaN(v)) {
    throw new CsvError(
      `${table.path}: non-numeric value ${JSON.stringify(raw ?? "")} in column ${column}`,
    );
  }
  return v;
}
