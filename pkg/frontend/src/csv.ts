/** Minimal strict CSV reader for the solver's flat numeric tables. */

export class CsvParseError extends Error {
  readonly line: number;

  constructor(line: number, message: string) {
    super(`line ${line}: ${message}`);
    this.name = "CsvParseError";
    this.line = line;
  }
}

export class EmptyPlotError extends Error {
  constructor(message: string) {
    super(message);
    this.name = "EmptyPlotError";
  }
}

export interface CsvTable {
  header: string[];
  /** Data rows, keyed by header name. */
  rows: Record<string, string>[];
}

/**
 * Parse simple comma-separated content: no quoting, one header line,
 * every data row with exactly as many fields as the header.
 */
export function parseCsv(text: string): CsvTable {
  const lines = text.split(/\r?\n/);
  while (lines.length && lines[lines.length - 1] === "") lines.pop();
  if (lines.length === 0) {
    throw new CsvParseError(1, "file is empty");
  }
  const header = lines[0].split(",").map((h) => h.trim());
  if (header.some((h) => h === "")) {
    throw new CsvParseError(1, "blank column name in header");
  }
  const rows: Record<string, string>[] = [];
  for (let i = 1; i < lines.length; i++) {
    const parts = lines[i].split(",");
    if (parts.length !== header.length) {
      throw new CsvParseError(
        i + 1,
        `expected ${header.length} fields, found ${parts.length}`,
      );
    }
    const row: Record<string, string> = {};
    header.forEach((name, j) => (row[name] = parts[j].trim()));
    rows.push(row);
  }
  return { header, rows };
}

/** Numeric field access that reports the offending line on failure. */
export function numberField(
  table: CsvTable,
  rowIndex: number,
  name: string,
): number {
  const raw = table.rows[rowIndex][name];
  const value = Number(raw);
  if (raw === undefined || raw === "" || !Number.isFinite(value)) {
    throw new CsvParseError(
      rowIndex + 2,
      `field '${name}' is not a finite number (got '${raw}')`,
    );
  }
  return value;
}

export function requireColumns(table: CsvTable, names: string[]): void {
  for (const name of names) {
    if (!table.header.includes(name)) {
      throw new CsvParseError(1, `missing required column '${name}'`);
    }
  }
}
