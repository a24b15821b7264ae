/** Builds curve groups for the three figure kinds from parsed CSV tables. */

import { CsvTable, EmptyPlotError, numberField, requireColumns } from "./csv.js";

export type FigureKind = "spectrum-vs-ell" | "spectrum-vs-n" | "wavefunctions";

export interface Curve {
  label: string;
  points: Array<[number, number]>;
}

export interface FigureModel {
  kind: FigureKind;
  xLabel: string;
  yLabel: string;
  curves: Curve[];
}

function groupBy(
  table: CsvTable,
  keyField: string,
  xField: string,
  yField: string,
): Map<number, Array<[number, number]>> {
  const groups = new Map<number, Array<[number, number]>>();
  for (let i = 0; i < table.rows.length; i++) {
    const key = numberField(table, i, keyField);
    const x = numberField(table, i, xField);
    const y = numberField(table, i, yField);
    if (!groups.has(key)) groups.set(key, []);
    groups.get(key)!.push([x, y]);
  }
  return groups;
}

function toCurves(
  groups: Map<number, Array<[number, number]>>,
  labelOf: (key: number) => string,
): Curve[] {
  return [...groups.keys()]
    .sort((a, b) => a - b)
    .map((key) => ({
      label: labelOf(key),
      points: groups.get(key)!.slice().sort((p, q) => p[0] - q[0]),
    }));
}

/**
 * Assemble the figure model for one CSV table.
 *
 * spectrum-vs-ell: one curve per level index n, energy against ell;
 * spectrum-vs-n:   one curve per ell, energy against n;
 * wavefunctions:   one curve per level, psi against r.
 */
export function buildFigure(kind: FigureKind, table: CsvTable): FigureModel {
  if (table.rows.length === 0) {
    throw new EmptyPlotError("no data rows: nothing to plot");
  }
  switch (kind) {
    case "spectrum-vs-ell": {
      requireColumns(table, ["ell", "n", "energy"]);
      const curves = toCurves(
        groupBy(table, "n", "ell", "energy"),
        (n) => `n=${n}`,
      );
      return { kind, xLabel: "ell", yLabel: "energy", curves };
    }
    case "spectrum-vs-n": {
      requireColumns(table, ["ell", "n", "energy"]);
      const curves = toCurves(
        groupBy(table, "ell", "n", "energy"),
        (ell) => `ell=${ell}`,
      );
      return { kind, xLabel: "n", yLabel: "energy", curves };
    }
    case "wavefunctions": {
      requireColumns(table, ["level", "r", "psi"]);
      const curves = toCurves(
        groupBy(table, "level", "r", "psi"),
        (level) => `level=${level}`,
      );
      return { kind, xLabel: "r", yLabel: "psi", curves };
    }
    default:
      throw new Error(`unknown figure kind '${kind as string}'`);
  }
}
