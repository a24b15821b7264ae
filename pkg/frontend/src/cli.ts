#!/usr/bin/env node
/**
 * Render a figure from a solver CSV file.
 *
 * Usage: invsextic-figures --input spectra.csv --kind spectrum-vs-ell --output fig.svg
 *
 * Exit codes: 0 success, 2 bad arguments, 3 malformed or empty input, 4 I/O.
 */

import { readFileSync, writeFileSync } from "node:fs";
import process from "node:process";

import { CsvParseError, EmptyPlotError, parseCsv } from "./csv.js";
import { buildFigure, FigureKind } from "./figure.js";
import { renderSvg } from "./svg.js";

const KINDS: FigureKind[] = ["spectrum-vs-ell", "spectrum-vs-n", "wavefunctions"];

interface Args {
  input: string;
  kind: FigureKind;
  output: string;
}

function parseArgs(argv: string[]): Args {
  const values: Record<string, string> = {};
  for (let i = 0; i < argv.length; i += 2) {
    const flag = argv[i];
    const value = argv[i + 1];
    if (!flag.startsWith("--") || value === undefined) {
      throw new Error(`malformed arguments near '${flag}'`);
    }
    values[flag.slice(2)] = value;
  }
  for (const need of ["input", "kind", "output"]) {
    if (!(need in values)) throw new Error(`missing --${need}`);
  }
  if (!KINDS.includes(values.kind as FigureKind)) {
    throw new Error(`--kind must be one of ${KINDS.join(", ")}`);
  }
  return {
    input: values.input,
    kind: values.kind as FigureKind,
    output: values.output,
  };
}

export function render(input: string, kind: FigureKind, output: string): number {
  let text: string;
  try {
    text = readFileSync(input, "utf8");
  } catch (err) {
    console.error(`i/o failure: ${(err as Error).message}`);
    return 4;
  }
  let svg: string;
  try {
    svg = renderSvg(buildFigure(kind, parseCsv(text)));
  } catch (err) {
    if (err instanceof CsvParseError || err instanceof EmptyPlotError) {
      console.error(`${err.name}: ${err.message}`);
      return 3;
    }
    throw err;
  }
  try {
    writeFileSync(output, svg);
  } catch (err) {
    console.error(`i/o failure: ${(err as Error).message}`);
    return 4;
  }
  return 0;
}

export function main(argv: string[]): number {
  let args: Args;
  try {
    args = parseArgs(argv);
  } catch (err) {
    console.error(`error: ${(err as Error).message}`);
    console.error(
      "usage: invsextic-figures --input <csv> --kind <spectrum-vs-ell|spectrum-vs-n|wavefunctions> --output <svg>",
    );
    return 2;
  }
  return render(args.input, args.kind, args.output);
}

if (process.argv[1] && process.argv[1].endsWith("cli.js")) {
  process.exit(main(process.argv.slice(2)));
}
