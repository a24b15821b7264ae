export { CsvParseError, EmptyPlotError, parseCsv } from "./csv.js";
export { buildFigure } from "./figure.js";
export type { Curve, FigureKind, FigureModel } from "./figure.js";
export { renderSvg } from "./svg.js";
export { main, render } from "./cli.js";
