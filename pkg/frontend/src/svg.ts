/** Deterministic SVG line-chart rendering: same model in, same bytes out. */

import { Curve, FigureModel } from "./figure.js";

const WIDTH = 860;
const HEIGHT = 560;
const MARGIN = { top: 36, right: 150, bottom: 52, left: 78 };

// fixed qualitative palette, cycled in curve order
const PALETTE = [
  "#1f77b4",
  "#d62728",
  "#2ca02c",
  "#9467bd",
  "#ff7f0e",
  "#8c564b",
  "#17becf",
  "#7f7f7f",
  "#bcbd22",
  "#e377c2",
  "#352eb4",
];

function fmt(v: number): string {
  // fixed-precision coordinates keep the output byte-stable
  return v.toFixed(3);
}

function tickLabel(v: number): string {
  const a = Math.abs(v);
  if (v === 0) return "0";
  if (a >= 1e4 || a < 1e-3) return v.toExponential(1);
  return String(Number(v.toPrecision(6)));
}

interface Scale {
  (v: number): number;
  ticks: number[];
}

function linearScale(lo: number, hi: number, outLo: number, outHi: number): Scale {
  if (lo === hi) {
    lo -= 0.5;
    hi += 0.5;
  }
  const pad = 0.04 * (hi - lo);
  const a = lo - pad;
  const b = hi + pad;
  const f = ((v: number) => outLo + ((v - a) / (b - a)) * (outHi - outLo)) as Scale;
  const step = niceStep(b - a);
  const first = Math.ceil(a / step) * step;
  const ticks: number[] = [];
  for (let t = first; t <= b + 1e-12 * Math.abs(step); t += step) {
    ticks.push(Math.abs(t) < 1e-12 * Math.abs(step) ? 0 : t);
  }
  f.ticks = ticks;
  return f;
}

function niceStep(span: number): number {
  const raw = span / 6;
  const mag = Math.pow(10, Math.floor(Math.log10(raw)));
  const norm = raw / mag;
  const step = norm < 1.5 ? 1 : norm < 3.5 ? 2 : norm < 7.5 ? 5 : 10;
  return step * mag;
}

function extent(curves: Curve[], axis: 0 | 1): [number, number] {
  let lo = Infinity;
  let hi = -Infinity;
  for (const c of curves) {
    for (const p of c.points) {
      lo = Math.min(lo, p[axis]);
      hi = Math.max(hi, p[axis]);
    }
  }
  return [lo, hi];
}

/** Render the figure model to a standalone SVG document string. */
export function renderSvg(model: FigureModel): string {
  const [xLo, xHi] = extent(model.curves, 0);
  const [yLo, yHi] = extent(model.curves, 1);
  const x = linearScale(xLo, xHi, MARGIN.left, WIDTH - MARGIN.right);
  const y = linearScale(yLo, yHi, HEIGHT - MARGIN.bottom, MARGIN.top);

  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" width="${WIDTH}" height="${HEIGHT}" viewBox="0 0 ${WIDTH} ${HEIGHT}">`,
  );
  parts.push(`<rect width="${WIDTH}" height="${HEIGHT}" fill="white"/>`);

  // axes and grid
  const axisColor = "#444444";
  const gridColor = "#dddddd";
  for (const t of x.ticks) {
    const px = fmt(x(t));
    parts.push(
      `<line x1="${px}" y1="${MARGIN.top}" x2="${px}" y2="${HEIGHT - MARGIN.bottom}" stroke="${gridColor}" stroke-width="1"/>`,
    );
    parts.push(
      `<text x="${px}" y="${HEIGHT - MARGIN.bottom + 18}" font-family="sans-serif" font-size="12" fill="${axisColor}" text-anchor="middle">${tickLabel(t)}</text>`,
    );
  }
  for (const t of y.ticks) {
    const py = fmt(y(t));
    parts.push(
      `<line x1="${MARGIN.left}" y1="${py}" x2="${WIDTH - MARGIN.right}" y2="${py}" stroke="${gridColor}" stroke-width="1"/>`,
    );
    parts.push(
      `<text x="${MARGIN.left - 8}" y="${py}" font-family="sans-serif" font-size="12" fill="${axisColor}" text-anchor="end" dominant-baseline="middle">${tickLabel(t)}</text>`,
    );
  }
  parts.push(
    `<rect x="${MARGIN.left}" y="${MARGIN.top}" width="${WIDTH - MARGIN.left - MARGIN.right}" height="${HEIGHT - MARGIN.top - MARGIN.bottom}" fill="none" stroke="${axisColor}" stroke-width="1"/>`,
  );
  parts.push(
    `<text x="${(MARGIN.left + WIDTH - MARGIN.right) / 2}" y="${HEIGHT - 14}" font-family="sans-serif" font-size="14" fill="${axisColor}" text-anchor="middle">${model.xLabel}</text>`,
  );
  parts.push(
    `<text x="20" y="${(MARGIN.top + HEIGHT - MARGIN.bottom) / 2}" font-family="sans-serif" font-size="14" fill="${axisColor}" text-anchor="middle" transform="rotate(-90 20 ${(MARGIN.top + HEIGHT - MARGIN.bottom) / 2})">${model.yLabel}</text>`,
  );

  // data layer
  model.curves.forEach((curve, i) => {
    const color = PALETTE[i % PALETTE.length];
    const pts = curve.points
      .map(([vx, vy]) => `${fmt(x(vx))},${fmt(y(vy))}`)
      .join(" ");
    parts.push(
      `<polyline class="curve" fill="none" stroke="${color}" stroke-width="1.5" points="${pts}"/>`,
    );
    if (curve.points.length <= 64) {
      for (const [vx, vy] of curve.points) {
        parts.push(
          `<circle cx="${fmt(x(vx))}" cy="${fmt(y(vy))}" r="2.2" fill="${color}"/>`,
        );
      }
    }
  });

  // legend
  model.curves.forEach((curve, i) => {
    const color = PALETTE[i % PALETTE.length];
    const ly = MARGIN.top + 16 * i;
    const lx = WIDTH - MARGIN.right + 12;
    parts.push(
      `<line x1="${lx}" y1="${ly}" x2="${lx + 22}" y2="${ly}" stroke="${color}" stroke-width="2"/>`,
    );
    parts.push(
      `<text x="${lx + 28}" y="${ly}" font-family="sans-serif" font-size="12" fill="${axisColor}" dominant-baseline="middle">${curve.label}</text>`,
    );
  });

  parts.push("</svg>");
  return parts.join("\n") + "\n";
}
