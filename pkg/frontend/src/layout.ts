// Cell placement derived from the graph's label coordinates.
//
// Grids label vertices with integer lattice coordinates (row, col), the
// triangular and hexagonal generators with euclidean centroid coordinates.
// Anything else (missing labels, non-numeric labels, 3D and up) falls back
// to a circle.

export interface Point {
  x: number;
  y: number;
}

export interface Layout {
  points: Point[]; // unit-square coordinates
  radius: number; // cell radius in the same units
}

export function layoutCells(nVertices: number, labels: unknown[] | null): Layout {
  const raw = labels === null ? null : asCoordinates(labels, nVertices);
  if (raw === null) {
    return circleLayout(nVertices);
  }
  return normalize(raw);
}

function asCoordinates(labels: unknown[], n: number): Point[] | null {
  if (labels.length !== n || n === 0) {
    return null;
  }
  const rows: number[][] = [];
  for (const label of labels) {
    if (
      !Array.isArray(label) ||
      label.length < 1 ||
      label.length > 2 ||
      !label.every((v) => typeof v === "number" && Number.isFinite(v))
    ) {
      return null;
    }
    rows.push(label as number[]);
  }
  if (rows.every((r) => r.length === 1)) {
    // a path: lay it out left to right
    return rows.map((r) => ({ x: r[0]!, y: 0 }));
  }
  if (!rows.every((r) => r.length === 2)) {
    return null;
  }
  const pts = rows.map((r) => ({ x: r[0]!, y: r[1]! }));
  if (pts.every((p) => Number.isInteger(p.x) && Number.isInteger(p.y))) {
    // integer pairs are lattice (row, col) coordinates: columns go on x
    return pts.map((p) => ({ x: p.y, y: p.x }));
  }
  return pts;
}

function circleLayout(n: number): Layout {
  if (n <= 1) {
    return { points: n === 1 ? [{ x: 0.5, y: 0.5 }] : [], radius: 0.25 };
  }
  const points: Point[] = [];
  for (let i = 0; i < n; i++) {
    const angle = (2 * Math.PI * i) / n - Math.PI / 2;
    points.push({
      x: 0.5 + 0.45 * Math.cos(angle),
      y: 0.5 + 0.45 * Math.sin(angle),
    });
  }
  // chord between neighbours bounds the cell size
  const chord = 2 * 0.45 * Math.sin(Math.PI / n);
  return { points, radius: Math.min(0.45 * chord, 0.12) };
}

function normalize(raw: Point[]): Layout {
  const xs = raw.map((p) => p.x);
  const ys = raw.map((p) => p.y);
  const minX = Math.min(...xs);
  const minY = Math.min(...ys);
  const span = Math.max(
    Math.max(...xs) - minX,
    Math.max(...ys) - minY,
    1e-9,
  );
  const offX = (1 - (Math.max(...xs) - minX) / span) / 2;
  const offY = (1 - (Math.max(...ys) - minY) / span) / 2;
  const points = raw.map((p) => ({
    x: offX + (p.x - minX) / span,
    y: offY + (p.y - minY) / span,
  }));
  return { points, radius: Math.min(0.45 * (minDistance(raw) / span), 0.25) };
}

function minDistance(pts: Point[]): number {
  if (pts.length < 2) {
    return 1;
  }
  let best = Infinity;
  for (let i = 0; i < pts.length; i++) {
    for (let j = i + 1; j < pts.length; j++) {
      const dx = pts[i]!.x - pts[j]!.x;
      const dy = pts[i]!.y - pts[j]!.y;
      best = Math.min(best, Math.hypot(dx, dy));
    }
  }
  return best;
}
