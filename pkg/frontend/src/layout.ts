// Deterministic force-directed layout. Positions are presentation only;
// the seed is fixed per session so reloading reproduces the same picture.

export interface Point {
  x: number;
  y: number;
}

export interface LayoutInput {
  count: number;
  edges: Array<[number, number]>; // 0-based node indices
  width: number;
  height: number;
  seed: number;
}

// 32-bit string hash, used to derive the per-session layout seed.
export function hashSeed(text: string): number {
  let h = 0x811c9dc5;
  for (let i = 0; i < text.length; i++) {
    h ^= text.charCodeAt(i);
    h = Math.imul(h, 0x01000193);
  }
  return h >>> 0;
}

function mulberry32(seed: number): () => number {
  let a = seed >>> 0;
  return () => {
    a = (a + 0x6d2b79f5) | 0;
    let t = Math.imul(a ^ (a >>> 15), 1 | a);
    t = (t + Math.imul(t ^ (t >>> 7), 61 | t)) ^ t;
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

export function layout(input: LayoutInput): Point[] {
  const { count, edges, width, height, seed } = input;
  if (count === 0) return [];
  const rng = mulberry32(seed);
  const cx = width / 2;
  const cy = height / 2;
  const radius = Math.min(width, height) * 0.33;
  const pts: Point[] = [];
  for (let i = 0; i < count; i++) {
    const angle = (2 * Math.PI * i) / count + (rng() - 0.5) * 0.4;
    pts.push({
      x: cx + radius * Math.cos(angle) + (rng() - 0.5) * 10,
      y: cy + radius * Math.sin(angle) + (rng() - 0.5) * 10,
    });
  }
  const k = Math.sqrt((width * height) / count) * 0.5;
  let temp = Math.min(width, height) / 8;
  for (let iter = 0; iter < 200; iter++) {
    const disp = pts.map(() => ({ x: 0, y: 0 }));
    for (let i = 0; i < count; i++) {
      for (let j = i + 1; j < count; j++) {
        let dx = pts[i].x - pts[j].x;
        let dy = pts[i].y - pts[j].y;
        let d = Math.hypot(dx, dy);
        if (d < 1e-6) {
          dx = rng() - 0.5;
          dy = rng() - 0.5;
          d = Math.hypot(dx, dy);
        }
        const force = (k * k) / d;
        disp[i].x += (dx / d) * force;
        disp[i].y += (dy / d) * force;
        disp[j].x -= (dx / d) * force;
        disp[j].y -= (dy / d) * force;
      }
    }
    for (const [a, b] of edges) {
      let dx = pts[a].x - pts[b].x;
      let dy = pts[a].y - pts[b].y;
      const d = Math.hypot(dx, dy) || 1e-6;
      const force = (d * d) / k;
      disp[a].x -= (dx / d) * force;
      disp[a].y -= (dy / d) * force;
      disp[b].x += (dx / d) * force;
      disp[b].y += (dy / d) * force;
    }
    for (let i = 0; i < count; i++) {
      const d = Math.hypot(disp[i].x, disp[i].y) || 1e-6;
      const step = Math.min(d, temp);
      pts[i].x += (disp[i].x / d) * step;
      pts[i].y += (disp[i].y / d) * step;
      const margin = 40;
      pts[i].x = Math.max(margin, Math.min(width - margin, pts[i].x));
      pts[i].y = Math.max(margin, Math.min(height - margin, pts[i].y));
    }
    temp *= 0.97;
  }
  for (const p of pts) {
    if (!Number.isFinite(p.x) || !Number.isFinite(p.y)) {
      throw new Error("layout diverged");
    }
  }
  return pts;
}
