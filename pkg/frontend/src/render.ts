// DOM builders. Every renderer is a pure function of the server state (plus
// layout positions); re-rendering after any action redraws from scratch so
// the view can never drift from what the service reported.

import type { HistoryEntry, SessionState } from "./api";
import { hashSeed, layout, type Point } from "./layout";

const SVG_NS = "http://www.w3.org/2000/svg";
export const VIEW_W = 640;
export const VIEW_H = 420;

function svgEl<K extends keyof SVGElementTagNameMap>(
  tag: K,
  attrs: Record<string, string>,
): SVGElementTagNameMap[K] {
  const el = document.createElementNS(SVG_NS, tag);
  for (const [key, value] of Object.entries(attrs)) {
    el.setAttribute(key, value);
  }
  return el;
}

export function layoutPositions(state: SessionState): Point[] {
  return layout({
    count: state.nodes.length,
    edges: state.edges.map((e) => [e.src - 1, e.tgt - 1]),
    width: VIEW_W,
    height: VIEW_H,
    seed: hashSeed(state.session),
  });
}

export function renderQuiver(
  state: SessionState,
  onMutate: (k: number) => void,
): Element {
  let pts: Point[];
  try {
    pts = layoutPositions(state);
  } catch {
    return renderAdjacencyTable(state, onMutate);
  }
  const svg = svgEl("svg", {
    class: "quiver",
    viewBox: `0 0 ${VIEW_W} ${VIEW_H}`,
  });
  const defs = svgEl("defs", {});
  const marker = svgEl("marker", {
    id: "arrow",
    viewBox: "0 0 10 10",
    refX: "24",
    refY: "5",
    markerWidth: "7",
    markerHeight: "7",
    orient: "auto-start-reverse",
  });
  marker.appendChild(svgEl("path", { d: "M 0 0 L 10 5 L 0 10 z" }));
  defs.appendChild(marker);
  svg.appendChild(defs);

  for (const edge of state.edges) {
    const a = pts[edge.src - 1];
    const b = pts[edge.tgt - 1];
    const line = svgEl("line", {
      class: "edge",
      x1: String(a.x),
      y1: String(a.y),
      x2: String(b.x),
      y2: String(b.y),
      "marker-end": "url(#arrow)",
      "data-src": String(edge.src),
      "data-tgt": String(edge.tgt),
    });
    svg.appendChild(line);
    if (edge.mult > 1) {
      const badge = svgEl("text", {
        class: "mult-badge",
        x: String((a.x + b.x) / 2 + 8),
        y: String((a.y + b.y) / 2 - 8),
      });
      badge.textContent = `x${edge.mult}`;
      svg.appendChild(badge);
    }
  }

  for (const node of state.nodes) {
    const p = pts[node.position - 1];
    const cls = node.projective ? "node locked" : "node exchangeable";
    const group = svgEl("g", {
      class: cls,
      "data-position": String(node.position),
      transform: `translate(${p.x},${p.y})`,
    });
    group.appendChild(svgEl("circle", { r: "22" }));
    const label = svgEl("text", { class: "label", y: "4" });
    label.textContent = node.label;
    group.appendChild(label);
    if (node.projective) {
      const lock = svgEl("text", { class: "lock", y: "-26" });
      lock.textContent = "proj";
      group.appendChild(lock);
    } else {
      group.addEventListener("click", () => onMutate(node.position));
    }
    svg.appendChild(group);
  }
  return svg;
}

// Fallback when the layout cannot produce finite positions.
export function renderAdjacencyTable(
  state: SessionState,
  onMutate: (k: number) => void,
): Element {
  const table = document.createElement("table");
  table.className = "adjacency-fallback";
  const head = table.insertRow();
  head.insertCell().textContent = "";
  for (const node of state.nodes) {
    head.insertCell().textContent = node.label;
  }
  for (const from of state.nodes) {
    const row = table.insertRow();
    const cell = row.insertCell();
    cell.textContent = from.label;
    if (!from.projective) {
      cell.className = "exchangeable";
      cell.addEventListener("click", () => onMutate(from.position));
    } else {
      cell.className = "locked";
    }
    for (const to of state.nodes) {
      const e = state.edges.find(
        (x) => x.src === from.position && x.tgt === to.position,
      );
      row.insertCell().textContent = e ? String(e.mult) : "";
    }
  }
  return table;
}

export function renderMatrix(state: SessionState): Element {
  const wrap = document.createElement("div");
  wrap.className = "matrix-panel";
  const title = document.createElement("h3");
  title.textContent = "exchange matrix (mutable columns)";
  wrap.appendChild(title);
  const table = document.createElement("table");
  for (const row of state.b_cols) {
    const tr = table.insertRow();
    for (const value of row) {
      tr.insertCell().textContent = String(value);
    }
  }
  wrap.appendChild(table);
  return wrap;
}

export function renderCluster(state: SessionState): Element {
  const wrap = document.createElement("div");
  wrap.className = "cluster-panel";
  const title = document.createElement("h3");
  title.textContent = "cluster variables";
  wrap.appendChild(title);
  const list = document.createElement("ol");
  for (const variable of state.cluster_variables) {
    const item = document.createElement("li");
    item.textContent = variable;
    list.appendChild(item);
  }
  wrap.appendChild(list);
  return wrap;
}

export function renderHistory(entries: HistoryEntry[]): Element {
  const wrap = document.createElement("div");
  wrap.className = "history-panel";
  const title = document.createElement("h3");
  title.textContent = "history";
  wrap.appendChild(title);
  const list = document.createElement("ol");
  list.className = "history-list";
  for (const entry of entries) {
    const item = document.createElement("li");
    item.textContent = `k=${entry.k}  ${entry.display}`;
    list.appendChild(item);
  }
  wrap.appendChild(list);
  return wrap;
}

export function renderBanner(message: string): Element {
  const div = document.createElement("div");
  div.className = "error-banner";
  div.textContent = message;
  return div;
}
