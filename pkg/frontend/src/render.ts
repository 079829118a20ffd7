// DOM rendering.  Everything shown comes straight from API fields; the
// only local computation is placement: vertices sit on a grid whose
// column is the slice and whose row is the diagram vertex, like the
// AR-quiver is usually drawn (slices left to right, translation
// horizontal).

import type { ArView, ExchangeInfo, Presentation } from "./api";

export interface HistoryEntry {
  exchange: ExchangeInfo;
  names: string[];
}

function clear(el: HTMLElement) {
  while (el.firstChild) el.removeChild(el.firstChild);
}

export function renderQuiver(
  el: HTMLElement,
  view: ArView,
  opts: {
    summands: number[];
    selection: number | null;
    onVertex?: (id: number, ev: MouseEvent) => void;
  },
): void {
  clear(el);
  const slices = [...new Set(view.vertices.map((v) => v.slice))].sort(
    (a, b) => a - b,
  );
  const rows = [...new Set(view.vertices.map((v) => v.vertex))].sort(
    (a, b) => a - b,
  );
  const col = new Map(slices.map((s, i) => [s, i + 1]));
  const row = new Map(rows.map((r, i) => [r, i + 1]));
  el.style.display = "grid";
  el.style.gridTemplateColumns = `repeat(${slices.length}, minmax(72px, 1fr))`;
  const deleted = new Set(view.deleted ?? []);
  const projectives = new Set(view.projectives ?? []);
  for (const v of view.vertices) {
    const box = document.createElement("button");
    box.type = "button";
    box.className = "vertex";
    box.dataset.id = String(v.id);
    box.style.gridColumn = String(col.get(v.slice));
    box.style.gridRow = String(row.get(v.vertex));
    if (opts.summands.includes(v.id)) box.classList.add("summand");
    if (deleted.has(v.id)) box.classList.add("deleted");
    if (projectives.has(v.id)) box.classList.add("projective");
    if (v.shifted) box.classList.add("shifted");
    if (opts.selection === v.id) box.classList.add("selected");
    const label = document.createElement("span");
    label.className = "vertex-name";
    label.textContent = v.name;
    box.appendChild(label);
    const gdims = view.gammaDims?.[String(v.id)];
    if (gdims) {
      const sub = document.createElement("span");
      sub.className = "gamma-dims";
      sub.textContent = gdims.join(".");
      box.appendChild(sub);
    }
    if (opts.onVertex) {
      box.addEventListener("click", (ev) => opts.onVertex!(v.id, ev));
      box.addEventListener("dblclick", (ev) => opts.onVertex!(v.id, ev));
    }
    el.appendChild(box);
  }
}

export function relationText(rel: { path: number[]; coeff: string }[]): string {
  const terms = rel.map((t) => {
    const word = t.path.map((i) => `a${i}`).join("");
    return t.coeff === "1" ? word : `(${t.coeff})${word}`;
  });
  return `${terms.join(" + ")} = 0`;
}

export function renderPresentation(el: HTMLElement, pres: Presentation): void {
  clear(el);
  const head = document.createElement("div");
  head.className = "pres-head";
  const gldim =
    pres.gldim.flag === "finite" ? `gldim ${pres.gldim.value}` : "gldim ∞";
  head.textContent =
    `${pres.vertices.length} vertices, ${pres.arrows.length} arrows, ` +
    `${pres.relations.length} relations; ` +
    `${pres.isHereditary ? "hereditary" : "not hereditary"}; ${gldim}; ` +
    `total dim ${pres.dimTotal}`;
  el.appendChild(head);
  const arrows = document.createElement("ul");
  arrows.className = "pres-arrows";
  pres.arrows.forEach((a, k) => {
    const li = document.createElement("li");
    li.textContent = `a${k}: ${pres.vertices[a.src]} → ${pres.vertices[a.tgt]}`;
    arrows.appendChild(li);
  });
  el.appendChild(arrows);
  const rels = document.createElement("ul");
  rels.className = "pres-relations";
  for (const rel of pres.relations) {
    const li = document.createElement("li");
    li.textContent = relationText(rel);
    rels.appendChild(li);
  }
  el.appendChild(rels);
}

export function renderHistory(el: HTMLElement, entries: HistoryEntry[]): void {
  clear(el);
  if (entries.length === 0) {
    el.dataset.empty = "true";
    return;
  }
  delete el.dataset.empty;
  const list = document.createElement("ol");
  list.className = "history-list";
  for (const e of entries) {
    const li = document.createElement("li");
    li.textContent =
      `${e.names[e.exchange.M] ?? e.exchange.M} ↔ ` +
      `${e.names[e.exchange.Mstar] ?? e.exchange.Mstar}`;
    list.appendChild(li);
  }
  el.appendChild(list);
}

export function toast(el: HTMLElement, message: string): void {
  const note = document.createElement("div");
  note.className = "toast";
  note.textContent = message;
  el.appendChild(note);
  setTimeout(() => note.remove(), 4000);
}
