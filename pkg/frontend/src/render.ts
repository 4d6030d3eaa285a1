import type { BoardView } from "./board";

export interface RenderHandlers {
  onCell(index: number): void;
}

const BOARD_PX = 420;
const PAD_PX = 26;

// Rebuilds the board area from scratch on every view change. Cells are
// absolutely positioned buttons; a single delegated listener forwards
// clicks by index.
export function renderBoard(
  view: BoardView | null,
  root: HTMLElement,
  handlers: RenderHandlers,
): void {
  root.textContent = "";
  if (!view) {
    const empty = document.createElement("p");
    empty.className = "empty-note";
    empty.textContent = "no board yet";
    root.appendChild(empty);
    return;
  }
  const area = document.createElement("div");
  area.className = "board-area";
  const side = BOARD_PX + 2 * PAD_PX;
  area.style.width = `${side}px`;
  area.style.height = `${side}px`;

  const radiusPx = Math.max(6, view.cellRadius * BOARD_PX);
  for (const cell of view.cells) {
    const el = document.createElement("button");
    el.type = "button";
    el.className = [
      "cell",
      cell.on ? "on" : "off",
      cell.green ? "green" : "red",
      view.hint?.has(cell.index) ? "hinted" : "",
    ]
      .filter(Boolean)
      .join(" ");
    el.dataset.index = String(cell.index);
    el.title = `cell ${cell.index}`;
    el.setAttribute("aria-pressed", cell.on ? "true" : "false");
    el.style.left = `${PAD_PX + cell.x * BOARD_PX - radiusPx}px`;
    el.style.top = `${PAD_PX + cell.y * BOARD_PX - radiusPx}px`;
    el.style.width = `${2 * radiusPx}px`;
    el.style.height = `${2 * radiusPx}px`;
    area.appendChild(el);
  }

  area.addEventListener("click", (ev) => {
    const target = (ev.target as HTMLElement).closest(".cell");
    if (target instanceof HTMLElement && target.dataset.index !== undefined) {
      handlers.onCell(Number(target.dataset.index));
    }
  });
  root.appendChild(area);
}

export function renderStatus(
  view: BoardView | null,
  badge: HTMLElement,
  info: HTMLElement,
): void {
  badge.classList.remove("ok", "bad", "unknown");
  if (!view) {
    badge.textContent = "no board";
    badge.classList.add("unknown");
    info.textContent = "";
    return;
  }
  const { solvable, nullity } = view.status;
  if (solvable === null) {
    badge.textContent = "solvability unknown";
    badge.classList.add("unknown");
  } else if (solvable) {
    badge.textContent = `SOLVABLE (nullity ${nullity})`;
    badge.classList.add("ok");
  } else {
    badge.textContent = `UNSOLVABLE (nullity ${nullity})`;
    badge.classList.add("bad");
  }
  if (view.hintInfo && view.hint) {
    const h = view.hintInfo;
    info.textContent =
      `hint for ${h.target}: ${view.hint.size} clicks, weight ${h.weight}` +
      (h.minimal ? ", minimal" : "");
  } else {
    info.textContent = "";
  }
}
