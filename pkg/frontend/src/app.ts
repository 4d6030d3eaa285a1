import { PuzzleApi } from "./api";
import { BoardController } from "./board";
import { renderBoard, renderStatus } from "./render";
import type { CreateRequest } from "./types";

export interface App {
  root: HTMLElement;
  controller: BoardController;
}

const MARKUP = `
  <div class="panel new-panel">
    <label>family
      <select data-role="family">
        <option value="grid" selected>grid</option>
        <option value="torus">torus</option>
        <option value="triangular">triangular</option>
        <option value="hexagonal">hexagonal</option>
      </select>
    </label>
    <label class="grid-opt">dims <input data-role="dims" value="5,5" size="6"></label>
    <label class="tri-opt">rows <input data-role="rows" type="number" value="4" min="1" size="3"></label>
    <label class="hex-opt">radius <input data-role="radius" type="number" value="2" min="0" size="3"></label>
    <label>self toggle
      <select data-role="self">
        <option value="all" selected>all</option>
        <option value="none">none</option>
      </select>
    </label>
    <label class="grid-opt">wrap <input data-role="wrap" type="checkbox"></label>
    <label class="grid-opt">diagonal <input data-role="diagonal" type="checkbox"></label>
    <button data-role="create" type="button">new board</button>
  </div>
  <div class="panel control-panel">
    <span data-role="badge" class="badge unknown">no board</span>
    <button data-role="undo" type="button">undo</button>
    <button data-role="reset" type="button">reset</button>
    <label>target
      <select data-role="target">
        <option value="all-off" selected>all-off</option>
        <option value="all-on">all-on</option>
        <option value="corollary">corollary</option>
      </select>
    </label>
    <button data-role="hint" type="button">hint</button>
    <span data-role="hint-info" class="hint-info"></span>
  </div>
  <div data-role="board" class="board"></div>
  <div data-role="toast" class="toast" hidden></div>
`;

export function mountApp(root: HTMLElement, api: PuzzleApi): App {
  root.innerHTML = MARKUP;
  const pick = <T extends HTMLElement>(role: string): T => {
    const el = root.querySelector(`[data-role="${role}"]`);
    if (!el) {
      throw new Error(`markup is missing role ${role}`);
    }
    return el as T;
  };

  const familySel = pick<HTMLSelectElement>("family");
  const dimsInput = pick<HTMLInputElement>("dims");
  const rowsInput = pick<HTMLInputElement>("rows");
  const radiusInput = pick<HTMLInputElement>("radius");
  const selfSel = pick<HTMLSelectElement>("self");
  const wrapBox = pick<HTMLInputElement>("wrap");
  const diagonalBox = pick<HTMLInputElement>("diagonal");
  const createBtn = pick<HTMLButtonElement>("create");
  const badge = pick<HTMLSpanElement>("badge");
  const undoBtn = pick<HTMLButtonElement>("undo");
  const resetBtn = pick<HTMLButtonElement>("reset");
  const targetSel = pick<HTMLSelectElement>("target");
  const hintBtn = pick<HTMLButtonElement>("hint");
  const hintInfo = pick<HTMLSpanElement>("hint-info");
  const boardEl = pick<HTMLDivElement>("board");
  const toastEl = pick<HTMLDivElement>("toast");

  const controller = new BoardController(api);

  let toastTimer: ReturnType<typeof setTimeout> | null = null;
  const showToast = (message: string) => {
    toastEl.textContent = message;
    toastEl.hidden = false;
    if (toastTimer !== null) {
      clearTimeout(toastTimer);
    }
    toastTimer = setTimeout(() => {
      toastEl.hidden = true;
    }, 4000);
  };

  controller.onNotice = showToast;
  controller.onChange = (view) => {
    renderBoard(view, boardEl, { onCell: (i) => void controller.clickCell(i) });
    renderStatus(view, badge, hintInfo);
    undoBtn.disabled = !view || view.clickCount === 0;
    resetBtn.disabled = !view;
    hintBtn.disabled = !view;
  };
  controller.onChange(null);

  const buildRequest = (): CreateRequest | null => {
    const family = familySel.value as CreateRequest["family"];
    const selfAffect = selfSel.value as "all" | "none";
    if (family === "triangular") {
      return { family, rows: Number(rowsInput.value), self_affect: selfAffect };
    }
    if (family === "hexagonal") {
      return { family, radius: Number(radiusInput.value), self_affect: selfAffect };
    }
    const dims = dimsInput.value.split(",").map((part) => Number(part.trim()));
    if (dims.length === 0 || dims.some((d) => !Number.isInteger(d) || d < 1)) {
      showToast(`bad dims: ${dimsInput.value}`);
      return null;
    }
    const req: CreateRequest = { family, dims, self_affect: selfAffect };
    if (family === "grid") {
      req.wrap = wrapBox.checked;
      req.diagonal = diagonalBox.checked;
    }
    return req;
  };

  createBtn.addEventListener("click", () => {
    const req = buildRequest();
    if (req) {
      void controller.createBoard(req);
    }
  });
  undoBtn.addEventListener("click", () => void controller.undo());
  resetBtn.addEventListener("click", () => void controller.reset());
  hintBtn.addEventListener("click", () => void controller.requestHint(targetSel.value));

  return { root, controller };
}
