import { ApiError, PuzzleApi } from "./api";
import { layoutCells, type Layout } from "./layout";
import type { CreateRequest, SessionView } from "./types";

export interface Cell {
  index: number;
  x: number;
  y: number;
  on: boolean;
  green: boolean; // lamp toggles itself (self-loop); red otherwise
}

export interface BoardStatus {
  solvable: boolean | null; // null until a hint has been requested
  nullity: number | null;
}

export interface HintInfo {
  target: string;
  weight: number;
  minimal: boolean;
}

export interface BoardView {
  sessionId: string;
  cells: Cell[];
  cellRadius: number;
  hint: Set<number> | null;
  hintInfo: HintInfo | null;
  status: BoardStatus;
  clickCount: number;
}

// The board is a thin mirror of the service: every mutation round-trips and
// the cells are rebuilt from the response, never adjusted locally. User
// events run through a single queue so at most one request is in flight;
// clicks fired while one is pending are queued, not dropped.
export class BoardController {
  view: BoardView | null = null;
  onChange: (view: BoardView | null) => void = () => {};
  onNotice: (message: string) => void = () => {};

  private api: PuzzleApi;
  private session: SessionView | null = null;
  private layout: Layout | null = null;
  private status: BoardStatus = { solvable: null, nullity: null };
  private hintSet: Set<number> | null = null;
  private hintInfo: HintInfo | null = null;
  private queue: Promise<void> = Promise.resolve();

  constructor(api: PuzzleApi) {
    this.api = api;
  }

  get stateString(): string | null {
    return this.session ? this.session.state : null;
  }

  whenIdle(): Promise<void> {
    return this.queue;
  }

  createBoard(req: CreateRequest): Promise<void> {
    return this.enqueue(async () => {
      const session = await this.api.createSession(req);
      this.session = session;
      this.layout = layoutCells(session.n_vertices, session.labels);
      this.status = { solvable: null, nullity: null };
      this.clearHint();
      this.emit();
    }, "new board");
  }

  clickCell(index: number): Promise<void> {
    return this.enqueue(async () => {
      if (!this.session) {
        return;
      }
      // any click invalidates the overlay, even if the request then fails
      if (this.hintSet !== null) {
        this.clearHint();
        this.emit();
      }
      this.session = await this.api.click(this.session.id, index);
      this.emit();
    }, "click");
  }

  undo(): Promise<void> {
    return this.enqueue(async () => {
      if (!this.session) {
        return;
      }
      this.clearHint();
      this.session = await this.api.undo(this.session.id);
      this.emit();
    }, "undo");
  }

  reset(): Promise<void> {
    return this.enqueue(async () => {
      if (!this.session) {
        return;
      }
      this.clearHint();
      this.session = await this.api.reset(this.session.id);
      this.emit();
    }, "reset");
  }

  requestHint(target: string): Promise<void> {
    return this.enqueue(async () => {
      if (!this.session) {
        return;
      }
      const hint = await this.api.hint(this.session.id, target);
      this.status = { solvable: hint.solvable, nullity: hint.nullity };
      if (!hint.solvable) {
        this.clearHint();
      } else {
        const clicks = hint.clicks ?? [];
        this.hintSet = new Set(clicks);
        this.hintInfo = {
          target: hint.target,
          weight: hint.weight ?? clicks.length,
          minimal: hint.minimal ?? false,
        };
        if (clicks.length === 0) {
          this.onNotice(`already solved for target ${hint.target}`);
        }
      }
      this.emit();
    }, "hint");
  }

  refresh(): Promise<void> {
    return this.enqueue(async () => {
      if (!this.session) {
        return;
      }
      this.session = await this.api.getSession(this.session.id);
      this.emit();
    }, "refresh");
  }

  private enqueue(op: () => Promise<void>, label: string): Promise<void> {
    const next = this.queue.then(async () => {
      try {
        await op();
      } catch (err) {
        // failed request: report and leave the board as the last response
        this.onNotice(`${label} failed: ${describe(err)}`);
      }
    });
    this.queue = next;
    return next;
  }

  private clearHint(): void {
    this.hintSet = null;
    this.hintInfo = null;
  }

  private emit(): void {
    const s = this.session;
    if (!s || !this.layout) {
      this.view = null;
      this.onChange(null);
      return;
    }
    const loops = new Set(s.self_loops);
    const cells: Cell[] = [];
    for (let i = 0; i < s.n_vertices; i++) {
      const p = this.layout.points[i] ?? { x: 0.5, y: 0.5 };
      cells.push({
        index: i,
        x: p.x,
        y: p.y,
        on: s.state[i] === "1",
        green: loops.has(i),
      });
    }
    this.view = {
      sessionId: s.id,
      cells,
      cellRadius: this.layout.radius,
      hint: this.hintSet === null ? null : new Set(this.hintSet),
      hintInfo: this.hintInfo,
      status: { ...this.status },
      clickCount: s.click_history.length,
    };
    this.onChange(this.view);
  }
}

function describe(err: unknown): string {
  if (err instanceof ApiError) {
    return err.status === 409 && err.message.includes("empty")
      ? "nothing to undo"
      : err.message;
  }
  return err instanceof Error ? err.message : String(err);
}
