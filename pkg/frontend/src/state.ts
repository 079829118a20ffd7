// View state and the controller driving it.  The server response is the
// only source of truth: every mutation is followed by a re-read of the
// tilting endpoint, and a stale-state conflict refreshes instead of
// retrying.

import { ApiClient, ApiError } from "./api";
import type { ArView, Presentation } from "./api";
import {
  HistoryEntry,
  renderHistory,
  renderPresentation,
  renderQuiver,
  toast,
} from "./render";

export interface Elements {
  cluster: HTMLElement;
  gamma: HTMLElement;
  presentation: HTMLElement;
  history: HTMLElement;
  status: HTMLElement;
  toasts: HTMLElement;
}

export interface ViewState {
  session: string | null;
  names: string[];
  clusterView: ArView | null;
  gammaView: ArView | null;
  presentation: Presentation | null;
  summands: number[];
  tiltingRaw: string;
  tiltingCount: number;
  history: HistoryEntry[];
  selection: number | null;
}

const CLICK_DELAY_MS = 250;

export class Explorer {
  readonly state: ViewState = {
    session: null,
    names: [],
    clusterView: null,
    gammaView: null,
    presentation: null,
    summands: [],
    tiltingRaw: "",
    tiltingCount: 0,
    history: [],
    selection: null,
  };

  private clickTimer: ReturnType<typeof setTimeout> | null = null;
  private inflight: Promise<void> = Promise.resolve();

  constructor(
    private readonly api: ApiClient,
    private readonly els: Elements,
  ) {}

  /** Resolves once every started operation has finished. */
  settled(): Promise<void> {
    return this.inflight;
  }

  private run(op: () => Promise<void>): Promise<void> {
    this.inflight = this.inflight.then(op).catch((err) => {
      this.fail(err);
    });
    return this.inflight;
  }

  private fail(err: unknown) {
    if (err instanceof ApiError && err.status === 409) {
      toast(this.els.toasts, "tilting object changed elsewhere; refreshed");
      void this.run(() => this.refresh());
      return;
    }
    const message = err instanceof Error ? err.message : String(err);
    toast(this.els.toasts, message);
  }

  load(quiver: string): Promise<void> {
    return this.run(async () => {
      const created = await this.api.createSession(quiver);
      const s = this.state;
      s.session = created.data.session;
      s.names = created.data.names;
      s.summands = created.data.tilting.summands;
      s.history = [];
      s.selection = null;
      s.clusterView = (await this.api.ar(s.session, "C")).data;
      s.gammaView = (await this.api.ar(s.session, "gamma")).data;
      await this.readTilting();
      s.presentation = (await this.api.endo(s.session)).data;
      this.renderAll();
    });
  }

  /** Re-read server state after a conflict; local state is discarded. */
  async refresh(): Promise<void> {
    const s = this.state;
    if (!s.session) return;
    await this.readTilting();
    s.gammaView = (await this.api.ar(s.session, "gamma")).data;
    s.presentation = (await this.api.endo(s.session)).data;
    this.renderAll();
  }

  private async readTilting(): Promise<void> {
    const s = this.state;
    const t = await this.api.tilting(s.session!);
    s.tiltingRaw = t.raw;
    s.summands = t.data.current.summands;
    s.tiltingCount = t.data.count;
  }

  /** Click dispatch: a double click fires one mutation immediately and
   * cancels the pending single click, so "double-click to undo" is one
   * exchange at the clicked (incoming) summand. */
  onVertex(id: number, ev: MouseEvent): void {
    if (this.clickTimer !== null) {
      clearTimeout(this.clickTimer);
      this.clickTimer = null;
    }
    if (ev.type === "dblclick") {
      void this.mutateAt(id);
      return;
    }
    this.clickTimer = setTimeout(() => {
      this.clickTimer = null;
      void this.mutateAt(id);
    }, CLICK_DELAY_MS);
  }

  mutateAt(id: number): Promise<void> {
    return this.run(async () => {
      const s = this.state;
      if (!s.session) return;
      if (!s.summands.includes(id)) {
        s.selection = id;
        this.renderAll();
        return;
      }
      const resp = await this.api.mutate(s.session, String(id), s.summands);
      s.gammaView = resp.data.ar;
      s.presentation = resp.data.presentation;
      s.selection = resp.data.current;
      s.history.push({ exchange: resp.data.exchange, names: s.names });
      if (resp.data.history !== s.history.length) {
        toast(this.els.toasts, "history out of sync with the server");
      }
      await this.readTilting();
      this.renderAll();
    });
  }

  renderAll(): void {
    const s = this.state;
    if (s.clusterView) {
      renderQuiver(this.els.cluster, s.clusterView, {
        summands: s.summands,
        selection: s.selection,
        onVertex: (id, ev) => this.onVertex(id, ev),
      });
    }
    if (s.gammaView) {
      renderQuiver(this.els.gamma, s.gammaView, {
        summands: s.summands,
        selection: null,
      });
    }
    if (s.presentation) renderPresentation(this.els.presentation, s.presentation);
    renderHistory(this.els.history, s.history);
    this.els.status.textContent = s.session
      ? `session ${s.session}; ${s.tiltingCount} tilting objects; ` +
        `current [${s.summands.join(", ")}]`
      : "no session";
  }
}
