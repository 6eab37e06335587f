// Session view controller: owns the current server state and re-renders
// the whole view from it after every action.

import {
  ApiError,
  createSession,
  getSession,
  mutateSession,
  type SessionState,
} from "./api";
import { exportScript, parseScript } from "./history";
import {
  renderBanner,
  renderCluster,
  renderHistory,
  renderMatrix,
  renderQuiver,
} from "./render";

export class App {
  state: SessionState | null = null;
  busy = false;

  constructor(private root: HTMLElement) {}

  async newSession(type: string, history?: number[]): Promise<void> {
    try {
      this.setState(await createSession(type, history));
    } catch (err) {
      this.showError(err);
    }
  }

  async loadSession(id: string): Promise<void> {
    try {
      this.setState(await getSession(id));
    } catch (err) {
      this.showError(err);
    }
  }

  async mutate(k: number): Promise<void> {
    if (!this.state || this.busy) return;
    this.busy = true; // waits for the server; math stays authoritative
    try {
      this.setState(await mutateSession(this.state.session, k));
    } catch (err) {
      this.showError(err);
    } finally {
      this.busy = false;
    }
  }

  async importScript(text: string): Promise<void> {
    if (!this.state) return;
    try {
      await this.newSession(this.state.type, parseScript(text));
    } catch (err) {
      this.showError(err);
    }
  }

  setState(state: SessionState): void {
    this.state = state;
    this.render(state);
  }

  showError(err: unknown): void {
    this.root.innerHTML = "";
    const message =
      err instanceof ApiError
        ? `server said ${err.status}: ${err.message}`
        : String(err);
    this.root.appendChild(renderBanner(message));
    const retry = document.createElement("button");
    retry.className = "new-session";
    retry.textContent = "new A3 session";
    retry.addEventListener("click", () => void this.newSession("A3"));
    this.root.appendChild(retry);
  }

  private render(state: SessionState): void {
    this.root.innerHTML = "";

    const header = document.createElement("div");
    header.className = "header";
    header.textContent =
      `type ${state.type}, session ${state.session}, ` +
      `state ${state.state_hash.slice(0, 12)}`;
    this.root.appendChild(header);

    const quiver = renderQuiver(state, (k) => void this.mutate(k));
    this.root.appendChild(quiver);
    if (state.sequence && state.history.length > 0) {
      const last = state.history[state.history.length - 1];
      const node = this.root.querySelector(
        `[data-position="${last.k}"]`,
      );
      node?.classList.add("swapped"); // one-shot CSS pulse
    }

    if (state.sequence) {
      const seq = document.createElement("div");
      seq.className = "sequence";
      seq.textContent = state.sequence.display;
      this.root.appendChild(seq);
    }

    this.root.appendChild(renderMatrix(state));
    this.root.appendChild(renderCluster(state));
    this.root.appendChild(renderHistory(state.history));

    const exporter = document.createElement("textarea");
    exporter.className = "export-script";
    exporter.readOnly = true;
    exporter.value = exportScript(state.history);
    this.root.appendChild(exporter);

    const importer = document.createElement("input");
    importer.className = "import-script";
    importer.placeholder = "replay script, e.g. 2,1,3";
    this.root.appendChild(importer);
    const importButton = document.createElement("button");
    importButton.className = "import-button";
    importButton.textContent = "replay";
    importButton.addEventListener("click", () =>
      void this.importScript(importer.value),
    );
    this.root.appendChild(importButton);
  }
}
