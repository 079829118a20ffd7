// Test scaffolding: a fetch that replays recorded HTTP fixtures strictly
// in order (any request that differs from the recording fails the test),
// plus the DOM skeleton the explorer renders into.

import type { FetchLike } from "../src/api";
import type { Elements } from "../src/state";
import type { Explorer } from "../src/state";
import fixturesJson from "./fixtures/fixtures.json";

export interface Fixture {
  name: string;
  method: string;
  path: string;
  requestBody: unknown;
  status: number;
  raw: string;
}

export const fixtures = fixturesJson as Fixture[];

export function fixture(name: string): Fixture {
  const found = fixtures.find((f) => f.name === name);
  if (!found) throw new Error(`no fixture named ${name}`);
  return found;
}

export function payload<T>(name: string): T {
  return JSON.parse(fixture(name).raw) as T;
}

export interface ScriptedFetch extends FetchLike {
  /** Throws unless every scripted request was consumed. */
  done(): void;
}

export function scriptedFetch(script: string[]): ScriptedFetch {
  const queue = script.map(fixture);
  let next = 0;
  const fn = async (url: string, init?: RequestInit): Promise<Response> => {
    const method = init?.method ?? "GET";
    const expected = queue[next];
    if (!expected) {
      throw new Error(`unexpected request after script end: ${method} ${url}`);
    }
    next += 1;
    if (method !== expected.method || url !== expected.path) {
      throw new Error(
        `request ${method} ${url} does not match fixture ` +
          `"${expected.name}" (${expected.method} ${expected.path})`,
      );
    }
    const sent = init?.body == null ? null : JSON.parse(String(init.body));
    if (JSON.stringify(sent) !== JSON.stringify(expected.requestBody)) {
      throw new Error(
        `request body ${JSON.stringify(sent)} does not match fixture ` +
          `"${expected.name}" (${JSON.stringify(expected.requestBody)})`,
      );
    }
    // The live service terminates every body with a newline.
    return new Response(expected.raw + "\n", {
      status: expected.status,
      headers: { "Content-Type": "application/json" },
    });
  };
  const scripted = fn as ScriptedFetch;
  scripted.done = () => {
    if (next !== queue.length) {
      throw new Error(
        `script not finished: ${queue.length - next} fixtures left, ` +
          `next "${queue[next]!.name}"`,
      );
    }
  };
  return scripted;
}

export function makeEls(): Elements {
  document.body.innerHTML = "";
  const make = (id: string): HTMLElement => {
    const div = document.createElement("div");
    div.id = id;
    document.body.appendChild(div);
    return div;
  };
  return {
    cluster: make("cluster-quiver"),
    gamma: make("gamma-quiver"),
    presentation: make("presentation"),
    history: make("history"),
    status: make("status"),
    toasts: make("toasts"),
  };
}

function press(panel: HTMLElement, id: number, type: "click" | "dblclick") {
  const btn = panel.querySelector(`[data-id="${id}"]`);
  if (!btn) throw new Error(`no vertex with id ${id} in panel`);
  btn.dispatchEvent(new MouseEvent(type, { bubbles: true }));
}

export function click(panel: HTMLElement, id: number): void {
  press(panel, id, "click");
}

/** A browser double click arrives as click, click, dblclick. */
export function dblclick(panel: HTMLElement, id: number): void {
  press(panel, id, "click");
  press(panel, id, "click");
  press(panel, id, "dblclick");
}

/** Awaits in-flight operations until no new ones are queued (an error
 * handler may chain a refresh onto a failed mutation). */
export async function settle(explorer: Explorer): Promise<void> {
  let current;
  do {
    current = explorer.settled();
    await current;
  } while (current !== explorer.settled());
}
