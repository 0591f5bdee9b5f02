// Fetch interception for UI tests: every request the app makes is recorded
// and served from canned payloads, so a test can both script the server and
// prove which numbers crossed the wire.

import { vi } from "vitest";

export interface Recorded {
  method: string;
  path: string;
  body: unknown;
}

interface Stub {
  status: number;
  payload: unknown;
}

type Responder = Stub | ((body: unknown) => Stub);

export class MockServer {
  readonly requests: Recorded[] = [];
  private readonly routes = new Map<string, Responder>();

  on(method: string, path: string, payload: unknown, status = 200): this {
    this.routes.set(`${method} ${path}`, { status, payload });
    return this;
  }

  onCall(method: string, path: string, responder: (body: unknown) => Stub): this {
    this.routes.set(`${method} ${path}`, responder);
    return this;
  }

  install(): void {
    vi.stubGlobal("fetch", async (input: RequestInfo | URL, init?: RequestInit) => {
      const path = String(input);
      const method = init?.method ?? "GET";
      const body =
        typeof init?.body === "string" ? JSON.parse(init.body) : undefined;
      this.requests.push({ method, path, body });
      const responder = this.routes.get(`${method} ${path}`);
      if (!responder) {
        throw new Error(`no mock route for ${method} ${path}`);
      }
      const stub = typeof responder === "function" ? responder(body) : responder;
      return new Response(JSON.stringify(stub.payload), {
        status: stub.status,
        headers: { "Content-Type": "application/json" },
      });
    });
  }

  sent(method: string, path: string): Recorded[] {
    return this.requests.filter(
      (request) => request.method === method && request.path === path,
    );
  }
}

/** Every number appearing anywhere in a JSON payload. */
export function collectNumbers(value: unknown, into = new Set<number>()): Set<number> {
  if (typeof value === "number") {
    into.add(value);
  } else if (Array.isArray(value)) {
    for (const item of value) {
      collectNumbers(item, into);
    }
  } else if (value !== null && typeof value === "object") {
    for (const item of Object.values(value)) {
      collectNumbers(item, into);
    }
  }
  return into;
}

/** Raw values carried by rendered [data-value] nodes. */
export function renderedValues(root: HTMLElement): number[] {
  return [...root.querySelectorAll<HTMLElement>("[data-value]")].map((node) =>
    Number(node.dataset.value),
  );
}

export function mount(): HTMLElement {
  const root = document.createElement("div");
  document.body.appendChild(root);
  return root;
}
