import { ApiClient } from "./api";
import { Elements, Explorer } from "./state";
import "./style.css";

function el(id: string): HTMLElement {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node;
}

export function boot(root: Document): Explorer {
  const els: Elements = {
    cluster: el("cluster-quiver"),
    gamma: el("gamma-quiver"),
    presentation: el("presentation"),
    history: el("history"),
    status: el("status"),
    toasts: el("toasts"),
  };
  const explorer = new Explorer(new ApiClient(""), els);
  const form = el("quiver-form") as HTMLFormElement;
  const input = el("quiver-input") as HTMLInputElement;
  form.addEventListener("submit", (ev) => {
    ev.preventDefault();
    void explorer.load(input.value.trim());
  });
  void explorer.load(input.value.trim());
  return explorer;
}

if (typeof document !== "undefined" && document.getElementById("quiver-form")) {
  boot(document);
}
