import "./style.css";
import { App } from "./app";
import { setApiBase } from "./api";

const base = import.meta.env.VITE_API_BASE as string | undefined;
if (base) {
  setApiBase(base);
}

const root = document.querySelector<HTMLElement>("#app");
if (!root) {
  throw new Error("missing #app mount point");
}
void new App(root).init();
