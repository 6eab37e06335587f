import { App } from "./app";
import "./style.css";

const root = document.getElementById("root");
if (!root) throw new Error("missing #root element");

const app = new App(root);

const controls = document.getElementById("controls");
if (controls) {
  for (const type of ["A2", "A3", "A4"]) {
    const button = document.createElement("button");
    button.textContent = `new ${type}`;
    button.addEventListener("click", () => {
      void app.newSession(type);
    });
    controls.appendChild(button);
  }
}

const params = new URLSearchParams(window.location.search);
const sid = params.get("session");
if (sid !== null) {
  void app.loadSession(sid); // empty or stale id shows the error banner
} else {
  void app.newSession("A3");
}
