import { PuzzleApi } from "./api";
import { mountApp } from "./app";

const root = document.getElementById("app");
if (root) {
  // same-origin service; serve this page via `lightslab serve --ui-dir`
  mountApp(root, new PuzzleApi(""));
}
