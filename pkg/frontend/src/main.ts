/**
 * Browser entry point. The scoring service origin can be overridden with
 * `?api=http://host:port`; by default requests go to the page's own origin.
 */

import { createApp } from "./app.js";

const root = document.getElementById("app");
if (root === null) {
  throw new Error("missing #app mount point");
}
const baseUrl = new URLSearchParams(window.location.search).get("api") ?? "";
createApp(root, { baseUrl });
