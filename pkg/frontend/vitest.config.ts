import { defineConfig } from "vitest/config";

export default defineConfig({
  test: {
    environment: "jsdom",
    include: ["tests/**/*.test.ts"],
    // The end-to-end test boots a live scoring server in a child process,
    // which needs more headroom than the default 5s.
    testTimeout: 60_000,
    hookTimeout: 60_000,
  },
});
