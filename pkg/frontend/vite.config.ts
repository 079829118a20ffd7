import { defineConfig } from "vitest/config";

export default defineConfig({
  build: {
    outDir: "dist",
    sourcemap: false,
  },
  server: {
    proxy: {
      // `npm run dev` against a locally running backend
      "/api": "http://127.0.0.1:8642",
    },
  },
  test: {
    environment: "jsdom",
  },
});
