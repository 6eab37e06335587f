/// <reference types="vitest" />
import { defineConfig } from "vite";

export default defineConfig({
  server: {
    proxy: {
      "/session": "http://127.0.0.1:8000",
      "/catalog": "http://127.0.0.1:8000",
    },
  },
  build: { outDir: "dist" },
  test: {
    environment: "jsdom",
    include: ["tests/**/*.test.ts"],
  },
});
