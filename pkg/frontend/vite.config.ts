import { defineConfig } from "vitest/config";

export default defineConfig({
  server: {
    // During development the API runs separately (`foresight serve`);
    // proxying keeps the app same-origin so no API base needs configuring.
    proxy: {
      "/ideas": "http://127.0.0.1:8000",
      "/simulate": "http://127.0.0.1:8000",
      "/portfolio": "http://127.0.0.1:8000",
      "/healthz": "http://127.0.0.1:8000",
    },
  },
  test: {
    environment: "jsdom",
    include: ["tests/**/*.test.ts"],
  },
});
