// Mutation scripts: the history panel exports walks in the same comma
// format the command line's mutate subcommand takes, and imports them back.

import type { HistoryEntry } from "./api";

export function exportScript(entries: HistoryEntry[]): string {
  return entries.map((entry) => entry.k).join(",");
}

export function parseScript(text: string): number[] {
  const parts = text
    .split(",")
    .map((part) => part.trim())
    .filter((part) => part.length > 0);
  if (parts.length === 0) {
    throw new Error("empty mutation script");
  }
  return parts.map((part) => {
    const k = Number(part);
    if (!Number.isInteger(k) || k < 1) {
      throw new Error(`bad direction ${JSON.stringify(part)}`);
    }
    return k;
  });
}
