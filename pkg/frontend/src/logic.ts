/** Pure presentation helpers; no API state, no verdict recomputation. */

import type { CaseStatus, CaseSummary, Report } from "./types.js";

export const STATUS_ORDER: CaseStatus[] = [
  "NeedsReview",
  "GenuinelyUnderspecified",
  "ResolvedEntailment",
  "ResolvedContradiction",
  "AutoClassified",
];

export const STATUS_LABELS: Record<CaseStatus, string> = {
  AutoClassified: "auto",
  NeedsReview: "needs review",
  ResolvedEntailment: "resolved: entailment",
  ResolvedContradiction: "resolved: contradiction",
  GenuinelyUnderspecified: "underspecified",
};

export type StatusFilter = CaseStatus | "all";

/** NeedsReview first, then the remaining statuses, id ascending within each. */
export function sortCases(cases: CaseSummary[]): CaseSummary[] {
  return [...cases].sort((a, b) => {
    const sa = STATUS_ORDER.indexOf(a.status);
    const sb = STATUS_ORDER.indexOf(b.status);
    if (sa !== sb) return sa - sb;
    return a.id < b.id ? -1 : a.id > b.id ? 1 : 0;
  });
}

export function filterCases(cases: CaseSummary[], filter: StatusFilter): CaseSummary[] {
  if (filter === "all") return cases;
  return cases.filter((c) => c.status === filter);
}

export function badgeClass(status: CaseStatus): string {
  switch (status) {
    case "NeedsReview":
      return "badge badge-pending";
    case "ResolvedEntailment":
      return "badge badge-entailment";
    case "ResolvedContradiction":
      return "badge badge-contradiction";
    case "GenuinelyUnderspecified":
      return "badge badge-underspecified";
    default:
      return "badge badge-auto";
  }
}

export function verdictClass(verdict: string): string {
  switch (verdict) {
    case "Entailment":
      return "verdict verdict-entailment";
    case "Contradiction":
      return "verdict verdict-contradiction";
    case "PremiseInconsistent":
      return "verdict verdict-inconsistent";
    default:
      return "verdict verdict-neutral";
  }
}

/** Verdict counts straight from the report payload; zero when absent. */
export function verdictCounts(report: Report): Record<string, number> {
  const counts = report.aggregates.verdict_counts ?? {};
  return {
    Entailment: counts["Entailment"] ?? 0,
    Contradiction: counts["Contradiction"] ?? 0,
    Neutral: counts["Neutral"] ?? 0,
    PremiseInconsistent: counts["PremiseInconsistent"] ?? 0,
  };
}

export function formatWitness(witness: { bools: Record<string, boolean>; ints: Record<string, number> }): string {
  const parts: string[] = [];
  for (const key of Object.keys(witness.bools).sort()) {
    parts.push(`${key}=${witness.bools[key] ? "T" : "F"}`);
  }
  for (const key of Object.keys(witness.ints).sort()) {
    parts.push(`${key}=${witness.ints[key]}`);
  }
  return parts.join(", ");
}
