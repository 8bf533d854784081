import { describe, expect, it } from "vitest";

import {
  badgeClass,
  filterCases,
  formatWitness,
  sortCases,
  verdictClass,
  verdictCounts,
} from "./logic.js";
import type { CaseSummary, Report } from "./types.js";

function summary(id: string, status: CaseSummary["status"], verdict = "Neutral"): CaseSummary {
  return {
    id,
    premise_text: "",
    hypothesis_text: "",
    gold_legal: "neutral",
    status,
    verdict,
    pending_count: 0,
  };
}

describe("sortCases", () => {
  it("puts NeedsReview first, then id ascending", () => {
    const sorted = sortCases([
      summary("c02", "AutoClassified"),
      summary("c10", "NeedsReview"),
      summary("c01", "ResolvedEntailment"),
      summary("c03", "NeedsReview"),
    ]);
    expect(sorted.map((c) => c.id)).toEqual(["c03", "c10", "c01", "c02"]);
  });

  it("does not mutate the input", () => {
    const input = [summary("b", "AutoClassified"), summary("a", "NeedsReview")];
    sortCases(input);
    expect(input[0].id).toBe("b");
  });
});

describe("filterCases", () => {
  const cases = [
    summary("c01", "NeedsReview"),
    summary("c02", "AutoClassified"),
    summary("c03", "GenuinelyUnderspecified"),
  ];

  it("returns everything for 'all'", () => {
    expect(filterCases(cases, "all")).toHaveLength(3);
  });

  it("keeps only the requested status", () => {
    expect(filterCases(cases, "NeedsReview").map((c) => c.id)).toEqual(["c01"]);
  });
});

describe("badges", () => {
  it("maps statuses to distinct badge classes", () => {
    expect(badgeClass("NeedsReview")).toContain("pending");
    expect(badgeClass("ResolvedEntailment")).toContain("entailment");
    expect(badgeClass("ResolvedContradiction")).toContain("contradiction");
    expect(badgeClass("GenuinelyUnderspecified")).toContain("underspecified");
    expect(badgeClass("AutoClassified")).toContain("auto");
  });

  it("maps verdicts to classes", () => {
    expect(verdictClass("Entailment")).toContain("entailment");
    expect(verdictClass("Neutral")).toContain("neutral");
    expect(verdictClass("PremiseInconsistent")).toContain("inconsistent");
  });
});

describe("verdictCounts", () => {
  it("reads counts from the report payload", () => {
    const report = {
      shift_matrix: {},
      confusion: {},
      premise_inconsistent: [],
      per_case: [],
      aggregates: {
        entailment_to_neutral_shift: 0.4,
        verdict_counts: { Entailment: 6, Contradiction: 3, Neutral: 10, PremiseInconsistent: 1 },
      },
    } as Report;
    expect(verdictCounts(report)).toEqual({
      Entailment: 6,
      Contradiction: 3,
      Neutral: 10,
      PremiseInconsistent: 1,
    });
  });

  it("defaults to zeros when the field is missing", () => {
    const report = {
      shift_matrix: {},
      confusion: {},
      premise_inconsistent: [],
      per_case: [],
      aggregates: { entailment_to_neutral_shift: 0 },
    } as Report;
    expect(verdictCounts(report).Neutral).toBe(0);
  });
});

describe("formatWitness", () => {
  it("renders booleans then integers, sorted", () => {
    const text = formatWitness({
      bools: { "ob_return(docs)": true, "ob_destroy(docs)": false },
      ints: { days: 12 },
    });
    expect(text).toBe("ob_destroy(docs)=F, ob_return(docs)=T, days=12");
  });
});
