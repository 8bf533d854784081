/** Mirrors of the review service API payloads. */

export type CaseStatus =
  | "AutoClassified"
  | "NeedsReview"
  | "ResolvedEntailment"
  | "ResolvedContradiction"
  | "GenuinelyUnderspecified";

export interface CaseSummary {
  id: string;
  premise_text: string;
  hypothesis_text: string;
  gold_legal: string;
  status: CaseStatus;
  verdict: string;
  pending_count: number;
}

export interface PendingQuestion {
  target: string;
  axiom_set: string[];
  score: number;
  question: string;
}

export interface AxiomInfo {
  id: string;
  form: string;
  gloss: string;
  source: string;
}

export interface Witness {
  bools: Record<string, boolean>;
  ints: Record<string, number>;
}

export interface CaseDetail {
  id: string;
  premise_text: string;
  hypothesis_text: string;
  gold_legal: string;
  premise_forms: string[];
  hypothesis_form: string;
  status: CaseStatus;
  verdict: string;
  accepted_axiom_ids: string[];
  axiom_pool: AxiomInfo[];
  pending_questions: PendingQuestion[];
  witness_h: Witness | null;
  witness_not_h: Witness | null;
}

export interface Report {
  shift_matrix: Record<string, Record<string, number>>;
  confusion: Record<string, Record<string, number>>;
  premise_inconsistent: string[];
  per_case: Array<Record<string, unknown>>;
  aggregates: {
    verdict_counts?: Record<string, number>;
    status_counts?: Record<string, number>;
    entailment_to_neutral_shift: number;
    [key: string]: unknown;
  };
}
