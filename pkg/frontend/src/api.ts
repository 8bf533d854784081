import type { CaseDetail, CaseSummary, Report } from "./types.js";

export class ApiError extends Error {
  constructor(public status: number, detail: string) {
    super(detail);
  }
}

async function request<T>(path: string, init?: RequestInit): Promise<T> {
  const res = await fetch(path, init);
  if (!res.ok) {
    let detail = `${res.status}`;
    try {
      const body = await res.json();
      if (body && body.detail) detail = typeof body.detail === "string" ? body.detail : JSON.stringify(body.detail);
    } catch {
      // non-JSON error body; keep the status text
    }
    throw new ApiError(res.status, detail);
  }
  return (await res.json()) as T;
}

export function listCases(): Promise<CaseSummary[]> {
  return request<CaseSummary[]>("/api/cases");
}

export function getCase(id: string): Promise<CaseDetail> {
  return request<CaseDetail>(`/api/cases/${encodeURIComponent(id)}`);
}

export function getReport(): Promise<Report> {
  return request<Report>("/api/report");
}

export function postAnswer(
  id: string,
  axiomSet: string[],
  answer: "yes" | "no",
  reviewer: string,
): Promise<CaseDetail> {
  return request<CaseDetail>(`/api/cases/${encodeURIComponent(id)}/answers`, {
    method: "POST",
    headers: { "Content-Type": "application/json" },
    body: JSON.stringify({ axiom_set: axiomSet, answer, reviewer }),
  });
}
