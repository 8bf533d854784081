import { ApiError, getCase, getReport, listCases, postAnswer } from "./api.js";
import {
  STATUS_LABELS,
  STATUS_ORDER,
  StatusFilter,
  badgeClass,
  filterCases,
  formatWitness,
  sortCases,
  verdictClass,
  verdictCounts,
} from "./logic.js";
import type { CaseDetail, CaseSummary } from "./types.js";

let cases: CaseSummary[] = [];
let filter: StatusFilter = "all";
let selectedId: string | null = null;
let inFlight = false;

const $ = (id: string) => document.getElementById(id)!;

function el(tag: string, className?: string, text?: string): HTMLElement {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

// -- error banner ----------------------------------------------------------

function showBanner(message: string) {
  const banner = $("banner");
  banner.textContent = "";
  banner.appendChild(el("span", "", message));
  const retry = el("button", "retry", "retry") as HTMLButtonElement;
  retry.onclick = () => {
    banner.classList.add("hidden");
    void refreshAll();
  };
  banner.appendChild(retry);
  banner.classList.remove("hidden");
}

function clearBanner() {
  $("banner").classList.add("hidden");
}

// -- case list -------------------------------------------------------------

function renderFilterBar() {
  const bar = $("filters");
  bar.textContent = "";
  const options: StatusFilter[] = ["all", ...STATUS_ORDER];
  for (const opt of options) {
    const btn = el(
      "button",
      `filter${opt === filter ? " active" : ""}`,
      opt === "all" ? "all" : STATUS_LABELS[opt],
    ) as HTMLButtonElement;
    btn.onclick = () => {
      filter = opt;
      renderFilterBar();
      renderCaseList();
    };
    bar.appendChild(btn);
  }
}

function renderCaseList() {
  const list = $("case-list");
  list.textContent = "";
  const visible = filterCases(sortCases(cases), filter);
  if (visible.length === 0) {
    list.appendChild(el("p", "empty", "no cases match this filter"));
    return;
  }
  for (const c of visible) {
    const row = el("div", `case-row${c.id === selectedId ? " selected" : ""}`);
    const head = el("div", "case-row-head");
    head.appendChild(el("span", "case-id", c.id));
    head.appendChild(el("span", badgeClass(c.status), STATUS_LABELS[c.status]));
    head.appendChild(el("span", verdictClass(c.verdict), c.verdict));
    row.appendChild(head);
    row.appendChild(el("div", "case-hyp", c.hypothesis_text));
    row.onclick = () => void selectCase(c.id);
    list.appendChild(row);
  }
}

// -- case detail -----------------------------------------------------------

function renderDetail(detail: CaseDetail | null) {
  const pane = $("detail");
  pane.textContent = "";
  if (detail === null) {
    pane.appendChild(el("p", "empty", "select a case"));
    return;
  }
  const head = el("div", "detail-head");
  head.appendChild(el("h2", "", detail.id));
  head.appendChild(el("span", badgeClass(detail.status), STATUS_LABELS[detail.status]));
  head.appendChild(el("span", verdictClass(detail.verdict), detail.verdict));
  pane.appendChild(head);

  const premise = el("section", "block");
  premise.appendChild(el("h3", "", "Premise"));
  premise.appendChild(el("p", "", detail.premise_text));
  for (const form of detail.premise_forms) {
    premise.appendChild(el("pre", "formula", form));
  }
  pane.appendChild(premise);

  const hyp = el("section", "block");
  hyp.appendChild(el("h3", "", `Hypothesis (gold legal: ${detail.gold_legal})`));
  hyp.appendChild(el("p", "", detail.hypothesis_text));
  hyp.appendChild(el("pre", "formula", detail.hypothesis_form));
  pane.appendChild(hyp);

  if (detail.witness_h && detail.witness_not_h) {
    const wit = el("section", "block");
    wit.appendChild(el("h3", "", "Neutral witnesses"));
    wit.appendChild(el("pre", "formula", `P & H:  ${formatWitness(detail.witness_h)}`));
    wit.appendChild(el("pre", "formula", `P & !H: ${formatWitness(detail.witness_not_h)}`));
    pane.appendChild(wit);
  }

  if (detail.accepted_axiom_ids.length > 0) {
    const acc = el("section", "block");
    acc.appendChild(el("h3", "", "Accepted axioms"));
    for (const id of detail.accepted_axiom_ids) {
      const ax = detail.axiom_pool.find((a) => a.id === id);
      acc.appendChild(el("pre", "formula", ax ? `[${ax.id}] ${ax.form}` : id));
    }
    pane.appendChild(acc);
  }

  const inline = el("p", "inline-error hidden");
  inline.id = "inline-error";

  if (detail.pending_questions.length > 0) {
    const qs = el("section", "block");
    qs.appendChild(el("h3", "", "Pending questions"));
    for (const q of detail.pending_questions) {
      const card = el("div", "question");
      card.appendChild(el("div", "question-target", `target: ${q.target} · score ${q.score}`));
      card.appendChild(el("pre", "question-text", q.question));
      const actions = el("div", "actions");
      const yes = el("button", "yes", "yes") as HTMLButtonElement;
      const no = el("button", "no", "no") as HTMLButtonElement;
      yes.onclick = () => void submitAnswer(detail.id, q.axiom_set, "yes");
      no.onclick = () => void submitAnswer(detail.id, q.axiom_set, "no");
      actions.appendChild(yes);
      actions.appendChild(no);
      card.appendChild(actions);
      qs.appendChild(card);
    }
    pane.appendChild(qs);
  }
  pane.appendChild(inline);
}

function showInlineError(message: string) {
  const node = document.getElementById("inline-error");
  if (node) {
    node.textContent = message;
    node.classList.remove("hidden");
  } else {
    showBanner(message);
  }
}

// -- report panel ----------------------------------------------------------

function renderReport(counts: Record<string, number>, shift: number) {
  const panel = $("report");
  panel.textContent = "";
  panel.appendChild(el("h3", "", "Verdicts"));
  for (const key of ["Entailment", "Contradiction", "Neutral", "PremiseInconsistent"]) {
    const row = el("div", "report-row");
    row.appendChild(el("span", "", key));
    const count = el("span", "count", String(counts[key]));
    count.id = `count-${key}`;
    row.appendChild(count);
    panel.appendChild(row);
  }
  const shiftRow = el("div", "report-row");
  shiftRow.appendChild(el("span", "", "Entailment→Neutral shift"));
  shiftRow.appendChild(el("span", "count", shift.toFixed(2)));
  panel.appendChild(shiftRow);
}

// -- data flow -------------------------------------------------------------

async function refreshReport() {
  const report = await getReport();
  renderReport(verdictCounts(report), report.aggregates.entailment_to_neutral_shift);
}

async function selectCase(id: string) {
  selectedId = id;
  renderCaseList();
  try {
    renderDetail(await getCase(id));
    clearBanner();
  } catch (err) {
    showBanner(`failed to load case ${id}: ${String(err)}`);
  }
}

async function submitAnswer(id: string, axiomSet: string[], answer: "yes" | "no") {
  if (inFlight) return; // at most one mutation in flight
  inFlight = true;
  try {
    await postAnswer(id, axiomSet, answer, "reviewer");
    await refreshAll();
  } catch (err) {
    if (err instanceof ApiError && err.status === 409) {
      showInlineError(`conflict: ${err.message}`);
      await refreshAll();
    } else if (err instanceof ApiError) {
      showInlineError(`rejected (${err.status}): ${err.message}`);
    } else {
      showBanner(`request failed: ${String(err)}`);
    }
  } finally {
    inFlight = false;
  }
}

async function refreshAll() {
  try {
    cases = await listCases();
    renderFilterBar();
    renderCaseList();
    await refreshReport();
    if (selectedId !== null) {
      renderDetail(await getCase(selectedId));
    }
    clearBanner();
  } catch (err) {
    showBanner(`service unreachable: ${String(err)}`);
  }
}

document.addEventListener("DOMContentLoaded", () => {
  void refreshAll();
});
