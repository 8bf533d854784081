"""Regenerate the bundled toy corpus and predictor files.

Run from the repo root:  python3 scripts/make_corpus.py
Prints the computed verdict per case so drift is visible on rerun.
"""

import json
from pathlib import Path

DATA = Path(__file__).resolve().parent.parent / "src" / "contractlogic" / "data"


def ax(id, form, gloss, source="context"):
    return {"id": id, "form": form, "gloss": gloss, "source": source}


def case(id, ptext, pforms, htext, hform, gold, pool=()):
    return {
        "id": id,
        "premise_text": ptext,
        "premise_forms": pforms,
        "hypothesis_text": htext,
        "hypothesis_form": hform,
        "gold_legal": gold,
        "axiom_pool": list(pool),
    }


CASES = [
    case(
        "c01",
        "All shared information is confidential.",
        ["confidential(info)"],
        "The shared information is confidential.",
        "confidential(info)",
        "entailment",
    ),
    case(
        "c02",
        "The receiving party shall not share information with third parties.",
        ["!perm_share(third_party)"],
        "The receiving party may share information with third parties.",
        "perm_share(third_party)",
        "contradiction",
    ),
    case(
        "c03",
        "Upon termination the receiving party shall return all documents.",
        ["ob_return(docs)"],
        "Upon termination the receiving party shall destroy all documents.",
        "ob_destroy(docs)",
        "entailment",
        [
            ax(
                "a1",
                "ob_return(docs) -> ob_destroy(docs)",
                "A duty to return materials includes destroying retained copies.",
                "background-law",
            ),
            ax("a2", "ob_destroy(docs)", "The exhibit separately requires destruction of documents."),
        ],
    ),
    case(
        "c04",
        "The agreement terminates within 30 days.",
        ["[term_days <= 30]"],
        "The agreement terminates within 60 days.",
        "[term_days <= 60]",
        "entailment",
    ),
    case(
        "c05",
        "The vendor must notify of any breach, and notice is due within 30 days.",
        ["ob_notify(breach)", "ob_notify(breach) -> [notify_days <= 30]"],
        "Notice of breach is given within 45 days.",
        "[notify_days <= 45]",
        "entailment",
    ),
    case(
        "c06",
        "The agreement terminates within 90 days.",
        ["[term_days <= 90]"],
        "The agreement terminates within 30 days.",
        "[term_days <= 30]",
        "entailment",
        [
            ax("a1", "[term_days <= 30]", "The schedule fixes a 30-day term for this engagement."),
            ax("a2", "[term_days >= 60]", "The renewal rider extends the term to at least 60 days."),
        ],
    ),
    case(
        "c07",
        "The receiving party may share information with affiliates.",
        ["perm_share(affiliate)"],
        "The receiving party may share information with third parties.",
        "perm_share(third_party)",
        "entailment",
        [
            ax(
                "a1",
                "perm_share(affiliate) -> perm_share(third_party)",
                "Affiliates count as third parties under the definitions clause.",
                "background-law",
            ),
            ax(
                "a2",
                "!perm_share(third_party)",
                "The exclusivity clause bars sharing with any third party.",
            ),
        ],
    ),
    case(
        "c08",
        "The pricing terms are confidential. The pricing terms are not confidential.",
        ["confidential(terms)", "!confidential(terms)"],
        "The pricing terms may be published.",
        "perm_publish(terms)",
        "neutral",
    ),
    case(
        "c09",
        "The tenant shall insure the premises.",
        ["ob_insure(premises)"],
        "The tenant shall indemnify the partner.",
        "ob_indemnify(partner)",
        "entailment",
    ),
    case(
        "c10",
        "The contractor warrants the deliverables.",
        ["warrants(deliverables)"],
        "The contractor supports the deliverables after delivery.",
        "ob_support(deliverables)",
        "neutral",
        [
            ax("a1", "!warrants(deliverables)", "The disclaimer voids all warranties."),
            ax("a2", "insured(contractor)", "The contractor carries liability insurance."),
        ],
    ),
    case(
        "c11",
        "Delivery is due within 10 days.",
        ["[deliver_days <= 10]"],
        "Delivery occurs no earlier than day 20.",
        "[deliver_days >= 20]",
        "contradiction",
    ),
    case(
        "c12",
        "The customer may audit the vendor.",
        ["ob_audit(vendor)"],
        "The vendor must file an audit report.",
        "ob_report(vendor)",
        "entailment",
        [
            ax(
                "a1",
                "ob_audit(vendor) -> keeps_records(vendor)",
                "An audit obligation presumes auditable records are kept.",
                "background-law",
            ),
            ax(
                "a2",
                "keeps_records(vendor) -> ob_report(vendor)",
                "Record-keeping vendors must file reports under the compliance annex.",
            ),
        ],
    ),
    case(
        "c13",
        "The receiving party shall return originals and destroy copies.",
        ["ob_return(docs) & ob_destroy(copies)"],
        "The receiving party shall return originals.",
        "ob_return(docs)",
        "entailment",
    ),
    case(
        "c14",
        "Confidential information shall not be disclosed, and the information is confidential.",
        ["ob_keep_confidential(info) -> !perm_disclose(info)", "ob_keep_confidential(info)"],
        "The information may be disclosed.",
        "perm_disclose(info)",
        "contradiction",
    ),
    case(
        "c15",
        "The agreement is governed by New York law.",
        ["governing_law(state_ny)"],
        "A breach may be cured within 30 days.",
        "[cure_days <= 30]",
        "entailment",
        [
            ax(
                "a1",
                "[cure_days <= 30]",
                "Governing-law statute provides a standard 30-day cure period.",
                "background-law",
            )
        ],
    ),
    case(
        "c16",
        "On breach the vendor must cure, and the vendor is in breach.",
        ["breach(vendor) -> ob_cure(vendor)", "breach(vendor)"],
        "The vendor must cure.",
        "ob_cure(vendor)",
        "entailment",
    ),
    case(
        "c17",
        "Data may be used internally.",
        ["perm_use(data_internal)"],
        "Data may be used externally.",
        "perm_use(data_external)",
        "contradiction",
        [
            ax(
                "a1",
                "!perm_use(data_external)",
                "The permitted-use list is exhaustive; unlisted uses are barred.",
            )
        ],
    ),
    case(
        "c18",
        "Invoices, once issued, are payable within 60 days.",
        ["ob_pay(invoice) -> [pay_days <= 60]"],
        "Payment is made within 60 days.",
        "[pay_days <= 60]",
        "entailment",
        [
            ax("a1", "ob_pay(invoice)", "An invoice was issued and is payable.", "context"),
        ],
    ),
    case(
        "c19",
        "Termination requires at least 30 days notice.",
        ["[notice_days >= 30]"],
        "Termination requires at least 10 days notice.",
        "[notice_days >= 10]",
        "entailment",
    ),
    case(
        "c20",
        "The contract is assigned to the successor.",
        ["assigns(contract_a)"],
        "The successor is bound by the contract.",
        "binds(successor)",
        "entailment",
        [
            ax(
                "a1",
                "assigns(contract_a) -> binds(successor)",
                "Assignment binds successors under standard contract law.",
                "background-law",
            )
        ],
    ),
]


def main():
    from contractlogic.entailment import classify
    from contractlogic.parser import parse

    DATA.mkdir(parents=True, exist_ok=True)
    with open(DATA / "toy_corpus.jsonl", "w", encoding="utf-8") as fh:
        for c in CASES:
            fh.write(json.dumps(c, sort_keys=True) + "\n")

    verdicts = {}
    for c in CASES:
        cc = classify([parse(p) for p in c["premise_forms"]], parse(c["hypothesis_form"]))
        verdicts[c["id"]] = cc.verdict.value
        print(c["id"], cc.verdict.value)

    with open(DATA / "pred_all_entailment.jsonl", "w", encoding="utf-8") as fh:
        for c in CASES:
            fh.write(
                json.dumps(
                    {"id": c["id"], "predicted": "entailment", "claims_formal": False},
                    sort_keys=True,
                )
                + "\n"
            )

    with open(DATA / "pred_echo.jsonl", "w", encoding="utf-8") as fh:
        for c in CASES:
            v = verdicts[c["id"]]
            predicted = v.lower() if v != "PremiseInconsistent" else "neutral"
            fh.write(
                json.dumps(
                    {"id": c["id"], "predicted": predicted, "claims_formal": True}, sort_keys=True
                )
                + "\n"
            )


if __name__ == "__main__":
    main()
