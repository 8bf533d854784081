"""HTTP surface of the reviewer loop.

Thin translation layer: pydantic request/response models over the
ReviewService; all verdict logic lives in the core modules.
"""

from __future__ import annotations

from pathlib import Path

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel, Field

from .formulas import Model
from .parser import pretty
from .review import (
    ConflictingAnswer,
    NotPending,
    ReviewService,
    UnknownSolution,
)


class CaseSummary(BaseModel):
    id: str
    premise_text: str
    hypothesis_text: str
    gold_legal: str
    status: str
    verdict: str
    pending_count: int


class PendingQuestionModel(BaseModel):
    target: str
    axiom_set: list[str]
    score: int
    question: str


class AxiomModel(BaseModel):
    id: str
    form: str
    gloss: str
    source: str


class WitnessModel(BaseModel):
    bools: dict[str, bool]
    ints: dict[str, int]


class CaseDetail(BaseModel):
    id: str
    premise_text: str
    hypothesis_text: str
    gold_legal: str
    premise_forms: list[str]
    hypothesis_form: str
    status: str
    verdict: str
    accepted_axiom_ids: list[str]
    axiom_pool: list[AxiomModel]
    pending_questions: list[PendingQuestionModel]
    witness_h: WitnessModel | None = None
    witness_not_h: WitnessModel | None = None


class AnswerRequest(BaseModel):
    axiom_set: list[str] = Field(min_length=1)
    answer: str = Field(pattern="^(yes|no)$")
    reviewer: str


class HealthResponse(BaseModel):
    status: str
    cases: int


def _witness(model: Model | None) -> WitnessModel | None:
    if model is None:
        return None
    return WitnessModel(
        bools={pretty(atom): val for atom, val in sorted(model.bools.items(), key=lambda kv: pretty(kv[0]))},
        ints=dict(sorted(model.ints.items())),
    )


def _detail(service: ReviewService, case_id: str) -> CaseDetail:
    st = service.states[case_id]
    case = st.case
    neutral = st.status in ("NeedsReview", "GenuinelyUnderspecified")
    return CaseDetail(
        id=case.id,
        premise_text=case.premise_text,
        hypothesis_text=case.hypothesis_text,
        gold_legal=case.gold_legal,
        premise_forms=[pretty(f) for f in case.premise_forms],
        hypothesis_form=pretty(case.hypothesis_form),
        status=st.status,
        verdict=st.effective_verdict().value,
        accepted_axiom_ids=list(st.accepted),
        axiom_pool=[
            AxiomModel(id=a.id, form=pretty(a.formula), gloss=a.gloss, source=a.source)
            for a in case.axiom_pool
        ],
        pending_questions=[
            PendingQuestionModel(
                target=q.target.value,
                axiom_set=list(q.axiom_ids),
                score=q.score,
                question=q.question,
            )
            for q in st.pending
        ],
        witness_h=_witness(st.classified.witness_h) if neutral else None,
        witness_not_h=_witness(st.classified.witness_not_h) if neutral else None,
    )


def create_app(service: ReviewService, static_dir: str | Path | None = None) -> FastAPI:
    app = FastAPI(title="contract entailment review")

    @app.exception_handler(RequestValidationError)
    async def on_validation_error(request: Request, exc: RequestValidationError):
        return JSONResponse(status_code=400, content={"detail": exc.errors()})

    @app.get("/api/health", response_model=HealthResponse)
    def health():
        return HealthResponse(status="ok", cases=len(service.cases))

    @app.get("/api/cases", response_model=list[CaseSummary])
    def list_cases():
        out = []
        for cid in sorted(service.states):
            st = service.states[cid]
            out.append(
                CaseSummary(
                    id=cid,
                    premise_text=st.case.premise_text,
                    hypothesis_text=st.case.hypothesis_text,
                    gold_legal=st.case.gold_legal,
                    status=st.status,
                    verdict=st.effective_verdict().value,
                    pending_count=len(st.pending),
                )
            )
        return out

    @app.get("/api/cases/{case_id}", response_model=CaseDetail)
    def get_case(case_id: str):
        if case_id not in service.states:
            return JSONResponse(status_code=404, content={"detail": f"unknown case {case_id!r}"})
        return _detail(service, case_id)

    @app.post("/api/cases/{case_id}/answers", response_model=CaseDetail)
    def post_answer(case_id: str, body: AnswerRequest):
        if case_id not in service.states:
            return JSONResponse(status_code=404, content={"detail": f"unknown case {case_id!r}"})
        try:
            service.answer(case_id, body.axiom_set, body.answer, body.reviewer)
        except (NotPending, ConflictingAnswer) as exc:
            return JSONResponse(status_code=409, content={"detail": str(exc)})
        except UnknownSolution as exc:
            return JSONResponse(status_code=400, content={"detail": str(exc)})
        return _detail(service, case_id)

    @app.get("/api/report")
    def report():
        rep = service.report()
        return {
            "shift_matrix": rep.shift_matrix,
            "confusion": rep.confusion,
            "premise_inconsistent": rep.premise_inconsistent,
            "per_case": rep.per_case,
            "aggregates": rep.aggregates,
        }

    if static_dir is not None and Path(static_dir).is_dir():
        app.mount("/", StaticFiles(directory=str(static_dir), html=True), name="ui")

    return app


def default_static_dir() -> Path | None:
    """Built review UI bundle, if the frontend has been compiled."""
    root = Path(__file__).resolve().parent.parent.parent
    dist = root / "frontend" / "dist"
    return dist if dist.is_dir() else None
