"""Formal contract entailment: three-way classification, minimal-axiom
abduction, evaluation harness, and the reviewer-loop service."""

from .entailment import ClassifiedCase, Verdict, classify
from .formulas import Formula, Model, desugar, evaluate, node_count
from .parser import parse, pretty

__all__ = [
    "ClassifiedCase",
    "Formula",
    "Model",
    "Verdict",
    "classify",
    "desugar",
    "evaluate",
    "node_count",
    "parse",
    "pretty",
]
