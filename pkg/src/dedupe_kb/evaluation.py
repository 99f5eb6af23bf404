"""Scoring a produced link set against ground truth.

Membership is decided on canonical pairs only; link probabilities are
ignored.  True negatives are never computed: the non-pair universe is
quadratic and contributes nothing to precision, recall, or F-measure.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import SchemaViolation
from .model import LinkSet


@dataclass(frozen=True)
class ConfusionCounts:
    tp: int
    fp: int
    fn: int

    def __post_init__(self):
        if min(self.tp, self.fp, self.fn) < 0:
            raise SchemaViolation("counts", "confusion counts must be non-negative")


def confusion_counts(found: LinkSet, truth: LinkSet) -> ConfusionCounts:
    found_pairs = found.pairs()
    truth_pairs = truth.pairs()
    return ConfusionCounts(
        tp=len(found_pairs & truth_pairs),
        fp=len(found_pairs - truth_pairs),
        fn=len(truth_pairs - found_pairs),
    )


def precision(c: ConfusionCounts) -> float:
    """tp / (tp + fp); vacuously 1.0 when nothing was asserted."""
    denominator = c.tp + c.fp
    return c.tp / denominator if denominator else 1.0


def recall(c: ConfusionCounts) -> float:
    """tp / (tp + fn); vacuously 1.0 when the truth set is empty."""
    denominator = c.tp + c.fn
    return c.tp / denominator if denominator else 1.0


def f_measure(p: float, r: float) -> float:
    """Harmonic mean of precision and recall; 0.0 when both are zero."""
    return 2.0 * p * r / (p + r) if p + r else 0.0


@dataclass(frozen=True)
class EvaluationReport:
    counts: ConfusionCounts
    precision: float
    recall: float
    f_measure: float

    @classmethod
    def from_counts(cls, counts: ConfusionCounts) -> "EvaluationReport":
        p = precision(counts)
        r = recall(counts)
        return cls(counts=counts, precision=p, recall=r, f_measure=f_measure(p, r))

    def to_dict(self) -> dict:
        return {
            "tp": self.counts.tp,
            "fp": self.counts.fp,
            "fn": self.counts.fn,
            "precision": self.precision,
            "recall": self.recall,
            "f_measure": self.f_measure,
        }


def evaluate(found: LinkSet, truth: LinkSet) -> EvaluationReport:
    """Score found links against truth links."""
    return EvaluationReport.from_counts(confusion_counts(found, truth))
