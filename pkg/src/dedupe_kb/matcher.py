"""Per-attribute evidence, Bayesian fusion, and the deduplication driver.

Each compared attribute yields a probability in [low, high]; missing
attributes contribute the neutral prior.  Probabilities are fused by
multiplying odds (naive Bayes), starting from the prior, and the fused
probability is thresholded into a match verdict.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from multiprocessing import get_context

from .blocking import build_index, find_candidates
from .cleaning import clean_record
from .comparators import Similarity, compare_values
from .errors import ContradictoryCertainty, SchemaMismatch
from .ingest import KnowledgeBase
from .model import (
    AttributeSpec,
    Link,
    LinkSet,
    MatchConfig,
    Record,
    canonical_pair,
)

#: Clamp bound for fused probabilities; keeps an exact 0 or 1 from one
#: attribute (Exact comparators produce them) from becoming an absorbing
#: state in the fold.
EPSILON = 1e-9


@dataclass(frozen=True)
class AttributeEvidence:
    """One attribute's contribution to a pair verdict.

    similarity is None when the attribute was missing on either side; the
    probability is then the neutral prior.
    """

    attribute: str
    similarity: Similarity | None
    probability: float


@dataclass(frozen=True)
class PairVerdict:
    pair: tuple[str, str]
    probability: float
    evidence: tuple[AttributeEvidence, ...]
    is_match: bool


def attribute_probability(sim: Similarity, spec: AttributeSpec) -> float:
    """Map a similarity onto [low, high] by linear interpolation."""
    return spec.low + sim * (spec.high - spec.low)


def combine_bayes(p: float, q: float) -> float:
    """Fuse two probabilities by multiplying their odds.

    Commutative and associative on (0, 1); 0.5 is the identity element.
    Raises ContradictoryCertainty on the undefined 0-versus-1 case; pipeline
    callers clamp inputs to [EPSILON, 1 - EPSILON] so it never fires there.
    """
    if {p, q} == {0.0, 1.0}:
        raise ContradictoryCertainty(f"cannot fuse certainties {p} and {q}")
    joint = p * q
    return joint / (joint + (1.0 - p) * (1.0 - q))


def _clamp(p: float) -> float:
    return min(max(p, EPSILON), 1.0 - EPSILON)


def compare_records(a: Record, b: Record, config: MatchConfig) -> PairVerdict:
    """Compare two cleaned records attribute by attribute and fuse the evidence.

    Symmetric in its record arguments; the fold result does not depend on
    attribute order.  Raises SchemaMismatch if either record carries an
    attribute the config does not declare.
    """
    known = config.attribute_names
    for record in (a, b):
        for name in record.values:
            if name not in known:
                raise SchemaMismatch(record.id, name)

    evidence = []
    probability = config.prior
    for spec in config.comparison_specs:
        sim = compare_values(
            spec.comparator, a.values.get(spec.name, []), b.values.get(spec.name, [])
        )
        if sim is None:
            attr_prob = config.prior
        else:
            attr_prob = attribute_probability(sim, spec)
        evidence.append(AttributeEvidence(spec.name, sim, attr_prob))
        probability = combine_bayes(probability, _clamp(attr_prob))

    return PairVerdict(
        pair=canonical_pair(a.id, b.id),
        probability=probability,
        evidence=tuple(evidence),
        is_match=probability >= config.threshold,
    )


@dataclass
class DedupRun:
    """Outcome of a deduplication pass, with counts for reporting."""

    links: LinkSet
    record_count: int
    candidate_pair_count: int


def _candidate_pair_universe(
    cleaned_kb: KnowledgeBase, index, config: MatchConfig
) -> list[tuple[str, str]]:
    pairs: set[tuple[str, str]] = set()
    for record in cleaned_kb.records.values():
        for candidate in find_candidates(index, record, config):
            pairs.add(canonical_pair(record.id, candidate))
    return sorted(pairs)


def _match_pairs(
    records: dict[str, Record], config: MatchConfig, pairs: list[tuple[str, str]]
) -> list[Link]:
    links = []
    for a, b in pairs:
        verdict = compare_records(records[a], records[b], config)
        if verdict.is_match:
            links.append(Link(a, b, verdict.probability))
    return links


_POOL_RECORDS: dict[str, Record] = {}
_POOL_CONFIG: MatchConfig | None = None


def _init_pool(records: dict[str, Record], config: MatchConfig) -> None:
    global _POOL_RECORDS, _POOL_CONFIG
    _POOL_RECORDS = records
    _POOL_CONFIG = config


def _match_chunk(pairs: list[tuple[str, str]]) -> list[Link]:
    return _match_pairs(_POOL_RECORDS, _POOL_CONFIG, pairs)


def _chunks(items: list, n: int) -> list[list]:
    size = max(1, -(-len(items) // n))
    return [items[i : i + size] for i in range(0, len(items), size)]


def dedupe_run(kb: KnowledgeBase, config: MatchConfig, jobs: int = 1) -> DedupRun:
    """Clean, index, block, compare, and threshold a whole knowledge base.

    With jobs > 1 the candidate pairs are partitioned across worker
    processes; the merged result is identical to the single-process run
    because pair verdicts are pure and the pair universe is sorted first.
    """
    cleaned = {rid: clean_record(r, config) for rid, r in kb.records.items()}
    cleaned_kb = KnowledgeBase(records=cleaned, schema=kb.schema)
    index = build_index(cleaned_kb, config)
    pairs = _candidate_pair_universe(cleaned_kb, index, config)

    if jobs <= 1 or len(pairs) < 2:
        matched = _match_pairs(cleaned, config, pairs)
    else:
        ctx = get_context()
        with ctx.Pool(jobs, initializer=_init_pool, initargs=(cleaned, config)) as pool:
            matched = list(
                itertools.chain.from_iterable(
                    pool.map(_match_chunk, _chunks(pairs, jobs))
                )
            )

    return DedupRun(
        links=LinkSet(matched),
        record_count=len(kb.records),
        candidate_pair_count=len(pairs),
    )


def deduplicate(kb: KnowledgeBase, config: MatchConfig, jobs: int = 1) -> LinkSet:
    """Discover the set of identity links within one knowledge base."""
    return dedupe_run(kb, config, jobs=jobs).links
