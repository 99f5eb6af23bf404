"""Candidate generation via an inverted token index over searchable attributes.

Stands in for a full-text query engine: candidates are ranked by raw
shared-token count, which is deterministic and needs no scoring library.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass

from .model import MatchConfig, Record

# Split on Unicode whitespace and punctuation (underscore included);
# single-character fragments are noise and are dropped.
_TOKEN_SPLIT = re.compile(r"[\W_]+", re.UNICODE)
_MIN_TOKEN_LEN = 2


def tokenize(s: str) -> list[str]:
    """Split a cleaned string into tokens, preserving order and repeats."""
    return [t for t in _TOKEN_SPLIT.split(s) if len(t) >= _MIN_TOKEN_LEN]


@dataclass
class InvertedIndex:
    """Token postings over a knowledge base.

    Every record id appears in doc_tokens (with an empty multiset when all
    its searchable fields are missing); postings only carry tokens that
    occur in at least one record.  Immutable once built; concurrent lookups
    are safe.
    """

    postings: dict[str, set[str]]
    doc_tokens: dict[str, Counter]
    searchable: list[str]


def _record_tokens(r: Record, searchable: list[str]) -> list[str]:
    tokens: list[str] = []
    for attr in searchable:
        for value in r.values.get(attr, []):
            tokens.extend(tokenize(value))
    return tokens


def build_index(kb, config: MatchConfig) -> InvertedIndex:
    """Index every searchable attribute of every (cleaned) record."""
    searchable = [a.name for a in config.attributes if a.searchable and not a.is_id]
    postings: dict[str, set[str]] = {}
    doc_tokens: dict[str, Counter] = {}
    for record in kb.records.values():
        tokens = _record_tokens(record, searchable)
        doc_tokens[record.id] = Counter(tokens)
        for token in set(tokens):
            postings.setdefault(token, set()).add(record.id)
    return InvertedIndex(postings=postings, doc_tokens=doc_tokens, searchable=searchable)


def find_candidates(index: InvertedIndex, r: Record, config: MatchConfig) -> list[str]:
    """Record ids sharing at least min_shared_tokens distinct tokens with ``r``.

    Ranked by descending shared-token count, ties broken by ascending id,
    truncated to max_candidates.  ``r`` itself is never a candidate; ``r``
    may be a record outside the index as long as it is schema-compatible.
    """
    query_tokens = set(_record_tokens(r, index.searchable))
    overlap: dict[str, int] = {}
    for token in query_tokens:
        for rid in index.postings.get(token, ()):
            overlap[rid] = overlap.get(rid, 0) + 1
    overlap.pop(r.id, None)
    candidates = [rid for rid, n in overlap.items() if n >= config.min_shared_tokens]
    candidates.sort(key=lambda rid: (-overlap[rid], rid))
    return candidates[: config.max_candidates]
