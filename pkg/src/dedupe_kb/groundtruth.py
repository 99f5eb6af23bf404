"""Ground-truth construction from expert-labelled duplicate groups.

Groups are shuffled with a seeded generator and split in half.  Groups in
the first half keep all their members and contribute every within-group
pair as a truth link; groups in the second half keep one randomly chosen
member and contribute no links, so those records are known uniques.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .errors import DedupeError, DuplicateId, GroupTooSmall, UnknownId
from .ingest import KnowledgeBase
from .model import LinkSet, Record


@dataclass(frozen=True)
class DuplicateGroup:
    """Ids of listings an expert marked as duplicates of each other."""

    member_ids: tuple[str, ...]


def load_groups(path) -> list[DuplicateGroup]:
    """Parse a groups file: one group per line, tab-separated record ids.

    Repeated ids within a line are collapsed; blank lines are skipped.
    """
    groups = []
    with open(path, encoding="utf-8") as fh:
        for raw in fh:
            line = raw.rstrip("\r\n")
            if not line:
                continue
            seen: dict[str, None] = {}
            for rid in line.split("\t"):
                if rid:
                    seen.setdefault(rid)
            groups.append(DuplicateGroup(member_ids=tuple(seen)))
    return groups


def generate_ground_truth(
    groups: list[DuplicateGroup], kb: KnowledgeBase, seed: int
) -> tuple[KnowledgeBase, LinkSet]:
    """Build a (knowledge base, truth links) pair from duplicate groups.

    Deterministic for a fixed seed.  On an odd group count the extra group
    goes to the duplicates half.  Records outside every group are dropped.
    """
    if len(groups) < 2:
        raise DedupeError("need at least 2 duplicate groups to split")
    for index, group in enumerate(groups):
        if len(group.member_ids) < 2:
            raise GroupTooSmall(index, len(group.member_ids))
        for rid in group.member_ids:
            if rid not in kb.records:
                raise UnknownId(rid)

    rng = random.Random(seed)
    order = list(groups)
    rng.shuffle(order)
    half = (len(order) + 1) // 2
    duplicates_half, uniques_half = order[:half], order[half:]

    records: dict[str, Record] = {}

    def keep(rid: str) -> None:
        if rid in records:
            raise DuplicateId(rid)
        records[rid] = kb.records[rid]

    links = LinkSet()
    for group in duplicates_half:
        for rid in group.member_ids:
            keep(rid)
        for a, b in itertools.combinations(group.member_ids, 2):
            links.add_pair(a, b, 1.0)
    for group in uniques_half:
        keep(rng.choice(group.member_ids))

    return KnowledgeBase(records=records, schema=list(kb.schema)), links
