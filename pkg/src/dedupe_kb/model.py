"""Domain types shared by every stage: records, attribute specs, configs, links.

All types are immutable after construction (Record values are only read,
never mutated, by downstream stages) and therefore safe to share across
concurrent workers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Iterator

from .errors import ProbabilityOrder, SchemaViolation, SelfPair


class Comparator(Enum):
    """Kinds of per-attribute similarity functions."""

    LEVENSHTEIN = "levenshtein"
    JARO_WINKLER = "jaro_winkler"
    EXACT = "exact"
    NUMERIC = "numeric"
    GEOPOSITION = "geoposition"


#: Comparators that operate on free text and can feed the full-text blocking
#: index.  Exact, numeric and geoposition values make poor full-text keys.
STRING_COMPARATORS = frozenset({Comparator.LEVENSHTEIN, Comparator.JARO_WINKLER})


@dataclass(frozen=True)
class AttributeSpec:
    """Matching rule for one attribute.

    ``low`` and ``high`` are the probabilities that a pair of records are
    duplicates given that this attribute's values are completely different
    (``low``) or exactly the same (``high``).  ``searchable`` attributes feed
    the blocking index.  The single ``is_id`` spec names the identifier
    column and plays no role in matching.
    """

    name: str
    comparator: Comparator | None
    low: float = 0.0
    high: float = 1.0
    searchable: bool = False
    is_id: bool = False

    def __post_init__(self):
        if not self.name:
            raise SchemaViolation("name", "attribute name must be non-empty")
        if self.is_id:
            if self.comparator is not None:
                raise SchemaViolation(self.name, "the id attribute takes no comparator")
        elif self.comparator is None:
            raise SchemaViolation(self.name, "missing comparator")
        if not (0.0 <= self.low <= 1.0) or not (0.0 <= self.high <= 1.0):
            raise SchemaViolation(self.name, "low/high must lie in [0, 1]")
        if self.low > self.high:
            raise ProbabilityOrder(self.name, self.low, self.high)


@dataclass(frozen=True)
class MatchConfig:
    """Full engine configuration: attribute specs plus global knobs.

    ``prior`` is the neutral starting point of the evidence fold (its default
    0.5 is the identity of Bayesian fusion, so it is inert unless changed).
    ``threshold`` must be at least 0.5; anything below the neutral prior
    would match everything.
    """

    attributes: tuple[AttributeSpec, ...]
    threshold: float
    prior: float = 0.5
    max_candidates: int = 100
    min_shared_tokens: int = 1

    def __post_init__(self):
        object.__setattr__(self, "attributes", tuple(self.attributes))
        names = [a.name for a in self.attributes]
        if len(set(names)) != len(names):
            raise SchemaViolation("attributes", "attribute names must be unique")
        id_specs = [a for a in self.attributes if a.is_id]
        if len(id_specs) != 1:
            raise SchemaViolation("attributes", "exactly one attribute must be the id")
        if not (0.5 <= self.threshold <= 1.0):
            raise SchemaViolation("threshold", "must lie in [0.5, 1.0]")
        if not (0.0 < self.prior < 1.0):
            raise SchemaViolation("prior", "must lie strictly inside (0, 1)")
        if self.max_candidates < 1:
            raise SchemaViolation("max_candidates", "must be a positive integer")
        if self.min_shared_tokens < 1:
            raise SchemaViolation("min_shared_tokens", "must be a positive integer")

    @property
    def id_attribute(self) -> AttributeSpec:
        return next(a for a in self.attributes if a.is_id)

    @property
    def comparison_specs(self) -> tuple[AttributeSpec, ...]:
        """Specs that participate in matching, in configuration order."""
        return tuple(a for a in self.attributes if not a.is_id)

    @property
    def attribute_names(self) -> frozenset[str]:
        return frozenset(a.name for a in self.attributes)

    def spec(self, name: str) -> AttributeSpec:
        for a in self.attributes:
            if a.name == name:
                return a
        raise KeyError(name)


@dataclass
class Record:
    """One listing: an identifier plus attribute -> list-of-values map.

    An empty value list means the attribute is missing.  Values are stored
    raw; cleaning produces a new record and never mutates the original.
    """

    id: str
    values: dict[str, list[str]] = field(default_factory=dict)

    def __post_init__(self):
        if not self.id:
            raise SchemaViolation("id", "record id must be non-empty")


def canonical_pair(x: str, y: str) -> tuple[str, str]:
    """Order two distinct record ids into canonical (smaller, larger) form.

    Byte-wise (code point) ordering, so canonical_pair(x, y) equals
    canonical_pair(y, x).  Raises SelfPair when x == y.
    """
    if x == y:
        raise SelfPair(x)
    return (x, y) if x < y else (y, x)


@dataclass(frozen=True)
class Link:
    """An asserted identity link between two records, in canonical pair form."""

    a: str
    b: str
    probability: float = 1.0

    def __post_init__(self):
        if self.a == self.b:
            raise SelfPair(self.a)
        if self.a > self.b:
            raise SchemaViolation("link", f"pair ({self.a!r}, {self.b!r}) is not canonical")
        if not (0.0 <= self.probability <= 1.0):
            raise SchemaViolation("probability", "must lie in [0, 1]")

    @property
    def pair(self) -> tuple[str, str]:
        return (self.a, self.b)


class LinkSet:
    """Unordered identity links keyed by canonical pair.

    Inserting both orientations of the same pair yields one entry; the first
    insertion wins.  Self-links are rejected at Link construction.
    """

    def __init__(self, links: Iterable[Link] = ()):
        self._links: dict[tuple[str, str], Link] = {}
        for link in links:
            self.add(link)

    def add(self, link: Link) -> None:
        self._links.setdefault(link.pair, link)

    def add_pair(self, x: str, y: str, probability: float = 1.0) -> None:
        a, b = canonical_pair(x, y)
        self.add(Link(a, b, probability))

    def pairs(self) -> set[tuple[str, str]]:
        return set(self._links)

    def get(self, x: str, y: str) -> Link | None:
        return self._links.get(canonical_pair(x, y))

    def __contains__(self, pair: tuple[str, str]) -> bool:
        return pair in self._links

    def __iter__(self) -> Iterator[Link]:
        return iter(self._links.values())

    def __len__(self) -> int:
        return len(self._links)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinkSet):
            return NotImplemented
        return self._links == other._links

    def __repr__(self) -> str:
        return f"LinkSet({len(self)} links)"
