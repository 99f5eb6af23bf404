"""File formats: knowledge bases (CSV), link files (TSV), configs (JSON).

KB files are UTF-8 RFC-4180 CSV with a header row; one configured column is
the record id, cells hold "|"-separated multi-values, and empty cells mean
missing.  Link files are headerless TSV (id_a, id_b, optional probability).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

import csv

from .errors import (
    DuplicateId,
    MalformedLine,
    MalformedRow,
    MissingIdColumn,
    SchemaViolation,
    SelfPair,
    UnknownColumn,
)
from .model import AttributeSpec, Comparator, LinkSet, MatchConfig, Record, STRING_COMPARATORS

MULTI_VALUE_SEPARATOR = "|"

_DEFAULT_CONFIG_RESOURCE = "default_config.json"


@dataclass
class KnowledgeBase:
    """All records of one source, keyed by id, plus the column order."""

    records: dict[str, Record] = field(default_factory=dict)
    schema: list[str] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.records)


def load_kb(path, config: MatchConfig) -> KnowledgeBase:
    """Load a CSV knowledge base, validating it against the configuration.

    The header must contain the configured id column, and every other column
    must be a configured attribute (a subset is fine).  Cells are stored raw;
    empty cells become missing values.
    """
    id_name = config.id_attribute.name
    with open(path, encoding="utf-8-sig", newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise MissingIdColumn(id_name, str(path)) from None
        if id_name not in header:
            raise MissingIdColumn(id_name, str(path))
        if len(set(header)) != len(header):
            raise MalformedRow(1, "duplicate column name in header")
        known = config.attribute_names
        for column in header:
            if column != id_name and column not in known:
                raise UnknownColumn(column)

        id_idx = header.index(id_name)
        records: dict[str, Record] = {}
        for row in reader:
            line = reader.line_num
            if len(row) != len(header):
                raise MalformedRow(line, f"expected {len(header)} cells, got {len(row)}")
            rid = row[id_idx]
            if not rid:
                raise MalformedRow(line, "empty id cell")
            if rid in records:
                raise DuplicateId(rid)
            values: dict[str, list[str]] = {}
            for column, cell in zip(header, row):
                if column == id_name:
                    continue
                if cell == "":
                    values[column] = []
                else:
                    values[column] = [
                        part for part in cell.split(MULTI_VALUE_SEPARATOR) if part != ""
                    ]
            records[rid] = Record(id=rid, values=values)

    return KnowledgeBase(records=records, schema=header)


def write_kb(kb: KnowledgeBase, path, id_column: str) -> None:
    """Write a knowledge base back to CSV in schema column order."""
    if id_column not in kb.schema:
        raise MissingIdColumn(id_column, str(path))
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(kb.schema)
        for record in kb.records.values():
            row = [
                record.id
                if column == id_column
                else MULTI_VALUE_SEPARATOR.join(record.values.get(column, []))
                for column in kb.schema
            ]
            writer.writerow(row)


def load_links(path) -> LinkSet:
    """Load a TSV link file; mirrored and repeated pairs collapse to one."""
    links = LinkSet()
    with open(path, encoding="utf-8") as fh:
        for number, raw in enumerate(fh, start=1):
            line = raw.rstrip("\r\n")
            if not line:
                continue
            parts = line.split("\t")
            if len(parts) not in (2, 3):
                raise MalformedLine(number, f"expected 2 or 3 columns, got {len(parts)}")
            a, b = parts[0], parts[1]
            if not a or not b:
                raise MalformedLine(number, "empty record id")
            if a == b:
                raise SelfPair(a, line=number)
            probability = 1.0
            if len(parts) == 3:
                try:
                    probability = float(parts[2])
                except ValueError:
                    raise MalformedLine(number, f"bad probability {parts[2]!r}") from None
                if not (0.0 <= probability <= 1.0):
                    raise MalformedLine(number, f"probability {probability} outside [0, 1]")
            links.add_pair(a, b, probability)
    return links


def write_links(links: LinkSet, path) -> None:
    """Write links sorted by pair, probabilities at six decimal places.

    Round-trips through load_links (probabilities equal to 6 decimals).
    """
    with open(path, "w", encoding="utf-8") as fh:
        for link in sorted(links, key=lambda l: l.pair):
            fh.write(f"{link.a}\t{link.b}\t{link.probability:.6f}\n")


def _require(obj: dict, key: str, kind, where: str):
    if key not in obj:
        raise SchemaViolation(f"{where}{key}", "missing required key")
    value = obj[key]
    if kind is float:
        if not isinstance(value, (int, float)) or isinstance(value, bool):
            raise SchemaViolation(f"{where}{key}", "expected a number")
        return float(value)
    if not isinstance(value, kind):
        raise SchemaViolation(f"{where}{key}", f"expected {kind.__name__}")
    return value


_TOP_LEVEL_KEYS = {
    "threshold",
    "prior",
    "max_candidates",
    "min_shared_tokens",
    "id_attribute",
    "attributes",
}
_ATTRIBUTE_KEYS = {"name", "comparator", "low", "high", "searchable"}


def parse_config(doc: dict) -> MatchConfig:
    """Validate a JSON config document and build a MatchConfig."""
    if not isinstance(doc, dict):
        raise SchemaViolation("<root>", "config must be a JSON object")
    for key in doc:
        if key not in _TOP_LEVEL_KEYS:
            raise SchemaViolation(key, "unknown key")

    threshold = _require(doc, "threshold", float, "")
    id_attribute = _require(doc, "id_attribute", str, "")
    raw_attributes = _require(doc, "attributes", list, "")
    if not raw_attributes:
        raise SchemaViolation("attributes", "must list at least one attribute")

    prior = 0.5
    if "prior" in doc:
        prior = _require(doc, "prior", float, "")
    max_candidates = doc.get("max_candidates", 100)
    min_shared_tokens = doc.get("min_shared_tokens", 1)
    for key, value in (("max_candidates", max_candidates), ("min_shared_tokens", min_shared_tokens)):
        if not isinstance(value, int) or isinstance(value, bool):
            raise SchemaViolation(key, "expected an integer")

    specs = [AttributeSpec(name=id_attribute, comparator=None, is_id=True)]
    for i, entry in enumerate(raw_attributes):
        where = f"attributes[{i}]."
        if not isinstance(entry, dict):
            raise SchemaViolation(f"attributes[{i}]", "expected an object")
        for key in entry:
            if key not in _ATTRIBUTE_KEYS:
                raise SchemaViolation(f"{where}{key}", "unknown key")
        name = _require(entry, "name", str, where)
        comparator_name = _require(entry, "comparator", str, where)
        try:
            comparator = Comparator(comparator_name)
        except ValueError:
            raise SchemaViolation(f"{where}comparator", f"unknown comparator {comparator_name!r}") from None
        low = _require(entry, "low", float, where)
        high = _require(entry, "high", float, where)
        searchable = entry.get("searchable", comparator in STRING_COMPARATORS)
        if not isinstance(searchable, bool):
            raise SchemaViolation(f"{where}searchable", "expected a boolean")
        specs.append(
            AttributeSpec(
                name=name,
                comparator=comparator,
                low=low,
                high=high,
                searchable=searchable,
            )
        )

    return MatchConfig(
        attributes=tuple(specs),
        threshold=threshold,
        prior=prior,
        max_candidates=max_candidates,
        min_shared_tokens=min_shared_tokens,
    )


def load_config(path) -> MatchConfig:
    """Load and validate a JSON match configuration."""
    with open(path, encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise SchemaViolation("<root>", f"invalid JSON: {exc}") from None
    return parse_config(doc)


def default_config_path() -> Path:
    """Filesystem path of the bundled real-estate configuration."""
    return Path(str(resources.files(__package__) / "data" / _DEFAULT_CONFIG_RESOURCE))


def default_config() -> MatchConfig:
    """The bundled configuration for real-estate listings (16 attributes)."""
    text = (resources.files(__package__) / "data" / _DEFAULT_CONFIG_RESOURCE).read_text(
        encoding="utf-8"
    )
    return parse_config(json.loads(text))
