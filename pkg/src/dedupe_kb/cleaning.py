"""Value normalization applied before comparison.

Only whitespace normalization and lowercasing; stop words are left alone and
tokenization belongs to the blocking stage.
"""

from __future__ import annotations

from .errors import SchemaMismatch
from .model import MatchConfig, Record, STRING_COMPARATORS, Comparator

#: Comparators whose values get full text cleaning; numeric and geoposition
#: values are only trimmed so their digits survive verbatim.
_TEXT_CLEANED = STRING_COMPARATORS | {Comparator.EXACT}


def _lower_one_to_one(text: str) -> str:
    # Code-point-wise lowering; mappings that would expand the string
    # (e.g. U+0130) keep the original character, so length never grows
    # and the result is locale independent.
    out = []
    for ch in text:
        low = ch.lower()
        out.append(low if len(low) == 1 else ch)
    return "".join(out)


def clean_basic(raw: str) -> str:
    """Trim, collapse internal whitespace runs to one space, lowercase."""
    return _lower_one_to_one(" ".join(raw.split()))


def clean_record(r: Record, config: MatchConfig) -> Record:
    """Return a cleaned copy of ``r``; the original is left untouched.

    String-compared attributes get clean_basic; numeric and geoposition
    attributes are only whitespace-trimmed.  The id is never modified.
    """
    cleaned: dict[str, list[str]] = {}
    for name, values in r.values.items():
        try:
            spec = config.spec(name)
        except KeyError:
            raise SchemaMismatch(r.id, name) from None
        if spec.comparator in _TEXT_CLEANED:
            cleaned[name] = [clean_basic(v) for v in values]
        else:
            cleaned[name] = [v.strip() for v in values]
    return Record(id=r.id, values=cleaned)
