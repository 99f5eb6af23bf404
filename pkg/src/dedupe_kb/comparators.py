"""Similarity functions mapping a pair of cleaned values to a score in [0, 1].

One function per comparator kind.  All functions are symmetric, pure, and
return 1.0 when comparing a value with itself.  Parse failures raise a
ComparatorError subclass; compare_values degrades those to missing evidence.
"""

from __future__ import annotations

import math

from .errors import ComparatorError, MalformedCoordinate, NotANumber, OutOfRange
from .model import Comparator

#: A similarity score; always in [0, 1].
Similarity = float

EARTH_RADIUS_M = 6_371_000.0

#: Coordinate pairs at or beyond this great-circle distance are completely
#: apart; below it similarity decays linearly to 0.
GEO_CUTOFF_M = 100.0

_WINKLER_PREFIX_SCALE = 0.1
_WINKLER_PREFIX_CAP = 4


def levenshtein_sim(a: str, b: str) -> Similarity:
    """Edit distance with unit costs, normalized by the longer length."""
    if a == b:
        return 1.0
    la, lb = len(a), len(b)
    if la == 0 or lb == 0:
        return 0.0
    if la < lb:
        a, b, la, lb = b, a, lb, la
    prev = list(range(lb + 1))
    for i in range(1, la + 1):
        cur = [i] + [0] * lb
        ca = a[i - 1]
        for j in range(1, lb + 1):
            cost = 0 if ca == b[j - 1] else 1
            cur[j] = min(prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + cost)
        prev = cur
    return 1.0 - prev[lb] / la


def jaro_sim(a: str, b: str) -> Similarity:
    """Jaro similarity: match window floor(max len / 2) - 1, transpositions
    counted as half the out-of-order matches."""
    la, lb = len(a), len(b)
    if la == 0 and lb == 0:
        return 1.0
    if la == 0 or lb == 0:
        return 0.0
    window = max(max(la, lb) // 2 - 1, 0)
    flags_a = [False] * la
    flags_b = [False] * lb
    matches = 0
    for i, ch in enumerate(a):
        lo = max(0, i - window)
        hi = min(lb, i + window + 1)
        for j in range(lo, hi):
            if not flags_b[j] and b[j] == ch:
                flags_a[i] = flags_b[j] = True
                matches += 1
                break
    if matches == 0:
        return 0.0
    transpositions = 0
    k = 0
    for i in range(la):
        if flags_a[i]:
            while not flags_b[k]:
                k += 1
            if a[i] != b[k]:
                transpositions += 1
            k += 1
    transpositions //= 2
    m = matches
    return (m / la + m / lb + (m - transpositions) / m) / 3.0


def jaro_winkler_sim(a: str, b: str) -> Similarity:
    """Jaro similarity plus the Winkler common-prefix boost (cap 4, scale 0.1)."""
    sim = jaro_sim(a, b)
    prefix = 0
    for x, y in zip(a, b):
        if x != y or prefix == _WINKLER_PREFIX_CAP:
            break
        prefix += 1
    return sim + prefix * _WINKLER_PREFIX_SCALE * (1.0 - sim)


def exact_sim(a: str, b: str) -> Similarity:
    return 1.0 if a == b else 0.0


def _parse_number(value: str) -> float:
    try:
        x = float(value)
    except ValueError:
        raise NotANumber(value) from None
    if not math.isfinite(x):
        raise NotANumber(value)
    return x


def numeric_sim(a: str, b: str) -> Similarity:
    """Ratio of the smaller to the larger number.

    Equal values (including 0 = 0) score 1.0.  Differing values score 0.0
    unless both are positive, because the ratio rule is undefined for signs
    and zeroes.
    """
    x = _parse_number(a)
    y = _parse_number(b)
    if x == y:
        return 1.0
    if x > 0.0 and y > 0.0:
        return min(x, y) / max(x, y)
    return 0.0


def haversine_m(lat1: float, lon1: float, lat2: float, lon2: float) -> float:
    """Great-circle distance in meters on a sphere of radius 6,371,000 m."""
    for lat in (lat1, lat2):
        if not -90.0 <= lat <= 90.0:
            raise OutOfRange(f"latitude {lat}")
    for lon in (lon1, lon2):
        if not -180.0 <= lon <= 180.0:
            raise OutOfRange(f"longitude {lon}")
    phi1, phi2 = math.radians(lat1), math.radians(lat2)
    dphi = math.radians(lat2 - lat1)
    dlam = math.radians(lon2 - lon1)
    h = math.sin(dphi / 2.0) ** 2 + math.cos(phi1) * math.cos(phi2) * math.sin(dlam / 2.0) ** 2
    return 2.0 * EARTH_RADIUS_M * math.asin(min(1.0, math.sqrt(h)))


def _parse_coordinate(value: str) -> tuple[float, float]:
    parts = value.split(",")
    if len(parts) != 2:
        raise MalformedCoordinate(value)
    try:
        lat, lon = float(parts[0].strip()), float(parts[1].strip())
    except ValueError:
        raise MalformedCoordinate(value) from None
    if not (math.isfinite(lat) and math.isfinite(lon)):
        raise MalformedCoordinate(value)
    return lat, lon


def geo_sim(p: str, q: str) -> Similarity:
    """Similarity of two "lat,lon" strings: 0 at or past 100 m, linear below."""
    lat1, lon1 = _parse_coordinate(p)
    lat2, lon2 = _parse_coordinate(q)
    d = haversine_m(lat1, lon1, lat2, lon2)
    if d >= GEO_CUTOFF_M:
        return 0.0
    return 1.0 - d / GEO_CUTOFF_M


_COMPARE = {
    Comparator.LEVENSHTEIN: levenshtein_sim,
    Comparator.JARO_WINKLER: jaro_winkler_sim,
    Comparator.EXACT: exact_sim,
    Comparator.NUMERIC: numeric_sim,
    Comparator.GEOPOSITION: geo_sim,
}


def compare_values(
    kind: Comparator, va: list[str], vb: list[str]
) -> Similarity | None:
    """Maximum similarity over the cross product of two value lists.

    Returns None (missing evidence) when either list is empty or every
    pairwise comparison fails to parse.
    """
    if not va or not vb:
        return None
    fn = _COMPARE[kind]
    best: float | None = None
    for x in va:
        for y in vb:
            try:
                sim = fn(x, y)
            except ComparatorError:
                continue
            if best is None or sim > best:
                best = sim
    return best
