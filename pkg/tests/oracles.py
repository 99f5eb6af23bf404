"""Independent reference implementations used only to check the library.

Nothing in here imports dedupe_kb; each oracle takes a different route than
the code under test (recursion instead of iterative DP, odds products
instead of pairwise fusion, arc length instead of the haversine formula).
"""

import math


def edit_distance(a: str, b: str) -> int:
    """Unit-cost edit distance by memoized recursion on suffix lengths."""
    memo: dict[tuple[int, int], int] = {}

    def go(i: int, j: int) -> int:
        if i == 0:
            return j
        if j == 0:
            return i
        key = (i, j)
        hit = memo.get(key)
        if hit is not None:
            return hit
        d = go(i - 1, j - 1)
        if a[i - 1] != b[j - 1]:
            d = min(d, go(i - 1, j), go(i, j - 1)) + 1
        memo[key] = d
        return d

    return go(len(a), len(b))


def edit_similarity(a: str, b: str) -> float:
    m = max(len(a), len(b))
    return 1.0 if m == 0 else 1.0 - edit_distance(a, b) / m


def odds_fold(probabilities, prior: float = 0.5) -> float:
    """Fuse probabilities by multiplying odds p/(1-p), then convert back."""
    odds = prior / (1.0 - prior)
    for p in probabilities:
        odds *= p / (1.0 - p)
    return odds / (1.0 + odds)


def meridian_arc_m(degrees: float, radius_m: float = 6_371_000.0) -> float:
    """Arc length of a latitude offset (or an equatorial longitude offset)."""
    return radius_m * math.radians(degrees)


def meters_to_lat_degrees(meters: float, radius_m: float = 6_371_000.0) -> float:
    return math.degrees(meters / radius_m)
