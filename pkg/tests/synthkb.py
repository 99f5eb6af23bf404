"""Synthetic knowledge bases with planted duplicates for end-to-end tests.

Every planted pair (and every unique record) gets its own token vocabulary
and its own spot on a coarse coordinate grid, so blocking can never relate
records that are not duplicates of each other.
"""

from dedupe_kb import KnowledgeBase, LinkSet, Record, default_config

from oracles import meters_to_lat_degrees

SCHEMA = ["id"] + [a.name for a in default_config().attributes if not a.is_id]


def _listing(i: int, kind: str) -> dict[str, list[str]]:
    lat = -34.0 - (i // 20) * 0.5 - (0.25 if kind == "uniq" else 0.0)
    lon = -58.0 + (i % 20) * 0.5
    return {
        "title": [f"casa{kind}{i}alpha venta{kind}{i}beta"],
        "description": [f"descr{kind}{i}gamma amplia{kind}{i}delta patio{kind}{i}eps"],
        "price": [str(100_000 + 137 * i)],
        "maintenance_fee": [str(2_000 + i)],
        "property_type": [f"type{kind}{i}"],
        "age": [str((i % 40) + 1)],
        "coordinates": [f"{lat:.6f},{lon:.6f}"],
        "address": [f"calle{kind}{i}zeta esquina{kind}{i}eta"],
        "district": [f"barrio{kind}{i}theta"],
        "total_surface": [str(300 + i)],
        "covered_surface": [str(120 + i)],
        "land_surface": [str(180 + i)],
        "amount_of_rooms": [str(2 + i % 5)],
        "amount_of_bathrooms": [str(1 + i % 3)],
        "amount_of_garages": [str(i % 2)],
        "amount_of_bedrooms": [str(1 + i % 4)],
    }


def planted_kb(pairs: int = 50, uniques: int = 100) -> tuple[KnowledgeBase, LinkSet]:
    """A kb of 2*pairs + uniques records where each pair is a verbatim copy."""
    records: dict[str, Record] = {}
    truth = LinkSet()
    for i in range(pairs):
        values = _listing(i, "dup")
        a, b = f"dup{i:03d}a", f"dup{i:03d}b"
        records[a] = Record(a, {k: list(v) for k, v in values.items()})
        records[b] = Record(b, {k: list(v) for k, v in values.items()})
        truth.add_pair(a, b)
    for j in range(uniques):
        rid = f"uniq{j:03d}"
        records[rid] = Record(rid, _listing(j, "uniq"))
    return KnowledgeBase(records=records, schema=list(SCHEMA)), truth


def perturb_pairs(kb: KnowledgeBase, shift_m: float = 30.0) -> KnowledgeBase:
    """Corrupt the second record of each planted pair.

    One character of the title is substituted and the latitude moves north
    by ``shift_m`` meters along the meridian.
    """
    out: dict[str, Record] = {}
    dlat = meters_to_lat_degrees(shift_m)
    for rid, record in kb.records.items():
        if rid.startswith("dup") and rid.endswith("b"):
            values = {k: list(v) for k, v in record.values.items()}
            title = values["title"][0]
            values["title"] = ["x" + title[1:] if title[0] != "x" else "y" + title[1:]]
            lat, lon = (float(p) for p in values["coordinates"][0].split(","))
            values["coordinates"] = [f"{lat + dlat:.10f},{lon:.10f}"]
            out[rid] = Record(rid, values)
        else:
            out[rid] = record
    return KnowledgeBase(records=out, schema=list(kb.schema))
