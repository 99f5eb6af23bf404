"""Batch command line: dedup, evaluate, make-truth, explain.

Exit codes: 0 success, 1 input or validation error, 2 internal error.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys

from .errors import DedupeError, UnknownId
from .cleaning import clean_record
from .evaluation import evaluate
from .groundtruth import generate_ground_truth, load_groups
from .ingest import (
    default_config,
    load_config,
    load_kb,
    load_links,
    write_kb,
    write_links,
)
from .matcher import compare_records, dedupe_run


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dedupe-kb",
        description="Detect duplicate records in a tabular knowledge base.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dedup", help="find duplicates and write a link file")
    p.add_argument("kb", help="knowledge base CSV")
    p.add_argument("--config", help="match configuration JSON (default: bundled)")
    p.add_argument("--out", required=True, help="output links TSV")
    p.add_argument("--threshold", type=float, help="override the config threshold")
    p.add_argument("--jobs", type=int, default=1, help="worker processes (default 1)")
    p.set_defaults(func=_cmd_dedup)

    p = sub.add_parser("evaluate", help="score found links against truth links")
    p.add_argument("found", help="links TSV produced by dedup")
    p.add_argument("truth", help="ground-truth links TSV")
    p.add_argument("--json", action="store_true", dest="as_json", help="emit JSON")
    p.set_defaults(func=_cmd_evaluate)

    p = sub.add_parser("make-truth", help="build a ground-truth kb and link file")
    p.add_argument("groups", help="groups TSV, one duplicate group per line")
    p.add_argument("kb", help="source knowledge base CSV")
    p.add_argument("--seed", type=int, required=True, help="shuffle seed")
    p.add_argument("--out-kb", required=True, help="output knowledge base CSV")
    p.add_argument("--out-links", required=True, help="output truth links TSV")
    p.add_argument("--config", help="match configuration JSON (default: bundled)")
    p.set_defaults(func=_cmd_make_truth)

    p = sub.add_parser("explain", help="show per-attribute evidence for one pair")
    p.add_argument("kb", help="knowledge base CSV")
    p.add_argument("id_a")
    p.add_argument("id_b")
    p.add_argument("--config", help="match configuration JSON (default: bundled)")
    p.add_argument("--threshold", type=float, help="override the config threshold")
    p.set_defaults(func=_cmd_explain)

    return parser


def _config_from(args):
    config = load_config(args.config) if args.config else default_config()
    threshold = getattr(args, "threshold", None)
    if threshold is not None:
        config = dataclasses.replace(config, threshold=threshold)
    return config


def _cmd_dedup(args) -> int:
    config = _config_from(args)
    kb = load_kb(args.kb, config)
    run = dedupe_run(kb, config, jobs=max(1, args.jobs))
    write_links(run.links, args.out)
    print(f"records: {run.record_count}")
    print(f"candidate pairs: {run.candidate_pair_count}")
    print(f"links: {len(run.links)}")
    return 0


def _cmd_evaluate(args) -> int:
    report = evaluate(load_links(args.found), load_links(args.truth))
    if args.as_json:
        print(json.dumps(report.to_dict()))
        return 0
    c = report.counts
    print(f"tp: {c.tp}")
    print(f"fp: {c.fp}")
    print(f"fn: {c.fn}")
    print(f"precision: {report.precision:.5f} ({report.precision:.1%})")
    print(f"recall: {report.recall:.5f} ({report.recall:.1%})")
    print(f"f-measure: {report.f_measure:.5f} ({report.f_measure:.1%})")
    return 0


def _cmd_make_truth(args) -> int:
    config = _config_from(args)
    kb = load_kb(args.kb, config)
    groups = load_groups(args.groups)
    out_kb, links = generate_ground_truth(groups, kb, args.seed)
    write_kb(out_kb, args.out_kb, config.id_attribute.name)
    write_links(links, args.out_links)
    half = (len(groups) + 1) // 2
    print(f"groups: {len(groups)} (duplicates half: {half}, uniques half: {len(groups) - half})")
    print(f"records: {len(out_kb)}")
    print(f"links: {len(links)}")
    return 0


def _cmd_explain(args) -> int:
    config = _config_from(args)
    kb = load_kb(args.kb, config)
    for rid in (args.id_a, args.id_b):
        if rid not in kb.records:
            raise UnknownId(rid)
    raw_a, raw_b = kb.records[args.id_a], kb.records[args.id_b]
    verdict = compare_records(
        clean_record(raw_a, config), clean_record(raw_b, config), config
    )
    for ev in verdict.evidence:
        cell_a = "|".join(raw_a.values.get(ev.attribute, []))
        cell_b = "|".join(raw_b.values.get(ev.attribute, []))
        sim = "MISSING" if ev.similarity is None else f"{ev.similarity:.6f}"
        print(f"{ev.attribute}: {cell_a!r} vs {cell_b!r}  sim={sim}  p={ev.probability:.6f}")
    print(f"combined probability: {verdict.probability:.6f}")
    print(f"match: {'yes' if verdict.is_match else 'no'} (threshold {config.threshold})")
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 0 for --help and 2 for usage errors; fold the
        # latter into the input-error code.
        code = exc.code if isinstance(exc.code, int) else 1
        return 0 if code == 0 else 1
    try:
        return args.func(args)
    except (DedupeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {exc}", file=sys.stderr)
        return 2


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
