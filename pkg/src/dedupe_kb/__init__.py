"""Duplicate-listing detection for tabular knowledge bases.

Per-attribute similarity comparators produce probabilistic evidence that is
fused with Bayes' theorem into a single match probability per record pair;
an inverted token index keeps the comparison count tractable.  Includes an
evaluation harness (precision / recall / F-measure against truth links) and
a ground-truth generator that splits expert-labelled duplicate groups into
a duplicates half and a uniques half.
"""

from .blocking import InvertedIndex, build_index, find_candidates, tokenize
from .cleaning import clean_basic, clean_record
from .comparators import (
    EARTH_RADIUS_M,
    GEO_CUTOFF_M,
    Similarity,
    compare_values,
    exact_sim,
    geo_sim,
    haversine_m,
    jaro_sim,
    jaro_winkler_sim,
    levenshtein_sim,
    numeric_sim,
)
from .evaluation import (
    ConfusionCounts,
    EvaluationReport,
    confusion_counts,
    evaluate,
    f_measure,
    precision,
    recall,
)
from .groundtruth import DuplicateGroup, generate_ground_truth, load_groups
from .ingest import (
    KnowledgeBase,
    default_config,
    default_config_path,
    load_config,
    load_kb,
    load_links,
    parse_config,
    write_kb,
    write_links,
)
from .matcher import (
    EPSILON,
    AttributeEvidence,
    DedupRun,
    PairVerdict,
    attribute_probability,
    combine_bayes,
    compare_records,
    dedupe_run,
    deduplicate,
)
from .model import (
    AttributeSpec,
    Comparator,
    Link,
    LinkSet,
    MatchConfig,
    Record,
    canonical_pair,
)
from . import errors

__version__ = "0.1.0"

__all__ = [
    "AttributeEvidence",
    "AttributeSpec",
    "Comparator",
    "ConfusionCounts",
    "DedupRun",
    "DuplicateGroup",
    "EARTH_RADIUS_M",
    "EPSILON",
    "EvaluationReport",
    "GEO_CUTOFF_M",
    "InvertedIndex",
    "KnowledgeBase",
    "Link",
    "LinkSet",
    "MatchConfig",
    "PairVerdict",
    "Record",
    "Similarity",
    "attribute_probability",
    "build_index",
    "canonical_pair",
    "clean_basic",
    "clean_record",
    "combine_bayes",
    "compare_records",
    "compare_values",
    "confusion_counts",
    "dedupe_run",
    "deduplicate",
    "default_config",
    "default_config_path",
    "errors",
    "evaluate",
    "exact_sim",
    "f_measure",
    "find_candidates",
    "generate_ground_truth",
    "geo_sim",
    "haversine_m",
    "jaro_sim",
    "jaro_winkler_sim",
    "levenshtein_sim",
    "load_config",
    "load_groups",
    "load_kb",
    "load_links",
    "numeric_sim",
    "parse_config",
    "precision",
    "recall",
    "tokenize",
    "write_kb",
    "write_links",
]
