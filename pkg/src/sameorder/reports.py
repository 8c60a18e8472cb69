"""Spectrum reports and the on-disk report cache.

A report is a plain dict with a fixed key order so serialization is stable
enough for golden files and byte-identical cache round-trips.  The cache is a
pure memo: one JSON document per normalized expression, filename the SHA-256
hex digest of the expression text.  A missing entry is recomputed silently; a
corrupt one is recomputed with a warning and overwritten.
"""

from __future__ import annotations

import hashlib
import json
import os
import sys

ENGINE_VERSION = "0.1.0"


def build_report(expression: str, group) -> dict:
    spec = group.spectrum()
    alpha = list(spec.alpha())
    return {
        "expression": expression,
        "order": group.order(),
        "spectrum": {str(t): c for t, c in spec.counts.items()},
        "alpha": alpha,
        "alpha_cardinality": len(alpha),
        "simple": group.is_simple(),
        "solvable": group.is_solvable(),
        "center_order": group.center_order(),
        "engine_version": ENGINE_VERSION,
    }


def render_json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def report_is_consistent(rep) -> bool:
    """Internal consistency: counts sum to the order, alpha matches counts."""
    try:
        counts = {int(t): int(c) for t, c in rep["spectrum"].items()}
        alpha = sorted(set(counts.values()))
        return (
            isinstance(rep["expression"], str)
            and sum(counts.values()) == rep["order"]
            and list(rep["alpha"]) == alpha
            and rep["alpha_cardinality"] == len(alpha)
            and isinstance(rep["simple"], bool)
            and isinstance(rep["solvable"], bool)
            and isinstance(rep["center_order"], int)
        )
    except (KeyError, TypeError, ValueError, AttributeError):
        return False


def cache_path(cache_dir: str, expression: str) -> str:
    digest = hashlib.sha256(expression.encode("utf-8")).hexdigest()
    return os.path.join(cache_dir, digest + ".json")


def cache_load(cache_dir: str, expression: str) -> dict | None:
    """Return the cached report, or None when absent or unusable."""
    path = cache_path(cache_dir, expression)
    if not os.path.exists(path):
        return None
    try:
        with open(path, "r", encoding="utf-8") as fh:
            rep = json.load(fh)
        if report_is_consistent(rep) and rep["expression"] == expression:
            return rep
    except (OSError, json.JSONDecodeError):
        pass
    print(f"warning: corrupt cache entry for {expression!r}; recomputing", file=sys.stderr)
    return None


def cache_store(cache_dir: str, expression: str, rep: dict):
    os.makedirs(cache_dir, exist_ok=True)
    path = cache_path(cache_dir, expression)
    tmp = path + ".tmp"
    with open(tmp, "w", encoding="utf-8") as fh:
        fh.write(render_json(rep))
    os.replace(tmp, path)


def report_for(expression: str, cap: int, cache_dir: str | None = None) -> dict:
    """Report for an expression, consulting the cache when one is configured."""
    from .dsl import group_for, normalize_expr

    normalized = normalize_expr(expression)
    if cache_dir is not None:
        cached = cache_load(cache_dir, normalized)
        if cached is not None:
            return cached
    rep = build_report(normalized, group_for(normalized, cap))
    if cache_dir is not None:
        cache_store(cache_dir, normalized, rep)
    return rep
