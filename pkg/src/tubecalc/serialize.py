"""JSON documents (schema 1) for torsion pairs and maximal rigid objects."""

from __future__ import annotations

from typing import Tuple

from .arcs import Tube, format_obj, parse_obj, sort_key
from .torsion import (
    ADIC,
    CORAY,
    PRUFER,
    RAY,
    MaxRigid,
    SubcatDesc,
    TorsionPair,
    ValidationError,
    make_desc,
)

SCHEMA = 1


def _finite_strings(desc: SubcatDesc):
    return [format_obj(x) for x in sorted(desc.finite_objs, key=sort_key)]


def pair_to_doc(tube: Tube, pair: TorsionPair) -> dict:
    """The torsion side lists its corays, the free side its rays; the
    whole-tube descriptor is recovered on parse from either full family."""
    t, f = pair.t_part, pair.f_part
    if t.rays and len(t.rays) != tube.n:
        raise ValidationError("torsion part of a pair cannot contain a proper ray family")
    if f.corays and len(f.corays) != tube.n:
        raise ValidationError("free part of a pair cannot contain a proper coray family")
    return {
        "schema": SCHEMA,
        "rank": tube.n,
        "kind": pair.kind,
        "torsion": {"finite": _finite_strings(t), "corays": sorted(t.corays)},
        "free": {"finite": _finite_strings(f), "rays": sorted(f.rays)},
    }


def pair_from_doc(doc: dict) -> Tuple[Tube, TorsionPair]:
    if doc.get("schema") != SCHEMA:
        raise ValidationError(f"unsupported schema {doc.get('schema')!r}")
    tube = Tube(int(doc["rank"]))
    kind = doc["kind"]
    if kind not in (RAY, CORAY):
        raise ValidationError(f"unknown pair kind {kind!r}")
    t_doc, f_doc = doc["torsion"], doc["free"]
    t_part = make_desc(
        tube,
        (parse_obj(tube, s) for s in t_doc["finite"]),
        corays=t_doc["corays"],
    )
    f_part = make_desc(
        tube,
        (parse_obj(tube, s) for s in f_doc["finite"]),
        rays=f_doc["rays"],
    )
    return tube, TorsionPair(t_part, f_part, kind)


def rigid_to_doc(tube: Tube, rigid: MaxRigid) -> dict:
    return {
        "schema": SCHEMA,
        "rank": tube.n,
        "kind": rigid.kind,
        "summands": [
            format_obj(x) for x in sorted(rigid.summands, key=sort_key)
        ],
    }


def rigid_from_doc(doc: dict) -> Tuple[Tube, MaxRigid]:
    if doc.get("schema") != SCHEMA:
        raise ValidationError(f"unsupported schema {doc.get('schema')!r}")
    tube = Tube(int(doc["rank"]))
    kind = doc["kind"]
    if kind not in (PRUFER, ADIC):
        raise ValidationError(f"unknown rigid kind {kind!r}")
    summands = frozenset(parse_obj(tube, s) for s in doc["summands"])
    return tube, MaxRigid(summands, kind)


def format_desc(desc: SubcatDesc) -> str:
    """Compact one-line rendering of a descriptor; '0' for the zero subcategory."""
    parts = _finite_strings(desc)
    if desc.rays:
        parts.append("rays[" + ",".join(str(i) for i in sorted(desc.rays)) + "]")
    if desc.corays:
        parts.append("corays[" + ",".join(str(j) for j in sorted(desc.corays)) + "]")
    return " + ".join(parts) if parts else "0"
