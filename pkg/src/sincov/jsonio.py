"""JSON wire formats and canonical serialization.

All documents use plain strings for identifiers.  Canonical output sorts
object keys, emits arrays in lexicographic order of their serialized
entries, and uses compact separators, so identical values serialize to
identical bytes.

Formats:

* relation:   ``[[b, a], ...]`` (input first, output second; duplicates in
  input are accepted and collapse).
* system:     ``{"indices": [...], "relations": {"<alpha>|<beta>":
  [[b, a], ...]}}``; missing keys are empty relations; index ids must not
  contain ``"|"``.
* atlas:      ``{"charts": {"<alpha>": [[class, element], ...]}}`` with
  empty charts kept.
* isomorphism: ``{"omega": [[z, zbar], ...]}``.
* flow descriptor: ``{"kind": "...", "grid": [...], "seeds": [{"t": ...,
  "x": ...}], "permutation": {...}?}`` with rationals written "p/q".
"""

from __future__ import annotations

import json
from fractions import Fraction

from .atlas import Atlas, Isomorphism
from .errors import FormatError
from .flows import FlowKind, FlowSpec, Seed
from .relations import Relation
from .systems import SincovSystem

KEY_SEPARATOR = "|"


def canonical_dumps(payload) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def pretty_dumps(payload) -> str:
    return json.dumps(payload, sort_keys=True, indent=2)


def _require(condition, message):
    if not condition:
        raise FormatError(message)


def _string_items(values, what):
    _require(isinstance(values, list), f"{what} must be an array")
    for value in values:
        _require(isinstance(value, str), f"{what} entries must be strings")
    return values


# ---------------------------------------------------------------- relations


def relation_to_obj(rel: Relation) -> list:
    return [list(pair) for pair in sorted(rel.pairs)]


def relation_from_obj(obj) -> Relation:
    _require(isinstance(obj, list), "relation must be an array of pairs")
    pairs = []
    for entry in obj:
        _require(
            isinstance(entry, list) and len(entry) == 2,
            "relation entries must be 2-element arrays",
        )
        _string_items(entry, "relation pair")
        pairs.append((entry[0], entry[1]))
    return Relation(pairs)


# ------------------------------------------------------------------ systems


def _check_index_id(index):
    _require(isinstance(index, str), "index ids must be strings")
    _require(KEY_SEPARATOR not in index, f"index ids must not contain {KEY_SEPARATOR!r}")
    return index


def system_to_obj(system: SincovSystem) -> dict:
    for index in system.indices:
        _check_index_id(index)
    relations = {
        f"{alpha}{KEY_SEPARATOR}{beta}": relation_to_obj(rel)
        for (alpha, beta), rel in system.relations.items()
    }
    return {"indices": sorted(system.indices), "relations": relations}


def system_from_obj(obj) -> SincovSystem:
    _require(isinstance(obj, dict), "system must be an object")
    _require(set(obj) <= {"indices", "relations"}, "unknown keys in system object")
    _require("indices" in obj, "system object needs an 'indices' array")
    indices = set(_string_items(obj["indices"], "indices"))
    for index in indices:
        _check_index_id(index)

    relations = {}
    raw = obj.get("relations", {})
    _require(isinstance(raw, dict), "'relations' must be an object")
    for key, value in raw.items():
        _require(isinstance(key, str), "relation keys must be strings")
        parts = key.split(KEY_SEPARATOR)
        _require(len(parts) == 2, f"relation key {key!r} must be '<alpha>{KEY_SEPARATOR}<beta>'")
        alpha, beta = parts
        _require(alpha in indices, f"relation key uses unknown index {alpha!r}")
        _require(beta in indices, f"relation key uses unknown index {beta!r}")
        relations[(alpha, beta)] = relation_from_obj(value)
    return SincovSystem(indices, relations)


def violation_to_obj(report) -> dict:
    return {
        "law": report.law.value,
        "indices": list(report.indices),
        "pair": list(report.pair),
    }


def chart_violation_to_obj(violation) -> dict:
    return {
        "index": violation.index,
        "predicate": violation.predicate,
        "pair": list(violation.pair),
    }


# ------------------------------------------------------------------ atlases


def atlas_to_obj(atlas: Atlas) -> dict:
    for index in atlas.charts:
        _check_index_id(index)
    return {"charts": {index: relation_to_obj(rel) for index, rel in atlas.charts.items()}}


def atlas_from_obj(obj) -> Atlas:
    _require(isinstance(obj, dict), "atlas must be an object")
    _require(set(obj) == {"charts"}, "atlas object needs exactly a 'charts' key")
    charts = obj["charts"]
    _require(isinstance(charts, dict), "'charts' must be an object")
    parsed = {}
    for index, value in charts.items():
        _check_index_id(index)
        parsed[index] = relation_from_obj(value)
    return Atlas(parsed)


def isomorphism_to_obj(iso: Isomorphism) -> dict:
    return {"omega": relation_to_obj(iso.omega)}


def isomorphism_from_obj(obj) -> Isomorphism:
    _require(isinstance(obj, dict), "isomorphism must be an object")
    _require(set(obj) == {"omega"}, "isomorphism object needs exactly an 'omega' key")
    return Isomorphism(relation_from_obj(obj["omega"]))


# -------------------------------------------------------------------- flows


_KINDS = {kind.value: kind for kind in FlowKind}


def _rational(text, what) -> Fraction:
    _require(isinstance(text, str), f"{what} must be a rational string like '1/2'")
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise FormatError(f"{what} is not a valid rational: {text!r}") from None


def flow_from_obj(obj):
    """Parse a flow descriptor into (FlowSpec, grid times, seeds)."""
    _require(isinstance(obj, dict), "flow descriptor must be an object")
    _require(
        set(obj) <= {"kind", "grid", "seeds", "permutation"},
        "unknown keys in flow descriptor",
    )
    kind_name = obj.get("kind")
    _require(kind_name in _KINDS, f"kind must be one of {sorted(_KINDS)}")
    kind = _KINDS[kind_name]

    if kind is FlowKind.PERMUTATION:
        table = obj.get("permutation")
        _require(isinstance(table, dict) and table, "permutation kind needs a 'permutation' table")
        for key, value in table.items():
            _require(
                isinstance(key, str) and isinstance(value, str),
                "permutation table entries must be strings",
            )
        try:
            spec = FlowSpec.of_permutation(table)
        except ValueError as exc:
            raise FormatError(str(exc)) from None
    else:
        _require("permutation" not in obj, "'permutation' is only valid for kind 'permutation'")
        spec = FlowSpec(kind)

    grid = [_rational(t, "grid time") for t in _string_items(obj.get("grid", []), "grid")]
    _require(grid, "flow descriptor needs a non-empty 'grid'")

    seeds = []
    raw_seeds = obj.get("seeds", [])
    _require(isinstance(raw_seeds, list), "'seeds' must be an array")
    for entry in raw_seeds:
        _require(
            isinstance(entry, dict) and set(entry) == {"t", "x"},
            "each seed must be an object with keys 't' and 'x'",
        )
        t = _rational(entry["t"], "seed time")
        if kind is FlowKind.PERMUTATION:
            _require(isinstance(entry["x"], str), "permutation seed values must be strings")
            x = entry["x"]
        else:
            x = _rational(entry["x"], "seed value")
        seeds.append(Seed(t, x))
    return spec, grid, seeds
