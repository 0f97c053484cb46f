"""JSON schemas for complexes, Bier spheres, fans and reports.

All emitters produce plain dicts and lists with sorted face lists; pass them
through :func:`dumps` for the canonical byte representation.
"""

from __future__ import annotations

import json
from pathlib import Path

from .bier import BierComplex, bier_sphere, recover_source
from .errors import ValidationError
from .fan import CompletenessReport, Fan, RegularityVerdict
from .simplicial import SimplicialComplex, from_facets, mask_to_labels


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False) + "\n"


def load_json(source: str):
    """Parse inline JSON (starting with ``{``), read stdin for ``-``, else read a path."""
    text = source.strip()
    if not text.startswith("{"):
        if source == "-":
            import sys

            text = sys.stdin.read()
        else:
            try:
                text = Path(source).read_text()
            except OSError as exc:
                raise ValidationError(f"cannot read {source}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"malformed JSON: {exc}") from exc


def _facets(K: SimplicialComplex) -> list[list[int]]:
    return [list(mask_to_labels(f)) for f in K.facet_list]


def complex_to_json(K: SimplicialComplex) -> dict:
    return {"m": K.m, "facets": _facets(K)}


def complex_from_json(obj) -> SimplicialComplex:
    """Read ``{"m": int, "facets": [[int, ...], ...]}``.

    A Bier-sphere document (carrying ``primed_offset``) is read as a complex on
    its full ground set ``m + primed_offset``.
    """
    if not isinstance(obj, dict):
        raise ValidationError("complex JSON must be an object")
    m = obj.get("m")
    facets = obj.get("facets")
    if isinstance(m, bool) or not isinstance(m, int) or m < 1:
        raise ValidationError(f'"m" must be a positive integer, got {m!r}')
    if not isinstance(facets, list) or not all(isinstance(f, list) for f in facets):
        raise ValidationError('"facets" must be a list of label lists')
    if "primed_offset" in obj:
        offset = obj["primed_offset"]
        if offset != m:
            raise ValidationError(f'"primed_offset" must equal m = {m}, got {offset!r}')
        m = 2 * m
    return from_facets(m, facets)


def bier_to_json(B: BierComplex) -> dict:
    return {"m": B.m, "primed_offset": B.m, "facets": _facets(B.complex)}


def bier_from_json(obj) -> BierComplex:
    """Read a Bier-sphere document and check it is the Bier sphere of its own K."""
    if not isinstance(obj, dict) or "primed_offset" not in obj:
        raise ValidationError('Bier JSON must carry "primed_offset"')
    C = complex_from_json(obj)
    B = bier_sphere(recover_source(C, obj["m"]))
    if B.complex != C:
        raise ValidationError("facets do not form the Bier sphere of their unprimed part")
    return B


def fan_to_json(F: Fan) -> dict:
    return {
        "m": F.m,
        "max_cones": [
            {"I": list(c.I), "J": list(c.J), "generators": [list(g) for g in c.generators]}
            for c in F.max_cones
        ],
    }


def _tag(tag) -> dict:
    return {"I": list(tag[0]), "J": list(tag[1])}


def verification_to_json(reg: RegularityVerdict, rep: CompletenessReport) -> dict:
    out = {
        "regular": reg.regular,
        "complete": rep.complete,
        "verdict": rep.verdict,
        "checks": {
            "pseudomanifold": rep.pseudomanifold,
            "walls": rep.walls,
            "connected": rep.connected,
            "sampled": rep.sampled,
        },
        "samples": rep.samples,
        "seed": rep.seed,
    }
    witnesses = {}
    if reg.witness is not None:
        witnesses["regularity"] = {**_tag(reg.witness[0]), "det": reg.witness[1]}
    if rep.ridge_witnesses:
        witnesses["ridges"] = [{**_tag(t), "facets": n} for t, n in rep.ridge_witnesses]
    if rep.wall_witnesses:
        witnesses["walls"] = [{**_tag(t), "sides": list(s)} for t, s in rep.wall_witnesses]
    if rep.point_witnesses:
        witnesses["points"] = [
            {
                "point": list(p),
                "located": None if loc is None else _tag(loc),
                "bruteforce": [_tag(t) for t in brute],
            }
            for p, loc, brute in rep.point_witnesses
        ]
    if witnesses:
        out["witnesses"] = witnesses
    return out


def tag_to_json(tag) -> dict:
    return _tag(tag)
