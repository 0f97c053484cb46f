"""Command-line front end.

Exit status is 0 for successful runs with true verdicts, 1 when a
verification fails (the witness is in the output) and 2 on input errors.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction

from . import io
from .bier import BierComplex, alexander_dual, bier_sphere, format_face
from .classify import classify_bier
from .errors import (
    BierfanError,
    DomainError,
    EnumerationBoundError,
    OverflowGuardError,
    PreconditionError,
    ValidationError,
    VerificationError,
)
from .fan import DEFAULT_SAMPLES, DEFAULT_SEED, canonical_fan, is_regular, locate_point, verify_complete
from .simplicial import SimplicialComplex, mask_to_labels, strip_ghosts
from .toric import toric_report

SEED_ENV = "BIERFAN_SEED"


def parse_point(text: str) -> tuple[Fraction, ...]:
    """Comma-separated rationals such as ``1/2,-3,4/7``."""
    try:
        return tuple(Fraction(part.strip()) for part in text.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValidationError(f"bad rational point {text!r}: {exc}") from exc


def _seed(args) -> int:
    if args.seed is not None:
        raw = args.seed
    elif os.environ.get(SEED_ENV):
        raw = os.environ[SEED_ENV]
    else:
        return DEFAULT_SEED
    try:
        return int(raw, 0)
    except ValueError as exc:
        raise ValidationError(f"bad seed {raw!r}") from exc


def _load_complex(source: str) -> SimplicialComplex:
    return io.complex_from_json(io.load_json(source))


def _load_bier(source: str) -> BierComplex:
    try:
        return bier_sphere(_load_complex(source))
    except DomainError as exc:
        if "Δ" in str(exc):
            raise DomainError("K must differ from the full simplex") from exc
        raise


def _text_facets(K: SimplicialComplex, m: int | None = None) -> str:
    if m is None:
        faces = ["{" + ",".join(map(str, mask_to_labels(f))) + "}" for f in K.facet_list]
    else:
        faces = [format_face(f, m) for f in K.facet_list]
    return " ".join(faces)


def cmd_dual(args):
    K = _load_complex(args.input)
    try:
        D = alexander_dual(K)
    except DomainError as exc:
        raise DomainError("K must differ from the full simplex") from exc
    if args.format == "text":
        return 0, "dual: " + " ".join(
            "{" + ",".join(f"{v}'" for v in mask_to_labels(f)) + "}" for f in D.facet_list
        ) + "\n"
    return 0, io.dumps(io.complex_to_json(D))


def cmd_bier(args):
    B = _load_bier(args.input)
    if args.strip_ghosts:
        S = strip_ghosts(B.complex)
        labels = [f"{v}'" if v > B.m else str(v) for v in B.geometric_vertices]
        if args.format == "text":
            return 0, f"vertices: {' '.join(labels)}\nfacets: {_text_facets(S)}\n"
        return 0, io.dumps({**io.complex_to_json(S), "labels": list(B.geometric_vertices)})
    if args.format == "text":
        ghosts = " ".join(f"{v - B.m}'" if v > B.m else str(v) for v in B.ghost_vertices)
        return 0, f"facets: {_text_facets(B.complex, B.m)}\nghosts: {ghosts or '-'}\n"
    return 0, io.dumps(io.bier_to_json(B))


def cmd_fan(args):
    F = canonical_fan(_load_bier(args.input))
    if args.format == "text":
        lines = []
        for c in F.max_cones:
            tag = format_face(c.face_mask(F.m), F.m)
            lines.append(f"{tag}: " + " ".join("(" + ",".join(map(str, g)) + ")" for g in c.generators))
        return 0, "\n".join(lines) + "\n"
    return 0, io.dumps(io.fan_to_json(F))


def cmd_verify(args):
    F = canonical_fan(_load_bier(args.input))
    reg = is_regular(F)
    rep = verify_complete(F, samples=args.samples, seed=_seed(args))
    status = 0 if reg.regular and rep.complete else 1
    if args.format == "text":
        return status, f"regular: {str(reg.regular).lower()}\n{rep.verdict}\n"
    return status, io.dumps(io.verification_to_json(reg, rep))


def cmd_report(args):
    rep = toric_report(_load_bier(args.input))
    status = 0 if rep.ds_ok else 1
    if args.format == "text":
        d = rep.dims
        text = (
            f"f: {list(rep.fh.f)}\nh: {list(rep.fh.h)}\nbetti: {list(rep.betti)}\neuler: {rep.euler}\n"
            f"dim Z: {d.dim_Z}  dim R: {d.dim_R}  dim M: {d.dim_M}  dim M_real: {d.dim_M_real}  rank H: {d.rank_H}\n"
            f"Dehn-Sommerville: {rep.ds_ok}\norientable (real): {rep.orientable_real}"
            f"  m even: {rep.orientability.m_even}  matches: {rep.m_parity_matches}\n"
        )
        return status, text
    return status, io.dumps(rep.to_json())


def cmd_locate(args):
    F = canonical_fan(_load_bier(args.input))
    point = parse_point(args.point)
    try:
        tag = locate_point(F, point)
    except VerificationError as exc:
        return 1, io.dumps({"error": str(exc)})
    if args.format == "text":
        mask = sum(1 << (i - 1) for i in tag[0]) | sum(1 << (F.m + j - 1) for j in tag[1])
        return 0, format_face(mask, F.m).replace("{}", "{} (apex)") + "\n"
    return 0, io.dumps(io.tag_to_json(tag))


def cmd_classify(args):
    check = args.check_fans if args.check_fans is not None else args.m <= 4
    rep = classify_bier(args.m, check_fans=check, dedupe=args.dedupe, samples=args.samples, seed=_seed(args))
    ok = all(c.regular and c.complete for c in rep.classes) if check else True
    status = 0 if ok else 1
    if args.format == "text":
        lines = [f"m = {rep.m}: {rep.total_complexes} complexes, {len(rep.classes)} types"]
        for c in rep.classes:
            lines.append(
                f"  {c.n_vertices} vertices  x{c.multiplicity}  h = {list(c.fh.h)}  "
                f"facets {_text_facets(c.canonical)}"
            )
        return status, "\n".join(lines) + "\n"
    return status, io.dumps(rep.to_json())


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bierfan", description="Bier spheres and their canonical fans.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "text"], default="json")
    common.add_argument("--out", help="write output to this file instead of stdout")
    sampling = argparse.ArgumentParser(add_help=False)
    sampling.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)
    sampling.add_argument("--seed", help=f"sampling seed (default {DEFAULT_SEED:#x}, or ${SEED_ENV})")
    inp = argparse.ArgumentParser(add_help=False)
    inp.add_argument("input", help='complex JSON: a path, "-" for stdin, or inline {"m":..,"facets":..}')

    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("dual", parents=[common, inp], help="Alexander dual").set_defaults(func=cmd_dual)
    p = sub.add_parser("bier", parents=[common, inp], help="Bier sphere facets")
    p.add_argument("--strip-ghosts", action="store_true", help="relabel geometric vertices 1..n")
    p.set_defaults(func=cmd_bier)
    sub.add_parser("fan", parents=[common, inp], help="maximal cones of the canonical fan").set_defaults(
        func=cmd_fan
    )
    sub.add_parser(
        "verify", parents=[common, inp, sampling], help="regularity and completeness checks"
    ).set_defaults(func=cmd_verify)
    sub.add_parser("report", parents=[common, inp], help="toric invariants").set_defaults(func=cmd_report)
    p = sub.add_parser("locate", parents=[common, inp], help="cone containing a rational point")
    p.add_argument("--point", required=True, help="comma-separated rationals, e.g. 1/2,-3 (use --point=-1,0)")
    p.set_defaults(func=cmd_locate)
    p = sub.add_parser("classify", parents=[common, sampling], help="Bier sphere types on [m]")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--check-fans", dest="check_fans", action="store_true", default=None)
    p.add_argument("--no-check-fans", dest="check_fans", action="store_false")
    p.add_argument("--dedupe", action="store_true", help="count isomorphic complexes K once")
    p.set_defaults(func=cmd_classify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        status, output = args.func(args)
    except (ValidationError, DomainError, PreconditionError, EnumerationBoundError, OverflowGuardError) as exc:
        print(f"bierfan: error: {exc}", file=sys.stderr)
        return 2
    except BierfanError as exc:
        print(f"bierfan: {exc}", file=sys.stderr)
        return 1
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(output)
    else:
        sys.stdout.write(output)
    return status


if __name__ == "__main__":
    sys.exit(main())
