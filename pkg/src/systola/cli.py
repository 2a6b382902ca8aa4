"""Command-line front end.

Exit codes: 0 on success, 1 on usage errors (bad flags, malformed
inputs), 2 when a verification command finds a failing check.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from fractions import Fraction
from pathlib import Path

from . import bounds as bounds_mod
from .cochains import RING_Z, RING_Z2, class_is_nonzero, cup_power, h1_basis
from .complexes import barycentric_subdivision
from .covers import build_cover, cover_systole, homology_triviality_radius, \
    homotopy_triviality_radius, loop_norm
from .errors import SystolaError
from .essential import combinatorial_essentiality
from .generators import gen_complete_graph, gen_named, gen_polygon, \
    gen_projective_space
from .serialization import read_cochain, read_complex, write_cochain, write_complex
from .verify import verify_grid


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _fmt(value) -> str:
    if isinstance(value, float) and math.isinf(value):
        return "inf"
    return str(value)


def _emit(args, plain, payload):
    if getattr(args, "json", False):
        print(json.dumps(payload, sort_keys=True))
    else:
        print(plain)


def _parse_fiber(text: str):
    text = text.lower()
    if text == "z2":
        return RING_Z2, 2
    if text.startswith("z") and text[1:].isdigit() and int(text[1:]) >= 2:
        n = int(text[1:])
        return (RING_Z2, 2) if n == 2 else (RING_Z, n)
    raise _UsageError(f"bad fiber {text!r}; expected z2 or zN")


def _load_cover(args):
    X = read_complex(args.complex)
    ring, fiber = _parse_fiber(getattr(args, "fiber", "z2"))
    xi = read_cochain(args.cocycle, X, ring)
    return X, build_cover(X, xi, fiber)


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise _UsageError(f"bad rational {text!r}") from exc


def _fraction_list(text: str) -> list[Fraction]:
    return [_fraction(part) for part in text.split(",") if part]


# -- subcommand handlers ---------------------------------------------------

def _cmd_gen(args) -> int:
    out = Path(args.output)
    classes = []
    if args.shape == "rp":
        Q, xi, sphere = gen_projective_space(args.dim, args.systole)
        if args.sphere:
            write_complex(sphere.complex, out)
        else:
            write_complex(Q, out)
            classes = [xi]
    elif args.shape == "rp2-six":
        X = gen_named("rp2-six")
        write_complex(X, out)
        classes = h1_basis(X)
    elif args.shape == "torus7":
        X = gen_named("torus-seven")
        write_complex(X, out)
        classes = h1_basis(X)
    elif args.shape == "polygon":
        X = gen_polygon(args.m)
        write_complex(X, out)
        classes = h1_basis(X)
    elif args.shape == "complete":
        write_complex(gen_complete_graph(args.k), out)
    else:
        raise _UsageError(f"unknown generator {args.shape!r}")
    suffix = [".cocycle"] + [f".cocycle{i}" for i in range(2, len(classes) + 1)]
    for c, sfx in zip(classes, suffix):
        write_cochain(c, str(out) + sfx)
    names = [str(out)] + [str(out) + s for s in suffix[: len(classes)]]
    _emit(args, "\n".join(names), {"written": names})
    return 0


def _cmd_systole(args) -> int:
    _, cover = _load_cover(args)
    value = cover_systole(cover)
    _emit(args, _fmt(value), {"systole": _fmt(value)})
    return 0


def _cmd_lnorm(args) -> int:
    X = read_complex(args.complex)
    ring, fiber = _parse_fiber(args.fiber)
    xi = read_cochain(args.cocycle, X, ring)
    value = loop_norm(X, xi, fiber)
    _emit(args, _fmt(value), {"loop_norm": _fmt(value)})
    return 0


def _cmd_radius(args) -> int:
    X = read_complex(args.complex)
    if not args.cocycle:
        raise _UsageError("at least one --cocycle file is required")
    if args.which == "homotopy":
        if len(args.cocycle) != 1:
            raise _UsageError("homotopy radius takes exactly one --cocycle")
        ring, fiber = _parse_fiber(args.fiber)
        xi = read_cochain(args.cocycle[0], X, ring)
        value = homotopy_triviality_radius(build_cover(X, xi, fiber))
    else:
        classes = [read_cochain(p, X, RING_Z2) for p in args.cocycle]
        value = homology_triviality_radius(X, classes)
    _emit(args, _fmt(value), {"radius": _fmt(value), "kind": args.which})
    return 0


def _cmd_cup(args) -> int:
    X = read_complex(args.complex)
    classes = [read_cochain(p, X, RING_Z2) for p in args.classes]
    nonzero = class_is_nonzero(cup_power(classes, X))
    _emit(args, "nonzero" if nonzero else "zero", {"cup_nonzero": nonzero})
    return 0


def _cmd_essential(args) -> int:
    X = read_complex(args.complex)
    cover = None
    if args.cover:
        xi = read_cochain(args.cover, X, RING_Z2)
        cover = build_cover(X, xi, 2)
    mode = "heuristic" if args.heuristic else "exhaustive"
    verdict = combinatorial_essentiality(
        X, args.n, cover=cover, mode=mode, budget_ms=args.budget, seed=args.seed)
    blocks = None
    if verdict.witness is not None:
        blocks = [sorted(b) for b in verdict.witness.blocks]
    plain = verdict.status
    if blocks is not None:
        plain += "\n" + json.dumps(blocks)
    _emit(args, plain, {"status": verdict.status, "method": verdict.method,
                        "witness": blocks})
    return 0


def _cmd_subdivide(args) -> int:
    X = read_complex(args.complex)
    write_complex(barycentric_subdivision(X), args.output)
    _emit(args, args.output, {"written": [args.output]})
    return 0


def _cmd_bounds(args) -> int:
    kind = args.table
    if kind == "b":
        table = bounds_mod.essential_ball_bounds(args.n, args.i, args.r)
        value = table.value(args.n, args.i)
        payload = {"kind": "b", "n": args.n, "i": args.i, "r": args.r, "value": value}
    elif kind == "breve":
        table = bounds_mod.cup_ball_bounds(args.n, args.i)
        value = table.value(args.n, args.i)
        payload = {"kind": "breve", "n": args.n, "i": args.i, "value": value}
    elif kind == "thm12":
        chain = bounds_mod.essential_vertex_bound_chain(args.n, args.sys)
        value = chain[0]
        payload = {"kind": "thm12", "n": args.n, "sys": args.sys,
                   "value": _fmt(value), "chain": [_fmt(chain[0]), _fmt(chain[1]),
                                                   str(chain[2])]}
    elif kind == "thm16":
        value = bounds_mod.cup_vertex_lower_bound(args.n, args.sys)
        payload = {"kind": "thm16", "n": args.n, "sys": args.sys, "value": _fmt(value)}
    elif kind == "fvec":
        fb = bounds_mod.fvector_lower_bounds(args.n, args.s)
        value = f"f0>={fb.f0} f{args.n - 1}>={fb.f_codim1}"
        payload = {"kind": "fvec", "n": args.n, "s": args.s, "f0": fb.f0,
                   "fk": {str(k): v for k, v in fb.fk.items()},
                   "f_codim1": fb.f_codim1}
    elif kind == "vn":
        out = bounds_mod.ball_volume_lower_bound(_fraction(args.r), _fraction_list(args.L))
        _emit(args, str(out), {"kind": "vn", "value": str(out)})
        return 0
    elif kind == "lemma41":
        grid = _fraction_list(args.grid) if args.grid else ()
        ok = bounds_mod.volume_recursion_check(_fraction_list(args.L), grid)
        _emit(args, "ok" if ok else "violated", {"kind": "lemma41", "ok": ok})
        return 0 if ok else 2
    else:
        raise _UsageError(f"unknown bounds table {kind!r}")
    if getattr(args, "csv", None) and kind in ("b", "breve"):
        lines = ["n,i,value"]
        for n_row in range(table.min_n, table.min_n + len(table.rows)):
            for i, v in enumerate(table.row(n_row)):
                lines.append(f"{n_row},{i},{v}")
        Path(args.csv).write_text("\n".join(lines) + "\n")
    _emit(args, _fmt(value), payload)
    return 0


def _cmd_verify_all(args) -> int:
    threads = args.threads
    if threads is None:
        threads = int(os.environ.get("SYSTOLA_THREADS", "1"))
    report = verify_grid(args.n_max, args.s_max, seed=args.seed, threads=threads)
    if args.csv:
        Path(args.csv).write_text(report.to_csv_text())
    if args.json:
        print(report.to_json_text(), end="")
    else:
        print(report.to_csv_text(), end="")
        print(f"# seed={report.seed} rows={len(report.rows)} "
              f"failed={len(report.failed_rows())}")
    return 0 if report.all_passed else 2


# -- parser ----------------------------------------------------------------

def _add_json(p):
    p.add_argument("--json", action="store_true", help="emit structured JSON")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="systola",
                     description="Edge-path systoles, Z2 cup products and "
                                 "covering complexes for simplicial complexes.")
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a complex (and its cocycles)")
    gsub = g.add_subparsers(dest="shape", required=True)
    grp = gsub.add_parser("rp", help="projective-space quotient with systole s")
    grp.add_argument("--dim", type=int, required=True)
    grp.add_argument("--systole", type=int, required=True)
    grp.add_argument("--sphere", action="store_true",
                     help="write the double-cover sphere instead of the quotient")
    gpoly = gsub.add_parser("polygon")
    gpoly.add_argument("--m", type=int, required=True)
    gcomp = gsub.add_parser("complete")
    gcomp.add_argument("--k", type=int, required=True)
    grp2 = gsub.add_parser("rp2-six")
    gtor = gsub.add_parser("torus7")
    for sp in (grp, gpoly, gcomp, grp2, gtor):
        sp.add_argument("-o", "--output", required=True)
        _add_json(sp)
        sp.set_defaults(func=_cmd_gen)

    s = sub.add_parser("systole", help="cover-relative systole from a cocycle")
    s.add_argument("complex")
    s.add_argument("--cocycle", required=True)
    s.add_argument("--fiber", default="z2", help="z2 (double) or zN (cyclic)")
    _add_json(s)
    s.set_defaults(func=_cmd_systole)

    ln = sub.add_parser("lnorm", help="shortest loop with nontrivial evaluation")
    ln.add_argument("complex")
    ln.add_argument("--cocycle", required=True)
    ln.add_argument("--fiber", default="z2")
    _add_json(ln)
    ln.set_defaults(func=_cmd_lnorm)

    r = sub.add_parser("radius", help="triviality radii")
    r.add_argument("which", choices=("homotopy", "homology"))
    r.add_argument("complex")
    r.add_argument("--cocycle", action="append", default=[])
    r.add_argument("--fiber", default="z2")
    _add_json(r)
    r.set_defaults(func=_cmd_radius)

    c = sub.add_parser("cup", help="is the cup product of the classes nonzero?")
    c.add_argument("complex")
    c.add_argument("--classes", nargs="+", required=True)
    _add_json(c)
    c.set_defaults(func=_cmd_cup)

    e = sub.add_parser("essential", help="combinatorial n-essentiality")
    e.add_argument("complex")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--cover", help="cocycle file defining the test cover")
    mode = e.add_mutually_exclusive_group()
    mode.add_argument("--exhaustive", action="store_true", default=True)
    mode.add_argument("--heuristic", action="store_true")
    e.add_argument("--budget", type=int, default=1000, help="heuristic budget, ms")
    e.add_argument("--seed", type=int, default=0)
    _add_json(e)
    e.set_defaults(func=_cmd_essential)

    sd = sub.add_parser("subdivide", help="barycentric subdivision")
    sd.add_argument("complex")
    sd.add_argument("-o", "--output", required=True)
    _add_json(sd)
    sd.set_defaults(func=_cmd_subdivide)

    b = sub.add_parser("bounds", help="exact bound evaluators")
    bsub = b.add_subparsers(dest="table", required=True)
    bb = bsub.add_parser("b")
    bb.add_argument("--n", type=int, required=True)
    bb.add_argument("--i", type=int, required=True)
    bb.add_argument("--r", type=int, required=True)
    bv = bsub.add_parser("breve")
    bv.add_argument("--n", type=int, required=True)
    bv.add_argument("--i", type=int, required=True)
    for nm in ("thm12", "thm16"):
        tp = bsub.add_parser(nm)
        tp.add_argument("--n", type=int, required=True)
        tp.add_argument("--sys", type=int, required=True)
        _add_json(tp)
        tp.set_defaults(func=_cmd_bounds)
    fv = bsub.add_parser("fvec")
    fv.add_argument("--n", type=int, required=True)
    fv.add_argument("--s", type=int, required=True)
    vn = bsub.add_parser("vn")
    vn.add_argument("--r", required=True)
    vn.add_argument("--L", required=True, help="comma-separated rationals")
    lm = bsub.add_parser("lemma41")
    lm.add_argument("--L", required=True)
    lm.add_argument("--grid", default="")
    for tp in (bb, bv, fv, vn, lm):
        _add_json(tp)
        tp.set_defaults(func=_cmd_bounds)
    for tp in (bb, bv):
        tp.add_argument("--csv", help="dump the whole table as CSV")

    va = sub.add_parser("verify-all", help="generate and check the whole grid")
    va.add_argument("--n-max", type=int, default=4)
    va.add_argument("--s-max", type=int, default=8)
    va.add_argument("--csv", help="also write the report CSV here")
    va.add_argument("--seed", type=int, default=0)
    va.add_argument("--threads", type=int, default=None,
                    help="worker threads (default: SYSTOLA_THREADS or 1)")
    _add_json(va)
    va.set_defaults(func=_cmd_verify_all)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except SystolaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
