"""Command line entry point.

Exit codes: 0 on success, 1 on a domain error (reported as a JSON object
on stderr with a stable error code), 2 on usage errors (argparse).  All
JSON output is compact with sorted keys so runs are byte-identical.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import dotout, naming
from .category import ClusterCategory
from .clustertilted import (
    apr_mutate,
    apr_sink_check,
    endo_presentation,
    module_category,
    theorem_b_verify,
)
from .errors import ClusterTiltError, ValidationError, VerificationFailed
from .oracle import catalan_count
from .quiver import QuiverSpec, parse_quiver, recognize_dynkin
from .tilting import TiltingObject, complements, enumerate_tilting

VERIFY_KINDS = ("theorem-a", "theorem-b", "corollary-count", "apr")


def dumps(payload) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def _add_quiver_args(sp, required: bool = True):
    grp = sp.add_mutually_exclusive_group(required=required)
    grp.add_argument("--quiver", help="inline quiver, e.g. '1->2 2->3'")
    grp.add_argument("--quiver-file", help="path to a quiver description file")


def _load_quiver(args) -> QuiverSpec:
    if args.quiver_file:
        with open(args.quiver_file, "r", encoding="utf-8") as fh:
            return parse_quiver(fh.read())
    return parse_quiver(args.quiver)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="cluster-tilt",
        description="Cluster categories of Dynkin quivers: AR structure, "
        "tilting objects, mutation, and endomorphism presentations.",
    )
    sub = p.add_subparsers(dest="cmd", required=True)

    sp = sub.add_parser("check-dynkin", help="classify the underlying Dynkin graph")
    _add_quiver_args(sp)

    sp = sub.add_parser("ar", help="emit an AR-quiver view")
    _add_quiver_args(sp)
    sp.add_argument("--mode", choices=dotout.MODES, default="C")
    sp.add_argument("--tilting", help="comma-separated summands for mode gamma")
    sp.add_argument("--format", choices=("json", "dot"), default="json")

    sp = sub.add_parser("hom", help="Hom space between two cluster objects")
    _add_quiver_args(sp)
    sp.add_argument("--x", required=True, help="source object (id or name)")
    sp.add_argument("--y", required=True, help="target object (id or name)")
    sp.add_argument("--format", choices=("json",), default="json")

    sp = sub.add_parser("tilting", help="enumerate tilting objects")
    _add_quiver_args(sp)
    sp.add_argument("--format", choices=("json",), default="json")

    sp = sub.add_parser("endo", help="present the endomorphism algebra")
    _add_quiver_args(sp)
    sp.add_argument("--tilting", required=True, help="comma-separated summands")
    sp.add_argument("--format", choices=("json", "dot"), default="json")

    sp = sub.add_parser("mutate", help="exchange one summand of a tilting object")
    _add_quiver_args(sp)
    sp.add_argument("--tilting", required=True, help="comma-separated summands")
    sp.add_argument("--at", required=True, help="summand to exchange")
    sp.add_argument("--format", choices=("json",), default="json")

    sp = sub.add_parser("verify", help="run a named verification")
    sp.add_argument("what", choices=VERIFY_KINDS)
    _add_quiver_args(sp)
    sp.add_argument("--tbar", help="comma-separated almost complete object")
    sp.add_argument(
        "--samples",
        type=int,
        default=0,
        help="sample this many almost complete objects instead of all",
    )
    sp.add_argument("--seed", type=int, default=20240815)

    sp = sub.add_parser("serve", help="run the HTTP JSON service")
    sp.add_argument("--host", default="127.0.0.1")
    sp.add_argument("--port", type=int, default=8642)
    sp.add_argument("--static-dir", help="directory of UI assets to serve at /")
    sp.add_argument("--snapshot", help="write session snapshot here on shutdown")
    return p


def _parse_tilting(cat: ClusterCategory, text: str) -> TiltingObject:
    names = [part for part in text.split(",") if part.strip()]
    summands = naming.resolve_many(cat, names)
    ordered = tuple(sorted(set(summands), key=lambda z: cat.cluster.index[z]))
    return TiltingObject(ordered)


def _tilting_json(cat: ClusterCategory, t: TiltingObject) -> dict:
    ids = naming.object_ids(cat)
    return {"summands": [ids[z] for z in t.summands]}


def cmd_check_dynkin(args) -> int:
    q = _load_quiver(args)
    d = recognize_dynkin(q)
    print(
        dumps(
            {
                "family": d.family,
                "rank": d.rank,
                "coxeterNumber": d.coxeter_number,
                "vertices": list(q.vertices),
            }
        )
    )
    return 0


def cmd_ar(args) -> int:
    cat = ClusterCategory(_load_quiver(args))
    tilting = _parse_tilting(cat, args.tilting) if args.tilting else None
    view = dotout.ar_view(cat, args.mode, tilting)
    if args.format == "dot":
        sys.stdout.write(dotout.ar_dot(view))
    else:
        print(dumps(view))
    return 0


def cmd_hom(args) -> int:
    cat = ClusterCategory(_load_quiver(args))
    x = naming.resolve(cat, args.x)
    y = naming.resolve(cat, args.y)
    print(dumps(cat.hom_cluster(x, y).to_json()))
    return 0


def cmd_tilting(args) -> int:
    cat = ClusterCategory(_load_quiver(args))
    tilts = enumerate_tilting(cat)
    print(
        dumps(
            {
                "count": len(tilts),
                "tilting": [_tilting_json(cat, t) for t in tilts],
            }
        )
    )
    return 0


def cmd_endo(args) -> int:
    cat = ClusterCategory(_load_quiver(args))
    pres = endo_presentation(cat, _parse_tilting(cat, args.tilting))
    if args.format == "dot":
        sys.stdout.write(dotout.algebra_dot(pres))
    else:
        print(dumps(pres.to_json()))
    return 0


def mutate_payload(cat: ClusterCategory, t: TiltingObject, at) -> dict:
    """Shared by the CLI and the HTTP service."""
    ids = naming.object_ids(cat)
    target = naming.resolve(cat, at)
    if target not in t.summands:
        raise ValidationError(
            f"{naming.object_name(cat, target)} is not a summand of the tilting object"
        )
    tbar = tuple(z for z in t.summands if z != target)
    pair = complements(cat, tbar)
    incoming = pair.Mstar if pair.M == target else pair.M
    new_summands = tuple(
        sorted(tbar + (incoming,), key=lambda z: cat.cluster.index[z])
    )
    new_t = TiltingObject(new_summands)
    pres = endo_presentation(cat, new_t)
    return {
        "tilting": _tilting_json(cat, new_t),
        "previous": _tilting_json(cat, t),
        "exchange": {
            "M": ids[pair.M],
            "Mstar": ids[pair.Mstar],
            "B": [ids[z] for z in pair.B],
            "Bprime": [ids[z] for z in pair.Bprime],
        },
        "completions": sorted([ids[pair.M], ids[pair.Mstar]]),
        "current": ids[incoming],
        "presentation": pres.to_json(),
        "ar": dotout.ar_view(cat, "gamma", new_t),
    }


def cmd_mutate(args) -> int:
    cat = ClusterCategory(_load_quiver(args))
    t = _parse_tilting(cat, args.tilting)
    print(dumps(mutate_payload(cat, t, args.at)))
    return 0


def _almost_complete_objects(cat: ClusterCategory):
    out = set()
    for t in enumerate_tilting(cat):
        for i in range(len(t.summands)):
            out.add(tuple(s for j, s in enumerate(t.summands) if j != i))
    return sorted(out, key=lambda tb: tuple(cat.cluster.index[z] for z in tb))


def run_verify(what: str, q: QuiverSpec, tbar=None, samples=0, seed=20240815) -> str:
    """Raises VerificationFailed on any violation; returns the PASS line."""
    cat = ClusterCategory(q)
    if what == "corollary-count":
        tilts = enumerate_tilting(cat)
        counts = {len(module_category(cat, t).vertices) for t in tilts}
        if counts != {cat.h}:
            raise VerificationFailed(f"module category sizes {sorted(counts)} != {cat.h}")
        d = recognize_dynkin(q)
        if d.family == "A" and len(tilts) != catalan_count(d.rank):
            raise VerificationFailed(
                f"{len(tilts)} tilting objects, expected {catalan_count(d.rank)}"
            )
        return f"{len(tilts)} tilting objects, all with {cat.h} indecomposables; PASS"
    if what == "theorem-a":
        tilts = enumerate_tilting(cat)
        for t in tilts:
            model = module_category(cat, t)
            if len(model.vertices) != cat.h:
                raise VerificationFailed(f"model of {t.summands} is not h-sized")
        return (
            f"theorem-a: {len(tilts)} tilting objects, "
            f"each module category has {cat.h} vertices; PASS"
        )
    if what == "theorem-b":
        if tbar is not None:
            targets = [tbar]
        else:
            targets = _almost_complete_objects(cat)
            if samples and samples < len(targets):
                targets = random.Random(seed).sample(targets, samples)
        for tb in targets:
            theorem_b_verify(cat, tb)
        return f"theorem-b: {len(targets)} exchange pairs verified; PASS"
    sinks = [v for v in q.vertices if not q.out[v]]
    for v in sinks:
        apr_sink_check(q, v)
    for v in q.vertices:
        apr_mutate(q, v)
    return (
        f"apr: {len(sinks)} sinks reversed hereditarily, "
        f"{len(q.vertices)} vertices mutated; PASS"
    )


def cmd_verify(args) -> int:
    q = _load_quiver(args)
    tbar = None
    if args.tbar:
        cat = ClusterCategory(q)
        tbar = _parse_tilting(cat, args.tbar).summands
    print(run_verify(args.what, q, tbar=tbar, samples=args.samples, seed=args.seed))
    return 0


def cmd_serve(args) -> int:
    from .server import serve

    serve(
        host=args.host,
        port=args.port,
        static_dir=args.static_dir,
        snapshot=args.snapshot,
    )
    return 0


_DISPATCH = {
    "check-dynkin": cmd_check_dynkin,
    "ar": cmd_ar,
    "hom": cmd_hom,
    "tilting": cmd_tilting,
    "endo": cmd_endo,
    "mutate": cmd_mutate,
    "verify": cmd_verify,
    "serve": cmd_serve,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _DISPATCH[args.cmd](args)
    except ClusterTiltError as exc:
        sys.stderr.write(
            dumps({"error": type(exc).__name__, "message": str(exc)}) + "\n"
        )
        return 1


if __name__ == "__main__":
    sys.exit(main())
