"""Command-line surface: property checks, matrix reduction, witness
construction, and the theorem-verification suites.

Exit codes: 0 on success (including a legitimate false verdict), 1 when a
verification suite finds a counterexample to a proved statement, 2 on bad
input.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import harness
from .clean import adequate_decomposition, is_clean, is_exchange, is_neat_element
from .errors import RingLabError
from .matrices import cert_to_doc, mat_from_doc, smith_normal_form
from .ranges import (
    asr1_witness,
    is_asr1_ring,
    is_asr1_two_sided,
    is_dyadic_range_1,
    is_L_ring,
    is_stable_range_1,
    is_stable_range_2,
    sr2_witness,
)
from .rings import EuclideanDomain, FiniteRing, has_D_property, parse_ring_spec

PROPERTIES = ("sr1", "sr2", "asr1-right", "asr1-left", "asr1-2sided",
              "dyadic", "clean", "exchange", "lring", "dprop")


def _emit(doc, path=None):
    text = json.dumps(doc, indent=2, sort_keys=True)
    if path:
        with open(path, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _finite(ring):
    if not isinstance(ring, FiniteRing):
        raise RingLabError(f"{ring} is not finite; this check needs a "
                           "finite ring")
    return ring


def _check(args) -> int:
    ring = parse_ring_spec(args.ring_spec)
    prop = args.property
    if prop == "sr1":
        rep = is_stable_range_1(ring)
    elif prop == "sr2":
        rep = is_stable_range_2(_finite(ring))
    elif prop == "asr1-right":
        rep = is_asr1_ring(_finite(ring), "right")
    elif prop == "asr1-left":
        rep = is_asr1_ring(_finite(ring), "left")
    elif prop == "asr1-2sided":
        rep = is_asr1_two_sided(_finite(ring))
    elif prop == "dyadic":
        rep = is_dyadic_range_1(_finite(ring), "right")
    elif prop == "clean":
        rep = is_clean(_finite(ring))
    elif prop == "exchange":
        rep = is_exchange(_finite(ring))
    elif prop == "lring":
        rep = is_L_ring(_finite(ring))
    else:
        rep = has_D_property(_finite(ring))
    _emit(rep.to_dict())
    return 0


def _snf(args) -> int:
    with open(args.input) as fh:
        doc = json.load(fh)
    mat = mat_from_doc(doc)
    cert = smith_normal_form(mat)
    out = cert_to_doc(cert, doc["ring"])
    if args.certify:
        cert.verify()
        out["certified"] = True
    _emit(out, args.output)
    return 0


def _euclid_ring(spec_text):
    ring = parse_ring_spec(spec_text)
    if not isinstance(ring, EuclideanDomain):
        raise RingLabError(f"{spec_text} is not Z or F_p[x]")
    return ring


def _witness(args) -> int:
    ring = _euclid_ring(args.ring)
    vals = [ring.parse_elem(v) for v in (args.a, args.b, args.c)]
    fn = asr1_witness if args.kind == "asr1" else sr2_witness
    w = fn(*vals, ring=ring)
    _emit({
        "kind": w.kind,
        "ring": args.ring,
        "inputs": [str(v) for v in w.inputs],
        "shifts": [str(s) for s in w.shifts],
        "verdict": w.verdict,
    })
    return 0


def _adequate(args) -> int:
    ring = _euclid_ring(args.ring)
    dec = adequate_decomposition(ring.parse_elem(args.a),
                                 ring.parse_elem(args.b), ring=ring)
    _emit({"ring": args.ring, "a": str(dec.a), "b": str(dec.b),
           "r": str(dec.r), "s": str(dec.s), "holds": dec.holds()})
    return 0


def _neat(args) -> int:
    ring = _euclid_ring(args.ring)
    rep = is_neat_element(ring, ring.parse_elem(args.a))
    _emit(rep.to_dict())
    return 0


def _verify(args) -> int:
    catalog = harness.load_catalog(args.catalog) if args.catalog else None
    suites = harness.SUITES if args.suite == "all" else (args.suite,)
    started = time.time()
    report = harness.run_all(catalog, suites=suites)
    doc = {"report": report,
           "metadata": {"elapsed_seconds": round(time.time() - started, 3)}}
    _emit(doc, args.report)
    return 1 if report["counterexamples"] else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ringlab",
        description="certified ring-theoretic computations and checks")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="decide a ring property")
    p.add_argument("ring_spec")
    p.add_argument("--property", required=True, choices=PROPERTIES)
    p.set_defaults(fn=_check)

    p = sub.add_parser("snf", help="canonical diagonal reduction")
    p.add_argument("--input", required=True)
    p.add_argument("--output")
    p.add_argument("--certify", action="store_true")
    p.set_defaults(fn=_snf)

    p = sub.add_parser("witness", help="stable-range shift construction")
    p.add_argument("kind", choices=("asr1", "sr2"))
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("c")
    p.add_argument("--ring", default="Z")
    p.set_defaults(fn=_witness)

    p = sub.add_parser("adequate", help="split a against b")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--ring", default="Z")
    p.set_defaults(fn=_adequate)

    p = sub.add_parser("neat", help="clean quotients modulo an element")
    p.add_argument("a")
    p.add_argument("--ring", default="Z")
    p.set_defaults(fn=_neat)

    p = sub.add_parser("verify", help="run theorem suites over a catalog")
    p.add_argument("--suite", default="all",
                   choices=("all",) + harness.SUITES)
    p.add_argument("--catalog")
    p.add_argument("--report")
    p.set_defaults(fn=_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors already; normalize the rest
        return 2 if exc.code else 0
    try:
        return args.fn(args)
    except (RingLabError, OSError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
