"""Command-line front end: ``contactloci {lattice,contact,zeta,generic,count}``.

Every command prints one JSON report on stdout. Diagnostics go to stderr.
Exit codes: 0 success, 1 input error, 2 budget exceeded, 3 bad reduction.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from typing import List, Optional

from .arrangement import MultiArrangement, rank
from .contact import contact_betti, decomposition, nu_encoding, restricted_decomposition
from .errors import ArrangementError, BadReduction, BudgetExceeded, ContactLociError
from .generic import betti_table
from .jets import count_contact, count_restricted
from .lattice import build_poset, char_poly, combinatorial_type, complement_betti, os_presentation
from .zeta import naive_zeta, restricted_point_count, zeta_point_count

EXIT_INPUT, EXIT_BUDGET, EXIT_REDUCTION = 1, 2, 3


class UsageError(ContactLociError):
    pass


def _load(path: str):
    try:
        with open(path, "rb") as fh:
            raw = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ArrangementError(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    except UnicodeDecodeError as exc:
        raise ArrangementError(f"{path}: {exc}") from None
    return MultiArrangement.from_json(data), hashlib.sha256(raw).hexdigest()


def _poly(p, var):
    return {"coeffs": p.to_json(), "text": p.format(var)}


def cmd_lattice(A: MultiArrangement) -> dict:
    P = build_poset(A)
    return {
        "arrangement": A.to_json(),
        "poset": P.to_json(),
        "rank": P.rank,
        "char_poly": _poly(char_poly(A, P), "q"),
        "complement_betti": _poly(complement_betti(A, P), "t"),
        "combinatorial_type": combinatorial_type(A).to_json(),
    }


def cmd_contact(A: MultiArrangement, m: int, restricted: bool) -> dict:
    if m < 0:
        raise UsageError("--m must be nonnegative")
    if restricted:
        if m < 1:
            raise UsageError("--restricted needs --m >= 1")
        comps = restricted_decomposition(A, m)
    else:
        comps = decomposition(A, m)
    bound = rank(A) + 1
    out = {
        "m": m,
        "T": [list(c.descriptor.j) for c in comps],
        # generators e_J / del e_J are listed for |J| <= rank + 1 only
        "os_subset_bound": bound,
        "components": [],
    }
    for c in comps:
        entry = c.to_json(restricted=restricted)
        entry["os_generators"] = [g.to_json() for g in os_presentation(A, c.descriptor.j, bound)]
        if m >= 1:
            entry["nu_encoding"] = nu_encoding(A, c.descriptor).to_json()
        out["components"].append(entry)
    if not restricted:
        out["contact_betti"] = _poly(contact_betti(A, m), "t")
    return out


def cmd_zeta(A: MultiArrangement, max_m: int) -> dict:
    if max_m < 0:
        raise UsageError("--max-m must be nonnegative")
    series = naive_zeta(A, max_m)
    out = series.to_json()
    out["text"] = [c.format("q") for c in series.coefficients]
    # the non-naive zeta needs classes of the Milnor-type fibers; list the
    # restricted components instead
    out["restricted_components"] = {
        str(m): [c.to_json(restricted=True) for c in restricted_decomposition(A, m)] for m in range(1, max_m + 1)
    }
    return out


def cmd_generic(kind: str, n: int, d: int, m: int) -> dict:
    table = betti_table(kind, n, d, m)
    return {"kind": kind, "n": n, "d": d, "m": m, "betti": {k: [str(v) for v in vs] for k, vs in table.items()}}


def cmd_count(A: MultiArrangement, m: int, p: int, restricted: bool) -> dict:
    if restricted:
        if m < 1:
            raise UsageError("--restricted needs --m >= 1")
        count = count_restricted(A, m, p)
        predicted = restricted_point_count(A, m, p)
    else:
        count = count_contact(A, m, p)
        predicted = zeta_point_count(A, m, p)
    return {
        "m": m,
        "p": p,
        "restricted": restricted,
        "count": str(count),
        "predicted": str(predicted),
        "match": count == predicted,
    }


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="contactloci", description="Contact loci of hyperplane multi-arrangements.")
    ap.add_argument("--golden", action="store_true", help="omit timing from the report")
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("lattice", help="intersection poset with its Moebius values and polynomials")
    s.add_argument("file")

    s = sub.add_parser("contact", help="components of the m-contact locus")
    s.add_argument("file")
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--restricted", action="store_true")

    s = sub.add_parser("zeta", help="truncated naive motivic zeta function")
    s.add_argument("file")
    s.add_argument("--max-m", type=int, required=True)

    s = sub.add_parser("generic", help="closed Betti formulas for generic arrangements")
    s.add_argument("--kind", choices=["generic", "generic-central"], required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--m", type=int, required=True)

    s = sub.add_parser("count", help="brute-force F_p count against the prediction")
    s.add_argument("file")
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--restricted", action="store_true")

    for sp in sub.choices.values():
        sp.add_argument("--golden", action="store_true", default=argparse.SUPPRESS, help="omit timing from the report")
    return ap


def _run(args) -> dict:
    if args.command == "generic":
        return {"input_digest": None, "result": cmd_generic(args.kind, args.n, args.d, args.m)}
    A, digest = _load(args.file)
    if args.command == "lattice":
        result = cmd_lattice(A)
    elif args.command == "contact":
        result = cmd_contact(A, args.m, args.restricted)
    elif args.command == "zeta":
        result = cmd_zeta(A, args.max_m)
    else:
        result = cmd_count(A, args.m, args.p, args.restricted)
    return {"input_digest": digest, "result": result}


def main(argv: Optional[List[str]] = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else 0
    echo = {k: v for k, v in vars(args).items() if k != "golden"}
    start = time.perf_counter()
    try:
        body = _run(args)
    except BudgetExceeded as exc:
        print(f"contactloci: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except BadReduction as exc:
        print(f"contactloci: bad reduction: {exc}", file=sys.stderr)
        return EXIT_REDUCTION
    except (ContactLociError, ValueError) as exc:
        print(f"contactloci: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    report = {"command": echo, **body}
    if not args.golden:
        report["timing"] = {"seconds": round(time.perf_counter() - start, 6)}
    json.dump(report, sys.stdout, indent=2)
    sys.stdout.write("\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
