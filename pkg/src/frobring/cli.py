"""Command-line entry point: ``frobring <subcommand> ...``."""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
import warnings
from typing import Sequence

from . import __version__
from .catalog import FROBENIUS_RINGS, PIR_RINGS, builtin, paper_order
from .codes import DEFAULT_CAP, span
from .enumerators import canonical_families, sse, swe, tuple_sse, tuple_swe
from .errors import (FrobringError, NonPrincipalError, PreconditionError, SizeError, ValidationError)
from .ideals import associate_classes, mobius_matrix, poset, zeta_matrix
from .io import load_generators, load_ring, parse_order
from .linalg import format_matrix
from .poly import hamming
from .ring import FiniteRing, all_ideals, is_frobenius, mask_to_elements
from .transform import build_matrices, pir_decomposition, qaj_order
from .verify import verify_identity

JSON_VERSION = 1
MAX_RING_SIZE = 64
ENUM_KINDS = ("swe", "sse", "hamming", "tuple-swe", "tuple-sse")

EXIT_OK, EXIT_ERROR, EXIT_MISMATCH, EXIT_PRECONDITION = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on bad flags; this tool reserves 2 for a failed identity."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return value


def build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--ring", help="ring-spec JSON file, or builtin:NAME")
    shared.add_argument("--order", help="comma-separated class representatives, by element label")
    shared.add_argument("--format", choices=("text", "json"), default="text")
    shared.add_argument("--seed", type=int, default=0)
    shared.add_argument("--cap", type=_positive, default=DEFAULT_CAP,
                        help="enumeration cap for |R|^n, |R|^m and |C|^lambda (default 2^24)")
    shared.add_argument("--max-ring-size", type=_positive, default=MAX_RING_SIZE)

    p = _Parser(prog="frobring", description="MacWilliams identities over finite Frobenius rings.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sub.add_parser("ring", parents=[shared], help="size, units, classes, ideals, Frobenius/PIR status")
    sub.add_parser("poset", parents=[shared], help="Hasse covers, A and A^-1")
    m = sub.add_parser("matrices", parents=[shared], help="D, Q, S, S^[lambda] and the PIR decomposition")
    m.add_argument("--lambda", dest="lam", type=_positive, default=1)
    e = sub.add_parser("enumerate", parents=[shared], help="an enumerator of the code spanned by --gens")
    e.add_argument("--gens", required=True, help="generator matrix file")
    e.add_argument("--kind", choices=ENUM_KINDS, default="swe")
    e.add_argument("--lambda", dest="lam", type=_positive, default=1)
    v = sub.add_parser("verify", parents=[shared], help="check a MacWilliams identity by brute force")
    v.add_argument("--gens", required=True, help="generator matrix file")
    v.add_argument("--kind", choices=ENUM_KINDS, default="swe")
    v.add_argument("--lambda", dest="lam", type=_positive, default=1)
    f = sub.add_parser("fuzz", parents=[shared], help="randomized identity checks on built-in rings")
    f.add_argument("--trials", type=_positive, default=20, help="random codes per ring")
    f.add_argument("--max-n", type=_positive, default=3)
    return p


# --------------------------------------------------------------------------
# helpers


def _ring(args) -> FiniteRing:
    if not args.ring:
        raise FrobringError("--ring is required")
    ring = load_ring(args.ring)
    if ring.size > args.max_ring_size:
        raise SizeError(f"--ring: |R| = {ring.size} exceeds the ring size cap {args.max_ring_size}")
    return ring


def _classes(ring: FiniteRing, args):
    order = None
    if args.order:
        order = parse_order(args.order, ring)
    elif ring.name and args.ring and args.ring.startswith("builtin:"):
        order = paper_order(ring.name, ring)
    return associate_classes(ring, order)


def _labels(ring, elements) -> list[str]:
    return [ring.label(x) for x in elements]


def _emit(args, command: str, text: str, data: dict) -> None:
    if args.format == "json":
        print(json.dumps({"version": JSON_VERSION, "command": command, **data}, indent=2))
    else:
        print(text)


def _ring_header(ring: FiniteRing) -> dict:
    return {"name": ring.name, "size": ring.size, "digest": ring.digest()}


def _code(ring, args):
    gens = load_generators(args.gens, ring)
    n = len(gens[0])
    if ring.size ** n > args.cap:
        raise SizeError(f"|R|^n = {ring.size}^{n} exceeds --cap {args.cap}")
    return span(ring, gens, cap=args.cap)


# --------------------------------------------------------------------------
# subcommands


def cmd_ring(args) -> int:
    ring = _ring(args)
    classes = _classes(ring, args)
    po = poset(ring, classes)
    frob = is_frobenius(ring)
    ideals = [_labels(ring, mask_to_elements(m)) for m in all_ideals(ring)]
    units = _labels(ring, ring.units)
    cls = [
        {"rep": ring.label(r), "members": _labels(ring, classes.members[i]), "ideal_size": classes.ideal_size[i]}
        for i, r in enumerate(classes.reps)
    ]
    witnesses = [
        {"ideal": _labels(ring, sorted(I)), "annihilator": _labels(ring, sorted(J)), "product": p}
        for I, J, p in frob.witnesses
    ]
    lines = [
        f"ring {ring.name or '?'}  |R| = {ring.size}  digest {ring.digest()}",
        f"units ({len(units)}): {', '.join(units)}",
        f"associate classes (t = {classes.t}):",
    ]
    for i, c in enumerate(cls):
        lines.append(f"  a{i} = {c['rep']:<8} |a{i}R| = {c['ideal_size']:<3} class {{{', '.join(c['members'])}}}")
    lines.append(f"ideals ({len(ideals)}):")
    lines += [f"  {{{', '.join(I)}}}" for I in ideals]
    lines.append(f"Frobenius: {'yes' if frob.is_frobenius else 'no'}")
    for w in witnesses:
        lines.append(f"  witness I = {{{', '.join(w['ideal'])}}}, Ann(I) = {{{', '.join(w['annihilator'])}}}, "
                     f"|I||Ann(I)| = {w['product']} != {ring.size}")
    lines.append(f"principal ideal ring: {'yes' if po.is_pir else 'no'}")
    _emit(args, "ring", "\n".join(lines), {
        "ring": _ring_header(ring), "units": units, "classes": cls, "ideals": ideals,
        "frobenius": frob.is_frobenius, "witnesses": witnesses, "pir": po.is_pir,
    })
    return EXIT_OK


def cmd_poset(args) -> int:
    ring = _ring(args)
    classes = _classes(ring, args)
    po = poset(ring, classes)
    A = zeta_matrix(po)
    A_inv = mobius_matrix(A)
    reps = _labels(ring, classes.reps)
    covers = po.covers()
    lines = [f"order: {', '.join(reps)}", "Hasse covers (a_iR < a_jR):"]
    lines += [f"  {reps[i]}R < {reps[j]}R" for i, j in covers]
    lines += ["A =", format_matrix(A), "A^-1 =", format_matrix(A_inv)]
    _emit(args, "poset", "\n".join(lines), {
        "ring": _ring_header(ring), "order": reps, "covers": [list(c) for c in covers],
        "A": [list(r) for r in A], "A_inv": [list(r) for r in A_inv],
    })
    return EXIT_OK


def cmd_matrices(args) -> int:
    ring = _ring(args)
    classes = _classes(ring, args)
    po = poset(ring, classes)
    mats = build_matrices(ring, classes, po)
    S_lam = mats.S_lambda(args.lam)
    reps = _labels(ring, classes.reps)
    pir = pir_decomposition(mats, po)
    qaj = qaj_order(ring, classes, po)
    lines = [f"order: {', '.join(reps)}"]
    for name, M in (("A", mats.A), ("A^-1", mats.A_inv), ("D", mats.D), ("Q", mats.Q), ("S = QDA^-1", mats.S)):
        lines += [f"{name} =", format_matrix(M)]
    if args.lam != 1:
        lines += [f"S^[{args.lam}] = QD^{args.lam}A^-1 =", format_matrix(S_lam)]
    if pir is None:
        lines.append("PIR decomposition: not a principal ideal ring")
    else:
        lines.append("PIR decomposition: Q = A P, annihilator permutation "
                     + ", ".join(f"{reps[i]}->{reps[j]}" for i, j in enumerate(pir.phi)))
        lines.append(f"  Q = A J in this order: {'yes' if pir.qaj else 'no'}")
        if qaj is not None:
            lines.append(f"  order with Q = A J: {','.join(_labels(ring, qaj))}")
    pir_json = None if pir is None else {
        "phi": list(pir.phi), "qaj": pir.qaj, "qaj_order": None if qaj is None else _labels(ring, qaj)}
    _emit(args, "matrices", "\n".join(lines), {
        "ring": _ring_header(ring), "order": reps, "lambda": args.lam,
        "A": [list(r) for r in mats.A], "A_inv": [list(r) for r in mats.A_inv],
        "D": [list(r) for r in mats.D], "Q": [list(r) for r in mats.Q],
        "S": [list(r) for r in mats.S], "S_lambda": [list(r) for r in S_lam],
        "pir": pir_json,
    })
    return EXIT_OK


def cmd_enumerate(args) -> int:
    ring = _ring(args)
    classes = _classes(ring, args)
    code = _code(ring, args)
    kind = args.kind
    if kind.startswith("tuple") and not poset(ring, classes).is_pir:
        raise PreconditionError("tuple enumerators require a principal ideal ring")
    if kind == "swe":
        enum = swe(code, classes)
    elif kind == "sse":
        enum = sse(code, classes)
    elif kind == "hamming":
        enum = hamming(swe(code, classes), classes.class_of[ring.zero])
    elif kind == "tuple-sse":
        enum = tuple_sse(code, classes, args.lam, args.cap)
    else:
        enum = tuple_swe(code, classes, args.lam, args.cap)
    reps = _labels(ring, classes.reps)
    lines = [f"order: {', '.join(reps)}", f"|C| = {code.size}, n = {code.n}", f"{kind}: {enum}"]
    _emit(args, "enumerate", "\n".join(lines), {
        "ring": _ring_header(ring), "order": reps, "kind": kind, "lambda": args.lam,
        "code_size": code.size, "n": code.n, "enumerator": enum.to_json(),
    })
    return EXIT_OK


def cmd_verify(args) -> int:
    ring = _ring(args)
    classes = _classes(ring, args)
    code = _code(ring, args)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        report = verify_identity(args.kind, code, args.lam, classes, args.cap)
    _emit(args, "verify", str(report), {"report": report.to_json()})
    return EXIT_OK if report.equal else EXIT_MISMATCH


def cmd_fuzz(args) -> int:
    """Randomized swe/sse/hamming checks on every Frobenius built-in, tuple checks on PIRs."""
    rng = random.Random(args.seed)
    results = []
    start = time.perf_counter()
    for name in FROBENIUS_RINGS:
        ring = builtin(name)
        classes = associate_classes(ring, paper_order(name, ring))
        canonical_families(ring, classes, *_aq(ring, classes))
        failures = 0
        for _ in range(args.trials):
            n = rng.randint(1, args.max_n)
            m = rng.randint(1, 2)
            gens = [[rng.randrange(ring.size) for _ in range(n)] for _ in range(m)]
            code = span(ring, gens, n=n, cap=args.cap)
            kinds = ["swe", "sse", "hamming"]
            if name in PIR_RINGS:
                kinds += ["tuple_swe", "tuple_sse"]
            for kind in kinds:
                lam = 2 if kind.startswith("tuple") else 1
                if code.size ** lam > args.cap:
                    continue
                if not verify_identity(kind, code, lam, classes, args.cap).equal:
                    failures += 1
                    results.append({"ring": name, "kind": kind, "generators": gens, "equal": False})
        results.append({"ring": name, "trials": args.trials, "failures": failures})
    elapsed = time.perf_counter() - start
    summary = [r for r in results if "trials" in r]
    bad = sum(r["failures"] for r in summary)
    lines = [f"{'PASS' if not r['failures'] else 'FAIL'} {r['ring']}: {r['trials']} codes, "
             f"{r['failures']} failures" for r in summary]
    lines.append(f"seed {args.seed}, {elapsed:.2f} s, {bad} failures")
    _emit(args, "fuzz", "\n".join(lines), {"seed": args.seed, "results": results, "failures": bad})
    return EXIT_OK if not bad else EXIT_MISMATCH


def _aq(ring, classes):
    mats = build_matrices(ring, classes, poset(ring, classes))
    return mats.A, mats.Q


COMMANDS = {
    "ring": cmd_ring,
    "poset": cmd_poset,
    "matrices": cmd_matrices,
    "enumerate": cmd_enumerate,
    "verify": cmd_verify,
    "fuzz": cmd_fuzz,
}


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:  # --help, --version and usage errors
        return exc.code if isinstance(exc.code, int) else EXIT_ERROR
    try:
        return COMMANDS[args.command](args)
    except PreconditionError as exc:
        print(f"frobring {args.command}: precondition failed: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (SizeError, NonPrincipalError) as exc:
        print(f"frobring {args.command}: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION if args.command == "verify" else EXIT_ERROR
    except ValidationError as exc:
        print(f"frobring {args.command}: ring axiom '{exc.axiom}' fails at {exc.triple}", file=sys.stderr)
        return EXIT_ERROR
    except FrobringError as exc:
        print(f"frobring {args.command}: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
