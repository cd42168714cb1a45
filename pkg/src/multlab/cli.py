"""Command line front end for the kernel-run laboratory.

Subcommands cover the minimal forcing bound (constant), run avoidance at a
fixed bound (avoid), certificate rechecks (verify-cert), kernel-run scans
(runs), block-divisible sequences (blockseq), monochromatic finite-union
families (hindman), and finite-sums witnesses (witness, verify-witness).

Exit codes: 0 for a definitive answer, including unsat decisions and
failed verifications; 2 when a search found nothing or ran out of budget;
1 for usage and input validation errors.

Results are JSON documents with a fixed key order.  Under --deterministic
the searches run sequentially and the output carries no wall-clock or
thread information, so identical invocations produce identical bytes.
"""

from __future__ import annotations

import argparse
import json
import sys

from .blockseq import DEFAULT_CAP, generate_block_sequence, subset_sum, verify_block_divisibility
from .hildebrand import (
    FOUND,
    SAT,
    UNKNOWN,
    SearchOptions,
    avoidance_search,
    certificate_from_dict,
    certificate_to_dict,
    hildebrand_constant,
    verify_certificate,
)
from .hindman import (
    SearchBudgetExceeded,
    SubsetColoring,
    max_parity_coloring,
    monochromatic_fu_search,
    random_coloring,
    size_parity_coloring,
)
from .multfunc import (
    FINITE_SUPPORT,
    SIEVE_BOUNDED,
    MultiplicativeFunction,
    find_runs,
    function_from_dict,
    function_to_dict,
)
from .witness import (
    fs_closure,
    ip_witness_direct,
    ip_witness_from_proof,
    verify_witness,
    witness_from_dict,
    witness_to_dict,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NOT_FOUND = 2

NOT_FOUND = "not-found"


class _Parser(argparse.ArgumentParser):
    """argparse reserves exit code 2 for usage errors; this CLI uses 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_output_flags(p: argparse.ArgumentParser):
    p.add_argument("--format", choices=["json", "plain"], default="json")
    p.add_argument("--out", metavar="PATH", help="write the result here instead of stdout")


def _add_search_flags(p: argparse.ArgumentParser, symmetry: bool = True):
    p.add_argument("--deterministic", action="store_true",
                   help="sequential scan, reproducible output bytes")
    if symmetry:
        p.add_argument("--symmetry-reduction", action="store_true",
                       help="restrict the first prime to unit-orbit representatives")
    p.add_argument("--threads", type=int, default=1,
                   help="worker threads; honored only without --deterministic")
    p.add_argument("--node-budget", type=int, default=None)
    p.add_argument("--time-budget", type=float, default=None)


def _add_function_flags(p: argparse.ArgumentParser):
    p.add_argument("--spec", metavar="FILE", help="function spec JSON file")
    p.add_argument("--k", type=int, help="number of value classes (inline spec)")
    p.add_argument("--mode", choices=[FINITE_SUPPORT, SIEVE_BOUNDED], default=None)
    p.add_argument("--limit", type=int, default=None,
                   help="largest evaluable integer (sieve-bounded mode)")
    p.add_argument("--default", dest="default_class", type=int, default=0,
                   help="class of unlisted primes (sieve-bounded mode)")
    p.add_argument("--primes", default="",
                   help="inline prime classes, e.g. '2:1,3:0'")


def _load_json(path: str, parser: _Parser):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        parser.error(f"cannot read {path}: {exc}")
    except json.JSONDecodeError as exc:
        parser.error(f"{path} is not valid JSON: {exc}")


def _parse_primes(text: str, parser: _Parser) -> dict[int, int]:
    assignment: dict[int, int] = {}
    if not text.strip():
        return assignment
    for chunk in text.split(","):
        parts = chunk.strip().split(":")
        if len(parts) != 2:
            parser.error(f"--primes entry {chunk.strip()!r} is not of the form p:c")
        try:
            p, c = int(parts[0]), int(parts[1])
        except ValueError:
            parser.error(f"--primes entry {chunk.strip()!r} is not a pair of integers")
        if p in assignment:
            parser.error(f"--primes repeats prime {p}")
        assignment[p] = c
    return assignment


def _function_from_args(args, parser: _Parser) -> MultiplicativeFunction:
    if args.spec is not None:
        if args.k is not None or args.mode is not None or args.limit is not None \
                or args.primes or args.default_class:
            parser.error("--spec cannot be combined with inline function flags")
        try:
            return function_from_dict(_load_json(args.spec, parser))
        except ValueError as exc:
            parser.error(str(exc))
    if args.k is None:
        parser.error("describe the function with --spec FILE or inline flags starting at --k")
    assignment = _parse_primes(args.primes, parser)
    mode = args.mode if args.mode is not None else FINITE_SUPPORT
    try:
        return MultiplicativeFunction(
            args.k, assignment, mode=mode, limit=args.limit,
            default_class=args.default_class,
        )
    except ValueError as exc:
        parser.error(str(exc))


def _options_from_args(args) -> SearchOptions:
    return SearchOptions(
        deterministic=args.deterministic,
        symmetry_reduction=getattr(args, "symmetry_reduction", False),
        threads=args.threads,
        node_budget=args.node_budget,
        time_budget=args.time_budget,
    )


def _options_doc(opts: SearchOptions, with_symmetry: bool = True) -> dict:
    doc: dict = {"deterministic": opts.deterministic}
    if with_symmetry:
        doc["symmetry_reduction"] = opts.symmetry_reduction
    if not opts.deterministic:
        doc["threads"] = opts.threads
    doc["node_budget"] = opts.node_budget
    doc["time_budget"] = opts.time_budget
    return doc


def _stats_doc(stats, deterministic: bool) -> dict:
    doc = {
        "nodes": stats.nodes,
        "backtracks": stats.backtracks,
        "depth_reached": stats.depth_reached,
    }
    if not deterministic:
        doc["wall_time"] = round(stats.wall_time, 6)
    return doc


def _plain_doc(doc: dict) -> str:
    lines = []
    for key, value in doc.items():
        if key == "command":
            continue
        if value is None:
            lines.append(f"{key} -")
        elif isinstance(value, (str, int, float, bool)):
            lines.append(f"{key} {value}")
        elif isinstance(value, list) and all(isinstance(v, (str, int)) for v in value):
            lines.append(f"{key} " + " ".join(str(v) for v in value))
        else:
            lines.append(f"{key} " + json.dumps(value, separators=(",", ":")))
    return "\n".join(lines) + "\n"


def _emit(args, doc: dict, plain: str | None = None):
    if args.format == "json":
        text = json.dumps(doc, indent=2) + "\n"
    else:
        text = plain if plain is not None else _plain_doc(doc)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_constant(args, parser: _Parser) -> int:
    opts = _options_from_args(args)
    try:
        res = hildebrand_constant(args.k, args.b_max, r=args.r, options=opts)
    except ValueError as exc:
        parser.error(str(exc))
    cert = res.certificate
    doc = {
        "command": "constant",
        "k": args.k,
        "r": args.r,
        "b_max": args.b_max,
        "status": res.status,
        "c": res.c,
        "reason": res.reason,
        "certificate_for": res.certificate_for,
        "certificate": certificate_to_dict(cert) if cert else None,
        "certificate_verified": verify_certificate(cert) if cert else None,
        "options": _options_doc(opts),
        "stats": _stats_doc(res.stats, opts.deterministic),
    }
    _emit(args, doc)
    return EXIT_OK if res.status == FOUND else EXIT_NOT_FOUND


def cmd_avoid(args, parser: _Parser) -> int:
    opts = _options_from_args(args)
    try:
        out = avoidance_search(args.k, args.r, args.B, options=opts)
    except ValueError as exc:
        parser.error(str(exc))
    cert = out.certificate
    doc = {
        "command": "avoid",
        "k": args.k,
        "r": args.r,
        "B": args.B,
        "status": out.status,
        "reason": out.reason,
        "certificate": certificate_to_dict(cert) if cert else None,
        "verified": verify_certificate(cert) if cert else None,
        "options": _options_doc(opts),
        "stats": _stats_doc(out.stats, opts.deterministic),
    }
    _emit(args, doc)
    return EXIT_NOT_FOUND if out.status == UNKNOWN else EXIT_OK


def cmd_verify_cert(args, parser: _Parser) -> int:
    doc_in = _load_json(args.path, parser)
    if isinstance(doc_in, dict) and "certificate" in doc_in:
        if not isinstance(doc_in["certificate"], dict):
            parser.error(f"{args.path} contains no certificate")
        doc_in = doc_in["certificate"]
    try:
        cert = certificate_from_dict(doc_in)
    except ValueError as exc:
        parser.error(str(exc))
    runs = find_runs(cert.function(), cert.r, cert.B)
    doc = {
        "command": "verify-cert",
        "k": cert.k,
        "r": cert.r,
        "B": cert.B,
        "valid": not runs,
        "first_violation": runs[0] if runs else None,
    }
    _emit(args, doc)
    return EXIT_OK


def cmd_runs(args, parser: _Parser) -> int:
    f = _function_from_args(args, parser)
    try:
        runs = find_runs(f, args.r, args.bound)
    except ValueError as exc:
        parser.error(str(exc))
    doc = {
        "command": "runs",
        "r": args.r,
        "bound": args.bound,
        "function": function_to_dict(f),
        "runs": runs,
        "count": len(runs),
    }
    _emit(args, doc, plain="".join(f"{a}\n" for a in runs))
    return EXIT_OK


def cmd_blockseq(args, parser: _Parser) -> int:
    try:
        seq = generate_block_sequence(args.n, cap=args.cap)
    except ValueError as exc:
        parser.error(str(exc))
    report = verify_block_divisibility(seq)
    doc = {
        "command": "blockseq",
        "n": args.n,
        "terms": [str(t) for t in seq.terms],
        "verified": report.ok,
        "pairs_checked": report.checked,
    }
    if not report.ok:
        doc["counterexample"] = [list(b) for b in report.counterexample]
    _emit(args, doc, plain="".join(f"{t}\n" for t in seq.terms))
    return EXIT_OK


def cmd_hindman(args, parser: _Parser) -> int:
    inline_function = args.spec is not None or args.k is not None
    if args.coloring != "random" and args.classes is not None:
        parser.error("--classes applies only to --coloring random")
    if args.coloring != "random" and args.seed is not None:
        parser.error("--seed applies only to --coloring random")
    if args.coloring != "function" and inline_function:
        parser.error("function flags apply only to --coloring function")
    seed = None
    if args.coloring == "size-parity":
        coloring = size_parity_coloring(args.n)
    elif args.coloring == "max-parity":
        coloring = max_parity_coloring(args.n)
    elif args.coloring == "random":
        seed = args.seed if args.seed is not None else 0
        classes = args.classes if args.classes is not None else 2
        if classes < 1:
            parser.error(f"--classes must be >= 1, got {classes}")
        coloring = random_coloring(args.n, classes, seed)
    else:
        f = _function_from_args(args, parser)
        if f.mode != FINITE_SUPPORT:
            parser.error("--coloring function needs a finite-support function")
        try:
            seq = generate_block_sequence(args.n, cap=args.cap)
        except ValueError as exc:
            parser.error(str(exc))
        cache: dict[tuple[int, ...], int] = {}

        def color(block):
            if block not in cache:
                cache[block] = 1 + f.evaluate(subset_sum(seq, block))
            return cache[block]

        coloring = SubsetColoring(args.n, f.k, color)
    status, reason, family = NOT_FOUND, None, None
    try:
        family = monochromatic_fu_search(coloring, args.m, node_budget=args.node_budget)
    except SearchBudgetExceeded:
        status, reason = UNKNOWN, "node-budget"
    if family is not None:
        status = FOUND
    doc = {
        "command": "hindman",
        "n": args.n,
        "m": args.m,
        "coloring": args.coloring,
        "classes": coloring.classes,
        "seed": seed,
        "status": status,
        "reason": reason,
        "color": coloring.color_of(family.blocks[0]) if family else None,
        "blocks": [list(b) for b in family.blocks] if family else None,
    }
    _emit(args, doc)
    return EXIT_OK if status == FOUND else EXIT_NOT_FOUND


def cmd_witness(args, parser: _Parser) -> int:
    f = _function_from_args(args, parser)
    if args.method == "proof":
        if args.bound is not None:
            parser.error("--bound applies only to --method direct")
        if args.n_prefix is None:
            parser.error("--method proof needs --n-prefix")
    else:
        if args.n_prefix is not None:
            parser.error("--n-prefix applies only to --method proof")
        if args.bound is None:
            parser.error("--method direct needs --bound")
        if args.node_budget is not None:
            parser.error("--node-budget applies only to --method proof (the bound caps direct scans)")
    status, reason, witness = NOT_FOUND, None, None
    try:
        if args.method == "proof":
            witness = ip_witness_from_proof(
                f, args.m, args.n_prefix, node_budget=args.node_budget, cap=args.cap
            )
        else:
            witness = ip_witness_direct(f, args.m, args.bound)
    except SearchBudgetExceeded:
        status, reason = UNKNOWN, "node-budget"
    except ValueError as exc:
        parser.error(str(exc))
    if witness is not None:
        status = FOUND
    opts_doc: dict = {"deterministic": args.deterministic}
    if not args.deterministic:
        opts_doc["threads"] = args.threads
    opts_doc["node_budget"] = args.node_budget
    doc = {
        "command": "witness",
        "method": args.method,
        "m": args.m,
        "n_prefix": args.n_prefix,
        "bound": args.bound,
        "status": status,
        "reason": reason,
        "witness": witness_to_dict(witness) if witness else None,
        "verified": verify_witness(witness) if witness else None,
        "options": opts_doc,
    }
    _emit(args, doc)
    return EXIT_OK if status == FOUND else EXIT_NOT_FOUND


def cmd_verify_witness(args, parser: _Parser) -> int:
    doc_in = _load_json(args.path, parser)
    if isinstance(doc_in, dict) and "witness" in doc_in:
        if not isinstance(doc_in["witness"], dict):
            parser.error(f"{args.path} contains no witness")
        doc_in = doc_in["witness"]
    try:
        witness = witness_from_dict(doc_in)
    except ValueError as exc:
        parser.error(str(exc))
    first_violation = None
    try:
        for s in fs_closure(witness.generators):
            if witness.func.evaluate(s) != 0 or witness.func.evaluate(s + 1) != 0:
                first_violation = s
                break
    except ValueError as exc:
        parser.error(f"witness is not checkable: {exc}")
    doc = {
        "command": "verify-witness",
        "k": witness.func.k,
        "provenance": witness.provenance,
        "b1": str(witness.b1),
        "generators": [str(g) for g in witness.generators],
        "valid": first_violation is None,
        "first_violation": str(first_violation) if first_violation is not None else None,
    }
    _emit(args, doc)
    return EXIT_OK


def build_parser() -> _Parser:
    parser = _Parser(
        prog="multlab",
        description="Laboratory for kernel runs of completely multiplicative functions",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("constant", help="least bound forcing a kernel run")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, default=2, help="run length (default 2)")
    p.add_argument("--b-max", dest="b_max", type=int, default=100,
                   help="give up beyond this bound (default 100)")
    _add_search_flags(p)
    _add_output_flags(p)
    p.set_defaults(handler=cmd_constant)

    p = sub.add_parser("avoid", help="search run-avoiding prime classes at a fixed bound")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, default=2)
    p.add_argument("--B", type=int, required=True, help="no run may start at 1..B")
    _add_search_flags(p)
    _add_output_flags(p)
    p.set_defaults(handler=cmd_avoid)

    p = sub.add_parser("verify-cert", help="recheck an avoidance certificate")
    p.add_argument("path", help="certificate JSON, or a result document containing one")
    _add_output_flags(p)
    p.set_defaults(handler=cmd_verify_cert)

    p = sub.add_parser("runs", help="list kernel-run starting points of a function")
    p.add_argument("--r", type=int, default=2)
    p.add_argument("--bound", type=int, required=True)
    _add_function_flags(p)
    _add_output_flags(p)
    p.set_defaults(handler=cmd_runs)

    p = sub.add_parser("blockseq", help="generate and verify a block-divisible sequence")
    p.add_argument("--n", type=int, required=True, help="last term index")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP,
                   help=f"refuse n beyond this (default {DEFAULT_CAP})")
    _add_output_flags(p)
    p.set_defaults(handler=cmd_blockseq)

    p = sub.add_parser("hindman", help="monochromatic finite-union family search")
    p.add_argument("--n", type=int, required=True, help="universe is 1..n")
    p.add_argument("--m", type=int, required=True, help="number of blocks")
    p.add_argument("--coloring", required=True,
                   choices=["size-parity", "max-parity", "random", "function"])
    p.add_argument("--classes", type=int, default=None,
                   help="colors for --coloring random (default 2)")
    p.add_argument("--seed", type=int, default=None,
                   help="seed for --coloring random (default 0)")
    p.add_argument("--node-budget", type=int, default=None)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP,
                   help="sequence cap for --coloring function")
    _add_function_flags(p)
    _add_output_flags(p)
    p.set_defaults(handler=cmd_hindman)

    p = sub.add_parser("witness", help="find a finite-sums witness")
    p.add_argument("--method", required=True, choices=["proof", "direct"])
    p.add_argument("--m", type=int, required=True,
                   help="blocks (proof method) or generators (direct method)")
    p.add_argument("--n-prefix", dest="n_prefix", type=int, default=None,
                   help="sequence prefix length for --method proof")
    p.add_argument("--bound", type=int, default=None,
                   help="scan limit for --method direct")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.add_argument("--deterministic", action="store_true",
                   help="omit machine-dependent fields from the output")
    p.add_argument("--threads", type=int, default=1,
                   help="accepted for interface uniformity; witness scans are sequential")
    p.add_argument("--node-budget", type=int, default=None)
    _add_function_flags(p)
    _add_output_flags(p)
    p.set_defaults(handler=cmd_witness)

    p = sub.add_parser("verify-witness", help="recheck a finite-sums witness")
    p.add_argument("path", help="witness JSON, or a result document containing one")
    _add_output_flags(p)
    p.set_defaults(handler=cmd_verify_witness)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.handler(args, parser)


if __name__ == "__main__":
    sys.exit(main())
