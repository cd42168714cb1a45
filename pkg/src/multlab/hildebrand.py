"""Adversarial search for kernel-run avoidance and minimal forcing bounds.

A completely multiplicative function into the k-th roots of unity has a
kernel run of length r at a when a, a+1, ..., a+r-1 all map to 1.  The
avoidance problem asks for prime classes under which no run of length r
starts at 1..B; the least B where avoidance becomes impossible (for
r = 2) is the forcing constant of k, and the value for k = 2 is 9.

Primes receive classes in increasing order.  A window of r consecutive
integers has final values once the largest prime factor over its elements
is assigned, so every window is checked exactly once, at that moment.
Classes are tried in increasing order, which makes the first satisfying
assignment found the lexicographically least one (prime-major,
class-minor).  Relabeling classes by a unit of Z/kZ preserves the kernel,
so the first prime may optionally be restricted to the least class of
each unit orbit; the restriction keeps both satisfiability and the
lex-least answer.
"""

from __future__ import annotations

import math
import threading
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from typing import Mapping

from .arith import build_sieve, valuation
from .multfunc import MultiplicativeFunction, find_runs

SAT = "sat"
UNSAT = "unsat"
UNKNOWN = "unknown"
FOUND = "found"

_STOPPED = "stopped"
_CHECK_MASK = 0xFF


class _Budget(Exception):
    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


class _Stopped(Exception):
    pass


@dataclass(frozen=True)
class SearchOptions:
    """Knobs shared by the avoidance and constant searches.

    deterministic forces a sequential scan whose answer (and node count)
    depends only on the problem, never on thread scheduling; threads > 1
    is honored only without it.  node_budget bounds assignments tried,
    time_budget bounds wall-clock seconds; exceeding either yields an
    unknown outcome instead of an answer.
    """

    deterministic: bool = False
    symmetry_reduction: bool = False
    threads: int = 1
    node_budget: int | None = None
    time_budget: float | None = None

    def __post_init__(self):
        if self.threads < 1:
            raise ValueError(f"threads must be >= 1, got {self.threads}")
        if self.node_budget is not None and self.node_budget < 1:
            raise ValueError(f"node budget must be >= 1, got {self.node_budget}")
        if self.time_budget is not None and self.time_budget <= 0:
            raise ValueError(f"time budget must be positive, got {self.time_budget}")


@dataclass(frozen=True)
class SearchStats:
    nodes: int
    backtracks: int
    depth_reached: int
    wall_time: float


@dataclass(frozen=True)
class AvoidanceCertificate:
    """Complete prime classes under which no r-run starts at 1..B.

    The assignment must cover exactly the primes up to B + r - 1; anything
    less cannot be checked and anything more cannot matter.
    """

    k: int
    r: int
    B: int
    assignment: Mapping[int, int]

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"modulus k must be >= 1, got {self.k}")
        if self.r < 2:
            raise ValueError(f"run length must be >= 2, got {self.r}")
        if self.B < 1:
            raise ValueError(f"avoidance bound must be >= 1, got {self.B}")
        object.__setattr__(self, "assignment", dict(self.assignment))
        required = set(build_sieve(self.limit).primes())
        missing = sorted(required - set(self.assignment))
        extra = sorted(set(self.assignment) - required)
        if missing:
            raise ValueError(f"certificate misses classes for primes {missing}")
        if extra:
            raise ValueError(
                f"certificate keys {extra} are not primes in 2..{self.limit}"
            )
        bad = sorted(p for p, c in self.assignment.items() if not 0 <= c < self.k)
        if bad:
            raise ValueError(f"classes for primes {bad} fall outside 0..{self.k - 1}")

    @property
    def limit(self) -> int:
        return self.B + self.r - 1

    def function(self) -> MultiplicativeFunction:
        return MultiplicativeFunction.sieve_bounded(self.k, self.assignment, self.limit)


@dataclass(frozen=True)
class SearchOutcome:
    status: str
    certificate: AvoidanceCertificate | None
    stats: SearchStats
    reason: str | None = None


@dataclass(frozen=True)
class ConstantResult:
    status: str
    c: int | None
    certificate: AvoidanceCertificate | None
    certificate_for: int | None
    stats: SearchStats
    reason: str | None = None


def verify_certificate(cert: AvoidanceCertificate) -> bool:
    """Recheck the certificate by exhaustive run scan; True when it holds."""
    return not find_runs(cert.function(), cert.r, cert.B)


def certificate_to_dict(cert: AvoidanceCertificate) -> dict:
    return {
        "k": cert.k,
        "r": cert.r,
        "B": cert.B,
        "assignment": [[p, c] for p, c in sorted(cert.assignment.items())],
    }


def certificate_from_dict(doc: object) -> AvoidanceCertificate:
    if not isinstance(doc, dict):
        raise ValueError("certificate must be a JSON object")
    for name in ("k", "r", "B"):
        if not isinstance(doc.get(name), int):
            raise ValueError(f"certificate field {name!r} must be an integer")
    raw = doc.get("assignment")
    if not isinstance(raw, list):
        raise ValueError("certificate field 'assignment' must be a list of [prime, class] pairs")
    assignment = {}
    for entry in raw:
        if (
            not isinstance(entry, (list, tuple))
            or len(entry) != 2
            or not all(isinstance(x, int) for x in entry)
        ):
            raise ValueError(
                "certificate field 'assignment' must contain [prime, class] integer pairs"
            )
        p, c = entry
        if p in assignment:
            raise ValueError(f"certificate field 'assignment' repeats prime {p}")
        assignment[p] = c
    try:
        return AvoidanceCertificate(doc["k"], doc["r"], doc["B"], assignment)
    except ValueError as exc:
        raise ValueError(f"certificate invalid: {exc}") from exc


def _orbit_representatives(k: int) -> list[int]:
    """Least element of each unit orbit in Z/kZ: the divisors gcd(c, k) % k."""
    return sorted({math.gcd(c, k) % k for c in range(k)})


class _Tables:
    """Immutable per-problem tables, safe to share across search threads."""

    def __init__(self, k: int, r: int, B: int):
        self.k = k
        self.r = r
        self.B = B
        self.limit = B + r - 1
        sieve = build_sieve(self.limit)
        self.primes = sieve.primes()
        spf = sieve.spf
        lp = [0] * (self.limit + 1)
        for n in range(2, self.limit + 1):
            lp[n] = max(spf[n], lp[n // spf[n]])
        index = {p: i for i, p in enumerate(self.primes)}
        # multiples[i]: every (n, e) with primes[i]^e exactly dividing n <= limit
        self.multiples: list[list[tuple[int, int]]] = [[] for _ in self.primes]
        for p in self.primes:
            for n in range(p, self.limit + 1, p):
                self.multiples[index[p]].append((n, valuation(n, p)))
        # windows[i]: windows whose values become final when primes[i] is set,
        # stored as the window elements >= 2 (the integer 1 is always kernel)
        self.windows: list[list[tuple[int, ...]]] = [[] for _ in self.primes]
        for a in range(1, B + 1):
            elems = tuple(n for n in range(a, a + r) if n >= 2)
            self.windows[index[max(lp[n] for n in elems)]].append(elems)


def _run_dfs(
    tables: _Tables,
    first_classes: list[int],
    options: SearchOptions,
    counter: list[int],
    stop: threading.Event | None,
    deadline: float | None,
):
    """Backtracking scan; returns (status, assignment, nodes, backtracks, depth, reason)."""
    k = tables.k
    nprimes = len(tables.primes)
    val = [0] * (tables.limit + 1)
    later = tuple(range(k))
    assignment = [0] * nprimes
    pos = [0] * nprimes
    nodes = backtracks = depth_reached = 0
    budget = options.node_budget

    def shift(i: int, c: int, sign: int):
        for n, e in tables.multiples[i]:
            val[n] = (val[n] + sign * c * e) % k

    i = 0
    status = UNSAT
    result = None
    reason = None
    try:
        while True:
            if i == nprimes:
                status = SAT
                result = list(assignment)
                break
            classes = first_classes if i == 0 else later
            advanced = False
            while pos[i] < len(classes):
                c = classes[pos[i]]
                pos[i] += 1
                nodes += 1
                counter[0] += 1
                if budget is not None and counter[0] > budget:
                    raise _Budget("node-budget")
                if nodes & _CHECK_MASK == 0:
                    if deadline is not None and time.monotonic() > deadline:
                        raise _Budget("time-budget")
                    if stop is not None and stop.is_set():
                        raise _Stopped
                shift(i, c, 1)
                assignment[i] = c
                if any(all(val[n] == 0 for n in w) for w in tables.windows[i]):
                    shift(i, c, -1)
                    backtracks += 1
                    continue
                i += 1
                depth_reached = max(depth_reached, i)
                if i < nprimes:
                    pos[i] = 0
                advanced = True
                break
            if advanced:
                continue
            if i == 0:
                break
            i -= 1
            shift(i, assignment[i], -1)
            backtracks += 1
    except _Budget as exc:
        status = UNKNOWN
        reason = exc.reason
    except _Stopped:
        status = _STOPPED
    return status, result, nodes, backtracks, depth_reached, reason


def avoidance_search(
    k: int, r: int, B: int, options: SearchOptions = SearchOptions()
) -> SearchOutcome:
    """Decide whether some assignment avoids all r-runs starting at 1..B.

    A sat outcome carries the lexicographically least certificate when the
    scan was sequential (deterministic mode or one first-class branch);
    parallel scans return the least certificate among the branches that
    finished.  Every returned certificate is re-verified by exhaustive run
    scan before it leaves the search.
    """
    if k < 1:
        raise ValueError(f"modulus k must be >= 1, got {k}")
    if r < 2:
        raise ValueError(f"run length must be >= 2, got {r}")
    if B < 1:
        raise ValueError(f"avoidance bound must be >= 1, got {B}")
    tables = _Tables(k, r, B)
    first = _orbit_representatives(k) if options.symmetry_reduction else list(range(k))
    t0 = time.monotonic()
    deadline = t0 + options.time_budget if options.time_budget is not None else None
    counter = [0]
    if options.threads > 1 and not options.deterministic and len(first) > 1:
        stop = threading.Event()

        def branch(c: int):
            out = _run_dfs(tables, [c], options, counter, stop, deadline)
            if out[0] == SAT:
                stop.set()
            return out

        with ThreadPoolExecutor(max_workers=min(options.threads, len(first))) as pool:
            results = list(pool.map(branch, first))
    else:
        results = [_run_dfs(tables, first, options, counter, None, deadline)]
    stats = SearchStats(
        nodes=sum(res[2] for res in results),
        backtracks=sum(res[3] for res in results),
        depth_reached=max(res[4] for res in results),
        wall_time=time.monotonic() - t0,
    )
    sats = [res[1] for res in results if res[0] == SAT]
    if sats:
        cert = AvoidanceCertificate(k, r, B, dict(zip(tables.primes, min(sats))))
        if not verify_certificate(cert):
            raise RuntimeError("internal error: satisfying assignment failed re-verification")
        return SearchOutcome(SAT, cert, stats)
    for res in results:
        if res[0] == UNKNOWN:
            return SearchOutcome(UNKNOWN, None, stats, res[5])
    if any(res[0] == _STOPPED for res in results):
        raise RuntimeError("internal error: branch stopped although no branch satisfied")
    return SearchOutcome(UNSAT, None, stats)


def hildebrand_constant(
    k: int, B_max: int, r: int = 2, options: SearchOptions = SearchOptions()
) -> ConstantResult:
    """Least B <= B_max where no assignment avoids r-runs, by deepening.

    The avoidance constraints grow with B, so satisfiability is monotone
    and the first unsatisfiable bound is the forcing constant.  The
    certificate for the preceding bound witnesses minimality.  Budgets in
    options are cumulative across the whole deepening; running out gives
    an unknown result carrying the deepest certificate obtained.
    """
    if B_max < 1:
        raise ValueError(f"deepening bound must be >= 1, got {B_max}")
    nodes = backtracks = depth = 0
    t0 = time.monotonic()
    prev_cert = None

    def tally() -> SearchStats:
        return SearchStats(nodes, backtracks, depth, time.monotonic() - t0)

    for B in range(1, B_max + 1):
        opts = options
        if options.node_budget is not None:
            left = options.node_budget - nodes
            if left < 1:
                return ConstantResult(
                    UNKNOWN, None, prev_cert, B - 1 if prev_cert else None,
                    tally(), "node-budget",
                )
            opts = replace(opts, node_budget=left)
        if options.time_budget is not None:
            left_t = options.time_budget - (time.monotonic() - t0)
            if left_t <= 0:
                return ConstantResult(
                    UNKNOWN, None, prev_cert, B - 1 if prev_cert else None,
                    tally(), "time-budget",
                )
            opts = replace(opts, time_budget=left_t)
        out = avoidance_search(k, r, B, opts)
        nodes += out.stats.nodes
        backtracks += out.stats.backtracks
        depth = max(depth, out.stats.depth_reached)
        if out.status == UNKNOWN:
            return ConstantResult(
                UNKNOWN, None, prev_cert, B - 1 if prev_cert else None,
                tally(), out.reason,
            )
        if out.status == UNSAT:
            return ConstantResult(FOUND, B, prev_cert, B - 1, tally())
        prev_cert = out.certificate
    return ConstantResult(UNKNOWN, None, prev_cert, B_max, tally(), "sat-at-bmax")
