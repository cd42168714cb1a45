"""Finite-sums witnesses that a kernel meets its own shift.

An IP-witness for a completely multiplicative function f consists of
generators a_1 < ... < a_t such that every nonempty subset sum s
satisfies f(s) = 1 and f(s + 1) = 1 (classes 0 in the additive encoding):
all finite sums land in the kernel intersected with the kernel shifted
down by one.

Two producers are provided.  The constructive pipeline colors the blocks
of a block-divisible sequence by the class of their term sum, extracts a
monochromatic finite-union family A_1 < ... < A_m, and divides the block
sums b_i by b_1; divisibility of the sums and constancy of the class on
the union closure make every quotient sum plus the implicit 1 collapse
back into the monochromatic family.  The direct search instead scans
kernel pairs f(a) = f(a + 1) = 1 below a bound for a subset-sum-closed
subfamily.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .blockseq import DEFAULT_CAP, generate_block_sequence, subset_sum
from .hindman import BlockFamily, SubsetColoring, fu_closure, monochromatic_fu_search
from .multfunc import (
    FINITE_SUPPORT,
    MultiplicativeFunction,
    find_runs,
    function_from_dict,
    function_to_dict,
)

PROOF_PIPELINE = "proof-pipeline"
DIRECT_SEARCH = "direct-search"


@dataclass(frozen=True)
class IPWitness:
    """Generators plus the function they witness and how they were found.

    b1 is the normalizing divisor used by the pipeline (1 for direct
    searches); blocks, when present, are the finite-union family the
    generators came from, A_1 first.
    """

    func: MultiplicativeFunction
    b1: int
    generators: tuple[int, ...]
    provenance: str
    blocks: tuple[tuple[int, ...], ...] | None = None

    def __post_init__(self):
        if self.provenance not in (PROOF_PIPELINE, DIRECT_SEARCH):
            raise ValueError(f"unknown provenance {self.provenance!r}")
        if self.b1 < 1:
            raise ValueError(f"normalizing divisor must be >= 1, got {self.b1}")
        gens = tuple(self.generators)
        object.__setattr__(self, "generators", gens)
        if not gens:
            raise ValueError("witness needs at least one generator")
        if gens[0] < 1 or any(a >= b for a, b in zip(gens, gens[1:])):
            raise ValueError(f"generators must be positive and strictly increasing: {gens}")
        if self.blocks is not None:
            object.__setattr__(self, "blocks", BlockFamily(self.blocks).blocks)


def fs_closure(generators: tuple[int, ...]) -> list[int]:
    """Distinct nonempty subset sums of the generators, sorted."""
    if not generators:
        raise ValueError("finite-sums closure needs at least one generator")
    sums = {0}
    for g in generators:
        sums |= {s + g for s in sums}
    sums.discard(0)
    return sorted(sums)


def fs_multiplicities(generators: tuple[int, ...]) -> Counter:
    """How often each value arises as a subset sum (collision diagnostic)."""
    if not generators:
        raise ValueError("finite-sums closure needs at least one generator")
    counts = Counter()
    for mask in range(1, 1 << len(generators)):
        counts[sum(g for i, g in enumerate(generators) if mask >> i & 1)] += 1
    return counts


def verify_witness(witness: IPWitness) -> bool:
    """Recheck the claim: every subset sum s has f(s) = f(s + 1) = class 0."""
    f = witness.func
    return all(
        f.evaluate(s) == 0 and f.evaluate(s + 1) == 0
        for s in fs_closure(witness.generators)
    )


def ip_witness_direct(
    f: MultiplicativeFunction, m: int, bound: int
) -> IPWitness | None:
    """Lexicographically least m generators taken from kernel pairs <= bound.

    Scans S = {a <= bound : f(a) = f(a + 1) = class 0} and picks elements
    in increasing order so every subset sum stays inside S.  Returns None
    when no such m-subset exists below the bound.
    """
    if m < 1:
        raise ValueError(f"generator count must be >= 1, got {m}")
    pairs = find_runs(f, 2, bound)
    inside = set(pairs)

    def extend(chosen: list[int], sums: list[int], start: int):
        if len(chosen) == m:
            return tuple(chosen)
        for idx in range(start, len(pairs)):
            g = pairs[idx]
            grown = [g] + [s + g for s in sums]
            if any(s not in inside for s in grown):
                continue
            found = extend(chosen + [g], sums + grown, idx + 1)
            if found is not None:
                return found
        return None

    gens = extend([], [], 0)
    if gens is None:
        return None
    witness = IPWitness(f, 1, gens, DIRECT_SEARCH)
    if not verify_witness(witness):
        raise RuntimeError(f"direct search produced an invalid witness {gens}")
    return witness


def ip_witness_from_proof(
    f: MultiplicativeFunction,
    m: int,
    n_prefix: int,
    *,
    node_budget: int | None = None,
    cap: int = DEFAULT_CAP,
) -> IPWitness | None:
    """Witness from a monochromatic block family over s_1..s_{n_prefix}.

    Colors each block A of {1..n_prefix} by the class of s_A, searches for
    m separated blocks with monochromatic union closure, and normalizes
    the block sums by the first one.  For separated blocks b_1 divides
    every union sum, and constancy of the class on the closure forces
    every generator subset sum s to satisfy f(s) = f(s + 1) = class 0:
    s and s + 1 are quotients by b_1 of two closure sums.

    Needs a finite-support function: the block sums are far too large for
    any sieve.  Returns None when the finite prefix admits no family;
    raises SearchBudgetExceeded when the block search runs out of nodes.
    """
    if f.mode != FINITE_SUPPORT:
        raise ValueError(f"pipeline needs a finite-support function, got mode {f.mode!r}")
    if m < 2:
        raise ValueError(f"pipeline needs m >= 2 blocks (m - 1 generators), got {m}")
    if n_prefix < 1:
        raise ValueError(f"prefix length must be >= 1, got {n_prefix}")
    seq = generate_block_sequence(n_prefix, cap=cap)

    cache: dict[tuple[int, ...], int] = {}

    def color(block: tuple[int, ...]) -> int:
        if block not in cache:
            cache[block] = 1 + f.evaluate(subset_sum(seq, block))
        return cache[block]

    family = monochromatic_fu_search(
        SubsetColoring(n_prefix, f.k, color), m, node_budget=node_budget
    )
    if family is None:
        return None
    sums = [subset_sum(seq, block) for block in family.blocks]
    b1 = sums[0]
    for block, b in zip(family.blocks, sums):
        if b % b1:
            raise RuntimeError(
                f"block divisibility failed: s_{family.blocks[0]} does not divide s_{block}"
            )
    base = f.evaluate(b1)
    for union in fu_closure(family):
        if f.evaluate(subset_sum(seq, union)) != base:
            raise RuntimeError(f"class not constant on the union closure at {union}")
    witness = IPWitness(
        f,
        b1,
        tuple(b // b1 for b in sums[1:]),
        PROOF_PIPELINE,
        blocks=family.blocks,
    )
    if not verify_witness(witness):
        raise RuntimeError("pipeline produced an invalid witness")
    return witness


def witness_to_dict(witness: IPWitness) -> dict:
    """JSON-ready form; big integers travel as decimal strings."""
    doc = {
        "k": witness.func.k,
        "function": function_to_dict(witness.func),
        "provenance": witness.provenance,
        "b1": str(witness.b1),
        "generators": [str(g) for g in witness.generators],
    }
    if witness.blocks is not None:
        doc["blocks"] = [list(block) for block in witness.blocks]
    return doc


def _parse_big(value: object, where: str) -> int:
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        try:
            return int(value, 10)
        except ValueError:
            pass
    raise ValueError(f"witness field {where!r} must be a decimal string or integer")


def witness_from_dict(doc: object) -> IPWitness:
    if not isinstance(doc, dict):
        raise ValueError("witness must be a JSON object")
    func = function_from_dict(doc.get("function"))
    k = doc.get("k")
    if k is not None and k != func.k:
        raise ValueError(f"witness field 'k' is {k} but the function has k = {func.k}")
    provenance = doc.get("provenance")
    if provenance not in (PROOF_PIPELINE, DIRECT_SEARCH):
        raise ValueError(
            f"witness field 'provenance' must be {PROOF_PIPELINE!r} or {DIRECT_SEARCH!r}"
        )
    b1 = _parse_big(doc.get("b1", 1), "b1")
    raw = doc.get("generators")
    if not isinstance(raw, list) or not raw:
        raise ValueError("witness field 'generators' must be a nonempty list")
    generators = tuple(_parse_big(g, "generators") for g in raw)
    blocks = doc.get("blocks")
    if blocks is not None:
        if not isinstance(blocks, list) or not all(
            isinstance(b, list) and all(isinstance(i, int) for i in b) for b in blocks
        ):
            raise ValueError("witness field 'blocks' must be a list of integer lists")
        blocks = tuple(tuple(b) for b in blocks)
    try:
        return IPWitness(func, b1, generators, provenance, blocks)
    except ValueError as exc:
        raise ValueError(f"witness invalid: {exc}") from exc
