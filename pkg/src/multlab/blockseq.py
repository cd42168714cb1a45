"""Block-divisible integer sequences and index-set (block) utilities.

The generated sequence starts s_0 = 1 and satisfies

    s_{n+1} = product over all nonempty A subseteq {0..n} of s_A,

where s_A denotes the sum of the terms indexed by A.  Every s_A with
max(A) <= n divides s_{n+1}, so whenever A precedes B (max A < min B) the
sum s_B is a sum of multiples of s_A and s_A | s_B.  Growth is doubly
exponential, hence the hard generation cap.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

DEFAULT_CAP = 8

# Decimal digit counts of s_0..s_5; later terms multiply digits by ~2^n.
_DIGIT_TABLE = [1, 1, 1, 3, 20, 332]


def normalize_index_set(indices: Iterable[int]) -> tuple[int, ...]:
    """Sorted tuple of distinct nonnegative indices; rejects empty input."""
    out = tuple(sorted(indices))
    if not out:
        raise ValueError("index set must be nonempty")
    if any(i < 0 for i in out):
        raise ValueError(f"index set {out} contains a negative index")
    if any(a == b for a, b in zip(out, out[1:])):
        raise ValueError(f"index set {out} repeats an index")
    return out


def precedes(a: Sequence[int], b: Sequence[int]) -> bool:
    """Separation order on nonempty index sets: every element of a is below b."""
    if not a or not b:
        raise ValueError("separation order is defined on nonempty index sets")
    return max(a) < min(b)


def blocks_ending_at(lo: int, mx: int) -> Iterator[tuple[int, ...]]:
    """Subsets of {lo..mx} containing mx, in lexicographic tuple order."""
    if lo == mx:
        yield (mx,)
        return
    for tail in blocks_ending_at(lo + 1, mx):
        yield (lo,) + tail
    yield from blocks_ending_at(lo + 1, mx)


def nonempty_subsets_in_block_order(lo: int, hi: int) -> Iterator[tuple[int, ...]]:
    """All nonempty subsets of {lo..hi}, ordered by max element then lex."""
    for mx in range(lo, hi + 1):
        yield from blocks_ending_at(lo, mx)


@dataclass(frozen=True)
class BlockSequence:
    """Terms s_0..s_n; s_0 = 1 and the terms increase strictly from s_1 on."""

    terms: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))
        if not self.terms:
            raise ValueError("sequence needs at least the term s_0")
        if self.terms[0] != 1:
            raise ValueError(f"s_0 must be 1, got {self.terms[0]}")
        if any(t < 1 for t in self.terms):
            raise ValueError("all terms must be positive")
        for i in range(1, len(self.terms) - 1):
            if self.terms[i] >= self.terms[i + 1]:
                raise ValueError(
                    f"terms must increase strictly from s_1 on; "
                    f"s_{i} = {self.terms[i]} >= s_{i + 1} = {self.terms[i + 1]}"
                )

    @property
    def n(self) -> int:
        return len(self.terms) - 1


def subset_sum(seq: BlockSequence, indices: Iterable[int]) -> int:
    """s_A: sum of the terms indexed by the nonempty set A."""
    block = normalize_index_set(indices)
    if block[-1] > seq.n:
        raise ValueError(f"index {block[-1]} exceeds last term index {seq.n}")
    return sum(seq.terms[i] for i in block)


def _all_subset_sums(terms: Sequence[int]) -> list[int]:
    """sums[mask] = sum of terms[i] over set bits of mask, by lsb doubling."""
    sums = [0] * (1 << len(terms))
    for mask in range(1, len(sums)):
        lsb = mask & -mask
        sums[mask] = sums[mask ^ lsb] + terms[lsb.bit_length() - 1]
    return sums


def _balanced_product(values: Sequence[int]) -> int:
    """Product via a balanced tree; keeps bignum factor sizes comparable."""
    if not values:
        return 1
    layer = list(values)
    while len(layer) > 1:
        nxt = [layer[i] * layer[i + 1] for i in range(0, len(layer) - 1, 2)]
        if len(layer) % 2:
            nxt.append(layer[-1])
        layer = nxt
    return layer[0]


def estimated_digits(n: int) -> int:
    """Rough decimal digit count of s_n (exact for n <= 5)."""
    if n < 0:
        raise ValueError(f"term index must be >= 0, got {n}")
    if n < len(_DIGIT_TABLE):
        return _DIGIT_TABLE[n]
    return _DIGIT_TABLE[5] * 2 ** (n * (n - 1) // 2 - 10)


def generate_block_sequence(n: int, cap: int = DEFAULT_CAP) -> BlockSequence:
    """Terms s_0..s_n of the product-over-blocks recurrence.

    Refuses n > cap: s_n has about estimated_digits(n) decimal digits and
    the growth is doubly exponential.
    """
    if n < 0:
        raise ValueError(f"term count index must be >= 0, got {n}")
    if n > cap:
        raise ValueError(
            f"refusing n = {n} > cap = {cap}: s_{n} would have roughly "
            f"{estimated_digits(n)} decimal digits"
        )
    terms = [1]
    for m in range(n):
        sums = _all_subset_sums(terms)
        terms.append(_balanced_product(sums[1:]))
    return BlockSequence(tuple(terms))


@dataclass(frozen=True)
class DivisibilityReport:
    """Outcome of a full pairwise check; truthy exactly when it passed."""

    ok: bool
    checked: int
    counterexample: tuple[tuple[int, ...], tuple[int, ...]] | None = None

    def __bool__(self) -> bool:
        return self.ok


def verify_block_divisibility(seq: BlockSequence) -> DivisibilityReport:
    """Check s_A | s_B for every separated pair A, B of index sets.

    Pairs are scanned with A, then B, in block order (max element, then
    lex), and the first failing pair is reported.
    """
    last = seq.n
    checked = 0
    for a in nonempty_subsets_in_block_order(0, last):
        sa = subset_sum(seq, a)
        lo = a[-1] + 1
        if lo > last:
            continue
        for b in nonempty_subsets_in_block_order(lo, last):
            checked += 1
            if subset_sum(seq, b) % sa != 0:
                return DivisibilityReport(False, checked, (a, b))
    return DivisibilityReport(True, checked)
