"""The max-recursion over set sizes and its maximizer structure.

F_q(k) is defined by F_q(1) = 0 and

    F_q(k) = max over 1 <= k' <= k/2 of  F_q(k') + F_q(k-k') + F_{q-1}(k')

with the convention F_0(k) = k. The table builder evaluates this
recursion bottom-up and records, for every (q, k), the full set of
maximizing k'. Independently of the recursion, a split (k-k1, k1) of k is
*hypercubic* when k1 counts the members of {0, ..., k-1} having some
fixed bit set; every hypercubic k1 is a maximizer, and for q = 1 the two
sets coincide exactly, while for larger q the reverse inclusion can fail.
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = [
    "RecursionTable",
    "OnlyIfCounterexample",
    "build_table",
    "maximizers",
    "hypercubic_partitions",
    "verify_corollary",
    "find_onlyif_counterexamples",
]


@dataclass
class RecursionTable:
    """Bottom-up table of F values plus the argmax set of every entry.

    ``values[q][k]`` holds F_q(k) for 0 <= q <= qmax, 1 <= k <= kmax
    (index 0 of each row is unused). ``maximizer_sets[(q, k)]`` holds the
    ascending tuple of maximizing k' for q >= 1, k >= 2. Immutable once
    built; queries are safe concurrently.
    """

    qmax: int
    kmax: int
    values: list[list[int]]
    maximizer_sets: dict[tuple[int, int], tuple[int, ...]]

    def value(self, q: int, k: int) -> int:
        if q < 0 or q > self.qmax:
            raise ValueError(f"q must be in [0, {self.qmax}], got {q}")
        if k < 1 or k > self.kmax:
            raise ValueError(f"k must be in [1, {self.kmax}], got {k}")
        return self.values[q][k]


@dataclass(frozen=True)
class OnlyIfCounterexample:
    """A pair (q, k) whose maximizer set strictly exceeds the hypercubic set."""

    q: int
    k: int
    non_hypercubic_maximizers: tuple[int, ...]


def build_table(qmax: int, kmax: int) -> RecursionTable:
    """Evaluate the recursion bottom-up for all q <= qmax, k <= kmax."""
    if qmax < 0:
        raise ValueError(f"qmax must be >= 0, got {qmax}")
    if kmax < 1:
        raise ValueError(f"kmax must be >= 1, got {kmax}")
    values = [list(range(kmax + 1))]  # F_0(k) = k
    maximizer_sets: dict[tuple[int, int], tuple[int, ...]] = {}
    for q in range(1, qmax + 1):
        row = [0] * (kmax + 1)
        prev = values[q - 1]
        for k in range(2, kmax + 1):
            best = -1
            args: list[int] = []
            for kp in range(1, k // 2 + 1):
                candidate = row[kp] + row[k - kp] + prev[kp]
                if candidate > best:
                    best = candidate
                    args = [kp]
                elif candidate == best:
                    args.append(kp)
            row[k] = best
            maximizer_sets[(q, k)] = tuple(args)
        values.append(row)
    return RecursionTable(qmax=qmax, kmax=kmax, values=values, maximizer_sets=maximizer_sets)


def maximizers(q: int, k: int, table: RecursionTable) -> set[int]:
    """All k' in [1, k//2] attaining F_q(k), read from the table."""
    if q < 1 or q > table.qmax:
        raise ValueError(f"q must be in [1, {table.qmax}], got {q}")
    if k < 2 or k > table.kmax:
        raise ValueError(f"k must be in [2, {table.kmax}], got {k}")
    return set(table.maximizer_sets[(q, k)])


def hypercubic_partitions(k: int) -> set[int]:
    """All light-side sizes of hypercubic partitions of k.

    For each bit position r, counts how many of 0, ..., k-1 have bit r
    set, using the closed form floor(k / 2^(r+1)) * 2^r +
    max(0, k mod 2^(r+1) - 2^r); each count is cross-checked by direct
    enumeration. Counts landing in [1, k//2] qualify.
    """
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    half = k // 2
    result: set[int] = set()
    r = 0
    while (1 << r) < k:
        block = 1 << r
        period = block << 1
        count = (k // period) * block + max(0, (k % period) - block)
        direct = sum(1 for i in range(k) if i & block)
        if direct != count:
            raise RuntimeError(
                f"closed-form bit count disagrees with enumeration at k={k}, r={r}"
            )
        if 1 <= count <= half:
            result.add(count)
        r += 1
    return result


def verify_corollary(q: int, k: int, table: RecursionTable) -> bool:
    """Whether every hypercubic light side of k maximizes F_q(k)."""
    return hypercubic_partitions(k) <= maximizers(q, k, table)


def find_onlyif_counterexamples(qmax: int, kmax: int) -> list[OnlyIfCounterexample]:
    """Scan for (q, k) whose maximizers are not all hypercubic.

    Results are ordered by (q, k); each record lists the maximizing k'
    values that no bit position witnesses.
    """
    if qmax < 1:
        raise ValueError(f"qmax must be >= 1, got {qmax}")
    if kmax < 2:
        raise ValueError(f"kmax must be >= 2, got {kmax}")
    table = build_table(qmax, kmax)
    hypercubic = {k: hypercubic_partitions(k) for k in range(2, kmax + 1)}
    found: list[OnlyIfCounterexample] = []
    for q in range(1, qmax + 1):
        for k in range(2, kmax + 1):
            excess = set(table.maximizer_sets[(q, k)]) - hypercubic[k]
            if excess:
                found.append(
                    OnlyIfCounterexample(
                        q=q, k=k, non_hypercubic_maximizers=tuple(sorted(excess))
                    )
                )
    return found
