"""Weight-monotone bijections between integer intervals.

A bijection P between two equal-size intervals I and J is *special* when
h(i) <= h(P(i)) for every i, with all inequalities strict when the
intervals do not overlap. When I starts at 0 such a bijection always
exists; the finder below certifies that constructively, and the checkers
turn the resulting weighted-sum inequalities into verifiable records.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .weights import h_q, hamming_weight

__all__ = [
    "Interval",
    "BijectionWitness",
    "GInequalityCheck",
    "ShiftedHqCheck",
    "intervals_overlap",
    "find_special_bijection",
    "verify_special",
    "check_g_inequality",
    "check_shifted_hq_inequality",
]


@dataclass(frozen=True)
class Interval:
    """A non-empty integer interval with inclusive bounds."""

    lo: int
    hi: int

    def __post_init__(self):
        if self.lo < 0:
            raise ValueError(f"interval bounds must be non-negative, got lo={self.lo}")
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}:{self.hi}]")

    @property
    def size(self) -> int:
        return self.hi - self.lo + 1

    def __iter__(self):
        return iter(range(self.lo, self.hi + 1))


@dataclass(frozen=True)
class BijectionWitness:
    """A claimed special bijection, stored pair by pair.

    ``map`` lists (i, P(i)) for every i of the source interval, sorted by
    i. No validation happens at construction; ``verify_special`` rechecks
    every invariant from scratch.
    """

    source: Interval
    target: Interval
    map: tuple[tuple[int, int], ...]
    strict_required: bool


def intervals_overlap(I: Interval, J: Interval) -> bool:
    """Whether the two intervals share at least one integer."""
    return max(I.lo, J.lo) <= min(I.hi, J.hi)


def find_special_bijection(I: Interval, J: Interval) -> Optional[BijectionWitness]:
    """Search for a special bijection from I onto J.

    Strictness of the weight inequalities is derived from the interval
    geometry (required exactly when the intervals do not overlap), never
    chosen by the caller. The witness is built by bipartite matching with
    augmenting paths; sources are processed hardest-constraint-first and
    ties among admissible targets go to the smallest target, which makes
    the witness deterministic. Returns None when no special bijection
    exists -- possible only when I.lo > 0.
    """
    if I.size != J.size:
        raise ValueError(f"interval sizes differ: {I.size} vs {J.size}")
    if J.lo <= I.lo:
        raise ValueError(f"target must start above source: j0={J.lo} <= i0={I.lo}")
    strict = I.hi < J.lo

    # Admissible targets for a source of weight w are exactly the targets
    # of weight >= w (+1 when strict): thresholds order the sources.
    need = 1 if strict else 0
    thresholds = {i: hamming_weight(i) + need for i in I}
    max_thr = max(thresholds.values())
    admissible: list[tuple[int, ...]] = []
    for thr in range(max_thr + 1):
        admissible.append(tuple(j for j in J if hamming_weight(j) >= thr))

    matched_target: dict[int, int] = {}
    matched_source: dict[int, int] = {}

    def augment(start: int) -> bool:
        # Iterative alternating-path search; frame = [source, iterator, target].
        frames: list[list] = [[start, iter(admissible[thresholds[start]]), None]]
        visited: set[int] = set()
        while frames:
            frame = frames[-1]
            pushed = False
            for j in frame[1]:
                if j in visited:
                    continue
                visited.add(j)
                frame[2] = j
                owner = matched_target.get(j)
                if owner is None:
                    for src, _, tgt in frames:
                        matched_target[tgt] = src
                        matched_source[src] = tgt
                    return True
                frames.append([owner, iter(admissible[thresholds[owner]]), None])
                pushed = True
                break
            if not pushed:
                frames.pop()
        return False

    for i in sorted(I, key=lambda i: (-thresholds[i], i)):
        if not augment(i):
            return None
    pairs = tuple((i, matched_source[i]) for i in I)
    return BijectionWitness(source=I, target=J, map=pairs, strict_required=strict)


def verify_special(w: BijectionWitness) -> bool:
    """Recheck every witness invariant from scratch.

    Deliberately shares nothing with the matcher: weights are recomputed
    locally and bijectivity is checked by sorting the raw pairs.
    """
    src, dst = w.source, w.target
    size = src.hi - src.lo + 1
    if dst.hi - dst.lo + 1 != size or len(w.map) != size:
        return False
    if sorted(i for i, _ in w.map) != list(range(src.lo, src.hi + 1)):
        return False
    if sorted(p for _, p in w.map) != list(range(dst.lo, dst.hi + 1)):
        return False
    if w.strict_required != (src.hi < dst.lo):
        return False
    for i, p in w.map:
        wi = bin(i).count("1")
        wp = bin(p).count("1")
        if wi > wp or (w.strict_required and wi == wp):
            return False
    return True


@dataclass(frozen=True)
class GInequalityCheck:
    lhs: float
    rhs: float
    holds: bool
    strict: bool


def check_g_inequality(I: Interval, J: Interval, g: Sequence) -> GInequalityCheck:
    """Compare the g-weighted sums over two intervals.

    ``g`` is a finite table indexed by Hamming weight; it must be
    non-decreasing and long enough to cover every weight occurring in
    I and J. The record reports both sums and whether lhs <= rhs holds,
    strictly or not.
    """
    if any(a > b for a, b in zip(g, g[1:])):
        raise ValueError("g table must be non-decreasing")
    max_weight = max(
        max(hamming_weight(i) for i in I), max(hamming_weight(j) for j in J)
    )
    if len(g) <= max_weight:
        raise ValueError(
            f"g table covers weights up to {len(g) - 1}, need {max_weight}"
        )
    lhs = sum(g[hamming_weight(i)] for i in I)
    rhs = sum(g[hamming_weight(j)] for j in J)
    return GInequalityCheck(lhs=lhs, rhs=rhs, holds=lhs <= rhs, strict=lhs < rhs)


@dataclass(frozen=True)
class ShiftedHqCheck:
    lhs: int
    rhs: int
    holds: bool


def check_shifted_hq_inequality(I: Interval, J: Interval, q: int) -> ShiftedHqCheck:
    """Compare sum of h_q + h_{q-1} over I against sum of h_q over J.

    Requires equal-size non-overlapping intervals with I starting at 0,
    the regime in which the inequality is guaranteed to hold.
    """
    if q < 1:
        raise ValueError(f"q must be >= 1, got {q}")
    if I.size != J.size:
        raise ValueError(f"interval sizes differ: {I.size} vs {J.size}")
    if I.lo != 0:
        raise ValueError(f"source interval must start at 0, got {I.lo}")
    if intervals_overlap(I, J):
        raise ValueError(f"intervals [{I.lo}:{I.hi}] and [{J.lo}:{J.hi}] overlap")
    lhs = sum(h_q(i, q) + h_q(i, q - 1) for i in I)
    rhs = sum(h_q(j, q) for j in J)
    return ShiftedHqCheck(lhs=lhs, rhs=rhs, holds=lhs <= rhs)
