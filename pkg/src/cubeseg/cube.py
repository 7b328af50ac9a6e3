"""Vertex sets of the binary n-cube and exact subcube counting.

A vertex of the n-cube is an integer in [0, 2^n - 1]; bit r of the integer
is coordinate x_r, so x = (x_{n-1}, ..., x_1, x_0). A vertex set is stored
canonically as an indicator bitstring over all 2^n positions (one Python
integer), which makes equality canonical and lets the bit-parallel kernel
work on whole sets at once.

Two interchangeable counting kernels are provided:

* ``count_subcubes_naive`` enumerates every candidate subcube and tests
  its vertices one by one -- the ground-truth path.
* ``count_subcubes_bitparallel`` folds the indicator with shifted copies
  of itself, one shift per free coordinate, so that a single surviving
  bit certifies a whole subcube.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterable, Iterator, Mapping

__all__ = [
    "MAX_N",
    "DegenerateSplit",
    "VertexFormatError",
    "VertexSet",
    "Subcube",
    "DecompositionReport",
    "initial_segment",
    "split",
    "subcube_vertices",
    "count_subcubes_naive",
    "count_subcubes_bitparallel",
    "three_term_report",
    "parse_vertex_set",
    "load_vertex_set",
    "render_vertex_lines",
    "save_vertex_set",
]

# Largest accepted cube dimension. 2^20-bit indicators are desk-scale;
# rebind (cubeseg.cube.MAX_N = ...) to lift the cap.
MAX_N = 20


class DegenerateSplit(ValueError):
    """Raised when a decomposition needs both sides of a split non-empty."""


class VertexFormatError(ValueError):
    """Raised for malformed, duplicate, or out-of-range vertices in a file."""


def _check_dim(dim: int) -> None:
    if not isinstance(dim, int) or isinstance(dim, bool):
        raise TypeError(f"dim must be an int, got {type(dim).__name__}")
    if dim < 1 or dim > MAX_N:
        raise ValueError(f"dim must be in [1, {MAX_N}], got {dim}")


class VertexSet:
    """An immutable subset of the n-cube's vertices.

    Stores dimension, the indicator bitstring (bit v set iff vertex v is a
    member), and the cached cardinality. Treated as immutable after
    construction; all operations on it are pure, so unrestricted concurrent
    reads are safe.
    """

    __slots__ = ("dim", "_bits", "_card")

    def __init__(self, dim: int, members: Iterable[int] = ()):
        _check_dim(dim)
        limit = 1 << dim
        bits = 0
        for v in members:
            if not isinstance(v, int) or isinstance(v, bool):
                raise TypeError(f"vertex must be an int, got {v!r}")
            if v < 0 or v >= limit:
                raise ValueError(f"vertex {v} outside [0, {limit - 1}] for dim {dim}")
            bits |= 1 << v
        self.dim = dim
        self._bits = bits
        self._card = bits.bit_count()

    @classmethod
    def from_bits(cls, dim: int, bits: int) -> "VertexSet":
        """Build directly from an indicator bitstring."""
        _check_dim(dim)
        if bits < 0 or bits.bit_length() > (1 << dim):
            raise ValueError(f"indicator does not fit in 2^{dim} positions")
        self = cls.__new__(cls)
        self.dim = dim
        self._bits = bits
        self._card = bits.bit_count()
        return self

    @property
    def bits(self) -> int:
        """The indicator bitstring (bit v set iff v is a member)."""
        return self._bits

    def members(self) -> tuple[int, ...]:
        """All members in ascending order."""
        return tuple(self)

    def __contains__(self, v: object) -> bool:
        if not isinstance(v, int) or isinstance(v, bool):
            return False
        if v < 0 or v >= (1 << self.dim):
            return False
        return bool((self._bits >> v) & 1)

    def __iter__(self) -> Iterator[int]:
        bits = self._bits
        while bits:
            low = bits & -bits
            yield low.bit_length() - 1
            bits ^= low

    def __len__(self) -> int:
        return self._card

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VertexSet):
            return NotImplemented
        return self.dim == other.dim and self._bits == other._bits

    def __hash__(self) -> int:
        return hash((self.dim, self._bits))

    def __repr__(self) -> str:
        shown = list(self)
        body = ",".join(map(str, shown[:12]))
        if len(shown) > 12:
            body += ",..."
        return f"VertexSet(dim={self.dim}, {{{body}}})"


class Subcube:
    """A subcube given by a bit assignment on its fixed coordinates.

    The fixed coordinate set is exactly the set of assignment keys, so the
    two can never disagree; the remaining coordinates are free and the
    subcube dimension is ``dim - len(assignment)``.
    """

    __slots__ = ("dim", "assignment")

    def __init__(self, dim: int, assignment: Mapping[int, int]):
        _check_dim(dim)
        fixed = dict(assignment)
        for coord, bit in fixed.items():
            if not isinstance(coord, int) or coord < 0 or coord >= dim:
                raise ValueError(f"fixed coordinate {coord!r} outside [0, {dim - 1}]")
            if bit not in (0, 1):
                raise ValueError(f"assignment for coordinate {coord} must be 0 or 1")
        self.dim = dim
        self.assignment = fixed

    @property
    def fixed_coords(self) -> frozenset[int]:
        return frozenset(self.assignment)

    @property
    def q(self) -> int:
        """Dimension of the subcube (number of free coordinates)."""
        return self.dim - len(self.assignment)

    def __repr__(self) -> str:
        fixed = ",".join(f"{c}={b}" for c, b in sorted(self.assignment.items()))
        return f"Subcube(dim={self.dim}, q={self.q}, {{{fixed}}})"


@dataclass(frozen=True)
class DecompositionReport:
    """Three-term decomposition of a subcube count along one dimension.

    ``b`` is the bit value of the light (smaller) side; the bound is
    m_q(heavy) + m_q(light) + m_{q-1}(light) and ``exact`` records whether
    the total meets it with equality.
    """

    r: int
    b: int
    mq_total: int
    mq_heavy: int
    mq_light: int
    mq1_light: int
    bound: int
    exact: bool


def initial_segment(k: int, n: int) -> VertexSet:
    """The vertex set {0, 1, ..., k-1} inside the n-cube."""
    _check_dim(n)
    if k < 1 or k > (1 << n):
        raise ValueError(f"k must be in [1, 2^{n}], got {k}")
    return VertexSet.from_bits(n, (1 << k) - 1)


@lru_cache(maxsize=256)
def _coord_one_mask(n: int, r: int) -> int:
    # Indicator over [0, 2^n) of the positions whose bit r is set:
    # blocks of 2^r ones alternating with 2^r zeros, built by doubling.
    block = ((1 << (1 << r)) - 1) << (1 << r)
    width = 1 << (r + 1)
    while width < (1 << n):
        block |= block << width
        width <<= 1
    return block


def split(S: VertexSet, r: int) -> tuple[VertexSet, VertexSet]:
    """Partition S into (S(r,0), S(r,1)) by the value of coordinate r."""
    if r < 0 or r >= S.dim:
        raise ValueError(f"coordinate r must be in [0, {S.dim - 1}], got {r}")
    ones = _coord_one_mask(S.dim, r)
    side1 = S._bits & ones
    side0 = S._bits ^ side1
    return VertexSet.from_bits(S.dim, side0), VertexSet.from_bits(S.dim, side1)


def subcube_vertices(c: Subcube) -> VertexSet:
    """All 2^q vertices of the n-cube agreeing with the fixed assignment."""
    base = 0
    for coord, bit in c.assignment.items():
        base |= bit << coord
    free = [r for r in range(c.dim) if r not in c.assignment]
    bits = 1 << base
    for r in free:
        bits |= bits << (1 << r)  # toggling coordinate r moves a vertex by 2^r
    return VertexSet.from_bits(c.dim, bits)


def _check_q(q: int, dim: int) -> None:
    if q < 0 or q > dim:
        raise ValueError(f"q must be in [0, {dim}], got {q}")


def _free_coordinate_tables(n: int, q: int):
    """Per free-coordinate-set data: (free mask, fixed mask, vertex offsets).

    Free sets are produced in lexicographic order of their coordinate
    indices so that enumeration order is deterministic.
    """
    full = (1 << n) - 1
    for free in combinations(range(n), q):
        tmask = 0
        offsets = [0]
        for t in free:
            bit = 1 << t
            tmask |= bit
            offsets += [o | bit for o in offsets]
        yield tmask, full ^ tmask, tuple(offsets)


@lru_cache(maxsize=None)
def _free_coordinate_tables_cached(n: int, q: int) -> tuple:
    return tuple(_free_coordinate_tables(n, q))


def _free_tables(n: int, q: int):
    # Materializing the tables pays off for the oracle's repeated calls,
    # but would exhaust memory at large n: fall back to a generator there.
    if comb(n, q) << q <= (1 << 20):
        return _free_coordinate_tables_cached(n, q)
    return _free_coordinate_tables(n, q)


def count_subcubes_naive(S: VertexSet, q: int) -> int:
    """Count q-dimensional subcubes contained in S by direct enumeration.

    Every one of the C(n,q) * 2^(n-q) candidate subcubes is generated and
    each of its 2^q vertices is tested for membership.
    """
    _check_q(q, S.dim)
    bits = S._bits
    count = 0
    for _, qmask, offsets in _free_tables(S.dim, q):
        # Bases are the submasks of the fixed-coordinate mask, visited in
        # increasing order (assignments in increasing integer order).
        base = 0
        while True:
            if all((bits >> (base | off)) & 1 for off in offsets):
                count += 1
            if base == qmask:
                break
            base = (base - qmask) & qmask
    return count


@lru_cache(maxsize=512)
def _free_zero_mask(n: int, tmask: int) -> int:
    # Indicator of positions whose bits inside tmask are all zero.
    mask = 1
    for r in range(n):
        if not (tmask >> r) & 1:
            mask |= mask << (1 << r)
    return mask


def count_subcubes_bitparallel(S: VertexSet, q: int) -> int:
    """Count q-dimensional subcubes contained in S with bit-parallel folds.

    For each free-coordinate set T, the indicator A is folded as
    A &= A >> 2^t for every t in T; afterwards a set bit at a position
    whose T-bits are all zero certifies that the whole subcube anchored
    there lies in S. Agrees exactly with ``count_subcubes_naive``.
    """
    _check_q(q, S.dim)
    n = S.dim
    count = 0
    for tmask, _, _ in _free_tables(n, q):
        folded = S._bits
        rest = tmask
        while rest:
            low = rest & -rest
            folded &= folded >> low  # low == 2^t for free coordinate t
            rest ^= low
        count += (folded & _free_zero_mask(n, tmask)).bit_count()
    return count


def three_term_report(S: VertexSet, q: int, r: int) -> DecompositionReport:
    """Decompose m_q(S) along dimension r into heavy, light, and cross terms.

    The light side is the half of smaller cardinality (ties go to the
    1-side); the cross term counts one dimension lower on the light side.
    """
    if q < 1 or q > S.dim:
        raise ValueError(f"q must be in [1, {S.dim}], got {q}")
    if r < 0 or r >= S.dim:
        raise ValueError(f"coordinate r must be in [0, {S.dim - 1}], got {r}")
    side0, side1 = split(S, r)
    if len(side0) == 0 or len(side1) == 0:
        raise DegenerateSplit(f"dimension {r} does not separate the set")
    if len(side1) <= len(side0):
        b, light, heavy = 1, side1, side0
    else:
        b, light, heavy = 0, side0, side1
    mq_total = count_subcubes_bitparallel(S, q)
    mq_heavy = count_subcubes_bitparallel(heavy, q)
    mq_light = count_subcubes_bitparallel(light, q)
    mq1_light = count_subcubes_bitparallel(light, q - 1)
    bound = mq_heavy + mq_light + mq1_light
    return DecompositionReport(
        r=r,
        b=b,
        mq_total=mq_total,
        mq_heavy=mq_heavy,
        mq_light=mq_light,
        mq1_light=mq1_light,
        bound=bound,
        exact=(mq_total == bound),
    )


def parse_vertex_set(lines: Iterable[str], dim: int, fmt: str = "decimal") -> VertexSet:
    """Parse the one-vertex-per-line text format into a VertexSet.

    Blank lines and lines starting with ``#`` are ignored. Decimal mode
    takes non-negative integers; binary mode takes exactly ``dim``
    characters of 0/1 with the most significant coordinate leftmost.
    Duplicates, malformed lines, and out-of-range vertices are errors.
    """
    _check_dim(dim)
    if fmt not in ("decimal", "binary"):
        raise ValueError(f"format must be 'decimal' or 'binary', got {fmt!r}")
    limit = 1 << dim
    bits = 0
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if fmt == "decimal":
            if not line.isdigit():
                raise VertexFormatError(
                    f"line {lineno}: {line!r} is not a non-negative decimal integer"
                )
            v = int(line)
        else:
            if len(line) != dim or any(ch not in "01" for ch in line):
                raise VertexFormatError(
                    f"line {lineno}: {line!r} is not a {dim}-character binary string"
                )
            v = int(line, 2)
        if v >= limit:
            raise VertexFormatError(
                f"line {lineno}: vertex {v} outside [0, {limit - 1}] for dim {dim}"
            )
        if (bits >> v) & 1:
            raise VertexFormatError(f"line {lineno}: duplicate vertex {v}")
        bits |= 1 << v
    return VertexSet.from_bits(dim, bits)


def load_vertex_set(path, dim: int, fmt: str = "decimal") -> VertexSet:
    """Read a vertex file (UTF-8) into a VertexSet."""
    with open(path, encoding="utf-8") as fh:
        return parse_vertex_set(fh, dim, fmt)


def render_vertex_lines(S: VertexSet, fmt: str = "decimal") -> list[str]:
    """The file-format lines for S, members ascending."""
    if fmt == "decimal":
        return [str(v) for v in S]
    if fmt == "binary":
        return [format(v, f"0{S.dim}b") for v in S]
    raise ValueError(f"format must be 'decimal' or 'binary', got {fmt!r}")


def save_vertex_set(S: VertexSet, path, fmt: str = "decimal") -> None:
    """Write S to a vertex file (UTF-8), one member per line."""
    lines = render_vertex_lines(S, fmt)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines))
        if lines:
            fh.write("\n")
