"""Bit-packed boolean matrices and block-diagonal assembly.

Each row is stored as one Python int; bit ``c`` holds column ``c`` (0-based).
Row-wise AND/OR/ANDNOT are therefore single big-int operations.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import accumulate
from typing import Iterable, Sequence

from .model import ParameterSpec, UniverseSpec, UniversePart


def _mask(ncols: int) -> int:
    return (1 << ncols) - 1


@dataclass(frozen=True)
class BitMatrix:
    rows: tuple[int, ...]
    ncols: int

    def __post_init__(self):
        if self.ncols < 0:
            raise ValueError(f"negative column count {self.ncols}")
        full = _mask(self.ncols)
        for r, bits in enumerate(self.rows):
            if bits < 0 or bits & ~full:
                raise ValueError(f"row {r} has bits outside {self.ncols} columns")

    @classmethod
    def from_lists(cls, rows: Iterable[Sequence[int | bool] | str], ncols: int | None = None) -> BitMatrix:
        """Build from nested 0/1 sequences or strings such as ``"01001"``."""
        packed = []
        width = ncols
        for row in rows:
            if isinstance(row, str):
                row = [int(ch) for ch in row if not ch.isspace()]
            if width is None:
                width = len(row)
            elif len(row) != width:
                raise ValueError(f"ragged rows: expected {width} entries, got {len(row)}")
            bits = 0
            for c, x in enumerate(row):
                if x not in (0, 1):
                    raise ValueError(f"entry {x!r} is not 0 or 1")
                if x:
                    bits |= 1 << c
            packed.append(bits)
        return cls(tuple(packed), width or 0)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> BitMatrix:
        return zero(rows, cols)

    @classmethod
    def ones(cls, rows: int, cols: int) -> BitMatrix:
        if rows < 0 or cols < 0:
            raise ValueError("dimensions must be non-negative")
        return cls((_mask(cols),) * rows, cols)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), self.ncols

    def __getitem__(self, key: tuple[int, int]) -> int:
        r, c = key
        if not 0 <= c < self.ncols:
            raise IndexError(f"column {c} out of range")
        return (self.rows[r] >> c) & 1

    def __invert__(self) -> BitMatrix:
        return complement(self)

    def __and__(self, other: BitMatrix) -> BitMatrix:
        self._check_same_shape(other)
        return BitMatrix(tuple(a & b for a, b in zip(self.rows, other.rows)), self.ncols)

    def __or__(self, other: BitMatrix) -> BitMatrix:
        self._check_same_shape(other)
        return BitMatrix(tuple(a | b for a, b in zip(self.rows, other.rows)), self.ncols)

    def _check_same_shape(self, other: BitMatrix) -> None:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def to_lists(self) -> list[list[int]]:
        return [[(bits >> c) & 1 for c in range(self.ncols)] for bits in self.rows]

    def popcount(self) -> int:
        return sum(bin(bits).count("1") for bits in self.rows)

    def column_support(self) -> int:
        """Bitmask of columns holding at least one 1."""
        out = 0
        for bits in self.rows:
            out |= bits
        return out

    def nonzero(self) -> list[tuple[int, int]]:
        """0-based (row, col) coordinates of every 1, row-major."""
        return [(r, c) for r, bits in enumerate(self.rows) for c in range(self.ncols) if bits >> c & 1]

    def window(self, row_start: int, row_stop: int, col_start: int, col_stop: int) -> BitMatrix:
        width = col_stop - col_start
        mask = _mask(width)
        return BitMatrix(tuple((bits >> col_start) & mask for bits in self.rows[row_start:row_stop]), width)

    def __repr__(self) -> str:
        body = ", ".join(
            "".join(str((bits >> c) & 1) for c in range(self.ncols)) for bits in self.rows
        )
        return f"BitMatrix({self.nrows}x{self.ncols}: [{body}])"


def zero(rows: int, cols: int) -> BitMatrix:
    """The all-zero ``rows`` x ``cols`` matrix."""
    if rows < 0 or cols < 0:
        raise ValueError("dimensions must be non-negative")
    return BitMatrix((0,) * rows, cols)


def complement(m: BitMatrix) -> BitMatrix:
    full = _mask(m.ncols)
    return BitMatrix(tuple(full & ~bits for bits in m.rows), m.ncols)


class UniverseMismatchError(ValueError):
    pass


def part_matrix(part: UniversePart, universe: UniverseSpec, parameters: ParameterSpec) -> BitMatrix:
    """Characteristic matrix of a universe part.

    Rows follow the universe's element order, columns the parameter order;
    entry (r, c) is 1 iff element r lies in the approximation of parameter c.
    """
    if part.universe != universe.id or parameters.universe != universe.id:
        raise UniverseMismatchError(
            f"part of {part.universe!r}, universe {universe.id!r} and parameters of "
            f"{parameters.universe!r} do not match"
        )
    if set(part.mapping) != set(parameters.names):
        raise UniverseMismatchError(f"part parameters differ from declared parameters of {universe.id!r}")
    row_of = {u: r for r, u in enumerate(universe.elements)}
    rows = [0] * len(universe.elements)
    for c, name in enumerate(parameters.names):
        for u in part.mapping[name]:
            if u not in row_of:
                raise UniverseMismatchError(f"element {u!r} is not in universe {universe.id!r}")
            rows[row_of[u]] |= 1 << c
    return BitMatrix(tuple(rows), len(parameters.names))


@dataclass(frozen=True)
class BlockDiagonalMatrix:
    blocks: tuple[BitMatrix, ...]

    def __post_init__(self):
        if not self.blocks:
            raise ValueError("a block-diagonal matrix needs at least one block")

    @property
    def row_offsets(self) -> tuple[int, ...]:
        return tuple(accumulate((b.nrows for b in self.blocks[:-1]), initial=0))

    @property
    def col_offsets(self) -> tuple[int, ...]:
        return tuple(accumulate((b.ncols for b in self.blocks[:-1]), initial=0))

    @property
    def shape(self) -> tuple[int, int]:
        return sum(b.nrows for b in self.blocks), sum(b.ncols for b in self.blocks)

    def __getitem__(self, key: tuple[int, int]) -> int:
        r, c = key
        for r0, c0, block in zip(self.row_offsets, self.col_offsets, self.blocks):
            if r0 <= r < r0 + block.nrows:
                if c0 <= c < c0 + block.ncols:
                    return block[r - r0, c - c0]
                if not 0 <= c < self.shape[1]:
                    raise IndexError(f"column {c} out of range")
                return 0
        raise IndexError(f"row {r} out of range")

    def windows(self) -> list[tuple[int, int, int, int]]:
        """(row_start, row_stop, col_start, col_stop) of each diagonal block."""
        return [
            (r0, r0 + b.nrows, c0, c0 + b.ncols)
            for r0, c0, b in zip(self.row_offsets, self.col_offsets, self.blocks)
        ]

    def dense(self) -> BitMatrix:
        return dense(self)


def assemble_block(blocks: Sequence[BitMatrix]) -> BlockDiagonalMatrix:
    if not blocks:
        raise ValueError("empty block list")
    return BlockDiagonalMatrix(tuple(blocks))


def dense(bd: BlockDiagonalMatrix) -> BitMatrix:
    rows: list[int] = []
    for c0, block in zip(bd.col_offsets, bd.blocks):
        rows.extend(bits << c0 for bits in block.rows)
    return BitMatrix(tuple(rows), bd.shape[1])


def spy_text(m: BitMatrix) -> str:
    """'#' for 1 and '.' for 0, one line per row (no trailing newline)."""
    return "\n".join(
        "".join("#" if bits >> c & 1 else "." for c in range(m.ncols)) for bits in m.rows
    )


def spy_pbm(m: BitMatrix) -> str:
    """Plain (P1) portable bitmap; a 1 entry is a black pixel."""
    lines = ["P1", f"{m.ncols} {m.nrows}"]
    lines.extend(" ".join(str(bits >> c & 1) for c in range(m.ncols)) for bits in m.rows)
    return "\n".join(lines) + "\n"


def parse_pbm(text: str) -> BitMatrix:
    """Read back a P1 bitmap written by :func:`spy_pbm` (comments allowed)."""
    tokens = []
    for line in text.splitlines():
        tokens.extend(line.split("#", 1)[0].split())
    if not tokens or tokens[0] != "P1":
        raise ValueError("not a P1 portable bitmap")
    cols, rows = int(tokens[1]), int(tokens[2])
    # P1 pixels may be written without separators
    pixels = "".join(tokens[3:])
    if len(pixels) != rows * cols:
        raise ValueError(f"expected {rows * cols} pixels, found {len(pixels)}")
    return BitMatrix.from_lists((pixels[r * cols:(r + 1) * cols] for r in range(rows)), cols)


def spy(m: BitMatrix | BlockDiagonalMatrix) -> tuple[str, str]:
    """Text grid and P1 bitmap of the sparsity pattern."""
    if isinstance(m, BlockDiagonalMatrix):
        m = dense(m)
    return spy_text(m), spy_pbm(m)
