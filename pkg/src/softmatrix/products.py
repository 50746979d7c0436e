"""And, Or, And-Not and Or-Not products of soft matrices.

For operands ``a`` and ``b`` of shape m x n the product has shape m x n**2 and
its column ``p = n*(k-1) + j`` (1-based) combines column ``k`` of ``a`` with
column ``j`` of ``b``:

    AND     min(a[l,k], b[l,j])
    OR      max(a[l,k], b[l,j])
    ANDNOT  min(a[l,k], 1 - b[l,j])
    ORNOT   max(a[l,k], 1 - b[l,j])
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

from .boolmat import BitMatrix, BlockDiagonalMatrix


class ProductKind(enum.Enum):
    AND = "and"
    OR = "or"
    ANDNOT = "andnot"
    ORNOT = "ornot"

    @classmethod
    def parse(cls, value: str | ProductKind) -> ProductKind:
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower().replace("-", "").replace("_", ""))
        except ValueError:
            raise ValueError(
                f"unknown product kind {value!r}; expected one of and, or, andnot, ornot"
            ) from None


class StructureMismatchError(ValueError):
    """Operands do not share universes / parameter spaces."""


@dataclass(frozen=True)
class ProductPart:
    matrix: BitMatrix
    source_cols: int

    def __post_init__(self):
        if self.matrix.ncols != self.source_cols ** 2:
            raise ValueError(
                f"product has {self.matrix.ncols} columns, expected {self.source_cols}**2"
            )

    @property
    def shape(self) -> tuple[int, int]:
        return self.matrix.shape


def column_index(n: int, k: int, j: int) -> int:
    """1-based product column for left column ``k`` and right column ``j``."""
    if not (1 <= k <= n and 1 <= j <= n):
        raise IndexError(f"k={k}, j={j} must lie in 1..{n}")
    return n * (k - 1) + j


def split_column(n: int, p: int) -> tuple[int, int]:
    """Inverse of :func:`column_index`: 1-based ``p`` -> ``(k, j)``."""
    if not 1 <= p <= n * n:
        raise IndexError(f"p={p} must lie in 1..{n * n}")
    k, j = divmod(p - 1, n)
    return k + 1, j + 1


def _product_row(a_bits: int, b_bits: int, n: int, kind: ProductKind) -> int:
    full = (1 << n) - 1
    if kind in (ProductKind.ANDNOT, ProductKind.ORNOT):
        b_bits = full & ~b_bits
    # k-block is b's row when a[l,k]=1 (AND) or when a[l,k]=0 (OR); otherwise constant
    if kind in (ProductKind.AND, ProductKind.ANDNOT):
        hit, miss = b_bits, 0
    else:
        hit, miss = full, b_bits
    out = 0
    for k in range(n):
        out |= (hit if a_bits >> k & 1 else miss) << (k * n)
    return out


def product_part(a: BitMatrix, b: BitMatrix, kind: ProductKind | str = ProductKind.AND) -> ProductPart:
    kind = ProductKind.parse(kind)
    if a.shape != b.shape:
        raise StructureMismatchError(f"operand shapes differ: {a.shape} vs {b.shape}")
    n = a.ncols
    rows = tuple(_product_row(x, y, n, kind) for x, y in zip(a.rows, b.rows))
    return ProductPart(BitMatrix(rows, n * n), n)


def product_block(
    A: BlockDiagonalMatrix, B: BlockDiagonalMatrix, kind: ProductKind | str = ProductKind.AND
) -> BlockDiagonalMatrix:
    """Blockwise product; result is m x sum(n_i**2)."""
    kind = ProductKind.parse(kind)
    if len(A.blocks) != len(B.blocks) or any(
        x.shape != y.shape for x, y in zip(A.blocks, B.blocks)
    ):
        raise StructureMismatchError(
            "block structures differ: "
            f"{[b.shape for b in A.blocks]} vs {[b.shape for b in B.blocks]}"
        )
    return BlockDiagonalMatrix(
        tuple(product_part(x, y, kind).matrix for x, y in zip(A.blocks, B.blocks))
    )
