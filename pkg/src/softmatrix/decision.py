"""Max-min group decision on the product of two soft multisets.

Pipeline per universe i, given the product block ``c`` (m_i x n_i**2):

* ``I_k``: columns of parameter block k (``n_i*(k-1)+1 .. n_i*k``) that hold a 1;
* ``w[l,k]``: min of ``c[l,p]`` over ``p`` in ``I_k``, and 0 when ``I_k`` is empty;
* ``v[l]``: max of ``w[l,k]`` over k;
* optimum: the elements with ``v[l] == 1`` (possibly none).
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .boolmat import BitMatrix, BlockDiagonalMatrix, assemble_block, part_matrix
from .model import SoftMultiset, UniverseSpec, part
from .products import ProductKind, ProductPart, StructureMismatchError, product_block


@dataclass(frozen=True)
class ColumnSets:
    index: int
    source_cols: int
    offset: int
    local: tuple[tuple[int, ...], ...]  # 1-based, one tuple per parameter block

    @property
    def global_(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(p + self.offset for p in block) for block in self.local)


@dataclass(frozen=True)
class DecisionTable:
    index: int
    w: tuple[tuple[int, ...], ...]
    v: tuple[int, ...]


@dataclass(frozen=True)
class UniverseDecision:
    universe: UniverseSpec
    column_sets: ColumnSets
    table: DecisionTable
    optimum: tuple[str, ...]

    @property
    def index(self) -> int:
        return self.column_sets.index

    @property
    def empty_optimum(self) -> bool:
        return not self.optimum


@dataclass(frozen=True)
class DecisionReport:
    kind: ProductKind
    universes: tuple[UniverseDecision, ...]
    # intermediates, not part of the serialized report
    matrix_a: BlockDiagonalMatrix | None = field(default=None, compare=False, repr=False)
    matrix_b: BlockDiagonalMatrix | None = field(default=None, compare=False, repr=False)
    product: BlockDiagonalMatrix | None = field(default=None, compare=False, repr=False)

    def optima(self) -> dict[str, tuple[str, ...]]:
        return {d.universe.id: d.optimum for d in self.universes}


def _block_mask(n: int, k: int) -> int:
    return ((1 << n) - 1) << (n * (k - 1))


def column_sets(c: ProductPart | BitMatrix, i: int, offset: int = 0, source_cols: int | None = None) -> ColumnSets:
    if isinstance(c, ProductPart):
        matrix, n = c.matrix, c.source_cols
    else:
        matrix, n = c, source_cols
        if n is None or n * n != matrix.ncols:
            raise ValueError("source_cols must be given and square to the column count")
    support = matrix.column_support()
    local = tuple(
        tuple(p for p in range(n * (k - 1) + 1, n * k + 1) if support >> (p - 1) & 1)
        for k in range(1, n + 1)
    )
    return ColumnSets(i, n, offset, local)


def weights(c: ProductPart | BitMatrix, sets: ColumnSets) -> tuple[tuple[int, ...], ...]:
    matrix = c.matrix if isinstance(c, ProductPart) else c
    masks = []
    for block in sets.local:
        mask = 0
        for p in block:
            mask |= 1 << (p - 1)
        masks.append(mask)
    return tuple(
        tuple(int(mask != 0 and bits & mask == mask) for mask in masks) for bits in matrix.rows
    )


def row_decision(w) -> tuple[int, ...]:
    return tuple(max(row, default=0) for row in w)


def optimum(v, universe: UniverseSpec) -> tuple[str, ...]:
    if len(v) != len(universe.elements):
        raise ValueError(f"decision vector has {len(v)} entries, universe {universe.id!r} has {len(universe.elements)}")
    return tuple(u for u, x in zip(universe.elements, v) if x == 1)


def block_matrix(multiset: SoftMultiset) -> BlockDiagonalMatrix:
    """Block-diagonal soft matrix of the whole multiset."""
    return assemble_block([
        part_matrix(part(multiset, i), multiset.universes[i - 1], multiset.parameters[i - 1])
        for i in range(1, multiset.n_universes + 1)
    ])


def decide(a: SoftMultiset, b: SoftMultiset, kind: ProductKind | str = ProductKind.AND) -> DecisionReport:
    """Select the optimum elements of every universe for two decision makers."""
    kind = ProductKind.parse(kind)
    if not a.same_structure(b):
        raise StructureMismatchError("multisets must share universes and parameter spaces")
    ma, mb = block_matrix(a), block_matrix(b)
    prod = product_block(ma, mb, kind)

    decisions = []
    for i, (universe, block, offset) in enumerate(
        zip(a.universes, prod.blocks, prod.col_offsets), start=1
    ):
        n = len(a.parameters[i - 1])
        cp = ProductPart(block, n)
        sets = column_sets(cp, i, offset)
        w = weights(cp, sets)
        v = row_decision(w)
        decisions.append(UniverseDecision(universe, sets, DecisionTable(i, w, v), optimum(v, universe)))
    return DecisionReport(kind, tuple(decisions), ma, mb, prod)
