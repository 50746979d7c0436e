"""Soft matrices on soft multisets and max-min group decision making."""
from .boolmat import (
    BitMatrix,
    BlockDiagonalMatrix,
    assemble_block,
    complement,
    dense,
    part_matrix,
    spy,
    spy_pbm,
    spy_text,
    zero,
)
from .decision import (
    ColumnSets,
    DecisionReport,
    DecisionTable,
    UniverseDecision,
    block_matrix,
    column_sets,
    decide,
    optimum,
    row_decision,
    weights,
)
from .io import load_multiset, load_report, multiset_from_dict, multiset_to_dict, report_from_dict, report_to_dict
from .model import (
    CompositeParameter,
    ParameterSpec,
    SoftMultiset,
    UniversePart,
    UniverseSpec,
    ValidationError,
    part,
    validate,
)
from .products import ProductKind, ProductPart, StructureMismatchError, column_index, product_block, product_part

__version__ = "0.1.0"
