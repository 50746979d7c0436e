"""Universes, parameter spaces and soft multisets.

A soft multiset assigns each composite parameter (one parameter label per
universe) a tuple of approximate subsets, one subset per universe. A plain
soft set is the single-universe case.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Any, Iterable, Mapping, Sequence


class ValidationError(ValueError):
    """Raised when a multiset description breaks a structural rule.

    ``label`` names the offending universe, parameter, element or choice.
    """

    def __init__(self, message: str, label: str | None = None):
        super().__init__(message)
        self.label = label


@dataclass(frozen=True)
class UniverseSpec:
    id: str
    elements: tuple[str, ...]

    def index_of(self, element: str) -> int:
        return self.elements.index(element)

    def __len__(self) -> int:
        return len(self.elements)


@dataclass(frozen=True)
class ParameterSpec:
    universe: str
    names: tuple[str, ...]

    def __len__(self) -> int:
        return len(self.names)


@dataclass(frozen=True)
class CompositeParameter:
    name: str
    coordinates: tuple[str, ...]
    approximations: tuple[frozenset[str], ...]


@dataclass(frozen=True)
class UniversePart:
    """The approximate value set of every parameter of one universe."""

    index: int  # 1-based
    universe: str
    mapping: Mapping[str, frozenset[str]] = field(hash=False)

    def __getitem__(self, parameter: str) -> frozenset[str]:
        return self.mapping[parameter]


@dataclass(frozen=True)
class SoftMultiset:
    universes: tuple[UniverseSpec, ...]
    parameters: tuple[ParameterSpec, ...]
    choices: tuple[CompositeParameter, ...]

    @property
    def n_universes(self) -> int:
        return len(self.universes)

    def part(self, i: int) -> UniversePart:
        return part(self, i)

    def same_structure(self, other: SoftMultiset) -> bool:
        """True when both multisets share universes and parameter spaces."""
        return self.universes == other.universes and self.parameters == other.parameters


def _labels(values: Any, what: str, owner: str) -> tuple[str, ...]:
    if isinstance(values, str) or not isinstance(values, Iterable):
        raise ValidationError(f"{what} of {owner!r} must be a list of labels", owner)
    out = tuple(values)
    for v in out:
        if not isinstance(v, str):
            raise ValidationError(f"{what} of {owner!r} contains non-string label {v!r}", str(v))
    seen = set()
    for v in out:
        if v in seen:
            raise ValidationError(f"duplicate label {v!r} in {what} of {owner!r}", v)
        seen.add(v)
    return out


def _require_mapping(item: Any, what: str) -> None:
    if not isinstance(item, Mapping):
        raise ValidationError(f"each {what} must be an object, got {item!r}", str(item))


def validate(
    universes: Sequence[Mapping[str, Any]],
    parameters: Sequence[Mapping[str, Any]],
    choices: Sequence[Mapping[str, Any]],
) -> SoftMultiset:
    """Build a :class:`SoftMultiset` from plain dicts, enforcing every invariant.

    ``universes`` items carry ``id`` and ``elements``; ``parameters`` items carry
    ``universe`` and ``names``; ``choices`` items carry ``name``, ``params`` (one
    label per universe) and ``approx`` (one element list per universe).
    Declaration order is kept everywhere.
    """
    if not universes:
        raise ValidationError("at least one universe is required")

    specs: list[UniverseSpec] = []
    owner_of: dict[str, str] = {}
    for u in universes:
        _require_mapping(u, "universe")
        uid = u.get("id")
        if not isinstance(uid, str):
            raise ValidationError(f"universe id must be a string, got {uid!r}", str(uid))
        if any(s.id == uid for s in specs):
            raise ValidationError(f"duplicate universe id {uid!r}", uid)
        elements = _labels(u.get("elements", ()), "elements", uid)
        for e in elements:
            if e in owner_of:
                raise ValidationError(
                    f"element {e!r} appears in universes {owner_of[e]!r} and {uid!r}; "
                    "universes must be disjoint",
                    e,
                )
            owner_of[e] = uid
        specs.append(UniverseSpec(uid, elements))

    by_universe: dict[str, ParameterSpec] = {}
    for p in parameters:
        _require_mapping(p, "parameter list")
        uid = p.get("universe")
        if not any(s.id == uid for s in specs):
            raise ValidationError(f"parameters reference unknown universe {uid!r}", str(uid))
        if uid in by_universe:
            raise ValidationError(f"universe {uid!r} has more than one parameter list", uid)
        by_universe[uid] = ParameterSpec(uid, _labels(p.get("names", ()), "parameters", uid))
    for s in specs:
        if s.id not in by_universe:
            raise ValidationError(f"universe {s.id!r} has no parameter list", s.id)
    pspecs = tuple(by_universe[s.id] for s in specs)

    n = len(specs)
    parsed: list[CompositeParameter] = []
    names: set[str] = set()
    tuples: dict[tuple[str, ...], str] = {}
    for c in choices:
        _require_mapping(c, "choice")
        name = c.get("name")
        if not isinstance(name, str):
            raise ValidationError(f"choice name must be a string, got {name!r}", str(name))
        if name in names:
            raise ValidationError(f"duplicate choice name {name!r}", name)
        names.add(name)

        coords = c.get("params")
        approx = c.get("approx")
        if not isinstance(coords, Sequence) or isinstance(coords, str) or len(coords) != n:
            raise ValidationError(f"choice {name!r} needs exactly {n} parameter labels", name)
        if not isinstance(approx, Sequence) or isinstance(approx, str) or len(approx) != n:
            raise ValidationError(f"choice {name!r} needs exactly {n} approximation sets", name)

        sets = []
        for spec, pspec, coord, subset in zip(specs, pspecs, coords, approx):
            if coord not in pspec.names:
                raise ValidationError(
                    f"choice {name!r}: parameter {coord!r} is not declared for universe {spec.id!r}",
                    str(coord),
                )
            subset = _labels(subset, "approximation", name)
            for e in subset:
                if e not in spec.elements:
                    raise ValidationError(
                        f"choice {name!r}: element {e!r} is not in universe {spec.id!r}", e
                    )
            sets.append(frozenset(subset))

        key = tuple(coords)
        if key in tuples:
            raise ValidationError(
                f"choices {tuples[key]!r} and {name!r} share the parameter tuple {key}", name
            )
        tuples[key] = name
        parsed.append(CompositeParameter(name, key, tuple(sets)))

    return SoftMultiset(tuple(specs), pspecs, tuple(parsed))


def part(multiset: SoftMultiset, i: int) -> UniversePart:
    """Restrict ``multiset`` to universe ``i`` (1-based).

    Each parameter maps to the union of the i-th approximations of all choices
    whose i-th coordinate is that parameter; unused parameters map to the empty set.
    """
    if not 1 <= i <= multiset.n_universes:
        raise IndexError(f"universe index {i} out of range 1..{multiset.n_universes}")
    names = multiset.parameters[i - 1].names
    acc: dict[str, set[str]] = {p: set() for p in names}
    for choice in multiset.choices:
        acc[choice.coordinates[i - 1]].update(choice.approximations[i - 1])
    mapping = MappingProxyType({p: frozenset(acc[p]) for p in names})
    return UniversePart(i, multiset.universes[i - 1].id, mapping)
