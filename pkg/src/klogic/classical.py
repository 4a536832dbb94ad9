"""Classical two-valued semantics: valuations, tautology checks, truth tables.

Valuations over n atoms are enumerated in a fixed canonical order: binary
counters 0 .. 2^n - 1 with the lexicographically first atom as the most
significant bit.  Every witness and every table row respects that order, so
results are reproducible bit for bit.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import AtomLimitExceeded, ModalOperatorPresent, UnknownAtom
from .syntax import (
    And,
    Bottom,
    Formula,
    Iff,
    Implies,
    Know,
    Not,
    Or,
    Top,
    Var,
    atoms,
    modal_depth,
    render,
)

DEFAULT_ATOM_LIMIT = 16


@dataclass(frozen=True)
class Valuation:
    """A total truth assignment over a sorted, duplicate-free atom tuple."""

    atoms: tuple[str, ...]
    bits: tuple[bool, ...]

    def __post_init__(self):
        object.__setattr__(self, "atoms", tuple(self.atoms))
        object.__setattr__(self, "bits", tuple(bool(b) for b in self.bits))
        if list(self.atoms) != sorted(set(self.atoms)):
            raise ValueError("valuation atoms must be sorted and duplicate-free")
        if len(self.bits) != len(self.atoms):
            raise ValueError("one truth value per atom required")

    def value(self, name: str) -> bool:
        try:
            return self.bits[self.atoms.index(name)]
        except ValueError:
            raise UnknownAtom(f"atom '{name}' is not assigned by this valuation") from None

    def as_dict(self) -> dict[str, bool]:
        return dict(zip(self.atoms, self.bits))


def valuation_at(names: Sequence[str], index: int) -> Valuation:
    """The index-th canonical valuation (first atom = most significant bit)."""
    n = len(names)
    bits = tuple(bool((index >> (n - 1 - k)) & 1) for k in range(n))
    return Valuation(tuple(names), bits)


def all_valuations(names: Sequence[str]) -> Iterator[Valuation]:
    """All 2^n valuations over `names` in canonical order."""
    for index in range(1 << len(names)):
        yield valuation_at(names, index)


def eval_classical(f: Formula, v: Valuation) -> bool:
    """Standard truth-functional evaluation of a K-free formula."""
    if modal_depth(f) != 0:
        raise ModalOperatorPresent(
            f"formula contains the knowledge operator: {render(f)}"
        )
    return _eval(f, v)


def _eval(f: Formula, v: Valuation) -> bool:
    if isinstance(f, Top):
        return True
    if isinstance(f, Bottom):
        return False
    if isinstance(f, Var):
        return v.value(f.name)
    if isinstance(f, Not):
        return not _eval(f.operand, v)
    if isinstance(f, And):
        return _eval(f.left, v) and _eval(f.right, v)
    if isinstance(f, Or):
        return _eval(f.left, v) or _eval(f.right, v)
    if isinstance(f, Implies):
        return (not _eval(f.left, v)) or _eval(f.right, v)
    if isinstance(f, Iff):
        return _eval(f.left, v) == _eval(f.right, v)
    raise ModalOperatorPresent(f"formula contains the knowledge operator: {render(f)}")


@dataclass(frozen=True)
class ConstraintSet:
    """K-free formulas acting as feasibility constraints on table rows."""

    constraints: tuple[Formula, ...] = ()

    def __post_init__(self):
        deduped: list[Formula] = []
        for c in self.constraints:
            if modal_depth(c) != 0:
                raise ModalOperatorPresent(
                    f"constraints must be K-free, got: {render(c)}"
                )
            if c not in deduped:
                deduped.append(c)
        object.__setattr__(self, "constraints", tuple(deduped))

    def __iter__(self) -> Iterator[Formula]:
        return iter(self.constraints)

    def __len__(self) -> int:
        return len(self.constraints)

    def atom_names(self) -> set[str]:
        names: set[str] = set()
        for c in self.constraints:
            names.update(atoms(c))
        return names


@dataclass(frozen=True)
class TableRow:
    valuation: Valuation
    excluded: bool
    violated: tuple[Formula, ...]
    values: tuple[bool, ...] | None  # None exactly when excluded


@dataclass(frozen=True)
class TruthTable:
    atoms: tuple[str, ...]
    formulas: tuple[Formula, ...]
    rows: tuple[TableRow, ...]


def _check_atom_limit(names: Sequence[str], atom_limit: int) -> None:
    if len(names) > atom_limit:
        raise AtomLimitExceeded(
            f"{len(names)} atoms would enumerate 2^{len(names)} valuations; "
            f"the limit is {atom_limit} (raise it explicitly to proceed)"
        )


def _require_k_free(formulas: Iterable[Formula]) -> None:
    for f in formulas:
        if modal_depth(f) != 0:
            raise ModalOperatorPresent(
                f"formula contains the knowledge operator: {render(f)}"
            )


def truth_table(
    formulas: Sequence[Formula],
    constraints: ConstraintSet = ConstraintSet(),
    atom_limit: int = DEFAULT_ATOM_LIMIT,
) -> TruthTable:
    """Constrained truth table over the union of atoms, rows in canonical order.

    A row is excluded iff at least one constraint evaluates false under its
    valuation; excluded rows carry no formula values.
    """
    formulas = tuple(formulas)
    _require_k_free(formulas)
    names: set[str] = set(constraints.atom_names())
    for f in formulas:
        names.update(atoms(f))
    order = tuple(sorted(names))
    _check_atom_limit(order, atom_limit)
    rows = []
    for v in all_valuations(order):
        violated = tuple(c for c in constraints if not _eval(c, v))
        if violated:
            rows.append(TableRow(v, True, violated, None))
        else:
            values = tuple(_eval(f, v) for f in formulas)
            rows.append(TableRow(v, False, (), values))
    return TruthTable(order, formulas, tuple(rows))


@dataclass(frozen=True)
class ClassicalVerdict:
    """Outcome of a universally quantified classical check.

    holds=True means no counterexample exists; otherwise `witness` is the
    first falsifying/distinguishing valuation in canonical order.
    """

    holds: bool
    witness: Valuation | None = None


def is_tautology(f: Formula, atom_limit: int = DEFAULT_ATOM_LIMIT) -> ClassicalVerdict:
    """True at every valuation, or the first falsifying valuation."""
    _require_k_free([f])
    order = atoms(f)
    _check_atom_limit(order, atom_limit)
    for v in all_valuations(order):
        if not _eval(f, v):
            return ClassicalVerdict(False, v)
    return ClassicalVerdict(True)


def are_equivalent_under(
    constraints: ConstraintSet,
    f: Formula,
    g: Formula,
    atom_limit: int = DEFAULT_ATOM_LIMIT,
) -> ClassicalVerdict:
    """Do f and g agree on every valuation satisfying all constraints?"""
    _require_k_free([f, g])
    names = set(atoms(f)) | set(atoms(g)) | constraints.atom_names()
    order = tuple(sorted(names))
    _check_atom_limit(order, atom_limit)
    for v in all_valuations(order):
        if all(_eval(c, v) for c in constraints) and _eval(f, v) != _eval(g, v):
            return ClassicalVerdict(False, v)
    return ClassicalVerdict(True)
