"""Single-agent S5 semantics over canonical single-cluster models.

A model is one equivalence class of worlds (every world sees every world,
itself included), represented as a non-empty set of pairwise-distinct
valuations plus a designated world.  K(f) is true at a world iff f is true
at every world of the cell.

Satisfiability search enumerates canonical models exhaustively: with A the
combined sorted atom set and V the 2^|A| valuations in canonical order, every
non-empty subset of V is tried as a cell (subset bitmask ascending, bit i =
valuation i) and, within a cell, designated worlds in ascending valuation
order.  The first hit is returned, so repeated queries are reproducible bit
for bit.  In single-agent S5 truth at the designated world depends only on
its own equivalence class, and duplicate-valuation worlds are redundant, so
this enumeration is exhaustive up to semantic equivalence.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import AtomLimitExceeded
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
)
from .classical import Valuation, valuation_at

DEFAULT_MODAL_ATOM_LIMIT = 4


@dataclass(frozen=True)
class EpistemicModel:
    """One S5 equivalence class: distinct valuations plus a designated world."""

    atoms: tuple[str, ...]
    cell: tuple[Valuation, ...]
    designated: int

    def __post_init__(self):
        object.__setattr__(self, "atoms", tuple(self.atoms))
        object.__setattr__(self, "cell", tuple(self.cell))
        if not self.cell:
            raise ValueError("cell must be non-empty")
        for v in self.cell:
            if v.atoms != self.atoms:
                raise ValueError("every world must assign exactly the model's atoms")
        if len({v.bits for v in self.cell}) != len(self.cell):
            raise ValueError("cell worlds must be pairwise distinct")
        if not 0 <= self.designated < len(self.cell):
            raise ValueError("designated must index a member of the cell")

    @classmethod
    def singleton(cls, v: Valuation) -> "EpistemicModel":
        return cls(v.atoms, (v,), 0)

    @property
    def designated_world(self) -> Valuation:
        return self.cell[self.designated]


@dataclass(frozen=True)
class Theory:
    """Global axioms: a model satisfies the theory iff every axiom holds at
    every world of the cell."""

    axioms: tuple[Formula, ...] = ()

    def __post_init__(self):
        deduped: list[Formula] = []
        for a in self.axioms:
            if a not in deduped:
                deduped.append(a)
        object.__setattr__(self, "axioms", tuple(deduped))

    def atom_names(self) -> set[str]:
        names: set[str] = set()
        for a in self.axioms:
            names.update(atoms(a))
        return names


class Verdict(str, Enum):
    VALID = "valid"
    INVALID = "invalid"
    SATISFIABLE = "satisfiable"
    UNSATISFIABLE = "unsatisfiable"


@dataclass(frozen=True)
class CheckResult:
    """Query outcome; `model` is the countermodel for INVALID and the
    witnessing model for SATISFIABLE, None otherwise."""

    verdict: Verdict
    model: EpistemicModel | None = None

    @property
    def holds(self) -> bool:
        return self.verdict in (Verdict.VALID, Verdict.SATISFIABLE)


def eval_modal(f: Formula, m: EpistemicModel, world_index: int) -> bool:
    """Truth of f at the given world; K quantifies over the whole cell."""
    if not 0 <= world_index < len(m.cell):
        raise IndexError(f"world index {world_index} outside cell of size {len(m.cell)}")
    return _eval_at(f, m, world_index)


def _eval_at(f: Formula, m: EpistemicModel, w: int) -> bool:
    if isinstance(f, Top):
        return True
    if isinstance(f, Bottom):
        return False
    if isinstance(f, Var):
        return m.cell[w].value(f.name)
    if isinstance(f, Not):
        return not _eval_at(f.operand, m, w)
    if isinstance(f, And):
        return _eval_at(f.left, m, w) and _eval_at(f.right, m, w)
    if isinstance(f, Or):
        return _eval_at(f.left, m, w) or _eval_at(f.right, m, w)
    if isinstance(f, Implies):
        return (not _eval_at(f.left, m, w)) or _eval_at(f.right, m, w)
    if isinstance(f, Iff):
        return _eval_at(f.left, m, w) == _eval_at(f.right, m, w)
    assert isinstance(f, Know)
    return all(_eval_at(f.operand, m, u) for u in range(len(m.cell)))


def erase_K(f: Formula) -> Formula:
    """Structurally replace every K(g) by g, recursively."""
    if isinstance(f, (Top, Bottom, Var)):
        return f
    if isinstance(f, Know):
        return erase_K(f.operand)
    if isinstance(f, Not):
        return Not(erase_K(f.operand))
    return type(f)(erase_K(f.left), erase_K(f.right))


def _atom_masks(names: tuple[str, ...]) -> dict[str, int]:
    """Per-atom bitmask over valuation indices (canonical order, first atom
    is the most significant bit of the index)."""
    n = len(names)
    masks: dict[str, int] = {}
    for k, name in enumerate(names):
        m = 0
        for i in range(1 << n):
            if (i >> (n - 1 - k)) & 1:
                m |= 1 << i
        masks[name] = m
    return masks


def _truth(f: Formula, cell: int, masks: dict[str, int], cache: dict) -> int:
    """Bitmask (subset of `cell`) of the cell's worlds where f holds."""
    hit = cache.get(f)
    if hit is not None:
        return hit
    if isinstance(f, Top):
        r = cell
    elif isinstance(f, Bottom):
        r = 0
    elif isinstance(f, Var):
        r = masks[f.name] & cell
    elif isinstance(f, Not):
        r = cell & ~_truth(f.operand, cell, masks, cache)
    elif isinstance(f, And):
        r = _truth(f.left, cell, masks, cache) & _truth(f.right, cell, masks, cache)
    elif isinstance(f, Or):
        r = _truth(f.left, cell, masks, cache) | _truth(f.right, cell, masks, cache)
    elif isinstance(f, Implies):
        r = (cell & ~_truth(f.left, cell, masks, cache)) | _truth(
            f.right, cell, masks, cache
        )
    elif isinstance(f, Iff):
        r = cell & ~(
            _truth(f.left, cell, masks, cache) ^ _truth(f.right, cell, masks, cache)
        )
    else:
        assert isinstance(f, Know)
        r = cell if _truth(f.operand, cell, masks, cache) == cell else 0
    cache[f] = r
    return r


def _model_from_mask(
    names: tuple[str, ...], cell_mask: int, designated_index: int
) -> EpistemicModel:
    indices = [i for i in range(cell_mask.bit_length()) if (cell_mask >> i) & 1]
    cell = tuple(valuation_at(names, i) for i in indices)
    return EpistemicModel(names, cell, indices.index(designated_index))


def _first_model(
    f: Formula, theory: Theory, names: tuple[str, ...]
) -> EpistemicModel | None:
    """First canonical model of `theory` (globally) satisfying f at the
    designated world, or None."""
    n = len(names)
    full = (1 << (1 << n)) - 1
    masks = _atom_masks(names)

    if modal_depth(f) == 0 and all(modal_depth(a) == 0 for a in theory.axioms):
        # K-free everywhere: worlds satisfy axioms independently, so the first
        # hit is always the singleton of the first valuation satisfying both.
        cache: dict = {}
        allowed = full
        for a in theory.axioms:
            allowed &= _truth(a, full, masks, cache)
        hits = allowed & _truth(f, full, masks, cache)
        if hits == 0:
            return None
        first = (hits & -hits).bit_length() - 1
        return EpistemicModel.singleton(valuation_at(names, first))

    for cell_mask in range(1, full + 1):
        cache = {}
        if any(_truth(a, cell_mask, masks, cache) != cell_mask for a in theory.axioms):
            continue
        t = _truth(f, cell_mask, masks, cache)
        if t:
            designated = (t & -t).bit_length() - 1
            return _model_from_mask(names, cell_mask, designated)
    return None


def _combined_atoms(f: Formula, theory: Theory, atom_limit: int) -> tuple[str, ...]:
    names = tuple(sorted(set(atoms(f)) | theory.atom_names()))
    if len(names) > atom_limit:
        n = len(names)
        raise AtomLimitExceeded(
            f"{n} atoms gives 2^{1 << n} candidate cells (the search space grows "
            f"as 2^(2^n)); the modal atom limit is {atom_limit} "
            f"(raise it explicitly to accept the cost)"
        )
    return names


def is_satisfiable(
    f: Formula,
    theory: Theory = Theory(),
    atom_limit: int = DEFAULT_MODAL_ATOM_LIMIT,
) -> CheckResult:
    """Is there a canonical model of the theory where f holds at the
    designated world?  Returns the first such model in enumeration order."""
    names = _combined_atoms(f, theory, atom_limit)
    model = _first_model(f, theory, names)
    if model is None:
        return CheckResult(Verdict.UNSATISFIABLE)
    return CheckResult(Verdict.SATISFIABLE, model)


def is_valid(
    f: Formula,
    theory: Theory = Theory(),
    atom_limit: int = DEFAULT_MODAL_ATOM_LIMIT,
) -> CheckResult:
    """Does f hold at every world of every model of the theory?  Invalid
    results carry the first countermodel (a model of the negation)."""
    negated = is_satisfiable(Not(f), theory, atom_limit)
    if negated.verdict is Verdict.SATISFIABLE:
        return CheckResult(Verdict.INVALID, negated.model)
    return CheckResult(Verdict.VALID)


def are_equivalent_modal(
    f: Formula,
    g: Formula,
    theory: Theory = Theory(),
    atom_limit: int = DEFAULT_MODAL_ATOM_LIMIT,
) -> CheckResult:
    """Theory-relative equivalence: validity of f <-> g."""
    return is_valid(Iff(f, g), theory, atom_limit)
