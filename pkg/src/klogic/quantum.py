"""Interval-valued observable propositions and incompatibility generation.

A proposition binds an atom to one observable kind (position or momentum on
a single axis) and an exact rational interval.  A momentum/position pair is
incompatible when the product of the interval widths falls below the
uncertainty bound (1/2 in natural units); each incompatible pair yields one
epistemic axiom K(m) -> !K(x) and one classical constraint !(m & x).

All arithmetic is exact: widths, products, and the bound are
`fractions.Fraction` values, so comparisons at the bound are never subject
to rounding.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .classical import ConstraintSet
from .epistemic import Theory
from .errors import DisjointIntervals, DuplicateAtom, KindMismatch
from .syntax import And, Formula, Implies, Know, Not, Var, is_atom_name

Rational = int | Fraction


class ObservableKind(Enum):
    POSITION = "position"
    MOMENTUM = "momentum"


@dataclass(frozen=True)
class IntervalProposition:
    """An atom asserting that an observable lies in [lo, hi] (natural units)."""

    atom: str
    kind: ObservableKind
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if not is_atom_name(self.atom):
            raise ValueError(f"invalid atom name: {self.atom!r}")
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if not self.lo < self.hi:
            raise ValueError(
                f"interval must have positive width, got [{self.lo}, {self.hi}]"
            )

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def var(self) -> Var:
        return Var(self.atom)


@dataclass(frozen=True)
class PhysicsConfig:
    """Right-hand side of the uncertainty inequality; 1/2 in natural units."""

    bound: Fraction = Fraction(1, 2)

    def __post_init__(self):
        object.__setattr__(self, "bound", Fraction(self.bound))
        if not self.bound > 0:
            raise ValueError(f"bound must be positive, got {self.bound}")


def _require_pair(m: IntervalProposition, x: IntervalProposition) -> None:
    if m.kind is not ObservableKind.MOMENTUM or x.kind is not ObservableKind.POSITION:
        raise KindMismatch(
            f"expected a (momentum, position) pair, got "
            f"({m.kind.value} '{m.atom}', {x.kind.value} '{x.atom}')"
        )


def uncertainty_product(m: IntervalProposition, x: IntervalProposition) -> Fraction:
    """Exact product of the momentum width and the position width."""
    _require_pair(m, x)
    return m.width * x.width


def compatible(
    m: IntervalProposition,
    x: IntervalProposition,
    cfg: PhysicsConfig = PhysicsConfig(),
) -> bool:
    """True iff the width product meets the bound; equality counts as
    compatible (the inequality is >=)."""
    return uncertainty_product(m, x) >= cfg.bound


def merge(
    a: IntervalProposition, b: IntervalProposition, new_name: str
) -> IntervalProposition:
    """Union of two same-kind intervals that overlap or share an endpoint."""
    if a.kind is not b.kind:
        raise KindMismatch(
            f"cannot merge {a.kind.value} '{a.atom}' with {b.kind.value} '{b.atom}'"
        )
    if max(a.lo, b.lo) > min(a.hi, b.hi):
        raise DisjointIntervals(
            f"[{a.lo}, {a.hi}] and [{b.lo}, {b.hi}] leave a gap; "
            f"their union is not an interval"
        )
    return IntervalProposition(new_name, a.kind, min(a.lo, b.lo), max(a.hi, b.hi))


@dataclass(frozen=True)
class AxiomProvenance:
    """Why one axiom exists: the pair and its recomputable width product."""

    momentum: IntervalProposition
    position: IntervalProposition
    product: Fraction
    bound: Fraction


@dataclass(frozen=True)
class GeneratedTheory:
    axioms: Theory
    constraints: ConstraintSet
    provenance: tuple[AxiomProvenance, ...]


def generate(
    props: list[IntervalProposition] | tuple[IntervalProposition, ...],
    cfg: PhysicsConfig = PhysicsConfig(),
) -> GeneratedTheory:
    """One axiom K(m) -> !K(x) and one constraint !(m & x) per incompatible
    momentum/position pair, in declaration order; nothing else."""
    seen: set[str] = set()
    for p in props:
        if p.atom in seen:
            raise DuplicateAtom(f"atom '{p.atom}' declared more than once")
        seen.add(p.atom)
    axioms: list[Formula] = []
    constraints: list[Formula] = []
    provenance: list[AxiomProvenance] = []
    for m in props:
        if m.kind is not ObservableKind.MOMENTUM:
            continue
        for x in props:
            if x.kind is not ObservableKind.POSITION:
                continue
            if compatible(m, x, cfg):
                continue
            axioms.append(Implies(Know(m.var), Not(Know(x.var))))
            constraints.append(Not(And(m.var, x.var)))
            provenance.append(
                AxiomProvenance(m, x, uncertainty_product(m, x), cfg.bound)
            )
    return GeneratedTheory(
        Theory(tuple(axioms)), ConstraintSet(tuple(constraints)), tuple(provenance)
    )
