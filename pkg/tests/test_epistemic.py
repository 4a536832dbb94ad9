"""Single-cluster S5 semantics: evaluation, satisfiability, validity."""

from __future__ import annotations

import itertools
import random

import pytest
from hypothesis import given, settings

from klogic import (
    AtomLimitExceeded,
    EpistemicModel,
    Theory,
    UnknownAtom,
    Valuation,
    Verdict,
    are_equivalent_modal,
    atoms,
    erase_K,
    eval_classical,
    eval_modal,
    is_satisfiable,
    is_valid,
    modal_depth,
    parse,
    valuation_at,
)
from oracles import oracle_first_model, random_formula

from test_syntax import formulas as any_formulas

DEMO_AXIOMS = Theory((parse("K(p) -> !K(q)"), parse("K(p) -> !K(r)")))


def _model(atom_order, bit_rows, designated=0):
    cell = tuple(Valuation(atom_order, bits) for bits in bit_rows)
    return EpistemicModel(atom_order, cell, designated)


def test_model_validation():
    with pytest.raises(ValueError):
        _model(("a",), ())
    with pytest.raises(ValueError):
        _model(("a",), ((True,), (True,)))
    with pytest.raises(ValueError):
        _model(("a",), ((True,),), designated=1)
    with pytest.raises(ValueError):
        EpistemicModel(("a",), (Valuation(("b",), (True,)),), 0)


def test_two_world_model_for_disjunction():
    """Frozen reference values: K distributes into neither disjunct here."""
    m = _model(("q", "r"), ((True, False), (False, True)))
    for w in (0, 1):
        assert eval_modal(parse("K(q | r)"), m, w) is True
        assert eval_modal(parse("K(q)"), m, w) is False
        assert eval_modal(parse("K(r)"), m, w) is False
        assert eval_modal(parse("q | r"), m, w) is True


def test_singleton_model_evaluation():
    m = EpistemicModel.singleton(Valuation(("p",), (True,)))
    assert eval_modal(parse("K(p)"), m, 0) is True
    assert eval_modal(parse("p"), m, 0) is True
    assert eval_modal(parse("K(true)"), m, 0) is True


def test_eval_modal_error_cases():
    m = EpistemicModel.singleton(Valuation(("p",), (True,)))
    with pytest.raises(UnknownAtom):
        eval_modal(parse("q"), m, 0)
    with pytest.raises(IndexError):
        eval_modal(parse("p"), m, 3)


def test_theory_deduplicates():
    t = Theory((parse("K(p)"), parse("K(p)"), parse("q")))
    assert len(t.axioms) == 2
    assert t.atom_names() == {"p", "q"}


def test_erase_K_examples():
    assert erase_K(parse("K(p) & K(q)")) == parse("p & q")
    assert erase_K(parse("K(K(p))")) == parse("p")
    assert erase_K(parse("p | q")) == parse("p | q")
    assert erase_K(parse("K(p -> K(q)) <-> !K(r)")) == parse("(p -> q) <-> !r")


def test_conjunction_law_is_valid():
    result = is_valid(parse("K(a & b) <-> K(a) & K(b)"), Theory())
    assert result.verdict is Verdict.VALID
    assert result.model is None


def test_conjunction_law_holds_for_small_compound_operands():
    shapes = [
        parse(t)
        for t in ("a", "b", "true", "false", "!a", "!b", "a & b", "a | b", "a -> b", "a <-> b")
    ]
    for g, h in itertools.product(shapes, repeat=2):
        claim = parse(f"K(({g}) & ({h})) <-> K({g}) & K({h})")
        assert is_valid(claim, Theory()).verdict is Verdict.VALID


def test_disjunction_distribution_fails_with_two_world_countermodel():
    result = is_valid(parse("K(a | b) -> K(a) | K(b)"), Theory())
    assert result.verdict is Verdict.INVALID
    m = result.model
    assert m.atoms == ("a", "b")
    assert [v.bits for v in m.cell] == [(False, True), (True, False)]
    assert m.designated == 0
    # the countermodel really falsifies the formula at its designated world
    assert eval_modal(parse("K(a | b) -> K(a) | K(b)"), m, m.designated) is False


def test_half_distribution_over_disjunction_is_valid():
    assert is_valid(parse("K(a) | K(b) -> K(a | b)"), Theory()).verdict is Verdict.VALID


def test_s5_schema_suite():
    for schema in (
        "K(a) -> a",
        "K(a) -> K(K(a))",
        "!K(a) -> K(!K(a))",
        "K(a -> b) -> (K(a) -> K(b))",
    ):
        assert is_valid(parse(schema), Theory()).verdict is Verdict.VALID, schema


def test_joint_knowledge_unsatisfiable_under_incompatibility_axioms():
    result = is_satisfiable(parse("K(p) & (K(q) | K(r))"), DEMO_AXIOMS)
    assert result.verdict is Verdict.UNSATISFIABLE
    assert result.model is None


def test_merged_conjunction_claim_is_satisfiable():
    result = is_satisfiable(parse("K(p & s) <-> K(p) & K(s)"), Theory())
    assert result.verdict is Verdict.SATISFIABLE
    m = result.model
    assert eval_modal(parse("K(p & s) <-> K(p) & K(s)"), m, m.designated) is True


def test_plain_contradiction_is_unsatisfiable():
    assert is_satisfiable(parse("p & !p"), Theory()).verdict is Verdict.UNSATISFIABLE


def test_equivalence_chain():
    assert (
        are_equivalent_modal(parse("K(p & (q | r))"), parse("K(p) & K(q | r)"), Theory()).verdict
        is Verdict.VALID
    )
    assert (
        are_equivalent_modal(
            parse("K(p & q) | K(p & r)"), parse("K(p) & (K(q) | K(r))"), Theory()
        ).verdict
        is Verdict.VALID
    )
    broken = are_equivalent_modal(
        parse("K(p & (q | r))"), parse("K(p & q) | K(p & r)"), Theory()
    )
    assert broken.verdict is Verdict.INVALID
    assert broken.model is not None
    assert (
        eval_modal(
            parse("K(p & (q | r)) <-> K(p & q) | K(p & r)"),
            broken.model,
            broken.model.designated,
        )
        is False
    )


def test_theory_constrains_plain_propositions():
    assert is_satisfiable(parse("q"), Theory((parse("!q"),))).verdict is Verdict.UNSATISFIABLE
    chained = Theory((parse("p -> q"), parse("!q")))
    assert is_satisfiable(parse("p"), chained).verdict is Verdict.UNSATISFIABLE
    assert is_satisfiable(parse("!p"), chained).verdict is Verdict.SATISFIABLE


def test_returned_models_satisfy_the_theory_globally():
    result = is_satisfiable(parse("K(q) | K(r)"), DEMO_AXIOMS)
    assert result.verdict is Verdict.SATISFIABLE
    m = result.model
    for axiom in DEMO_AXIOMS.axioms:
        for w in range(len(m.cell)):
            assert eval_modal(axiom, m, w) is True


def test_atom_limit_counts_formula_and_theory_atoms_together():
    f = parse("K(a) & K(b) & K(c)")
    theory = Theory((parse("d | e"),))
    with pytest.raises(AtomLimitExceeded) as exc:
        is_satisfiable(f, theory)
    assert "2^(2^n)" in str(exc.value)
    with pytest.raises(AtomLimitExceeded):
        is_valid(f, theory)


def test_atom_limit_override_admits_wider_k_free_queries():
    f = parse("a & b & c & d & e")
    with pytest.raises(AtomLimitExceeded):
        is_satisfiable(f, Theory())
    result = is_satisfiable(f, Theory(), atom_limit=5)
    assert result.verdict is Verdict.SATISFIABLE
    assert result.model.designated_world.bits == (True,) * 5


def test_results_are_deterministic():
    a = is_valid(parse("K(a | b) -> K(a) | K(b)"), Theory())
    b = is_valid(parse("K(a | b) -> K(a) | K(b)"), Theory())
    assert a == b


def test_engine_matches_reference_enumeration_on_random_queries():
    """Seeded sweep against the literal first-model search, K and theories
    included; covers both the K-free shortcut and the general loop."""
    rng = random.Random(20260817)
    for _ in range(150):
        pool = ("a", "b", "c")[: rng.randint(1, 3)]
        f = random_formula(rng, pool, depth=3, know_budget=rng.randint(0, 2))
        axioms = tuple(
            random_formula(rng, pool, depth=2, know_budget=1)
            for _ in range(rng.randint(0, 2))
        )
        names = tuple(sorted(set(atoms(f)) | {a for ax in axioms for a in atoms(ax)}))
        if not names:
            continue
        expected = oracle_first_model(f, axioms, names)
        result = is_satisfiable(f, Theory(axioms))
        if expected is None:
            assert result.verdict is Verdict.UNSATISFIABLE
            continue
        worlds, designated = expected
        m = result.model
        assert result.verdict is Verdict.SATISFIABLE
        assert [v.as_dict() for v in m.cell] == list(worlds)
        assert m.designated == designated


@given(any_formulas)
@settings(max_examples=150)
def test_collapse_on_singleton_models(f):
    names = atoms(f)
    erased = erase_K(f)
    assert modal_depth(erased) == 0
    for index in range(2 ** len(names)):
        v = valuation_at(names, index)
        m = EpistemicModel.singleton(v)
        assert eval_modal(f, m, 0) == eval_classical(erased, v)


@given(any_formulas)
@settings(max_examples=60)
def test_validity_duality(f):
    if len(atoms(f)) > 3:
        return
    valid = is_valid(f, Theory()).verdict is Verdict.VALID
    negation_unsat = (
        is_satisfiable(parse(f"!({f})"), Theory()).verdict is Verdict.UNSATISFIABLE
    )
    assert valid == negation_unsat


@given(any_formulas)
@settings(max_examples=60)
def test_erase_K_is_idempotent(f):
    assert erase_K(erase_K(f)) == erase_K(f)
