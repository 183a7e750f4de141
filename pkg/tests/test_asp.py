import random

import pytest
from hypothesis import given, settings

from elpwv.asp import (
    SEModel,
    answer_sets,
    asp_strongly_equivalent,
    gl_reduct,
    models,
    satisfies,
    se_models,
)
from elpwv.generate import random_program
from elpwv.syntax import Program, Rule, parse_program, union

import oracles
from strategies import programs


def fs(*sets):
    return frozenset(frozenset(s) for s in sets)


def rule(text):
    (r,) = parse_program(text).rules
    return r


@pytest.mark.parametrize(
    "interp, text, expected",
    [
        ({"a"}, "b :- a.", False),
        (set(), "b :- a.", True),
        ({"a"}, "a :- ~ ~ a.", True),
        (set(), "a :- ~ ~ a.", True),
        (set(), "a :- ~ a.", False),
        ({"a"}, ":- a.", False),
        ({"b"}, "a | b :- ~c.", True),
    ],
)
def test_satisfies(interp, text, expected):
    assert satisfies(interp, rule(text)) is expected


def test_models():
    assert models(parse_program("a | b.")) == fs("a", "b", "ab")
    assert models(Program(("a",))) == fs((), "a")
    assert models(parse_program(":- a.")) == fs(())


def test_gl_reduct():
    assert gl_reduct(parse_program("a :- ~ b."), {"a"}).rules == (Rule(("a",)),)
    assert gl_reduct(parse_program("a :- ~ a."), {"a"}).rules == ()
    assert gl_reduct(parse_program("a :- ~ ~ a."), {"a"}).rules == (Rule(("a",)),)
    assert gl_reduct(parse_program("a :- ~ ~ a."), set()).rules == ()


def test_gl_reduct_keeps_the_universe():
    assert gl_reduct(parse_program("a :- ~ b."), {"b"}).atoms == ("a", "b")


def test_epistemic_program_is_rejected():
    with pytest.raises(ValueError):
        models(parse_program("a :- not b."))


@pytest.mark.parametrize("exhaustive", [False, True])
@pytest.mark.parametrize(
    "text, expected",
    [
        ("a | b.", fs("a", "b")),
        ("#atoms a.", fs(())),
        ("a :- ~ b. b :- ~ a.", fs("a", "b")),
        ("a :- ~ ~ a.", fs((), "a")),
        ("a :- ~ a.", fs()),
        ("a :- b. b :- a.", fs(())),
        ("a | b. a :- b. b :- a.", fs("ab")),
        (":- .", fs()),
    ],
)
def test_answer_sets(text, expected, exhaustive):
    assert answer_sets(parse_program(text), exhaustive=exhaustive) == expected


def test_se_models():
    assert se_models(parse_program("a.")) == {SEModel(frozenset("a"), frozenset("a"))}
    empty = Program(("a",))
    assert se_models(empty) == {
        SEModel(frozenset(), frozenset()),
        SEModel(frozenset(), frozenset("a")),
        SEModel(frozenset("a"), frozenset("a")),
    }
    with pytest.raises(ValueError):
        SEModel(frozenset("a"), frozenset())


def test_asp_strong_equivalence_examples():
    p = parse_program("a :- ~b. b | c.")
    assert asp_strongly_equivalent(p, p)
    assert not asp_strongly_equivalent(parse_program("a | b."), parse_program("a :- ~ b. b :- ~ a."))
    assert asp_strongly_equivalent(parse_program("a."), parse_program("a. a :- b."))


# --------------------------------------------------------------------------
# properties against the set-based oracle


def _oracle_answer_sets(p):
    atoms, rules = oracles.to_oracle(p)
    return {frozenset(m) for m in oracles.plain_answer_sets(atoms, rules)}


@settings(max_examples=300)
@given(programs(epistemic=False))
def test_answer_sets_match_definition(p):
    expected = _oracle_answer_sets(p)
    assert answer_sets(p) == expected
    assert answer_sets(p, exhaustive=True) == expected


@settings(max_examples=200)
@given(programs(epistemic=False))
def test_models_and_se_models_match_definition(p):
    atoms, rules = oracles.to_oracle(p)
    assert models(p) == oracles.plain_models(atoms, rules)
    assert {(m.x, m.y) for m in se_models(p)} == oracles.plain_se_models(atoms, rules)


@given(programs(epistemic=False))
def test_answer_sets_are_models(p):
    assert answer_sets(p) <= models(p)


@given(programs(epistemic=False))
def test_reduct_is_negation_free(p):
    for m in models(p):
        r = gl_reduct(p, m)
        assert all(e.kind.value == "pos" for rr in r.rules for e in rr.body)


@given(programs(epistemic=False))
def test_total_se_models_are_the_models(p):
    totals = {m.y for m in se_models(p) if m.x == m.y}
    assert totals == models(p)


def test_negation_free_answer_sets_are_minimal_models():
    rng = random.Random(11)
    for _ in range(300):
        p = random_program(rng, max_atoms=3, epistemic=False)
        positive = Program(
            p.atoms,
            tuple(Rule(r.head, tuple(e for e in r.body if e.kind.value == "pos")) for r in p.rules),
        )
        mods = models(positive)
        minimal = {m for m in mods if not any(o < m for o in mods)}
        assert answer_sets(positive) == minimal


def test_search_matches_exhaustive_on_larger_programs():
    rng = random.Random(5)
    for _ in range(150):
        p = random_program(rng, n_atoms=7, max_rules=10, epistemic=False)
        assert answer_sets(p) == answer_sets(p, exhaustive=True)


def test_strong_equivalence_survives_random_extensions():
    rng = random.Random(2)
    checked = 0
    while checked < 40:
        p1 = random_program(rng, max_atoms=3, max_rules=3, epistemic=False)
        p2 = random_program(rng, atoms=p1.atoms, max_rules=3, epistemic=False)
        if not asp_strongly_equivalent(p1, p2):
            continue
        checked += 1
        extra = list(p1.atoms) + ["x", "y", "z"][: rng.randint(0, 3)]
        for _ in range(25):
            q = random_program(rng, atoms=extra, max_rules=3, epistemic=False)
            assert answer_sets(union(p1, q)) == answer_sets(union(p2, q))
