"""Seeded random ELPs and QBF instances for cross-checks and demos."""

from __future__ import annotations

import random
from typing import Sequence

from .qsat import QbfInstance
from .syntax import BodyElement, Kind, Program, Rule

PLAIN_KINDS = (Kind.POS, Kind.NEG, Kind.NNEG)
ALL_KINDS = PLAIN_KINDS + (Kind.EPIS, Kind.NEGEPIS)


def random_rule(
    rng: random.Random,
    atoms: Sequence[str],
    epistemic: bool = True,
    max_head: int = 2,
    max_body: int = 3,
    constraint_rate: float = 0.15,
) -> Rule:
    kinds = ALL_KINDS if epistemic else PLAIN_KINDS
    if rng.random() < constraint_rate:
        head = ()
    else:
        head = tuple(rng.sample(list(atoms), rng.randint(1, min(max_head, len(atoms)))))
    body = []
    for _ in range(rng.randint(0, max_body)):
        kind = rng.choice(kinds)
        negated = kind in (Kind.EPIS, Kind.NEGEPIS) and rng.random() < 0.5
        body.append(BodyElement(kind, rng.choice(list(atoms)), negated))
    return Rule(head, tuple(body))


def random_program(
    rng: random.Random,
    n_atoms: int | None = None,
    max_atoms: int = 4,
    max_rules: int = 6,
    epistemic: bool = True,
    atoms: Sequence[str] | None = None,
    **rule_kw,
) -> Program:
    if atoms is None:
        n = n_atoms if n_atoms is not None else rng.randint(1, max_atoms)
        atoms = [chr(ord("a") + i) for i in range(n)]
    rules = tuple(
        random_rule(rng, atoms, epistemic, **rule_kw)
        for _ in range(rng.randint(0, max_rules))
    )
    return Program(tuple(atoms), rules)


def random_qbf(
    rng: random.Random,
    max_block: int = 2,
    max_clauses: int = 4,
    y_bias: float = 0.7,
) -> QbfInstance:
    """A random ∃∀∃ 3-CNF; with probability ``y_bias`` a clause gets a positive Y literal.

    The bias makes the all-Y-true tautology condition hold often enough to
    sample from; callers still have to check it.
    """
    while True:
        sizes = [rng.randint(0, max_block) for _ in range(3)]
        if sum(sizes):
            break
    xs, ys, zs = (
        tuple(f"{tag}{i + 1}" for i in range(k)) for tag, k in zip("xyz", sizes)
    )
    variables = xs + ys + zs
    clauses = []
    for _ in range(rng.randint(1, max_clauses)):
        c = [(rng.choice(variables), rng.randint(0, 1)) for _ in range(3)]
        if ys and rng.random() < y_bias:
            c[rng.randrange(3)] = (rng.choice(ys), 0)
        clauses.append(tuple(c))
    return QbfInstance(xs, ys, zs, tuple(clauses))
