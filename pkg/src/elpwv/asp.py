"""Models, GL-reducts, answer sets and SE-models of plain programs.

A plain program has no epistemic literals; bodies hold ``a``, ``~a`` and
``~~a``. Internally a program over ``n`` atoms is compiled to rules of four
bitmasks ``(head, pos, neg, nneg)`` where bit ``i`` is the ``i``-th atom of the
sorted universe. ``neg`` collects atoms that must be false (``~a``), ``nneg``
atoms that must be true through double negation (``~~a``).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .syntax import Kind, Program, Rule

Interpretation = frozenset  # of atom names
MaskRule = tuple[int, int, int, int]


@dataclass(frozen=True, order=True)
class SEModel:
    x: Interpretation
    y: Interpretation

    def __post_init__(self):
        if not self.x <= self.y:
            raise ValueError("SE-model requires x ⊆ y")

    def sort_key(self):
        return (sorted(self.y), sorted(self.x))

    def to_json(self) -> dict:
        return {"x": sorted(self.x), "y": sorted(self.y)}


# --------------------------------------------------------------------------
# compilation


def _require_plain(program: Program):
    if not program.is_plain:
        raise ValueError("expected a plain program without epistemic literals")


def compile_rule(rule: Rule, index: dict[str, int]) -> MaskRule:
    h = p = ng = nn = 0
    for a in rule.head:
        h |= 1 << index[a]
    for e in rule.body:
        bit = 1 << index[e.atom]
        if e.kind is Kind.POS:
            p |= bit
        elif e.kind is Kind.NEG:
            ng |= bit
        elif e.kind is Kind.NNEG:
            nn |= bit
        else:
            raise ValueError(f"epistemic element {e} in a plain rule")
    return h, p, ng, nn


def compile_program(program: Program) -> tuple[int, tuple[MaskRule, ...]]:
    _require_plain(program)
    index = {a: i for i, a in enumerate(program.atoms)}
    rules = tuple(sorted({compile_rule(r, index) for r in program.rules}))
    return len(program.atoms), rules


def to_mask(interp: Iterable[str], atoms: tuple[str, ...]) -> int:
    index = {a: i for i, a in enumerate(atoms)}
    m = 0
    for a in interp:
        m |= 1 << index[a]
    return m


def from_mask(m: int, atoms: tuple[str, ...]) -> Interpretation:
    return frozenset(a for i, a in enumerate(atoms) if m >> i & 1)


# --------------------------------------------------------------------------
# mask-level primitives


def _body_true(m: int, rule: MaskRule) -> bool:
    _, p, ng, nn = rule
    return m & p == p and not m & ng and m & nn == nn


def is_model_mask(m: int, rules: Iterable[MaskRule]) -> bool:
    for r in rules:
        if not r[0] & m and _body_true(m, r):
            return False
    return True


def reduct_mask(m: int, rules: Iterable[MaskRule]) -> tuple[tuple[int, int], ...]:
    """Positive rules ``(head, pos)`` of the GL-reduct w.r.t. ``m``."""
    return tuple(
        (h, p) for h, p, ng, nn in rules if not m & ng and m & nn == nn
    )


def _satisfies_positive(x: int, positive: Iterable[tuple[int, int]]) -> bool:
    for h, p in positive:
        if x & p == p and not x & h:
            return False
    return True


def _model_within(x: int, bound: int, positive: tuple[tuple[int, int], ...]) -> bool:
    """Is there a model ``y`` of the positive rules with ``x ⊆ y ⊆ bound``?"""
    while True:
        for h, p in positive:
            if x & p == p and not x & h:
                open_head = h & bound
                if not open_head:
                    return False
                if open_head & (open_head - 1) == 0:
                    x |= open_head
                    break
                while open_head:
                    b = open_head & -open_head
                    if _model_within(x | b, bound, positive):
                        return True
                    open_head ^= b
                return False
        else:
            return True


def is_minimal_mask(m: int, rules: Iterable[MaskRule]) -> bool:
    """No proper subset of ``m`` is a model of the GL-reduct w.r.t. ``m``."""
    positive = tuple((h & m, p) for h, p in reduct_mask(m, rules) if p & m == p)
    if any(not h for h, _ in positive):
        return False
    if all(h & (h - 1) == 0 for h, _ in positive):
        # normal reduct: compare m with its least model
        x = 0
        changed = True
        while changed:
            changed = False
            for h, p in positive:
                if x & p == p and not x & h:
                    x |= h
                    changed = True
        return x == m
    rest = m
    while rest:
        b = rest & -rest
        if _model_within(0, m & ~b, positive):
            return False
        rest ^= b
    return True


def _consistent(rules: tuple[MaskRule, ...]) -> tuple[MaskRule, ...]:
    # drop rules whose body can never hold (a together with ~a)
    return tuple(r for r in rules if not (r[1] | r[3]) & r[2])


@lru_cache(maxsize=1 << 16)
def answer_set_masks(n: int, rules: tuple[MaskRule, ...]) -> tuple[int, ...]:
    """Answer sets by backtracking over supported models, then a minimality check.

    Propagation is the usual clause and support reasoning; it is sound for
    supported models, which include all answer sets.
    """
    rules = _consistent(rules)
    full = (1 << n) - 1
    by_head = [[r for r in rules if r[0] >> a & 1] for a in range(n)]
    found: list[int] = []

    def propagate(t: int, f: int):
        changed = True
        while changed:
            changed = False
            for h, p, ng, nn in rules:
                if p & f or ng & t or nn & f or h & t:
                    continue
                undecided = (p & ~t) | (ng & ~f) | (nn & ~t)
                open_head = h & ~f
                if not undecided:
                    if not open_head:
                        return None
                    if open_head & (open_head - 1) == 0:
                        t |= open_head
                        changed = True
                elif not open_head and undecided & (undecided - 1) == 0:
                    if undecided & ng:
                        t |= undecided
                    else:
                        f |= undecided
                    changed = True
            if t & f:
                return None
            for a in range(n):
                bit = 1 << a
                if f & bit:
                    continue
                support = None
                count = 0
                for r in by_head[a]:
                    h, p, ng, nn = r
                    if p & f or ng & t or nn & f or (h & ~bit) & t:
                        continue
                    support = r
                    count += 1
                    if count > 1:
                        break
                if count == 0:
                    if t & bit:
                        return None
                    f |= bit
                    changed = True
                elif count == 1 and t & bit:
                    h, p, ng, nn = support
                    t2, f2 = t | p | nn, f | ng | (h & ~bit)
                    if (t2, f2) != (t, f):
                        t, f = t2, f2
                        changed = True
                        if t & f:
                            return None
        return t, f

    def search(t: int, f: int):
        state = propagate(t, f)
        if state is None:
            return
        t, f = state
        free = full & ~(t | f)
        if not free:
            if is_minimal_mask(t, rules):
                found.append(t)
            return
        bit = free & -free
        search(t, f | bit)
        search(t | bit, f)

    search(0, 0)
    return tuple(sorted(found))


def answer_set_masks_exhaustive(n: int, rules: tuple[MaskRule, ...]) -> tuple[int, ...]:
    """Answer sets straight from the definition: scan all ``2^n`` interpretations."""
    out = []
    for m in range(1 << n):
        if not is_model_mask(m, rules):
            continue
        positive = reduct_mask(m, rules)
        minimal = True
        sub = m
        while sub:
            sub = (sub - 1) & m
            if _satisfies_positive(sub, positive):
                minimal = False
                break
        if minimal:
            out.append(m)
    return tuple(out)


def model_masks(n: int, rules: tuple[MaskRule, ...]) -> tuple[int, ...]:
    return tuple(m for m in range(1 << n) if is_model_mask(m, rules))


@lru_cache(maxsize=1 << 14)
def se_model_masks(n: int, rules: tuple[MaskRule, ...]) -> frozenset[tuple[int, int]]:
    out = set()
    for y in model_masks(n, rules):
        positive = reduct_mask(y, rules)
        sub = y
        while True:
            if _satisfies_positive(sub, positive):
                out.add((sub, y))
            if sub == 0:
                break
            sub = (sub - 1) & y
    return frozenset(out)


# --------------------------------------------------------------------------
# public API on Program objects


def satisfies(interp: Iterable[str], rule: Rule) -> bool:
    """``interp ⊨ rule`` for a plain rule."""
    atoms = tuple(sorted(set(interp) | rule.atoms()))
    index = {a: i for i, a in enumerate(atoms)}
    mr = compile_rule(rule, index)
    return is_model_mask(to_mask(interp, atoms), (mr,))


def models(program: Program) -> frozenset[Interpretation]:
    n, rules = compile_program(program)
    return frozenset(from_mask(m, program.atoms) for m in model_masks(n, rules))


def gl_reduct(program: Program, interp: Iterable[str]) -> Program:
    """Keep ``head :- pbody`` for each rule whose negative body holds in ``interp``."""
    _require_plain(program)
    interp = set(interp)
    rules = []
    for r in program.rules:
        keep = True
        for e in r.body:
            if e.kind is Kind.NEG and e.atom in interp:
                keep = False
            elif e.kind is Kind.NNEG and e.atom not in interp:
                keep = False
        if keep:
            rules.append(Rule(r.head, tuple(e for e in r.body if e.kind is Kind.POS)))
    return Program(program.atoms, tuple(rules))


def answer_sets(program: Program, exhaustive: bool = False) -> frozenset[Interpretation]:
    """Answer sets of a plain program.

    ``exhaustive=True`` uses the ``2^n`` scan that mirrors the definition; the
    default backtracking search returns the same sets and scales further.
    """
    n, rules = compile_program(program)
    solve = answer_set_masks_exhaustive if exhaustive else answer_set_masks
    return frozenset(from_mask(m, program.atoms) for m in solve(n, rules))


def se_models(program: Program) -> frozenset[SEModel]:
    n, rules = compile_program(program)
    return frozenset(
        SEModel(from_mask(x, program.atoms), from_mask(y, program.atoms))
        for x, y in se_model_masks(n, rules)
    )


def asp_strongly_equivalent(p1: Program, p2: Program) -> bool:
    atoms = tuple(set(p1.atoms) | set(p2.atoms))
    p1 = Program(atoms, p1.rules)
    p2 = Program(atoms, p2.rules)
    return se_models(p1) == se_models(p2)
