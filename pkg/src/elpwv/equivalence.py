"""Ordinary and strong equivalence of ELPs.

Programs are first aligned on the union of their universes; atoms a program
never mentions are simply false in all of its CWVs, so the comparison stays
meaningful.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from .asp import SEModel, from_mask, model_masks, se_model_masks
from .engine import (
    CWI,
    CompiledELP,
    all_cwis,
    enumerate_cwvs,
    enumerate_se_cwvs,
    se_wvs,
)
from .syntax import Program, extend_universe

NOTIONS = ("cwv", "wv", "se_cwv", "se_wv", "strong")


@dataclass
class EquivalenceVerdict:
    notion: str
    equal: bool
    universe: tuple[str, ...]
    counterexample: Optional[dict] = field(default=None)

    def __bool__(self) -> bool:
        return self.equal

    def to_json(self) -> dict:
        doc = {"notion": self.notion, "equal": self.equal}
        if self.counterexample is not None:
            doc["counterexample"] = self.counterexample
        return doc


def align(p1: Program, p2: Program) -> tuple[Program, Program]:
    return extend_universe(p1, p2.atoms), extend_universe(p2, p1.atoms)


def _only_in(a: frozenset, b: frozenset, key):
    """First element of the symmetric difference and the side holding it."""
    diff = sorted(
        [(key(x), "p1", x) for x in a - b] + [(key(x), "p2", x) for x in b - a],
        key=lambda t: t[0],
    )
    return (diff[0][2], diff[0][1]) if diff else (None, None)


def _cwi_verdict(notion, u, s1, s2):
    if s1 == s2:
        return EquivalenceVerdict(notion, True, u)
    cwi, side = _only_in(s1, s2, CWI.sort_key)
    return EquivalenceVerdict(notion, False, u, {"cwi": cwi.to_json(u), "only_in": side})


def cwv_equivalent(p1: Program, p2: Program) -> EquivalenceVerdict:
    p1, p2 = align(p1, p2)
    s1 = frozenset(enumerate_cwvs(p1).cwvs)
    s2 = frozenset(enumerate_cwvs(p2).cwvs)
    return _cwi_verdict("cwv", p1.atoms, s1, s2)


def wv_equivalent(p1: Program, p2: Program) -> EquivalenceVerdict:
    p1, p2 = align(p1, p2)
    s1 = frozenset(enumerate_cwvs(p1).wvs)
    s2 = frozenset(enumerate_cwvs(p2).wvs)
    return _cwi_verdict("wv", p1.atoms, s1, s2)


def _collection_key(sets):
    return sorted(sorted(m) for m in sets)


def _collections_verdict(notion, u, c1, c2):
    if c1 == c2:
        return EquivalenceVerdict(notion, True, u)
    coll, side = _only_in(c1, c2, _collection_key)
    return EquivalenceVerdict(
        notion, False, u, {"answer_sets": _collection_key(coll), "only_in": side}
    )


def se_cwv_equivalent(p1: Program, p2: Program) -> EquivalenceVerdict:
    """Compare SE-CWVs as families of answer-set collections; guesses are ignored."""
    p1, p2 = align(p1, p2)
    c1 = frozenset(c.answer_sets for c in enumerate_se_cwvs(p1))
    c2 = frozenset(c.answer_sets for c in enumerate_se_cwvs(p2))
    return _collections_verdict("se_cwv", p1.atoms, c1, c2)


def se_wv_equivalent(p1: Program, p2: Program) -> EquivalenceVerdict:
    p1, p2 = align(p1, p2)
    c1 = frozenset(c.answer_sets for c in se_wvs(p1))
    c2 = frozenset(c.answer_sets for c in se_wvs(p2))
    return _collections_verdict("se_wv", p1.atoms, c1, c2)


# --------------------------------------------------------------------------
# SE-function


def compatible_subset_exists(cwi: CWI, interps: Iterable[Iterable[str]], universe: Iterable[str]) -> bool:
    """Is ``cwi`` compatible with some subset of ``interps``?

    Any compatible subset avoids interpretations that contradict the true or
    false atoms, and the set of all non-contradicting ones is compatible as
    soon as it witnesses both values of every unknown atom. So one filter
    pass decides it.
    """
    kept = [
        j for j in map(frozenset, interps)
        if cwi.pos <= j and not cwi.neg & j
    ]
    if not kept:
        return False
    for a in cwi.unknown(universe):
        if all(a in j for j in kept) or not any(a in j for j in kept):
            return False
    return True


def _gate(pm: int, nm: int, um: int, mods: tuple[int, ...]) -> bool:
    # mask form of compatible_subset_exists
    always, ever, any_kept = -1, 0, False
    for m in mods:
        if m & pm == pm and not m & nm:
            always &= m
            ever |= m
            any_kept = True
    return any_kept and not um & (always | ~ever)


class _SEFunction:
    def __init__(self, program: Program):
        self.ce = CompiledELP(program)
        self._cache: dict[int, tuple[tuple[int, ...], frozenset]] = {}

    def masks(self, cwi: CWI) -> frozenset[tuple[int, int]]:
        ce = self.ce
        pm = sum(1 << ce.index[a] for a in cwi.pos)
        nm = sum(1 << ce.index[a] for a in cwi.neg)
        um = ((1 << ce.n) - 1) & ~pm & ~nm
        choice = ce.choice_for_cwi(pm, nm)
        hit = self._cache.get(choice)
        if hit is None:
            rules = ce.reduct(choice)
            hit = self._cache[choice] = (model_masks(ce.n, rules), se_model_masks(ce.n, rules))
        mods, semods = hit
        return semods if _gate(pm, nm, um, mods) else frozenset()

    def __call__(self, cwi: CWI) -> frozenset[SEModel]:
        atoms = self.ce.atoms
        return frozenset(
            SEModel(from_mask(x, atoms), from_mask(y, atoms)) for x, y in self.masks(cwi)
        )


def se_function(program: Program, cwi: CWI) -> frozenset[SEModel]:
    """SE-models of ``Π^I`` when ``I`` is compatible with some set of models of ``Π^I``, else ∅."""
    if not (cwi.pos | cwi.neg) <= set(program.atoms):
        raise ValueError("CWI mentions atoms outside the universe")
    return _SEFunction(program)(cwi)


def strongly_equivalent(p1: Program, p2: Program) -> EquivalenceVerdict:
    """Compare SE-functions on every CWI of the aligned universe.

    The first differing CWI (in :func:`all_cwis` order) is reported together
    with the first SE-model that only one side has.
    """
    p1, p2 = align(p1, p2)
    f1, f2 = _SEFunction(p1), _SEFunction(p2)
    u = p1.atoms
    for cwi in all_cwis(u):
        s1, s2 = f1.masks(cwi), f2.masks(cwi)
        if s1 != s2:
            model, side = _only_in(
                s1, s2, lambda xy: (sorted(from_mask(xy[1], u)), sorted(from_mask(xy[0], u)))
            )
            x, y = model
            return EquivalenceVerdict(
                "strong",
                False,
                u,
                {
                    "cwi": cwi.to_json(u),
                    "only_in": side,
                    "se_model": SEModel(from_mask(x, u), from_mask(y, u)).to_json(),
                },
            )
    return EquivalenceVerdict("strong", True, u)


def equivalent(p1: Program, p2: Program, notion: str) -> EquivalenceVerdict:
    notion = notion.replace("-", "_")
    try:
        check = {
            "cwv": cwv_equivalent,
            "wv": wv_equivalent,
            "se_cwv": se_cwv_equivalent,
            "se_wv": se_wv_equivalent,
            "strong": strongly_equivalent,
        }[notion]
    except KeyError:
        raise ValueError(f"unknown equivalence notion {notion!r}") from None
    return check(p1, p2)
