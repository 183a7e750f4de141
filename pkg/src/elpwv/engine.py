"""Epistemic reducts, candidate world views and Shen–Eiter world views.

Two semantics live here side by side:

* three-valued: a CWI ``I`` is a candidate world view (CWV) when the answer
  sets of the reduct ``Π^I`` are compatible with ``I``; world views (WVs) are
  the subset-minimal CWVs;
* Shen–Eiter: a guess ``Φ ⊆ elit(Π)`` yields an SE-CWV when the answer sets of
  ``Π^Φ`` satisfy the guess; SE-WVs have subset-maximal guesses.

Both reducts replace each epistemic literal ``not l`` either by ``~l`` or by
``⊤``. A ``⊤`` conjunct is dropped, a ``~⊤`` conjunct deletes its rule, and
negation chains are folded back to ``a``, ``~a`` or ``~~a``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator

from .asp import Interpretation, MaskRule, answer_set_masks, from_mask
from .syntax import (
    CWI,
    BodyElement,
    EpistemicLiteral,
    Kind,
    Program,
    Rule,
    elit_of,
    nneg,
    neg,
)

AnswerSets = frozenset  # of Interpretation


# --------------------------------------------------------------------------
# reducts on Program objects


def _replace(program: Program, to_negation: Callable[[EpistemicLiteral], bool]) -> Program:
    rules = []
    for r in program.rules:
        body: list[BodyElement] = []
        deleted = False
        for e in r.body:
            if not e.is_epistemic:
                body.append(e)
                continue
            if to_negation(e.epistemic):
                # not l -> ~l ;  ~not l -> ~~l   (with ~~~a = ~a)
                flip = e.negated != (e.kind is Kind.NEGEPIS)
                body.append(nneg(e.atom) if flip else neg(e.atom))
            elif e.kind is Kind.NEGEPIS:
                deleted = True  # ~⊤
                break
        if not deleted:
            rules.append(Rule(r.head, tuple(body)))
    return Program(program.atoms, tuple(rules))


def epistemic_reduct_cwi(program: Program, cwi: CWI) -> Program:
    """``not l`` becomes ``~l`` when ``l ∈ I`` and ``⊤`` otherwise."""
    return _replace(program, lambda el: cwi.contains(el.inner))


def epistemic_reduct_guess(program: Program, guess: Iterable[EpistemicLiteral]) -> Program:
    """``not l`` becomes ``⊤`` when it is in the guess and ``~l`` otherwise."""
    guess = frozenset(guess)
    return _replace(program, lambda el: el not in guess)


# --------------------------------------------------------------------------
# compiled form for enumeration


class CompiledELP:
    """Bitmask view of an ELP that produces reducts by epistemic-literal choice.

    A *choice* is a bitmask over :attr:`elits`; bit ``k`` set means
    ``elits[k]`` is replaced by default negation, unset means ``⊤``.
    """

    def __init__(self, program: Program):
        self.program = program
        self.atoms = program.atoms
        self.n = len(self.atoms)
        self.index = {a: i for i, a in enumerate(self.atoms)}
        self.elits: tuple[EpistemicLiteral, ...] = tuple(sorted(elit_of(program)))
        ek = {el: k for k, el in enumerate(self.elits)}
        self.rules = []
        for r in program.rules:
            h = p = ng = nn = 0
            items = []
            for a in r.head:
                h |= 1 << self.index[a]
            for e in r.body:
                bit = 1 << self.index[e.atom]
                if e.kind is Kind.POS:
                    p |= bit
                elif e.kind is Kind.NEG:
                    ng |= bit
                elif e.kind is Kind.NNEG:
                    nn |= bit
                else:
                    flip = e.negated != (e.kind is Kind.NEGEPIS)
                    items.append((ek[e.epistemic], e.kind is Kind.NEGEPIS, flip, bit))
            self.rules.append((h, p, ng, nn, tuple(items)))
        self._cache: dict[int, tuple[int, ...]] = {}

    def reduct(self, choice: int) -> tuple[MaskRule, ...]:
        out = set()
        for h, p, ng, nn, items in self.rules:
            for k, negated_epis, flip, bit in items:
                if choice >> k & 1:
                    if flip:
                        nn |= bit
                    else:
                        ng |= bit
                elif negated_epis:
                    break
            else:
                out.add((h, p, ng, nn))
        return tuple(sorted(out))

    def answer_sets(self, choice: int) -> tuple[int, ...]:
        hit = self._cache.get(choice)
        if hit is None:
            hit = self._cache[choice] = answer_set_masks(self.n, self.reduct(choice))
        return hit

    def choice_for_cwi(self, pos_mask: int, neg_mask: int) -> int:
        c = 0
        for k, el in enumerate(self.elits):
            bit = 1 << self.index[el.atom]
            if (neg_mask if el.negated else pos_mask) & bit:
                c |= 1 << k
        return c

    def choice_for_guess(self, guess: Iterable[EpistemicLiteral]) -> int:
        guess = set(guess)
        return sum(1 << k for k, el in enumerate(self.elits) if el not in guess)

    def interps(self, masks: Iterable[int]) -> frozenset[Interpretation]:
        return frozenset(from_mask(m, self.atoms) for m in masks)

    def cwi(self, pos_mask: int, neg_mask: int) -> CWI:
        return CWI(from_mask(pos_mask, self.atoms), from_mask(neg_mask, self.atoms))


def _meet_join(masks: Iterable[int], full: int) -> tuple[int, int]:
    always, ever = full, 0
    for m in masks:
        always &= m
        ever |= m
    return always, ever


# --------------------------------------------------------------------------
# three-valued world views


def compatible(cwi: CWI, interps: Iterable[Iterable[str]], universe: Iterable[str] | None = None) -> bool:
    """Compatibility of a CWI with a set of interpretations.

    ``universe`` fixes which atoms are unknown; it defaults to the atoms
    mentioned by the CWI and the interpretations.
    """
    interps = [frozenset(j) for j in interps]
    if not interps:
        return False
    if universe is None:
        universe = set(cwi.pos) | set(cwi.neg) | set().union(*interps)
    for a in cwi.pos:
        if not all(a in j for j in interps):
            return False
    for a in cwi.neg:
        if any(a in j for j in interps):
            return False
    for a in cwi.unknown(universe):
        if all(a in j for j in interps) or not any(a in j for j in interps):
            return False
    return True


def is_cwv(program: Program, cwi: CWI) -> bool:
    from .asp import answer_sets

    if not (cwi.pos | cwi.neg) <= set(program.atoms):
        raise ValueError("CWI mentions atoms outside the universe")
    sets = answer_sets(epistemic_reduct_cwi(program, cwi))
    return compatible(cwi, sets, program.atoms)


def all_cwis(universe: Iterable[str]) -> Iterator[CWI]:
    """Every CWI over ``universe``; the order is fixed (all-unknown first)."""
    atoms = sorted(universe)
    for values in itertools.product((0, 1, 2), repeat=len(atoms)):
        yield CWI(
            frozenset(a for a, v in zip(atoms, values) if v == 1),
            frozenset(a for a, v in zip(atoms, values) if v == 2),
        )


@dataclass
class WorldViewResult:
    universe: tuple[str, ...]
    cwvs: tuple[CWI, ...]
    wvs: tuple[CWI, ...]
    witnesses: dict[CWI, frozenset] = field(default_factory=dict, repr=False)

    def to_json(self) -> dict:
        return {
            "world_views": [w.to_json(self.universe) for w in self.wvs],
            "candidate_world_views": [w.to_json(self.universe) for w in self.cwvs],
        }


def minimal_cwis(cwis: Iterable[CWI]) -> tuple[CWI, ...]:
    cwis = list(cwis)
    out = [i for i in cwis if not any(j != i and j.issubset(i) for j in cwis)]
    return tuple(sorted(out, key=CWI.sort_key))


def enumerate_cwvs(program: Program, exhaustive: bool = False) -> WorldViewResult:
    """All CWVs and WVs of ``program``.

    The reduct only depends on the atoms inside epistemic literals, and the
    answer sets of a reduct pin down every other atom's value. So by default
    only those atoms are enumerated three-valued and the rest is read off the
    answer sets. ``exhaustive=True`` instead tests all ``3^n`` CWIs; both give
    the same result.
    """
    ce = CompiledELP(program)
    full = (1 << ce.n) - 1
    found: dict[CWI, frozenset] = {}
    if exhaustive:
        for cwi in all_cwis(program.atoms):
            pm = sum(1 << ce.index[a] for a in cwi.pos)
            nm = sum(1 << ce.index[a] for a in cwi.neg)
            sets = ce.answer_sets(ce.choice_for_cwi(pm, nm))
            if not sets:
                continue
            always, ever = _meet_join(sets, full)
            unknown = full & ~pm & ~nm
            if pm & ~always or nm & ever or unknown & (always | ~ever):
                continue
            found[cwi] = ce.interps(sets)
    else:
        eatoms = sorted({ce.index[el.atom] for el in ce.elits})
        emask = sum(1 << i for i in eatoms)
        for values in itertools.product((0, 1, 2), repeat=len(eatoms)):
            pm = sum(1 << i for i, v in zip(eatoms, values) if v == 1)
            nm = sum(1 << i for i, v in zip(eatoms, values) if v == 2)
            sets = ce.answer_sets(ce.choice_for_cwi(pm, nm))
            if not sets:
                continue
            always, ever = _meet_join(sets, full)
            unknown = emask & ~pm & ~nm
            if pm & ~always or nm & ever or unknown & (always | ~ever):
                continue
            pm |= always & ~emask
            nm |= full & ~ever & ~emask
            found[ce.cwi(pm, nm)] = ce.interps(sets)
    cwvs = tuple(sorted(found, key=CWI.sort_key))
    return WorldViewResult(program.atoms, cwvs, minimal_cwis(cwvs), found)


def cwvs(program: Program) -> frozenset[CWI]:
    return frozenset(enumerate_cwvs(program).cwvs)


def wvs(program: Program) -> frozenset[CWI]:
    return frozenset(enumerate_cwvs(program).wvs)


# --------------------------------------------------------------------------
# Shen–Eiter semantics


@dataclass(frozen=True)
class SECWV:
    guess: frozenset[EpistemicLiteral]
    answer_sets: frozenset  # of Interpretation

    def sort_key(self):
        return (
            sorted(map(str, self.guess)),
            sorted(sorted(m) for m in self.answer_sets),
        )


def enumerate_se_cwvs(program: Program) -> frozenset[SECWV]:
    ce = CompiledELP(program)
    k = len(ce.elits)
    out = set()
    for choice in range(1 << k):
        sets = ce.answer_sets(choice)
        if not sets:
            continue
        ok = True
        for j, el in enumerate(ce.elits):
            bit = 1 << ce.index[el.atom]
            # M ⊨ l  for l = a or l = ~a
            holds = [(m & bit == 0) if el.negated else bool(m & bit) for m in sets]
            if choice >> j & 1:
                ok = all(holds)  # not in the guess: l true everywhere
            else:
                ok = not all(holds)  # in the guess: l false somewhere
            if not ok:
                break
        if ok:
            guess = frozenset(el for j, el in enumerate(ce.elits) if not choice >> j & 1)
            out.add(SECWV(guess, ce.interps(sets)))
    return frozenset(out)


def se_wvs(program: Program) -> frozenset[SECWV]:
    """SE-CWVs whose guess is subset-maximal among all SE-CWV guesses."""
    cands = enumerate_se_cwvs(program)
    return frozenset(c for c in cands if not any(c.guess < d.guess for d in cands))


def se_cwv_collections(program: Program) -> frozenset[frozenset]:
    return frozenset(c.answer_sets for c in enumerate_se_cwvs(program))


# --------------------------------------------------------------------------
# guesses versus CWIs


class InconsistentGuess(ValueError):
    pass


def all_epistemic_literals(universe: Iterable[str]) -> frozenset[EpistemicLiteral]:
    return frozenset(
        EpistemicLiteral(a, negated) for a in universe for negated in (False, True)
    )


def add_tautology_rules(program: Program) -> Program:
    """Add ``:- a, ~a, not l`` for every epistemic literal not yet present.

    The added constraints can never fire, but afterwards every epistemic
    literal over the universe occurs in the program.
    """
    missing = sorted(all_epistemic_literals(program.atoms) - elit_of(program))
    extra = tuple(
        Rule((), (BodyElement(Kind.POS, el.atom), neg(el.atom), BodyElement(Kind.EPIS, el.atom, el.negated)))
        for el in missing
    )
    return Program(program.atoms, program.rules + extra)


def guess_to_cwi(guess: Iterable[EpistemicLiteral], universe: Iterable[str]) -> CWI:
    """Read a guess over all epistemic literals as a CWI.

    ``{not ~a}`` means ``a`` is always true, ``{not a}`` always false, both
    unknown; a guess containing neither is inconsistent.
    """
    guess = frozenset(guess)
    p, n = set(), set()
    for a in universe:
        has_pos = EpistemicLiteral(a) in guess
        has_neg = EpistemicLiteral(a, True) in guess
        if has_pos and has_neg:
            continue
        if has_neg:
            p.add(a)
        elif has_pos:
            n.add(a)
        else:
            raise InconsistentGuess(f"inconsistent guess: neither not {a} nor not ~{a}")
    return CWI(frozenset(p), frozenset(n))


def cwi_to_guess(cwi: CWI, universe: Iterable[str]) -> frozenset[EpistemicLiteral]:
    out = set()
    for a in universe:
        if a in cwi.pos:
            out.add(EpistemicLiteral(a, True))
        elif a in cwi.neg:
            out.add(EpistemicLiteral(a))
        else:
            out.update((EpistemicLiteral(a), EpistemicLiteral(a, True)))
    return frozenset(out)


@dataclass
class CorrespondenceReport:
    """CWV ↔ SE-CWV pairing of a program, computed on its saturated form."""

    universe: tuple[str, ...]
    pairs: list[tuple[CWI, frozenset, frozenset]]  # (cwv, guess, answer sets)
    failures: list[str]
    wvs: tuple[CWI, ...]
    se_wv_cwis: tuple[CWI, ...]
    headless_false: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.failures

    @property
    def wv_relation(self) -> str:
        """Observed relation between WVs and the CWIs of SE-WVs (not a claim)."""
        a, b = set(self.wvs), set(self.se_wv_cwis)
        if a == b:
            return "equal"
        if a < b:
            return "wvs ⊂ se-wvs"
        if b < a:
            return "se-wvs ⊂ wvs"
        return "disjoint" if not a & b else "overlapping"

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "pairs": [
                {
                    "cwv": w.to_json(self.universe),
                    "guess": sorted(map(str, g)),
                    "answer_sets": sorted(sorted(m) for m in sets),
                }
                for w, g, sets in self.pairs
            ],
            "failures": self.failures,
            "wv_relation": self.wv_relation,
            "always_false_without_defining_rule": list(self.headless_false),
        }


def check_correspondence(program: Program) -> CorrespondenceReport:
    universe = program.atoms
    saturated = add_tautology_rules(program)
    result = enumerate_cwvs(program)
    secwvs = enumerate_se_cwvs(saturated)
    failures: list[str] = []
    pairs = []
    mapped: dict[CWI, SECWV] = {}
    for c in sorted(secwvs, key=SECWV.sort_key):
        try:
            w = guess_to_cwi(c.guess, universe)
        except InconsistentGuess as exc:
            failures.append(f"SE-CWV with {exc}")
            continue
        if w in mapped:
            failures.append(f"two SE-CWVs map to {w}")
        mapped[w] = c
        if w not in result.witnesses:
            failures.append(f"SE-CWV guess maps to {w}, which is not a CWV")
        elif result.witnesses[w] != c.answer_sets:
            failures.append(f"answer sets differ between CWV {w} and its SE-CWV")
    by_guess = {c.guess: c for c in secwvs}
    for w in result.cwvs:
        g = cwi_to_guess(w, universe)
        c = by_guess.get(g)
        if c is None:
            failures.append(f"CWV {w} has no SE-CWV with guess {sorted(map(str, g))}")
            continue
        pairs.append((w, g, c.answer_sets))
    if len(result.cwvs) != len(secwvs):
        failures.append(f"{len(result.cwvs)} CWVs but {len(secwvs)} SE-CWVs")
    se_wv_cwis = []
    for c in se_wvs(saturated):
        try:
            se_wv_cwis.append(guess_to_cwi(c.guess, universe))
        except InconsistentGuess:
            pass
    headless = set(universe) - program.head_atoms()
    headless_false = tuple(sorted(a for a in headless if all(a in w.neg for w in result.cwvs)))
    return CorrespondenceReport(
        universe,
        pairs,
        failures,
        result.wvs,
        tuple(sorted(se_wv_cwis, key=CWI.sort_key)),
        headless_false,
    )
