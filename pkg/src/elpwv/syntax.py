"""Ground epistemic logic programs: data model, text format and JSON.

Concrete syntax::

    % comment
    #atoms a, b.                 % extend the atom universe
    a | b :- c, ~d, ~~e.         % disjunctive head, default negation
    x :- not a, ~not ~b.         % epistemic negation, negated epistemic literal
    :- a, b.                     % constraint
    :- .                         % the constraint with an empty body

``~`` is default negation and ``not`` is epistemic negation.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Iterator


class ParseError(ValueError):
    """Syntax error in an ELP text; carries a 1-based line and column."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class Kind(str, Enum):
    POS = "pos"  # a
    NEG = "neg"  # ~a
    NNEG = "nneg"  # ~~a
    EPIS = "epis"  # not l
    NEGEPIS = "negepis"  # ~not l


_KIND_RANK = {Kind.POS: 0, Kind.NEG: 1, Kind.NNEG: 2, Kind.EPIS: 3, Kind.NEGEPIS: 4}
_IDENT = re.compile(r"[a-z][A-Za-z0-9_]*\Z")


@dataclass(frozen=True, order=True)
class Literal:
    atom: str
    negated: bool = False

    def __str__(self) -> str:
        return f"~{self.atom}" if self.negated else self.atom


@dataclass(frozen=True, order=True)
class EpistemicLiteral:
    """``not l`` for the literal ``l`` over ``atom`` (``negated`` means ``l = ~atom``)."""

    atom: str
    negated: bool = False

    @property
    def inner(self) -> Literal:
        return Literal(self.atom, self.negated)

    def __str__(self) -> str:
        return f"not {self.inner}"


@dataclass(frozen=True)
class BodyElement:
    kind: Kind
    atom: str
    # inner negation of an epistemic literal; always False for the plain kinds
    negated: bool = False

    def __post_init__(self):
        if self.kind in (Kind.POS, Kind.NEG, Kind.NNEG) and self.negated:
            raise ValueError("only epistemic body elements carry an inner negation")

    @property
    def is_epistemic(self) -> bool:
        return self.kind in (Kind.EPIS, Kind.NEGEPIS)

    @property
    def epistemic(self) -> EpistemicLiteral:
        if not self.is_epistemic:
            raise ValueError(f"{self} is not epistemic")
        return EpistemicLiteral(self.atom, self.negated)

    def sort_key(self):
        return (_KIND_RANK[self.kind], self.atom, self.negated)

    def __str__(self) -> str:
        inner = f"~{self.atom}" if self.negated else self.atom
        return {
            Kind.POS: self.atom,
            Kind.NEG: f"~{self.atom}",
            Kind.NNEG: f"~~{self.atom}",
            Kind.EPIS: f"not {inner}",
            Kind.NEGEPIS: f"~not {inner}",
        }[self.kind]


def pos(atom: str) -> BodyElement:
    return BodyElement(Kind.POS, atom)


def neg(atom: str) -> BodyElement:
    return BodyElement(Kind.NEG, atom)


def nneg(atom: str) -> BodyElement:
    return BodyElement(Kind.NNEG, atom)


def epis(atom: str, negated: bool = False) -> BodyElement:
    return BodyElement(Kind.EPIS, atom, negated)


def negepis(atom: str, negated: bool = False) -> BodyElement:
    return BodyElement(Kind.NEGEPIS, atom, negated)


def default_negation(atom: str, depth: int) -> BodyElement:
    """Body element for ``depth`` default negations in front of ``atom``.

    Three negations collapse to one, so every depth maps onto ``a``, ``~a`` or ``~~a``.
    """
    if depth == 0:
        return pos(atom)
    return neg(atom) if depth % 2 else nneg(atom)


@dataclass(frozen=True)
class Rule:
    """``head[0] | ... :- body``; an empty head is the constraint ``⊥``.

    Head and body are stored sorted and deduplicated, so structurally equal
    rules compare equal regardless of how they were written.
    """

    head: tuple[str, ...] = ()
    body: tuple[BodyElement, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "head", tuple(sorted(set(self.head))))
        object.__setattr__(
            self, "body", tuple(sorted(set(self.body), key=BodyElement.sort_key))
        )

    def atoms(self) -> set[str]:
        return set(self.head) | {e.atom for e in self.body}

    @property
    def is_plain(self) -> bool:
        return not any(e.is_epistemic for e in self.body)

    def __str__(self) -> str:
        head = " | ".join(self.head)
        if not self.body:
            return f"{head}." if head else ":- ."
        body = ", ".join(map(str, self.body))
        return f"{head} :- {body}." if head else f":- {body}."


@dataclass(frozen=True, eq=False)
class Program:
    """A ground ELP ``(atoms, rules)``.

    The universe always contains every atom occurring in a rule and may contain
    more. Atoms are kept sorted; rules keep first-occurrence order but equality
    treats them as a set.
    """

    atoms: tuple[str, ...] = ()
    rules: tuple[Rule, ...] = ()

    def __post_init__(self):
        rules = tuple(dict.fromkeys(self.rules))
        universe = set(self.atoms)
        for r in rules:
            universe |= r.atoms()
        for a in universe:
            if not _IDENT.match(a) or a == "not":
                raise ValueError(f"invalid atom name {a!r}")
        object.__setattr__(self, "rules", rules)
        object.__setattr__(self, "atoms", tuple(sorted(universe)))

    def __eq__(self, other):
        if not isinstance(other, Program):
            return NotImplemented
        return self.atoms == other.atoms and set(self.rules) == set(other.rules)

    def __hash__(self):
        return hash((self.atoms, frozenset(self.rules)))

    @property
    def is_plain(self) -> bool:
        return all(r.is_plain for r in self.rules)

    def occurring_atoms(self) -> set[str]:
        out: set[str] = set()
        for r in self.rules:
            out |= r.atoms()
        return out

    def head_atoms(self) -> set[str]:
        return {a for r in self.rules for a in r.head}

    def __str__(self) -> str:
        return format_program(self)

    def __repr__(self) -> str:
        return f"Program(atoms={list(self.atoms)}, rules={len(self.rules)})"


def elit_of(program: Program) -> frozenset[EpistemicLiteral]:
    """Epistemic literals occurring (plain or negated) in some rule body."""
    return frozenset(e.epistemic for r in program.rules for e in r.body if e.is_epistemic)


def union(p1: Program, p2: Program) -> Program:
    return Program(p1.atoms + p2.atoms, p1.rules + p2.rules)


def extend_universe(program: Program, extra: Iterable[str]) -> Program:
    return Program(program.atoms + tuple(extra), program.rules)


@dataclass(frozen=True)
class CWI:
    """Candidate world interpretation: a consistent literal set.

    ``pos`` holds the atoms that are always true, ``neg`` those that are always
    false; every other atom of the universe is unknown.
    """

    pos: frozenset[str] = field(default_factory=frozenset)
    neg: frozenset[str] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "pos", frozenset(self.pos))
        object.__setattr__(self, "neg", frozenset(self.neg))
        clash = self.pos & self.neg
        if clash:
            raise ValueError(f"inconsistent CWI: {sorted(clash)} both true and false")

    @classmethod
    def from_literals(cls, literals: Iterable[str | Literal]) -> CWI:
        """Build from literals such as ``"a"``, ``"~b"`` or :class:`Literal` objects."""
        p, n = set(), set()
        for lit in literals:
            if isinstance(lit, str):
                lit = Literal(lit.lstrip("~").strip(), lit.strip().startswith("~"))
            (n if lit.negated else p).add(lit.atom)
        return cls(frozenset(p), frozenset(n))

    def literals(self) -> frozenset[Literal]:
        return frozenset(
            [Literal(a) for a in self.pos] + [Literal(a, True) for a in self.neg]
        )

    def contains(self, lit: Literal) -> bool:
        return lit.atom in (self.neg if lit.negated else self.pos)

    def unknown(self, universe: Iterable[str]) -> frozenset[str]:
        return frozenset(universe) - self.pos - self.neg

    def issubset(self, other: CWI) -> bool:
        return self.pos <= other.pos and self.neg <= other.neg

    def with_false(self, *atoms: str) -> CWI:
        return CWI(self.pos, self.neg | set(atoms))

    def sort_key(self) -> tuple[str, ...]:
        return tuple(sorted(map(str, self.literals())))

    def to_json(self, universe: Iterable[str]) -> dict:
        return {
            "true": sorted(self.pos),
            "false": sorted(self.neg),
            "unknown": sorted(self.unknown(universe)),
        }

    def __str__(self) -> str:
        return "{" + ", ".join(self.sort_key()) + "}"


# --------------------------------------------------------------------------
# text format

_TOKEN = re.compile(
    r"""
    (?P<ws>[ \t\r\n]+)
  | (?P<comment>%[^\n]*)
  | (?P<directive>\#[A-Za-z_]+)
  | (?P<if>:-)
  | (?P<punct>[.,|~])
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<bad>.)
    """,
    re.VERBOSE,
)


@dataclass
class _Tok:
    kind: str
    text: str
    line: int
    col: int


def _tokenize(text: str) -> list[_Tok]:
    toks = []
    line, line_start = 1, 0
    for m in _TOKEN.finditer(text):
        kind = m.lastgroup
        col = m.start() - line_start + 1
        if kind == "bad":
            raise ParseError(f"unexpected character {m.group()!r}", line, col)
        if kind == "ident":
            if m.group() == "not":
                kind = "not"
            elif not _IDENT.match(m.group()):
                raise ParseError(
                    f"identifier {m.group()!r} must start with a lowercase letter", line, col
                )
        if kind not in ("ws", "comment"):
            toks.append(_Tok(kind, m.group(), line, col))
        nl = m.group().count("\n")
        if nl:
            line += nl
            line_start = m.start() + m.group().rfind("\n") + 1
    toks.append(_Tok("eof", "", line, len(text) - line_start + 1))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self) -> _Tok:
        return self.toks[self.i]

    def take(self) -> _Tok:
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, kind: str, text: str | None = None) -> _Tok:
        tok = self.take()
        if tok.kind != kind or (text is not None and tok.text != text):
            want = text or kind
            got = tok.text or "end of input"
            raise ParseError(f"expected {want!r}, got {got!r}", tok.line, tok.col)
        return tok

    def error(self, msg: str, tok: _Tok | None = None):
        tok = tok or self.peek()
        raise ParseError(msg, tok.line, tok.col)

    def program(self) -> Program:
        atoms: list[str] = []
        rules: list[Rule] = []
        while self.peek().kind != "eof":
            if self.peek().kind == "directive":
                atoms.extend(self.directive())
            else:
                rules.append(self.rule())
        return Program(tuple(atoms), tuple(rules))

    def directive(self) -> list[str]:
        tok = self.take()
        if tok.text != "#atoms":
            self.error(f"unknown directive {tok.text!r}", tok)
        names = [self.expect("ident").text]
        while self.peek().text == ",":
            self.take()
            names.append(self.expect("ident").text)
        self.expect("punct", ".")
        return names

    def rule(self) -> Rule:
        start = self.peek()
        head: list[str] = []
        if self.peek().kind == "ident":
            head.append(self.take().text)
            while self.peek().text == "|":
                self.take()
                head.append(self.expect("ident").text)
        body: list[BodyElement] = []
        if self.peek().kind == "if":
            self.take()
            if self.peek().text != ".":
                body.append(self.element())
                while self.peek().text == ",":
                    self.take()
                    body.append(self.element())
        elif not head:
            self.error("empty rule", start)
        self.expect("punct", ".")
        return Rule(tuple(head), tuple(body))

    def _tildes(self) -> int:
        n = 0
        while self.peek().text == "~":
            self.take()
            n += 1
        return n

    def element(self) -> BodyElement:
        start = self.peek()
        outer = self._tildes()
        if self.peek().kind == "not":
            self.take()
            if outer > 1:
                self.error("at most one '~' may precede 'not'", start)
            inner = self._tildes()
            if self.peek().kind == "not":
                self.error("epistemic negation cannot be nested")
            atom = self.expect("ident").text
            return (negepis if outer else epis)(atom, inner % 2 == 1)
        atom = self.expect("ident").text
        return default_negation(atom, outer)


def parse_program(text: str) -> Program:
    """Parse the ELP text format; raises :class:`ParseError` on bad input."""
    return _Parser(text).program()


def format_program(program: Program) -> str:
    lines = []
    unused = sorted(set(program.atoms) - program.occurring_atoms())
    if unused:
        lines.append(f"#atoms {', '.join(unused)}.")
    lines.extend(str(r) for r in program.rules)
    return "\n".join(lines) + ("\n" if lines else "")


# --------------------------------------------------------------------------
# JSON


def _element_json(e: BodyElement) -> dict:
    d = {"kind": e.kind.value, "atom": e.atom}
    if e.is_epistemic:
        d["negated"] = e.negated
    return d


def program_to_json(program: Program) -> dict:
    return {
        "atoms": list(program.atoms),
        "rules": [
            {"head": list(r.head), "body": [_element_json(e) for e in r.body]}
            for r in program.rules
        ],
    }


def program_from_json(doc: dict) -> Program:
    rules = []
    for r in doc.get("rules", []):
        body = [
            BodyElement(Kind(e["kind"]), e["atom"], bool(e.get("negated", False)))
            for e in r.get("body", [])
        ]
        rules.append(Rule(tuple(r.get("head", [])), tuple(body)))
    return Program(tuple(doc.get("atoms", [])), tuple(rules))


def dumps_program(program: Program) -> str:
    return json.dumps(program_to_json(program))


def iter_interpretations(universe: tuple[str, ...]) -> Iterator[frozenset[str]]:
    """All subsets of ``universe``, in bit order of the sorted atoms."""
    for m in range(1 << len(universe)):
        yield frozenset(a for i, a in enumerate(universe) if m >> i & 1)
