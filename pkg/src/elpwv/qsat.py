"""∃X∀Y∃Z 3-CNF formulas as ELPs.

Ground encoding, per variable ``w`` the atoms ``assign_w_0`` / ``assign_w_1``::

    assign_x_0 :- not assign_x_1.          % x ∈ X, guessed epistemically
    assign_x_1 :- not assign_x_0.
    assign_y_0 | assign_y_1.               % y ∈ Y
    assign_z_0 | assign_z_1.               % z ∈ Z, saturated on sat
    assign_z_0 :- sat.
    assign_z_1 :- sat.
    esat :- not esat, not ~sat.            % no answer set may contain sat
    unsat_j :- <the three literals of clause j are false>.
    sat :- unsat_j.                        % for every clause j

``sat`` ends up in the answer set for a Y-assignment exactly when no
Z-assignment satisfies the matrix, so the CWVs are the X-assignments under
which every Y-assignment extends to a model.
"""

from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass

from .engine import enumerate_cwvs
from .syntax import Program, Rule, epis, pos

# (variable, eta) with eta = 1 for a negated occurrence
QLiteral = tuple[str, int]
XAssignment = tuple[tuple[str, int], ...]


class QdimacsError(ValueError):
    pass


class EncodingIntegrityError(RuntimeError):
    pass


class SideConditionWarning(UserWarning):
    pass


@dataclass(frozen=True)
class QbfInstance:
    x_vars: tuple[str, ...]
    y_vars: tuple[str, ...]
    z_vars: tuple[str, ...]
    clauses: tuple[tuple[QLiteral, QLiteral, QLiteral], ...]

    def __post_init__(self):
        blocks = self.x_vars + self.y_vars + self.z_vars
        if len(set(blocks)) != len(blocks):
            raise ValueError("quantifier blocks must be disjoint")
        known = set(blocks)
        for c in self.clauses:
            if len(c) != 3:
                raise ValueError(f"clause {c} does not have three literals")
            for v, eta in c:
                if v not in known:
                    raise ValueError(f"clause variable {v!r} is not quantified")
                if eta not in (0, 1):
                    raise ValueError(f"bad sign {eta!r}")

    def evaluate(self, values: dict[str, int]) -> bool:
        return all(any(values[v] != eta for v, eta in c) for c in self.clauses)


def parse_qdimacs3(text: str) -> QbfInstance:
    """Read ``p cnf``, then one ``e``, one ``a`` and one ``e`` line, then 3-literal clauses."""
    lines = [
        (no, ln.split())
        for no, ln in enumerate(text.splitlines(), 1)
        if ln.strip() and not ln.lstrip().startswith("c")
    ]
    if not lines or lines[0][1][:2] != ["p", "cnf"] or len(lines[0][1]) != 4:
        raise QdimacsError("missing 'p cnf <vars> <clauses>' header")
    try:
        nvars, nclauses = int(lines[0][1][2]), int(lines[0][1][3])
    except ValueError:
        raise QdimacsError("non-integer header fields") from None

    def var(tok: str, no: int) -> int:
        try:
            v = int(tok)
        except ValueError:
            raise QdimacsError(f"line {no}: {tok!r} is not an integer") from None
        if v == 0 or abs(v) > nvars:
            raise QdimacsError(f"line {no}: variable {tok} out of range 1..{nvars}")
        return v

    body = lines[1:]
    blocks = []
    for expected in ("e", "a", "e"):
        if not body or body[0][1][0] != expected:
            got = body[0][1][0] if body else "end of input"
            raise QdimacsError(f"expected an '{expected}' block, got {got!r}")
        no, toks = body.pop(0)
        if toks[-1] != "0":
            raise QdimacsError(f"line {no}: quantifier line must end with 0")
        blocks.append(tuple(f"v{var(t, no)}" for t in toks[1:-1]))
    if body and body[0][1][0] in ("e", "a"):
        raise QdimacsError(f"line {body[0][0]}: more than three quantifier blocks")
    clauses = []
    for no, toks in body:
        if toks[-1] != "0":
            raise QdimacsError(f"line {no}: clause must end with 0")
        lits = [var(t, no) for t in toks[:-1]]
        if len(lits) != 3:
            raise QdimacsError(f"line {no}: clause has {len(lits)} literals, expected 3")
        clauses.append(tuple((f"v{abs(v)}", int(v < 0)) for v in lits))
    if len(clauses) != nclauses:
        raise QdimacsError(f"header announces {nclauses} clauses, found {len(clauses)}")
    try:
        return QbfInstance(*blocks, tuple(clauses))
    except ValueError as exc:
        raise QdimacsError(str(exc)) from None


def format_qdimacs3(q: QbfInstance) -> str:
    names = q.x_vars + q.y_vars + q.z_vars
    num = {v: i + 1 for i, v in enumerate(names)}
    out = [f"p cnf {len(names)} {len(q.clauses)}"]
    for tag, block in zip("eae", (q.x_vars, q.y_vars, q.z_vars)):
        out.append(" ".join([tag, *(str(num[v]) for v in block), "0"]))
    for c in q.clauses:
        out.append(" ".join([*(str(-num[v] if eta else num[v]) for v, eta in c), "0"]))
    return "\n".join(out) + "\n"


# --------------------------------------------------------------------------
# oracle


def _assignments(variables):
    for bits in itertools.product((0, 1), repeat=len(variables)):
        yield dict(zip(variables, bits))


def qbf_oracle(q: QbfInstance) -> frozenset[XAssignment]:
    """X-assignments σ with ∀Y ∃Z Ψ(σ, Y, Z), by truth-table expansion."""
    out = set()
    for sx in _assignments(q.x_vars):
        if all(
            any(q.evaluate({**sx, **sy, **sz}) for sz in _assignments(q.z_vars))
            for sy in _assignments(q.y_vars)
        ):
            out.add(tuple((v, sx[v]) for v in q.x_vars))
    return frozenset(out)


def side_condition_holds(q: QbfInstance) -> bool:
    """With every Y variable true, is Ψ true for all X and Z?"""
    ones = {y: 1 for y in q.y_vars}
    return all(
        q.evaluate({**sx, **ones, **sz})
        for sx in _assignments(q.x_vars)
        for sz in _assignments(q.z_vars)
    )


# --------------------------------------------------------------------------
# encoding


def assign_atom(var: str, value: int) -> str:
    return f"assign_{var}_{value}"


def encode(q: QbfInstance, check: bool = True) -> Program:
    if check and not side_condition_holds(q):
        warnings.warn(
            "setting all universal variables true does not make the matrix a "
            "tautology; results fall outside the encoding's guarantee",
            SideConditionWarning,
            stacklevel=2,
        )
    rules = []
    for x in q.x_vars:
        x0, x1 = assign_atom(x, 0), assign_atom(x, 1)
        rules.append(Rule((x0,), (epis(x1),)))
        rules.append(Rule((x1,), (epis(x0),)))
    for y in q.y_vars:
        rules.append(Rule((assign_atom(y, 0), assign_atom(y, 1))))
    for z in q.z_vars:
        z0, z1 = assign_atom(z, 0), assign_atom(z, 1)
        rules.append(Rule((z0, z1)))
        rules.append(Rule((z0,), (pos("sat"),)))
        rules.append(Rule((z1,), (pos("sat"),)))
    rules.append(Rule(("esat",), (epis("esat"), epis("sat", True))))
    for j, clause in enumerate(q.clauses, 1):
        # the literal (w, eta) is false exactly when w = eta
        rules.append(Rule((f"unsat_{j}",), tuple(pos(assign_atom(w, eta)) for w, eta in clause)))
        rules.append(Rule(("sat",), (pos(f"unsat_{j}"),)))
    atoms = [assign_atom(v, b) for v in q.x_vars + q.y_vars + q.z_vars for b in (0, 1)]
    atoms += [f"unsat_{j}" for j in range(1, len(q.clauses) + 1)] + ["sat", "esat"]
    return Program(tuple(atoms), tuple(rules))


@dataclass
class QsatResult:
    assignments: frozenset[XAssignment]
    guarantee: str  # "ok" or "void"
    n_cwvs: int

    @property
    def satisfiable(self) -> bool:
        return bool(self.assignments)

    def to_json(self) -> dict:
        return {
            "satisfiable": self.satisfiable,
            "x_assignments": [dict(a) for a in sorted(self.assignments)],
            "guarantee": self.guarantee,
        }


def solve_report(q: QbfInstance) -> QsatResult:
    guarantee = "ok" if side_condition_holds(q) else "void"
    program = encode(q, check=False)
    result = enumerate_cwvs(program)
    out = set()
    for w in result.cwvs:
        values = []
        for x in q.x_vars:
            zero, one = assign_atom(x, 0) in w.pos, assign_atom(x, 1) in w.pos
            if zero == one:
                raise EncodingIntegrityError(
                    f"CWV {w} does not fix exactly one value for {x}"
                )
            values.append((x, int(one)))
        a = tuple(values)
        if a in out:
            raise EncodingIntegrityError(f"two CWVs project to the X-assignment {a}")
        out.add(a)
    return QsatResult(frozenset(out), guarantee, len(result.cwvs))


def solve(q: QbfInstance) -> frozenset[XAssignment]:
    """X-assignments read off the CWVs of the encoding."""
    if not side_condition_holds(q):
        warnings.warn(
            "side condition violated; the result is not guaranteed",
            SideConditionWarning,
            stacklevel=2,
        )
    return solve_report(q).assignments
