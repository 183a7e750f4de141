"""Ordinary equivalence is weak; strong equivalence survives extensions."""

from elpwv import (
    cwv_equivalent,
    enumerate_cwvs,
    parse_program,
    se_cwv_equivalent,
    strongly_equivalent,
    union,
    wv_equivalent,
)
from elpwv.asp import answer_sets

p1 = parse_program("a | b | c.")
p2 = parse_program("a | b. c :- b. b :- c.")

for name, p in (("p1", p1), ("p2", p2)):
    print(name, "answer sets:", sorted(sorted(m) for m in answer_sets(p)))

# Both leave a, b, c unknown, so the three-valued views coincide...
print("CWV-equivalent:", cwv_equivalent(p1, p2).equal)
print("WV-equivalent: ", wv_equivalent(p1, p2).equal)
# ...while the underlying answer-set collections differ
v = se_cwv_equivalent(p1, p2)
print("SE-CWV-equivalent:", v.equal, v.counterexample)

# An epistemic rule that merely supports a itself versus the plain fact.
q1 = parse_program("a :- not ~a.")
q2 = parse_program("a.")
print("\nsame CWVs:", cwv_equivalent(q1, q2).equal)
verdict = strongly_equivalent(q1, q2)
print("strongly equivalent:", verdict.equal)
print("counterexample:", verdict.counterexample)

# the counterexample CWI {~a} points at the separating context
ctx = parse_program(":- a.")
print("with ':- a.' added:")
print("  q1:", [str(w) for w in enumerate_cwvs(union(q1, ctx)).cwvs])
print("  q2:", [str(w) for w in enumerate_cwvs(union(q2, ctx)).cwvs])
