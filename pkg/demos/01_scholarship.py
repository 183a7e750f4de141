"""Walk through the scholarship program: reducts, world views, guesses.

Run with ``python3 demos/01_scholarship.py``.
"""

from elpwv import (
    CWI,
    check_correspondence,
    enumerate_cwvs,
    enumerate_se_cwvs,
    epistemic_reduct_cwi,
    parse_program,
)
from elpwv.asp import answer_sets

program = parse_program("""
eligible :- highGPA.
ineligible :- lowGPA.
:- eligible, ineligible.
highGPA | fairGPA.
interview :- not eligible, not ineligible.
""")
print("universe:", ", ".join(program.atoms))

# A CWI marks atoms always true, always false, or unknown. Pick the one
# where interview is known and ineligible is known false.
w = CWI.from_literals(["interview", "~ineligible", "~lowGPA"])
reduct = epistemic_reduct_cwi(program, w)
print("\nreduct for", w)
print(reduct)

# neither eligible nor ineligible is in w, so both epistemic literals turned
# into ⊤ and the interview rule became a fact
for m in sorted(answer_sets(reduct), key=sorted):
    print("answer set:", sorted(m))

result = enumerate_cwvs(program)
print("\nworld views:")
for v in result.wvs:
    print(" ", v, "unknown:", sorted(v.unknown(program.atoms)))

# lowGPA heads no rule, so it is false everywhere; the enumeration says so
# explicitly instead of leaving it unknown
print("\nShen-Eiter candidate world views:")
for c in enumerate_se_cwvs(program):
    print("  guess", sorted(map(str, c.guess)))
    for m in sorted(c.answer_sets, key=sorted):
        print("   ", sorted(m))

report = check_correspondence(program)
print("\ncorrespondence ok:", report.ok, "| WVs vs SE-WVs:", report.wv_relation)
