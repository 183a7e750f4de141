"""Solve an ∃∀∃ formula through the candidate world views of its encoding."""

from elpwv.engine import enumerate_cwvs
from elpwv.qsat import encode, parse_qdimacs3, qbf_oracle, side_condition_holds, solve

# ∃x ∀y ∃z (x ∨ y ∨ z) ∧ (¬x ∨ y ∨ ¬z)
q = parse_qdimacs3("""
p cnf 3 2
e 1 0
a 2 0
e 3 0
1 2 3 0
-1 2 -3 0
""")
print("side condition (all Y true makes the matrix valid):", side_condition_holds(q))

program = encode(q)
print(f"\nground program, {len(program.atoms)} atoms:")
print(program)

# the x-guess rules decide x epistemically; sat is derived when some clause
# is falsified and then saturates z, and esat forbids sat in any answer set
for w in enumerate_cwvs(program).cwvs:
    print("CWV true part:", sorted(w.pos))

print("\nfrom CWVs:", sorted(solve(q)))
print("oracle:    ", sorted(qbf_oracle(q)))
