"""
Triples sharing a leg
=====================

Every Pythagorean triple (x, y, z) with a fixed leg x comes from a divisor d
of x**2 through y = (x**2/d - d)/2 and z = (x**2/d + d)/2.
"""

from tripleforge import candidate_set, triple_from_leg, triples_with_leg

# the usable generators for x = 12 are the divisors of 144 below 12 whose
# cofactor has the same parity
print(candidate_set(12).ds)

for t in triples_with_leg(12):
    print(t.x, t.y, t.z, "d =", t.d, "primitive" if t.primitive else "")

# a candidate with mismatched parity gives a half-integer y
try:
    triple_from_leg(20, 16)
except ValueError as exc:
    print("rejected:", exc)

# a leg with many divisors has many triples
legs = [60, 120, 840, 5040]
for x in legs:
    print(x, len(triples_with_leg(x)))
