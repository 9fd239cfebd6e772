"""
Checking the characterization by brute force
============================================

``oracle_triples_with_leg`` tries every y up to (x**2 - 1)/2 and keeps the
ones where x**2 + y**2 is a square. ``cross_check`` compares that with the
divisor enumeration.
"""

from tripleforge import LParity, Mode, cross_check, oracle_triples_with_leg

print([t.as_tuple() for t in oracle_triples_with_leg(20)])

corrected = cross_check(range(1, 201), Mode.CORRECTED)
print("corrected mode clean:", corrected.clean)

# the sets as printed miss triples on even legs and admit d = x
for interp in LParity:
    report = cross_check(range(1, 41), Mode.PAPER_STRICT, interp)
    even = [e for e in report.entries if e.x % 2 == 0]
    print(interp.value, "even legs with differences:", len(even))
    for e in even[:4]:
        print("  x =", e.x,
              "missing", [t.as_tuple() for t in e.missing],
              "spurious", [(r.d, r.reason) for r in e.spurious])
