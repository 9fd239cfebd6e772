"""
From the triple on x to the triple on x**m
==========================================

For an odd leg x the generator-1 triple (x, y, y + 1) determines the
generator-1 triple on x**m. ``relate`` evaluates four formulas for it and
checks they agree.
"""

from tripleforge import alternating_factor, geometric_factor, relate

x = 3
for m in range(1, 7):
    r = relate(x, m)
    print(f"3^{m}: y'={r.y_prime} z'={r.z_prime} agreed={r.agreed}")

# the two brackets behind the formulas
print([geometric_factor(3, m) for m in range(1, 7)])
print([alternating_factor(3, m) for m in range(1, 7)])

# with m even, 5 * bracket gives y'; with m odd it gives z'
for m in (2, 3):
    print(m, 5 * alternating_factor(3, m), dict(relate(3, m).paths)["alternating"])

# big exponents stay exact
big = relate(3, 200)
print(len(str(big.y_prime)), "digits, agreed:", big.agreed)
