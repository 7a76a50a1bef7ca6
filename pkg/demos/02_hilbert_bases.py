"""Hilbert bases and feasibility for linear Diophantine systems.

Run: python3 demos/02_hilbert_bases.py
"""
from overrings import diophantine
from overrings.diophantine import LinearSystem

# nonnegative solutions of v1 + v2 = 2 v3
sys = LinearSystem.build([[1, 1, -2]])
print("v1 + v2 = 2 v3:", list(diophantine.hilbert_basis(sys)))

# a congruence row: 2 v1 + v2 = 0 mod 3, with v1 - v2 + v3 = 0
sys = LinearSystem.build([[2, 1, 0], [1, -1, 1]], row_moduli=[3, 0])
print("with a congruence:", list(diophantine.hilbert_basis(sys)))

# Frobenius-style feasibility: 3a + 5b = n
for n in (7, 8, 11):
    v = diophantine.solve_nonneg(LinearSystem.build([[3, 5]], target=[n]))
    print(f"3a + 5b = {n}:", v)
