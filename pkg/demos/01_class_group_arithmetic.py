"""Arithmetic in a finitely generated abelian group and its Smith normal form.

Run: python3 demos/01_class_group_arithmetic.py
"""
from overrings import abelian

# Z^2 modulo the rows below, put in invariant-factor form
relations = [[2, 4], [6, 6]]
U, D, V = abelian.smith_normal_form(relations)
print("D =", D, " diagonal", abelian.diagonal(D))
G, proj = abelian.group_from_relations(2, relations)
print("quotient:", G)

x = proj([1, 0])
y = proj([0, 1])
print("images of e1, e2:", x, y)
print("orders:", abelian.element_order(G, x), abelian.element_order(G, y))

H = abelian.make_group(1, [4])
a = H.element([2, 3])
print(f"in {H}: 5*{a} = {abelian.scalar_mul(H, 5, a)}, -{a} = {abelian.neg(H, a)}")
