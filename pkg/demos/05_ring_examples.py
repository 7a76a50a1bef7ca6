"""The two explicit ring computations behind the examples.

Run: python3 demos/05_ring_examples.py
"""
from overrings import witnesses as w

for n in range(1, 6):
    p = w.power_one_plus_sqrt2(n)
    print(f"(1+sqrt2)^{n} = {p.a} + {p.b} sqrt2")

for v in w.verification_table():
    print(f"{v.name}: {'Verified' if v.verified else 'Failed'} ({v.detail})")

for name, gen in w.A_GENERATORS.items():
    image = {power: str(c) for power, c in w.generator_image(gen).items()}
    print(f"  {name} -> {image or 0}  (power of Z: coefficient)")
