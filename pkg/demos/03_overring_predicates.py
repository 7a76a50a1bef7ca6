"""Three overrings of a Dedekind domain with class group Z.

Each config lists the classes of the primes that survive (kept) and of
the primes that become units (inverted).

Run: python3 demos/03_overring_predicates.py
"""
from overrings import abelian, dedekind
from overrings.dedekind import OverringConfig

Z = abelian.make_group(1)

cases = {
    "invert class 1": OverringConfig.build(Z, kept=[[-1]], inverted=[[1]]),
    "invert classes 2, 3": OverringConfig.build(Z, kept=[[-1]], inverted=[[2], [3]]),
    "keep both signs, invert 2": OverringConfig.build(Z, kept=[[-1], [1]], inverted=[[2]]),
}

for title, cfg in cases.items():
    print(f"== {title}")
    report = dedekind.classify(cfg)
    print(report.summary())
    awc = report.is_almost_well_centered
    if awc.holds:
        for cert in awc.certificate:
            print("   certificate:", cert)
    print()

# a class pattern no Dedekind domain has
bad = OverringConfig.build(Z, kept=[[1]], inverted=[[2]])
print("missing generator for", bad, "->", dedekind.missing_generator(bad))
