"""Seeded checks of the structural theorems on sampled configurations.

Run: python3 demos/04_theorem_checks.py
"""
from overrings import abelian, dedekind, oracle, suite

print(suite.check_nontor(100).line())
print(suite.check_prufer_consistency(100).line())

found = suite.find_non_localization_overring(abelian.make_group(1))
print("a non-localization over Z:", found)

# compare the kernel with the brute-force oracle on a few configs
for cfg in suite.ConfigSampler(seed=11, rank_range=(1, 1)).configs(5):
    got = {n: v.holds for n, v in dedekind.classify(cfg).verdicts().items()}
    print(cfg, "agrees" if got == oracle.predicates(cfg, 20) else "differs")
