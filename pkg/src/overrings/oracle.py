"""Brute-force reference for the three overring predicates.

Nothing here touches Hilbert bases or Smith normal forms: monoids and
subgroups are enumerated from exponent boxes (``0..bound`` for monoids,
``-bound..bound`` for subgroups) and containments are tested by set lookup.

The kept side is scanned in order of total exponent, and only the
componentwise-minimal exponent vectors landing in ``G(inverted)`` are
tested.  That is enough: ``-M(inverted)`` is a monoid, and so is the set of
classes with some positive multiple in it, so both containments hold on
all of ``M(kept) & G(inverted)`` once they hold on its minimal elements.
Testing only these keeps the classes small, which is what makes a fixed
bound meaningful.  The answers are exact whenever every relevant minimal
element and every needed representation fits in the box.  When one does
not fit, the oracle can be wrong in either direction, so raise ``bound``
before trusting a disagreement.
"""
from __future__ import annotations

import itertools

from .abelian import FgAbelianGroup
from .dedekind import OverringConfig

DEFAULT_BOUND = 10


def _reduce(G: FgAbelianGroup, v):
    r = G.rank
    return tuple(v[:r]) + tuple(a % d for a, d in zip(v[r:], G.torsion_moduli))


def _span(G: FgAbelianGroup, gens, coefficients) -> set[tuple[int, ...]]:
    """All ``sum(a_i g_i)`` with every ``a_i`` drawn from ``coefficients``."""
    out = {(0,) * G.ngens}
    for g in gens:
        out = {
            _reduce(G, [s + a * x for s, x in zip(base, g)])
            for base in out
            for a in coefficients
        }
    return out


def predicates(config: OverringConfig, bound: int = DEFAULT_BOUND) -> dict[str, bool]:
    """Enumeration-based answers for localization, well-centered, almost well-centered."""
    G = config.group
    kept = [c.to_list() for c in config.kept_classes]
    inv = [c.to_list() for c in config.inverted_classes]
    monoid = _span(G, inv, range(bound + 1))
    subgroup = _span(G, inv, range(-bound, bound + 1))

    def negated(v):
        return _reduce(G, [-a for a in v])

    loc = all(negated(c) in monoid for c in inv)

    minimal: list[tuple[int, ...]] = []
    classes = []
    boxes = sorted(itertools.product(range(bound + 1), repeat=len(kept)), key=lambda u: (sum(u), u))
    for u in boxes:
        if not any(u) or any(all(a >= b for a, b in zip(u, m)) for m in minimal):
            continue
        img = _reduce(G, [sum(ui * c[i] for ui, c in zip(u, kept)) for i in range(G.ngens)])
        if img in subgroup:
            minimal.append(u)
            classes.append(img)

    wc = all(negated(g) in monoid for g in classes)
    awc = all(
        any(negated([n * a for a in g]) in monoid for n in range(1, bound + 1))
        for g in classes
    )
    return {"is_localization": loc, "is_well_centered": wc, "is_almost_well_centered": awc}
