"""Overrings of a Dedekind domain described by ideal-class data.

An overring ``B`` of a Dedekind domain ``A`` is the intersection of the
localizations ``A_P`` over a set of kept maximal ideals; the remaining
primes become units in ``B``.  Every question asked here depends only on
the class group ``C(A)`` and on the two *sets* of classes -- classes of
kept primes and classes of inverted primes -- because one prime of class
``c`` already supplies every multiple ``n*c`` through its powers.

With ``K`` = kept classes and ``I`` = inverted classes, ``M(.)`` the
generated monoid and ``G(.)`` the generated subgroup:

* an ideal of class ``c`` extends to a principal ideal of B iff ``c in G(I)``;
* it is the extension of a principal ideal of A iff ``c in -M(I)``;
* B is well-centered iff ``M(K) & G(I)`` lies in ``-M(I)``;
* B is almost well-centered iff every element of ``M(K) & G(I)`` has a
  positive multiple in ``-M(I)``;
* B is a localization iff ``-c in M(I)`` for every inverted class ``c``
  (every inverted prime divides a principal ideal supported on inverted
  primes, so it meets the multiplicative set ``A \\ union(kept)``).

Both containment tests only need checking on monoid generators of the
intersection, which :func:`diophantine.intersection_basis` supplies.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Mapping, Sequence

from . import abelian, diophantine
from .abelian import FgAbelianGroup, GroupElement
from .errors import InvalidDivisor, NotRealizable, ShapeError


def _dedupe(classes) -> tuple[GroupElement, ...]:
    seen = []
    for c in classes:
        if c not in seen:
            seen.append(c)
    return tuple(seen)


@dataclass(frozen=True)
class OverringConfig:
    group: FgAbelianGroup
    kept_classes: tuple[GroupElement, ...] = ()
    inverted_classes: tuple[GroupElement, ...] = ()
    finitely_generated: bool | None = None

    def __post_init__(self):
        for c in self.kept_classes + self.inverted_classes:
            if not self.group.contains(c):
                raise ShapeError(f"class {c} is not an element of {self.group}")
        object.__setattr__(self, "kept_classes", _dedupe(self.kept_classes))
        object.__setattr__(self, "inverted_classes", _dedupe(self.inverted_classes))

    @classmethod
    def build(cls, group: FgAbelianGroup, kept=(), inverted=(), finitely_generated=None):
        """Config from flat class encodings, e.g. ``build(Z, kept=[[-1]], inverted=[[2], [3]])``."""
        return cls(
            group,
            tuple(group.element(c) for c in kept),
            tuple(group.element(c) for c in inverted),
            finitely_generated,
        )

    def to_dict(self) -> dict[str, Any]:
        d: dict[str, Any] = {
            "group": {"rank": self.group.rank, "torsion": list(self.group.torsion_moduli)},
            "kept_classes": [c.to_list() for c in self.kept_classes],
            "inverted_classes": [c.to_list() for c in self.inverted_classes],
        }
        if self.finitely_generated is not None:
            d["finitely_generated"] = self.finitely_generated
        return d

    def __str__(self) -> str:
        kept = "{" + ", ".join(map(str, self.kept_classes)) + "}"
        inv = "{" + ", ".join(map(str, self.inverted_classes)) + "}"
        return f"({self.group}; kept={kept}; inverted={inv})"


# -- validation and divisors -------------------------------------------------


def missing_generator(config: OverringConfig) -> GroupElement | None:
    """First canonical generator of the group outside ``M(kept + inverted)``, if any."""
    G = config.group
    classes = list(_dedupe(config.kept_classes + config.inverted_classes))
    for g in abelian.canonical_generators(G):
        # not in the subgroup -> not in the monoid; the SNF test is much cheaper
        if diophantine.subgroup_membership(G, classes, g) is None:
            return g
        if diophantine.monoid_membership(G, classes, g) is None:
            return g
    return None


def validate(config: OverringConfig) -> None:
    """Raise :class:`NotRealizable` unless the classes generate the group as a monoid.

    That is exactly when some Dedekind domain with this class group has
    primes in precisely these classes.
    """
    g = missing_generator(config)
    if g is not None:
        raise NotRealizable(g)


def divisor_class(config: OverringConfig, divisor: Mapping[Any, tuple[GroupElement, int]]) -> GroupElement:
    """Class of ``prod P**e`` for a divisor ``{label: (class of P, e)}`` over kept primes."""
    G = config.group
    total = abelian.zero(G)
    for label, (cls, exponent) in divisor.items():
        if cls not in config.kept_classes:
            raise InvalidDivisor(f"prime {label!r} has class {cls}, which is not a kept class")
        if exponent < 1:
            raise InvalidDivisor(f"prime {label!r} has exponent {exponent}; exponents must be positive")
        total = abelian.add(G, total, abelian.scalar_mul(G, exponent, cls))
    return total


def is_principal_in_overring(config: OverringConfig, c: GroupElement) -> tuple[int, ...] | None:
    """Coefficients over the inverted classes summing to ``c``, or None."""
    return diophantine.subgroup_membership(config.group, config.inverted_classes, c)


def is_extension_of_principal(config: OverringConfig, c: GroupElement) -> tuple[int, ...] | None:
    """Exponents ``e >= 0`` over the inverted classes with ``sum(e_i I_i) = -c``, or None."""
    G = config.group
    return diophantine.monoid_membership(G, config.inverted_classes, abelian.neg(G, c))


# -- the three predicates ---------------------------------------------------


@dataclass(frozen=True)
class Verdict:
    """Answer to one predicate with its evidence.

    ``certificate`` backs a positive answer; ``counterexample`` (a class) and
    ``witness`` back a negative one.  Both are plain JSON-able data.
    """

    holds: bool
    certificate: tuple[dict, ...] = ()
    counterexample: GroupElement | None = None
    witness: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.holds

    def to_dict(self) -> dict[str, Any]:
        d: dict[str, Any] = {"verdict": "Yes" if self.holds else "No"}
        if self.holds:
            d["certificate"] = [dict(c) for c in self.certificate]
        else:
            d["counterexample"] = self.counterexample.to_list()
            if self.witness:
                d["witness"] = dict(self.witness)
        return d


def _membership_witness(config: OverringConfig, u: Sequence[int], g: GroupElement) -> dict:
    a = is_principal_in_overring(config, g)
    return {"kept_exponents": list(u), "inverted_coefficients": list(a)}


def is_localization(config: OverringConfig) -> Verdict:
    G = config.group
    cert = []
    for c in config.inverted_classes:
        e = diophantine.monoid_membership(G, config.inverted_classes, abelian.neg(G, c))
        if e is None:
            return Verdict(False, counterexample=c)
        cert.append({"class": c.to_list(), "exponents": list(e)})
    return Verdict(True, tuple(cert))


def is_well_centered(config: OverringConfig, budget: int = diophantine.DEFAULT_BUDGET) -> Verdict:
    G = config.group
    cert = []
    for u, g in diophantine.intersection_basis(G, config.kept_classes, config.inverted_classes, budget):
        e = diophantine.monoid_membership(G, config.inverted_classes, abelian.neg(G, g), budget)
        if e is None:
            return Verdict(False, counterexample=g, witness=_membership_witness(config, u, g))
        cert.append({"generator": g.to_list(), "kept_exponents": list(u), "exponents": list(e)})
    return Verdict(True, tuple(cert))


def is_almost_well_centered(config: OverringConfig, budget: int = diophantine.DEFAULT_BUDGET) -> Verdict:
    G = config.group
    cert = []
    for u, g in diophantine.intersection_basis(G, config.kept_classes, config.inverted_classes, budget):
        hit = diophantine.exists_positive_multiple_in_monoid(
            G, config.inverted_classes, abelian.neg(G, g), budget
        )
        if hit is None:
            return Verdict(False, counterexample=g, witness=_membership_witness(config, u, g))
        n, e = hit
        cert.append({"generator": g.to_list(), "kept_exponents": list(u), "multiple": n, "exponents": list(e)})
    return Verdict(True, tuple(cert))


def overring_class_group(config: OverringConfig) -> FgAbelianGroup:
    """``C(B) = C(A) / G(inverted classes)`` in invariant-factor form."""
    G = config.group
    relations = abelian.relation_matrix(G) + [c.to_list() for c in config.inverted_classes]
    H, _ = abelian.group_from_relations(G.ngens, relations)
    return H


def prime_class_is_radical_of_principal(G: FgAbelianGroup, c: GroupElement) -> bool:
    """A prime of class c is the radical of a principal ideal iff c has finite order."""
    return abelian.element_order(G, c) != abelian.INFINITE


# -- replay ------------------------------------------------------------------


def _elements(G, rows):
    return [G.element(r) for r in rows]


def replay(config: OverringConfig, predicate: str, verdict: Mapping[str, Any]) -> bool:
    """Re-check a verdict dict (as produced by :meth:`Verdict.to_dict`) with plain group arithmetic.

    Positive verdicts must cover every generator they claim and each
    certificate must add up; negative verdicts must exhibit a class of the
    left-hand side (or an inverted class, for localization).  The
    *completeness* of a No cannot be replayed from a vector and is not
    checked here.
    """
    G = config.group
    kept, inv = list(config.kept_classes), list(config.inverted_classes)
    lin = abelian.linear_combination
    try:
        if verdict["verdict"] == "Yes":
            cert = verdict["certificate"]
            if predicate == "is_localization":
                if [G.element(c["class"]) for c in cert] != inv:
                    return False
                return all(
                    min(c["exponents"], default=0) >= 0
                    and lin(G, c["exponents"], inv) == abelian.neg(G, G.element(c["class"]))
                    for c in cert
                )
            for c in cert:
                g = G.element(c["generator"])
                if min(c["kept_exponents"], default=0) < 0 or lin(G, c["kept_exponents"], kept) != g:
                    return False
                if min(c["exponents"], default=0) < 0:
                    return False
                n = c.get("multiple", 1)
                if predicate == "is_well_centered" and n != 1:
                    return False
                if n < 1 or lin(G, c["exponents"], inv) != abelian.neg(G, abelian.scalar_mul(G, n, g)):
                    return False
            return True
        g = G.element(verdict["counterexample"])
        if predicate == "is_localization":
            return g in inv
        w = verdict["witness"]
        return (
            min(w["kept_exponents"], default=0) >= 0
            and lin(G, w["kept_exponents"], kept) == g
            and lin(G, w["inverted_coefficients"], inv) == g
            and g != abelian.zero(G)
        )
    except (KeyError, TypeError, ShapeError):
        return False


# -- aggregate report --------------------------------------------------------

PREDICATES = ("is_localization", "is_well_centered", "is_almost_well_centered")


@dataclass(frozen=True)
class AnalysisReport:
    config: OverringConfig
    valid: bool
    missing_generator: GroupElement | None = None
    is_localization: Verdict | None = None
    is_well_centered: Verdict | None = None
    is_almost_well_centered: Verdict | None = None
    overring_class_group: FgAbelianGroup | None = None

    @property
    def is_pid(self) -> bool | None:
        if self.overring_class_group is None:
            return None
        return self.overring_class_group.ngens == 0

    def verdicts(self) -> dict[str, Verdict]:
        return {name: getattr(self, name) for name in PREDICATES}

    def to_dict(self) -> dict[str, Any]:
        d: dict[str, Any] = {"config": self.config.to_dict(), "valid": self.valid}
        if not self.valid:
            d["missing_generator"] = self.missing_generator.to_list()
            return d
        for name, v in self.verdicts().items():
            d[name] = v.to_dict()
        H = self.overring_class_group
        d["overring_class_group"] = {"rank": H.rank, "torsion": list(H.torsion_moduli)}
        d["is_pid"] = self.is_pid
        return d

    def summary(self) -> str:
        lines = [f"config: {self.config}"]
        if not self.valid:
            lines.append(f"NOT REALIZABLE: generator {self.missing_generator} is not in M(kept + inverted)")
            return "\n".join(lines)
        labels = {
            "is_localization": "localization",
            "is_well_centered": "well-centered",
            "is_almost_well_centered": "almost well-centered",
        }
        for name, v in self.verdicts().items():
            extra = "" if v.holds else f" (counterexample class {v.counterexample})"
            lines.append(f"{labels[name]:>21}: {'Yes' if v.holds else 'No'}{extra}")
        lines.append(f"{'overring class group':>21}: {self.overring_class_group}")
        lines.append(f"{'PID':>21}: {'Yes' if self.is_pid else 'No'}")
        return "\n".join(lines)


def classify(config: OverringConfig, budget: int = diophantine.DEFAULT_BUDGET) -> AnalysisReport:
    g = missing_generator(config)
    if g is not None:
        return AnalysisReport(config, False, missing_generator=g)
    return AnalysisReport(
        config,
        True,
        is_localization=is_localization(config),
        is_well_centered=is_well_centered(config, budget),
        is_almost_well_centered=is_almost_well_centered(config, budget),
        overring_class_group=overring_class_group(config),
    )
