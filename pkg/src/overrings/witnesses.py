"""Exact checks of two explicit ring examples.

* In ``Q(sqrt 2)``: no power ``(1 + sqrt 2)**n`` is rational, so no power of
  ``X + 1`` lies in ``Q + (X**2 - 2) Q[X]``.
* In ``k[X, Y, Z]`` with ``A = k[X, Y, XZ, YZ, 1/(X+YZ)]`` and ``B = A[Z]``:
  ``(X, Y)B = B`` because ``X*1 + Y*Z = X + YZ`` is a unit of B, and
  ``Z`` is not in A because the substitution ``X -> 0, Y -> 1/Z`` sends every
  generator of A into ``k[1/Z]`` while fixing Z.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

Exponent = tuple[int, int, int]


@dataclass(frozen=True)
class QuadraticNumber:
    """``a + b*sqrt(2)`` with rational a, b."""

    a: Fraction
    b: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))

    def __add__(self, other: QuadraticNumber) -> QuadraticNumber:
        return QuadraticNumber(self.a + other.a, self.b + other.b)

    def __neg__(self) -> QuadraticNumber:
        return QuadraticNumber(-self.a, -self.b)

    def __sub__(self, other: QuadraticNumber) -> QuadraticNumber:
        return self + (-other)

    def __mul__(self, other: QuadraticNumber) -> QuadraticNumber:
        return QuadraticNumber(
            self.a * other.a + 2 * self.b * other.b,
            self.a * other.b + other.a * self.b,
        )

    def conjugate(self) -> QuadraticNumber:
        return QuadraticNumber(self.a, -self.b)

    def norm(self) -> Fraction:
        return self.a * self.a - 2 * self.b * self.b

    def inverse(self) -> QuadraticNumber:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("zero has no inverse")
        c = self.conjugate()
        return QuadraticNumber(c.a / n, c.b / n)

    def __pow__(self, n: int) -> QuadraticNumber:
        if n < 0:
            return self.inverse() ** -n
        result = QuadraticNumber(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def is_rational(self) -> bool:
        return self.b == 0


def power_one_plus_sqrt2(n: int) -> QuadraticNumber:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return QuadraticNumber(1, 1) ** n


def no_rational_power(max_n: int = 50) -> bool:
    """``(1 + sqrt 2)**n`` has nonzero sqrt-2 part for every ``1 <= n <= max_n``."""
    return all(not power_one_plus_sqrt2(n).is_rational() for n in range(1, max_n + 1))


class MultiPoly:
    """Polynomial in X, Y, Z with rational coefficients.

    Terms map exponent triples to nonzero coefficients.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Exponent, object] | None = None):
        self.terms: dict[Exponent, Fraction] = {}
        for e, c in (terms or {}).items():
            if min(e) < 0:
                raise ValueError(f"negative exponent {e}")
            c = Fraction(c)
            if c:
                self.terms[tuple(e)] = c

    @classmethod
    def constant(cls, c) -> MultiPoly:
        return cls({(0, 0, 0): c})

    def __add__(self, other: MultiPoly) -> MultiPoly:
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return MultiPoly(out)

    def __neg__(self) -> MultiPoly:
        return MultiPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other: MultiPoly) -> MultiPoly:
        return self + (-other)

    def __mul__(self, other: MultiPoly) -> MultiPoly:
        out: dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2])
                out[e] = out.get(e, 0) + c1 * c2
        return MultiPoly(out)

    def __eq__(self, other) -> bool:
        return isinstance(other, MultiPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def substitute_laurent(self, images: tuple[dict[int, Fraction], ...]) -> dict[int, Fraction]:
        """Image under ``X, Y, Z -> `` Laurent polynomials in Z (maps ``power -> coefficient``)."""
        out: dict[int, Fraction] = {}
        for (i, j, k), c in self.terms.items():
            term = {0: c}
            for img, power in zip(images, (i, j, k)):
                for _ in range(power):
                    term = _laurent_mul(term, img)
            for p, v in term.items():
                out[p] = out.get(p, 0) + v
        return {p: v for p, v in out.items() if v}

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (i, j, k), c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(
                f"{v}^{p}" if p > 1 else v for v, p in zip("XYZ", (i, j, k)) if p
            )
            parts.append(f"{c}*{mono}" if mono and c != 1 else (mono or str(c)))
        return " + ".join(parts)


def _laurent_mul(f: dict[int, Fraction], g: dict[int, Fraction]) -> dict[int, Fraction]:
    out: dict[int, Fraction] = {}
    for p, a in f.items():
        for r, b in g.items():
            out[p + r] = out.get(p + r, 0) + a * b
    return {p: v for p, v in out.items() if v}


X = MultiPoly({(1, 0, 0): 1})
Y = MultiPoly({(0, 1, 0): 1})
Z = MultiPoly({(0, 0, 1): 1})
ONE = MultiPoly.constant(1)


@dataclass(frozen=True)
class Verification:
    name: str
    verified: bool
    detail: str = ""


def verify_exsimple_flatness(unit: MultiPoly | None = None) -> Verification:
    """Check ``X*1 + Y*Z == unit`` with ``unit = X + YZ`` by default.

    With u the inverse of the unit in B, ``1 = X*u + Y*(Z*u)`` then puts 1
    in ``(X, Y)B``.  Passing another ``unit`` is a negative control.
    """
    unit = X + Y * Z if unit is None else unit
    diff = X * ONE + Y * Z - unit
    if diff.is_zero():
        return Verification("exsimple-flatness", True, "X*1 + Y*Z = X + Y*Z")
    return Verification("exsimple-flatness", False, f"X*1 + Y*Z - ({unit}) = {diff}")


# X -> 0, Y -> Z^-1, Z -> Z
SUBSTITUTION = ({}, {-1: Fraction(1)}, {1: Fraction(1)})


def generator_image(gen) -> dict[int, Fraction]:
    """Image of a generator: a MultiPoly, or ``("inv", p)`` for ``1/p``."""
    if isinstance(gen, tuple):
        _, p = gen
        img = p.substitute_laurent(SUBSTITUTION)
        if len(img) != 1:
            raise ZeroDivisionError(f"image of {p} is not a unit monomial: {img}")
        (power, c), = img.items()
        return {-power: 1 / c}
    return gen.substitute_laurent(SUBSTITUTION)


A_GENERATORS = {
    "X": X,
    "Y": Y,
    "XZ": X * Z,
    "YZ": Y * Z,
    "1/(X+YZ)": ("inv", X + Y * Z),
}


def verify_exsimple_Z_not_in_A(generators: Mapping[str, object] | None = None) -> Verification:
    """Every generator of A maps into ``k[1/Z]`` (nonpositive powers) but Z does not.

    ``k[1/Z]`` is a ring, so the image of all of A lies in it, while the
    substitution fixes Z; hence Z is not in A.  Extra generators can be
    passed as a negative control.
    """
    generators = A_GENERATORS if generators is None else generators
    for name, gen in generators.items():
        img = generator_image(gen)
        if any(p > 0 for p in img):
            return Verification("exsimple-Z-not-in-A", False, f"image of {name} is {img}, has positive powers of Z")
    z_img = Z.substitute_laurent(SUBSTITUTION)
    if not any(p > 0 for p in z_img):
        return Verification("exsimple-Z-not-in-A", False, f"image of Z is {z_img}")
    return Verification("exsimple-Z-not-in-A", True, "A -> k[1/Z], Z -> Z")


def verify_no_rational_power(max_n: int = 50) -> Verification:
    ok = no_rational_power(max_n)
    return Verification(
        "one-plus-sqrt2-powers",
        ok,
        f"(1+sqrt2)^n irrational for n = 1..{max_n}" if ok else "found a rational power",
    )


def verification_table() -> list[Verification]:
    return [
        verify_no_rational_power(),
        verify_exsimple_flatness(),
        verify_exsimple_Z_not_in_A(),
    ]
