"""Base field data: (K, infinity) with exact zeta special values.

A global function field K with constant field F_q is described here by the
numerator L-polynomial P(T) of its zeta function,

    zeta_K(s) = P(q^(-s)) / ((1 - q^(-s)) (1 - q^(1-s))),

together with the degree of the chosen infinite place.  That data determines
every field-level quantity used downstream: special values zeta_K(-i), the
order of Pic(A) for the coordinate ring A, and the descriptors of the
constant field extensions L_s = K F_{q^s}.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import ExtensionNotSupportedError, ValidationError

RATIONAL = "rational"
CUSTOM = "custom"


def _is_prime_power(q: int) -> bool:
    if q < 2:
        return False
    p = 2
    n = q
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            return n == 1
        p += 1
    return True  # q itself is prime


@dataclass(frozen=True)
class BaseField:
    """The pair (K, infinity) as data.

    ``l_poly`` holds the coefficients of P(T), constant term first.  The
    rational function field has P(T) = 1; for a field of genus g the degree
    of P is 2g.  ``pic_override`` replaces the default #Pic(A) = P(1) * delta
    when the user knows better.
    """

    kind: str
    q: int
    l_poly: tuple[int, ...] = (1,)
    infinity_degree: int = 1
    pic_override: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in (RATIONAL, CUSTOM):
            raise ValidationError(f"unknown base field kind {self.kind!r}")
        if not _is_prime_power(self.q):
            raise ValidationError(f"q = {self.q} is not a prime power")
        if self.infinity_degree < 1:
            raise ValidationError("infinity_degree must be positive")
        if self.pic_override is not None and self.pic_override < 1:
            raise ValidationError("pic_override must be positive")
        poly = tuple(self.l_poly)
        object.__setattr__(self, "l_poly", poly)
        if not poly or poly[0] != 1:
            raise ValidationError("l_poly must have constant term 1")
        if self.kind == RATIONAL and poly != (1,):
            raise ValidationError("rational function field forces l_poly = [1]")
        if self.kind == CUSTOM:
            if len(poly) % 2 == 0 and len(poly) > 1:
                raise ValidationError("l_poly must have even degree 2g")
            self._warn_functional_equation()

    def _warn_functional_equation(self) -> None:
        # q^g P(1/(qT)) = P(T) symmetry, i.e. c_{2g-k} = q^{g-k} c_k.
        # Users may probe hypothetical data, so this is a warning only.
        poly = self.l_poly
        two_g = len(poly) - 1
        g = two_g // 2
        for k in range(g + 1):
            if poly[two_g - k] != self.q ** (g - k) * poly[k]:
                warnings.warn(
                    "l_poly does not satisfy the functional equation "
                    f"c_{two_g - k} = q^{g - k} * c_{k}",
                    stacklevel=3,
                )
                return

    @classmethod
    def rational(cls, q: int, infinity_degree: int = 1,
                 pic_override: int | None = None) -> "BaseField":
        return cls(RATIONAL, q, (1,), infinity_degree, pic_override)

    @classmethod
    def custom(cls, q: int, l_poly, infinity_degree: int = 1,
               pic_override: int | None = None) -> "BaseField":
        return cls(CUSTOM, q, tuple(l_poly), infinity_degree, pic_override)

    def l_poly_at(self, x: int) -> int:
        """Evaluate P at an integer point."""
        acc = 0
        for c in reversed(self.l_poly):
            acc = acc * x + c
        return acc


def zeta_at_negative(base: BaseField, i: int) -> Fraction:
    """Exact special value zeta_K(-i) for i >= 1."""
    if i < 1:
        raise ValidationError("zeta_at_negative requires i >= 1")
    q = base.q
    return Fraction(base.l_poly_at(q ** i), (1 - q ** i) * (1 - q ** (i + 1)))


def _power_sums_from_l_poly(l_poly: tuple[int, ...], count: int) -> list[Fraction]:
    """Power sums p_1..p_count of the inverse roots of P(T) = prod(1 - a_i T).

    Newton's identities with e_k = (-1)^k * coefficient of T^k.
    """
    deg = len(l_poly) - 1
    e = [Fraction((-1) ** k * l_poly[k]) for k in range(deg + 1)]
    p: list[Fraction] = [Fraction(0)] * (count + 1)
    for k in range(1, count + 1):
        acc = Fraction(0)
        for j in range(1, min(k - 1, deg) + 1):
            acc += (-1) ** (j - 1) * e[j] * p[k - j]
        if k <= deg:
            acc += (-1) ** (k - 1) * k * e[k]
        p[k] = acc
    return p


def _l_poly_from_power_sums(p: list[Fraction], deg: int) -> tuple[int, ...]:
    """Invert Newton's identities; asserts every coefficient is integral."""
    e: list[Fraction] = [Fraction(1)] + [Fraction(0)] * deg
    for k in range(1, deg + 1):
        acc = Fraction(0)
        for j in range(1, k + 1):
            acc += (-1) ** (j - 1) * p[j] * e[k - j]
        e[k] = acc / k
    coeffs = []
    for k in range(deg + 1):
        c = (-1) ** k * e[k]
        if c.denominator != 1:
            raise AssertionError(f"non-integral l_poly coefficient {c} at degree {k}")
        coeffs.append(int(c))
    return tuple(coeffs)


def constant_extension(base: BaseField, s: int) -> BaseField:
    """Descriptor of L_s = K F_{q^s}.

    The inverse roots of the new L-polynomial are the s-th powers of those of
    P; they are computed exactly via power sums.  Requires gcd(s, deg inf) = 1
    so that the infinite place stays inert with unchanged residue degree.
    """
    if s < 1:
        raise ValidationError("extension degree must be positive")
    if gcd(s, base.infinity_degree) != 1:
        raise ExtensionNotSupportedError(
            f"gcd(s={s}, infinity_degree={base.infinity_degree}) != 1")
    if s == 1:
        return base
    deg = len(base.l_poly) - 1
    if deg == 0:
        return BaseField(base.kind, base.q ** s, (1,), base.infinity_degree)
    p = _power_sums_from_l_poly(base.l_poly, deg * s)
    p_new = [Fraction(0)] + [p[k * s] for k in range(1, deg + 1)]
    l_poly = _l_poly_from_power_sums(p_new, deg)
    return BaseField(CUSTOM, base.q ** s, l_poly, base.infinity_degree)


def pic_order(base: BaseField) -> int:
    """#Pic(A) for the ring A of functions regular outside infinity.

    Defaults to h_K * deg(infinity) = P(1) * delta, from the degree exact
    sequence on the divisor class group; an explicit override wins.
    """
    if base.pic_override is not None:
        return base.pic_override
    return base.l_poly_at(1) * base.infinity_degree
