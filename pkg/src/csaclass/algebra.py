"""Definite central simple algebras given by local invariant data.

An algebra D of degree n over the base field is specified by listing the
places that matter: those where the local index d_v exceeds 1, plus any
split place that carries order data.  Every unlisted place implicitly has
d_v = 1 and capacity m_v = n.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from math import gcd

from .basefield import BaseField, constant_extension
from .errors import InvalidDivisorError, ValidationError

INFINITY = "infinity"


@dataclass(frozen=True)
class Place:
    """One place of K together with the local data of D there."""

    label: str
    degree: int
    local_index: int = 1
    invariant_num: int | None = None

    def __post_init__(self) -> None:
        if self.degree < 1:
            raise ValidationError(f"place {self.label!r}: degree must be positive")
        if self.local_index < 1:
            raise ValidationError(f"place {self.label!r}: local index must be positive")


def _mobius(n: int) -> int:
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    if n > 1:
        result = -result
    return result


def _irreducible_count(q: int, d: int) -> int:
    """Number of monic irreducible polynomials of degree d over F_q."""
    total = sum(_mobius(e) * q ** (d // e) for e in range(1, d + 1) if d % e == 0)
    return total // d


def _prime_factors(n: int) -> dict[int, int]:
    factors: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def _ord_p(n: int, p: int) -> int:
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


@dataclass(frozen=True)
class AlgebraSpec:
    """A central simple algebra D/K of degree n, definite at infinity."""

    base: BaseField
    degree: int
    finite_places: tuple[Place, ...] = ()
    infinity: Place = field(default=None)  # type: ignore[assignment]

    def __post_init__(self) -> None:
        if self.degree < 1:
            raise ValidationError("algebra degree must be positive")
        object.__setattr__(self, "finite_places", tuple(self.finite_places))
        if self.infinity is None:
            object.__setattr__(
                self, "infinity",
                Place(INFINITY, self.base.infinity_degree, self.degree, None))
        for v in self.all_places():
            if self.degree % v.local_index != 0:
                raise ValidationError(
                    f"place {v.label!r}: local index {v.local_index} "
                    f"does not divide degree {self.degree}")

    def all_places(self) -> tuple[Place, ...]:
        return self.finite_places + (self.infinity,)

    def place(self, label: str) -> Place:
        if label == self.infinity.label:
            return self.infinity
        for v in self.finite_places:
            if v.label == label:
                return v
        raise KeyError(label)

    def capacity(self, place: Place) -> int:
        """m_v = n / d_v."""
        return self.degree // place.local_index

    def norm(self, place: Place) -> int:
        """N(v) = q^deg(v)."""
        return self.base.q ** place.degree

    def with_listed_place(self, label: str, degree: int) -> "AlgebraSpec":
        """List an implicit split place so that order data can refer to it."""
        try:
            existing = self.place(label)
        except KeyError:
            return replace(
                self, finite_places=self.finite_places + (Place(label, degree, 1),))
        if existing.degree != degree:
            raise ValidationError(
                f"place {label!r} already listed with degree {existing.degree}")
        return self


def validate(spec: AlgebraSpec) -> list[str]:
    """Structural checks on a user-declared algebra; empty list means valid."""
    violations: list[str] = []
    n = spec.degree
    if spec.infinity.local_index != n:
        violations.append(
            f"not definite: d_infinity = {spec.infinity.local_index} != n = {n}")

    labels = [v.label for v in spec.all_places()]
    if len(labels) != len(set(labels)):
        violations.append("place labels are not distinct")

    for v in spec.all_places():
        if n % v.local_index != 0:
            violations.append(
                f"place {v.label!r}: d_v = {v.local_index} does not divide n = {n}")
        if v.invariant_num is not None:
            if gcd(v.invariant_num, v.local_index) != 1:
                violations.append(
                    f"place {v.label!r}: gcd(kappa, d) = "
                    f"{gcd(v.invariant_num, v.local_index)} != 1")
            ramified = v.invariant_num % v.local_index != 0
            if ramified != (v.local_index > 1):
                violations.append(
                    f"place {v.label!r}: invariant {v.invariant_num}/{v.local_index} "
                    "inconsistent with local index")

    # Reciprocity needs every listed invariant; checkable only when present
    # at all places with d_v > 1.
    ramified_places = [v for v in spec.all_places() if v.local_index > 1]
    if all(v.invariant_num is not None for v in ramified_places):
        total = sum(
            Fraction(v.invariant_num, v.local_index)
            for v in spec.all_places() if v.invariant_num is not None)
        if total.denominator != 1:
            violations.append(f"reciprocity fails: sum of invariants = {total}")

    if spec.base.kind == "rational":
        by_degree: dict[int, int] = {}
        for v in spec.finite_places:
            by_degree[v.degree] = by_degree.get(v.degree, 0) + 1
        for d, count in sorted(by_degree.items()):
            available = _irreducible_count(spec.base.q, d)
            if count > available:
                violations.append(
                    f"{count} listed finite places of degree {d}, but only "
                    f"{available} monic irreducibles exist over F_{spec.base.q}")
    return violations


def constant_field_degree(spec: AlgebraSpec) -> int:
    """Degree s0 of the constant field of D over F_q.

    For each prime p | n the exponent of p in s0 is capped by the places
    where the p-part of gcd(deg v, n) exceeds the p-part of m_v; unlisted
    places have m_v = n and never constrain.
    """
    n = spec.degree
    s0 = 1
    for p, n_i in _prime_factors(n).items():
        constraining = []
        for v in spec.all_places():
            n_i_v = _ord_p(gcd(v.degree, n), p)
            m_i_v = _ord_p(spec.capacity(v), p)
            if n_i_v > m_i_v:
                constraining.append(m_i_v)
        exponent = min(constraining) if constraining else n_i
        s0 *= p ** exponent
    return s0


def embedding_possible(spec: AlgebraSpec, s: int) -> bool:
    """Whether the degree-s constant field extension embeds into D."""
    if s < 1 or spec.degree % s != 0:
        raise ValidationError(f"s = {s} must divide the algebra degree")
    return all(
        spec.capacity(v) % gcd(s, v.degree) == 0 for v in spec.all_places())


def splitting_data(place: Place, s: int) -> tuple[int, int]:
    """(l, t): number of places of L_s above v, and the capacity gain there."""
    l = gcd(s, place.degree)
    t = gcd(s // l, place.local_index)
    return l, t


def centralizer_spec(spec: AlgebraSpec, s: int) -> AlgebraSpec:
    """The centralizer algebra D'_s of an embedded L_s, as a spec over L_s.

    Each listed finite place v splits into l = gcd(s, deg v) places of
    degree deg(v)/l over F_{q^s}, with local index d_v / gcd(s/l, d_v).
    Derived places that become split are dropped; invariants are not carried
    over (no downstream formula needs them).
    """
    s0 = constant_field_degree(spec)
    if s < 1 or s0 % s != 0:
        raise InvalidDivisorError(f"s = {s} does not divide s0 = {s0}")
    if s == 1:
        return spec
    n = spec.degree
    derived: list[Place] = []
    for v in spec.finite_places:
        l, t = splitting_data(v, s)
        m_v = spec.capacity(v)
        assert (m_v * t) % s == 0, "derived capacity must be integral"
        d_new = v.local_index // t
        if d_new == 1:
            continue
        for w in range(1, l + 1):
            derived.append(Place(f"{v.label}#{w}", v.degree // l, d_new))
    base_new = constant_extension(spec.base, s)
    infinity_new = Place(INFINITY, spec.infinity.degree, n // s)
    return AlgebraSpec(base_new, n // s, tuple(derived), infinity_new)
