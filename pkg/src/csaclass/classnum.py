"""Weight class numbers and everything built on top of them.

The driver solves for the weight-s class numbers one level at a time,
largest s first: at each level the mass of a maximal order in the
centralizer algebra times the product of local theta factors pins down a
weighted partial sum of the remaining unknowns.  Integrality of every
solved value is enforced, not assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import factorial

from .algebra import (AlgebraSpec, centralizer_spec, constant_field_degree,
                      splitting_data)
from .basefield import constant_extension, pic_order
from .errors import (BudgetExceededError, IntegralityViolationError,
                     InvalidDivisorError, NotPrimeDegreeError)
from .massform import mass_hereditary, mass_maximal
from .omega import enumerate_omega, flatten_strip
from .orders import OrderSpec, count_genera, enumerate_genera, genus_reduce
from .theta import theta

DEFAULT_BUDGET = 10 ** 6

_weight_cache: dict[tuple[OrderSpec, str], dict[int, int]] = {}


def _divisors_desc(n: int) -> list[int]:
    return sorted((d for d in range(1, n + 1) if n % d == 0), reverse=True)


def level_rhs(order: OrderSpec, s: int, engine: str = "genfun") -> Fraction:
    """Mass of the maximal centralizer order times the local theta product."""
    spec = order.algebra
    rhs = mass_maximal(centralizer_spec(spec, s))
    for label in order.relevant_labels():
        v = spec.place(label)
        rhs *= theta(v, order.invariant_at(label), s, spec.base.q, engine)
    return rhs


def weight_class_numbers(order: OrderSpec, engine: str = "genfun") -> dict[int, int]:
    """Map s -> h_s over the divisors of the constant field degree."""
    key = (order, engine)
    cached = _weight_cache.get(key)
    if cached is not None:
        return dict(cached)

    spec = order.algebra
    q = spec.base.q
    s0 = constant_field_degree(spec)
    h: dict[int, int] = {}
    for s in _divisors_desc(s0):
        rhs = level_rhs(order, s, engine)
        tail = sum(
            (Fraction(h[s2], q ** s2 - 1)
             for s2 in h if s2 > s and s2 % s == 0),
            Fraction(0))
        value = Fraction(q ** s - 1, s) * (rhs - s * tail)
        if value.denominator != 1 or value < 0:
            raise IntegralityViolationError(
                f"h_{s} = {value} is not a non-negative integer")
        h[s] = int(value)

    _weight_cache[key] = dict(h)
    return h


def class_number(order: OrderSpec, engine: str = "genfun") -> int:
    return sum(weight_class_numbers(order, engine).values())


def embedding_count(order: OrderSpec, s: int, engine: str = "genfun") -> int:
    """Total count of optimal embeddings of the degree-s constant ring."""
    h = weight_class_numbers(order, engine)
    s0 = constant_field_degree(order.algebra)
    if s < 1 or s0 % s != 0:
        raise InvalidDivisorError(f"s = {s} does not divide s0 = {s0}")
    return s * sum(h[s2] for s2 in h if s2 % s == 0)


def derived_order(order: OrderSpec, s: int, combo) -> OrderSpec:
    """Order in the centralizer algebra cut out by one local index tuple."""
    spec = order.algebra
    alg = centralizer_spec(spec, s)
    invariants: dict[str, tuple[int, ...]] = {}
    for elem in combo:
        v = spec.place(elem.label)
        l, t = splitting_data(v, s)
        d_new = v.local_index // t
        for w in range(1, l + 1):
            vec = flatten_strip(elem, w)
            if len(vec) == 1:
                continue  # maximal at the derived place
            label_w = f"{v.label}#{w}" if s > 1 else v.label
            if d_new == 1:
                alg = alg.with_listed_place(label_w, v.degree // l)
            invariants[label_w] = vec
    return OrderSpec(alg, tuple(sorted(invariants.items())))


@dataclass(frozen=True)
class TransferReport:
    s: int
    s2: int
    lhs: int
    rhs: int

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


def transfer_check(order: OrderSpec, s: int, s2: int,
                   budget: int = DEFAULT_BUDGET,
                   engine: str = "genfun") -> TransferReport:
    """Verify s * h_{s2} against the sum over the global index set.

    Each summand is the weight-(s2/s) class number of the derived order cut
    out by one element of the product of local index sets.
    """
    spec = order.algebra
    s0 = constant_field_degree(spec)
    if s < 1 or s2 % s != 0 or s0 % s2 != 0:
        raise InvalidDivisorError(f"need s | s2 | s0, got s={s}, s2={s2}, s0={s0}")
    h = weight_class_numbers(order, engine)
    lhs = s * h[s2]

    streams = []
    size = 1
    for label in order.relevant_labels():
        v = spec.place(label)
        elems = list(enumerate_omega(v, order.invariant_at(label), s))
        size *= len(elems)
        if size > budget:
            raise BudgetExceededError(
                f"global index set exceeds budget of {budget} summands")
        streams.append(elems)

    rhs = 0
    for combo in product(*streams):
        sub = derived_order(order, s, combo)
        rhs += weight_class_numbers(sub, engine)[s2 // s]
    return TransferReport(s, s2, lhs, rhs)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    p = 2
    while p * p <= n:
        if n % p == 0:
            return False
        p += 1
    return True


def prime_degree_class_number(order: OrderSpec) -> int:
    """Closed-form class number for prime algebra degree."""
    spec = order.algebra
    n = spec.degree
    if not _is_prime(n):
        raise NotPrimeDegreeError(f"degree {n} is not prime")
    q = spec.base.q
    mass = mass_hereditary(order)

    def eps(place) -> int:
        return 1 if place.degree % n != 0 else 0

    ramified = [v for v in spec.all_places() if v.local_index > 1]
    correction = Fraction(0)
    if (all(eps(v) == 1 for v in ramified)
            and all(eps(spec.place(lab)) == 0 for lab, _ in order.invariants)):
        pic_ext = pic_order(constant_extension(spec.base, n))
        term = Fraction(q ** n - q, q ** n - 1) * Fraction(pic_ext, n * n)
        for _ in ramified:
            term *= n
        for _, f_vec in order.invariants:
            multinomial = factorial(sum(f_vec))
            for f_i in f_vec:
                multinomial //= factorial(f_i)
            term *= multinomial
        correction = term

    total = (q - 1) * mass + correction
    if total.denominator != 1 or total < 0:
        raise IntegralityViolationError(
            f"prime-degree class number {total} is not a non-negative integer")
    return int(total)


@dataclass(frozen=True)
class GeneraReport:
    per_genus: tuple[tuple[tuple[tuple[str, tuple[int, ...]], ...], int], ...]
    total: int


def total_class_number_genera(order: OrderSpec,
                              budget: int = DEFAULT_BUDGET,
                              engine: str = "genfun") -> GeneraReport:
    """Class numbers of every genus of right ideals, and their sum."""
    if count_genera(order) > budget:
        raise BudgetExceededError(
            f"genus count exceeds budget of {budget}")
    rows = []
    total = 0
    for genus in enumerate_genera(order):
        reduced = {label: genus_reduce(vec) for label, vec in genus.items()}
        sub = OrderSpec(order.algebra, tuple(sorted(reduced.items())))
        h = class_number(sub, engine)
        rows.append((tuple(sorted(genus.items())), h))
        total += h
    return GeneraReport(tuple(rows), total)


@dataclass(frozen=True)
class ClassNumberReport:
    s0: int
    mass: Fraction
    per_s: tuple[tuple[int, tuple[int, Fraction]], ...]  # s -> (h_s, rhs)
    h_total: int


def class_number_report(order: OrderSpec, engine: str = "genfun") -> ClassNumberReport:
    s0 = constant_field_degree(order.algebra)
    h = weight_class_numbers(order, engine)
    mass = mass_hereditary(order)
    per_s = tuple(
        (s, (h[s], level_rhs(order, s, engine))) for s in sorted(h))
    consistency = sum(
        (Fraction(h_s, order.algebra.base.q ** s - 1) for s, (h_s, _) in per_s),
        Fraction(0))
    assert consistency == mass, "weight class numbers must resum to the mass"
    return ClassNumberReport(s0, mass, per_s, sum(h.values()))
