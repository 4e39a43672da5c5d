"""Shared fixtures: the worked golden example and a random spec generator."""

from __future__ import annotations

import random
from fractions import Fraction
from math import gcd

import pytest

from csaclass import AlgebraSpec, BaseField, OrderSpec, Place
from csaclass.algebra import _irreducible_count, validate


@pytest.fixture
def golden_spec() -> AlgebraSpec:
    """Degree-4 division algebra over F_3(T), ramified at infinity, T, T+1, T+2."""
    base = BaseField.rational(3)
    return AlgebraSpec(
        base, 4,
        (Place("T", 1, 4, 1), Place("T+1", 1, 2, 1), Place("T+2", 1, 2, 1)),
        Place("infinity", 1, 4, -1))


@pytest.fixture
def golden_order(golden_spec) -> OrderSpec:
    return OrderSpec(golden_spec, ())


def random_composition(rng: random.Random, total: int, parts: int) -> tuple[int, ...]:
    """Random composition of `total` into `parts` positive integers."""
    cuts = sorted(rng.sample(range(1, total), parts - 1)) if parts > 1 else []
    bounds = [0] + cuts + [total]
    return tuple(bounds[i + 1] - bounds[i] for i in range(parts))


def random_definite_spec(rng: random.Random, max_degree: int = 6,
                         max_places: int = 4) -> AlgebraSpec:
    """A random valid definite algebra spec over a rational base field.

    Finite ramified invariants are drawn freely; a final balancer place
    absorbs the fractional part so reciprocity holds, retrying until the
    residual invariant at infinity has exact denominator n (definiteness).
    """
    for _ in range(1000):
        q = rng.choice([2, 3, 4, 5])
        n = rng.randint(1, max_degree)
        count = rng.randint(0, max_places - 1) if n > 1 else 0
        proper = [d for d in range(2, n + 1) if n % d == 0]
        used_degrees: dict[int, int] = {}

        def pick_degree() -> int | None:
            for _ in range(20):
                deg = rng.randint(1, 3)
                if used_degrees.get(deg, 0) < _irreducible_count(q, deg):
                    used_degrees[deg] = used_degrees.get(deg, 0) + 1
                    return deg
            return None

        places = []
        total = Fraction(0)
        ok = True
        for idx in range(count):
            if not proper:
                break
            d = rng.choice(proper)
            kappa = rng.choice([k for k in range(1, d) if gcd(k, d) == 1])
            deg = pick_degree()
            if deg is None:
                ok = False
                break
            places.append(Place(f"p{idx}", deg, d, kappa))
            total += Fraction(kappa, d)
        if not ok:
            continue
        residual = -total % 1
        if n == 1:
            if residual != 0:
                continue
            infinity = Place("infinity", 1, 1, None)
        else:
            # infinity must carry denominator exactly n for definiteness
            if residual == 0 or residual.denominator != n:
                continue
            infinity = Place("infinity", 1, n, residual.numerator)
        spec = AlgebraSpec(BaseField.rational(q), n, tuple(places), infinity)
        if validate(spec):
            continue
        return spec
    raise RuntimeError("failed to generate a valid random spec")


def random_order(rng: random.Random, spec: AlgebraSpec,
                 extra_split_places: int = 1) -> OrderSpec:
    """Random hereditary order: random compositions at a few places."""
    algebra = spec
    candidates = list(spec.finite_places)
    for k in range(extra_split_places):
        if rng.random() < 0.5:
            label = f"u{k}"
            deg = rng.randint(1, 2)
            limit = _irreducible_count(spec.base.q, deg)
            existing = sum(1 for v in algebra.finite_places if v.degree == deg)
            if existing >= limit:
                continue
            algebra = algebra.with_listed_place(label, deg)
            candidates.append(algebra.place(label))
    invariants = {}
    for v in candidates:
        m_v = algebra.capacity(v)
        if m_v > 1 and rng.random() < 0.6:
            r = rng.randint(1, m_v)
            invariants[v.label] = random_composition(rng, m_v, r)
    return OrderSpec(algebra, tuple(sorted(invariants.items())))
