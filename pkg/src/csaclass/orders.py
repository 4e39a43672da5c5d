"""Hereditary order invariants, unit indices and genus vectors.

A hereditary order is pinned down by one invariant vector per finite place:
positive block sizes summing to the local capacity m_v, well defined up to
cyclic rotation.  Places without an entry are maximal, f_v = (m_v).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import comb

from .algebra import AlgebraSpec
from .errors import EmptyGenusError, ValidationError


def normalize_invariant(f_vec) -> tuple[int, ...]:
    """Lexicographically smallest cyclic rotation of the vector."""
    f = tuple(f_vec)
    if not f:
        raise ValidationError("invariant vector must be non-empty")
    return min(f[i:] + f[:i] for i in range(len(f)))


def local_unit_index(N: int, d: int, f_vec) -> Fraction:
    """Index of the hereditary unit group in the maximal one.

    prod_{i=1}^{m}(N^{d i}-1) / prod over entries e of prod_{j<=e}(N^{d j}-1),
    with m the entry sum.  Zero entries contribute empty factors, so the same
    routine serves flattened vectors coming from local embedding data.
    """
    if N < 2:
        raise ValidationError("N must be at least 2")
    f = tuple(f_vec)
    m = sum(f)
    num = 1
    for i in range(1, m + 1):
        num *= N ** (d * i) - 1
    den = 1
    for e in f:
        for j in range(1, e + 1):
            den *= N ** (d * j) - 1
    return Fraction(num, den)


@dataclass(frozen=True)
class OrderSpec:
    """A hereditary order: the algebra plus invariant vectors per place.

    Invariant vectors are normalized at construction so that equal orders
    compare equal; entries equal to the forced maximal vector are dropped.
    """

    algebra: AlgebraSpec
    invariants: tuple[tuple[str, tuple[int, ...]], ...] = ()

    def __post_init__(self) -> None:
        cleaned: list[tuple[str, tuple[int, ...]]] = []
        seen = set()
        pairs = (self.invariants.items()
                 if isinstance(self.invariants, dict) else self.invariants)
        for label, f_vec in pairs:
            if label in seen:
                raise ValidationError(f"duplicate invariant for place {label!r}")
            seen.add(label)
            try:
                place = self.algebra.place(label)
            except KeyError:
                raise ValidationError(
                    f"invariant given for unlisted place {label!r}; "
                    "list it on the algebra first") from None
            if place.label == self.algebra.infinity.label:
                raise ValidationError("no order invariant at infinity")
            f = normalize_invariant(f_vec)
            if any(e < 1 for e in f):
                raise ValidationError(
                    f"place {label!r}: invariant entries must be positive")
            m_v = self.algebra.capacity(place)
            if sum(f) != m_v:
                raise ValidationError(
                    f"place {label!r}: invariant sums to {sum(f)}, expected {m_v}")
            if len(f) > 1:
                cleaned.append((label, f))
        cleaned.sort()
        object.__setattr__(self, "invariants", tuple(cleaned))

    def invariant_at(self, label: str) -> tuple[int, ...]:
        for lab, f in self.invariants:
            if lab == label:
                return f
        return (self.algebra.capacity(self.algebra.place(label)),)

    def nonmaximal_labels(self) -> tuple[str, ...]:
        """S': finite places where the order is not maximal."""
        return tuple(lab for lab, _ in self.invariants)

    def relevant_labels(self) -> tuple[str, ...]:
        """Finite places that can contribute a nontrivial local factor."""
        labels = {v.label for v in self.algebra.finite_places}
        labels.update(lab for lab, _ in self.invariants)
        return tuple(sorted(labels))


def maximal_order(algebra: AlgebraSpec) -> OrderSpec:
    return OrderSpec(algebra, ())


def genus_reduce(g_vec) -> tuple[int, ...]:
    """Strip zero entries from a genus vector; the result is an invariant."""
    reduced = tuple(e for e in g_vec if e != 0)
    if any(e < 0 for e in g_vec):
        raise ValidationError("genus entries must be non-negative")
    if not reduced:
        raise EmptyGenusError("genus vector has no non-zero entry")
    return reduced


def _compositions(total: int, parts: int):
    """All vectors of `parts` non-negative integers summing to `total`."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def count_genera(order: OrderSpec) -> int:
    total = 1
    for label, f in order.invariants:
        m_v = sum(f)
        total *= comb(m_v + len(f) - 1, len(f) - 1)
    return total


def enumerate_genera(order: OrderSpec):
    """All genus vectors, as {label: vector} over the non-maximal places.

    Places with a single invariant block admit only the forced genus and are
    omitted from the dictionaries.
    """
    labels = [label for label, _ in order.invariants]
    axes = []
    for label in labels:
        f = order.invariant_at(label)
        axes.append(list(_compositions(sum(f), len(f))))
    for combo in product(*axes):
        yield dict(zip(labels, combo))
