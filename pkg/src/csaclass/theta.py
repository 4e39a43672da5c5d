"""Local theta factors, by direct enumeration and by generating function.

Both engines compute the same sum of unit-index products over the local
index set.  Enumeration is the transparent reference; the generating
function extracts a single coefficient of a capped multivariate power
series and is the fast path when the index set is large.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import Place
from .errors import ValidationError
from .omega import LocalContext, enumerate_omega
from .orders import local_unit_index


def residue_power(ctx: LocalContext, q: int) -> int:
    """Cardinality of the residue field of the division part above w."""
    N = q ** ctx.place.degree
    return N ** (ctx.d_new * ctx.s // ctx.l)


def theta_enum(place: Place, f_vec, s: int, q: int) -> Fraction:
    """Sum over the local index set of the product of slice unit indices."""
    ctx = LocalContext.create(place, f_vec, s)
    Q = residue_power(ctx, q)
    total = Fraction(0)
    for elem in enumerate_omega(place, f_vec, s):
        term = Fraction(1)
        for slice_vec in elem.entries:
            term *= local_unit_index(Q, 1, slice_vec)
        total += term
    return total


class TruncatedMultiSeries:
    """Multivariate polynomial with per-axis exponent caps.

    Coefficients are exact rationals keyed by exponent tuples; any product
    term exceeding a cap is pruned eagerly.  Iteration order over stored
    keys is sorted, so dumps are stable.
    """

    def __init__(self, caps: tuple[int, ...]):
        self.caps = caps
        self.coeffs: dict[tuple[int, ...], Fraction] = {
            (0,) * len(caps): Fraction(1)}

    def mul_diagonal_factor(self, axes: tuple[int, ...],
                            series: list[Fraction]) -> None:
        """Multiply by sum_nu series[nu] * (prod of axis variables)^nu."""
        limit = min(self.caps[a] for a in axes)
        new: dict[tuple[int, ...], Fraction] = {}
        for exp, c in self.coeffs.items():
            head = min(self.caps[a] - exp[a] for a in axes)
            for nu in range(0, min(limit, head, len(series) - 1) + 1):
                if series[nu] == 0:
                    continue
                bumped = list(exp)
                for a in axes:
                    bumped[a] += nu
                key = tuple(bumped)
                new[key] = new.get(key, Fraction(0)) + c * series[nu]
        self.coeffs = new

    def coefficient(self, exp: tuple[int, ...]) -> Fraction:
        return self.coeffs.get(exp, Fraction(0))


def theta_genfun(place: Place, f_vec, s: int, q: int) -> Fraction:
    """Theta factor via coefficient extraction from the capped series.

    The series multiplies one diagonal factor per (w, i) matrix position,
    repeated t times for the suppressed third axis, and reads off the
    coefficient of X_w^{m_s} (all w) times Y_i^{target_i} (all i).
    """
    ctx = LocalContext.create(place, f_vec, s)
    targets = ctx.scaled_targets()
    if targets is None:
        return Fraction(0)
    Q = residue_power(ctx, q)
    r = len(ctx.f_vec)

    # a_nu = prod_{k<=nu} (Q^k - 1)^(-1), truncated at the slice capacity.
    a = [Fraction(1)]
    for k in range(1, ctx.m_s + 1):
        a.append(a[-1] / (Q ** k - 1))

    caps = (ctx.m_s,) * ctx.l + targets
    series = TruncatedMultiSeries(caps)
    for w in range(ctx.l):
        for i in range(r):
            for _ in range(ctx.t):
                series.mul_diagonal_factor((w, ctx.l + i), a)

    target = (ctx.m_s,) * ctx.l + targets
    scale = Fraction(1)
    for k in range(1, ctx.m_s + 1):
        scale *= Q ** k - 1
    return series.coefficient(target) * scale ** ctx.l


def theta(place: Place, f_vec, s: int, q: int, engine: str = "genfun") -> Fraction:
    if engine == "genfun":
        return theta_genfun(place, f_vec, s, q)
    if engine == "enum":
        return theta_enum(place, f_vec, s, q)
    raise ValidationError(f"unknown theta engine {engine!r}")
