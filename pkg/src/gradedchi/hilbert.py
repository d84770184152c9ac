"""Hilbert series of graded quotients, with dimension and multiplicity.

The series of S/I is N(t) / prod_i (1 - t^{d_i}) where the numerator N is
computed from the leading-term ideal of a Groebner basis of I by the usual
variable-splitting recursion. Dimension is read off as the pole order at
t = 1 and the multiplicity as the value there after clearing the pole.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .arith import (
    ONE,
    ZERO,
    IntPoly,
    RatFun,
    one_minus_t_valuation,
    ratfun_normalize,
    series_expand,
)
from .errors import AlgebraError, HomogeneityError
from .groebner import MonomialIdeal, leading_ideal, minimalize_monomials
from .rings import GradedRing, mono_is_one, wdeg

_NUMERATOR_CACHE: dict = {}


def weights_denominator(weights) -> IntPoly:
    """The canonical Hilbert-series denominator prod_i (1 - t^{d_i})."""
    d = ONE
    for w in weights:
        d = d * (ONE - IntPoly.t_power(w))
    return d


def _pairwise_coprime(monos) -> bool:
    support = []
    for m in monos:
        s = {i for i, e in enumerate(m) if e}
        for seen in support:
            if s & seen:
                return False
        support.append(s)
    return True


def hilbert_numerator(mi, weights) -> IntPoly:
    """Numerator N(t) with HS_{S/mi}(t) = N(t) / prod(1 - t^{d_i}).

    Accepts a MonomialIdeal or any iterable of exponent tuples. Splits on the
    variable occurring in the most minimal generators and recurses via
    N(I) = N(I + <x_v>) + t^{w_v} * N(I : x_v), memoizing on the canonical
    generator set.
    """
    gens = mi.generators if isinstance(mi, MonomialIdeal) else minimalize_monomials(mi)
    return _numerator(gens, tuple(weights))


def _numerator(gens, weights) -> IntPoly:
    if not gens:
        return ONE
    if any(mono_is_one(m) for m in gens):
        return ZERO
    if _pairwise_coprime(gens):
        out = ONE
        for m in gens:
            out = out * (ONE - IntPoly.t_power(wdeg(m, weights)))
        return out
    key = (gens, weights)
    hit = _NUMERATOR_CACHE.get(key)
    if hit is not None:
        return hit
    nvars = len(weights)
    counts = [0] * nvars
    for m in gens:
        for i, e in enumerate(m):
            if e:
                counts[i] += 1
    v = max(range(nvars), key=lambda i: (counts[i], -i))
    xv = tuple(1 if i == v else 0 for i in range(nvars))
    plus = minimalize_monomials([m for m in gens if m[v] == 0] + [xv])
    colon = minimalize_monomials(
        tuple(m[:v] + (m[v] - 1 if m[v] else 0,) + m[v + 1 :] for m in gens)
    )
    out = _numerator(plus, weights) + IntPoly.t_power(weights[v]) * _numerator(colon, weights)
    _NUMERATOR_CACHE[key] = out
    return out


class DimMult(NamedTuple):
    dim: int
    mult: Fraction


@dataclass(frozen=True)
class HilbertSeries:
    """Hilbert series as an integer numerator over prod_i (1 - t^{d_i})."""

    numerator: IntPoly
    weights: tuple

    @property
    def is_zero(self) -> bool:
        return self.numerator.is_zero

    def rational(self) -> RatFun:
        return ratfun_normalize(self.numerator, weights_denominator(self.weights))

    def series(self, n: int):
        """First n+1 coefficients dim_k M_0, ..., dim_k M_n as integers."""
        if self.is_zero:
            return [0] * (n + 1)
        return [int(c) for c in series_expand(self.rational(), n)]

    def dim_and_mult(self) -> DimMult:
        return dim_and_mult(self)


def dim_and_mult(hs: HilbertSeries) -> DimMult:
    """Dimension (pole order at t = 1) and multiplicity (value there after
    clearing the pole) of a nonzero graded module."""
    if hs.numerator.is_zero:
        raise AlgebraError("zero module has no dimension")
    k, q = one_minus_t_valuation(hs.numerator)
    s = len(hs.weights)
    if k > s:
        raise AlgebraError("Hilbert numerator vanishes at t = 1 to excessive order")
    wprod = 1
    for w in hs.weights:
        wprod *= w
    return DimMult(s - k, Fraction(q(1), wprod))


def _homogeneous_gens(ring: GradedRing, gens):
    out = []
    for g in gens:
        if g.is_zero:
            continue
        if not g.is_homogeneous():
            raise HomogeneityError(f"generator {g} is not homogeneous")
        out.append(g)
    return tuple(out)


def hilbert_series(ring: GradedRing, gens=()) -> HilbertSeries:
    """Hilbert series of R/I for I generated by gens over the graded ring R.

    The ring's defining relations are appended automatically, so gens only
    need to generate I modulo those.
    """
    gens = _homogeneous_gens(ring, gens)
    gb = ring.groebner(gens)
    return HilbertSeries(hilbert_numerator(leading_ideal(gb), ring.weights), ring.weights)
