"""Sparse multivariate polynomials over exact fields, with positive weight gradings.

Monomials are plain exponent tuples. A PolyRing fixes variable names, weights,
a coefficient field (QQ or GF(p)) and a weighted-degree-compatible monomial
order; a GradedRing adds homogeneous relations to present a quotient. All
values are immutable by convention and all operations are pure.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import AlgebraError, HomogeneityError

# ---------------------------------------------------------------------------
# monomials


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a, b):
    """True if a | b, i.e. a <= b componentwise."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(a, b):
    """a / b for b | a."""
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_gcd(a, b):
    return tuple(min(x, y) for x, y in zip(a, b))


def mono_is_one(m):
    return not any(m)


def mono_coprime(a, b):
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def wdeg(m, ring) -> int:
    """Weighted degree of a monomial with respect to a ring (or weight tuple)."""
    weights = ring if isinstance(ring, tuple) else ring.weights
    if len(m) != len(weights):
        raise ValueError(
            f"monomial has {len(m)} exponents but the ring has {len(weights)} variables"
        )
    return sum(e * w for e, w in zip(m, weights))


# ---------------------------------------------------------------------------
# coefficient fields


class RationalField:
    """Exact rational coefficients (fractions.Fraction)."""

    __slots__ = ()
    p = 0  # characteristic
    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        raise TypeError(f"cannot coerce {x!r} into QQ")

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a)

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero")
        return Fraction(a) / b

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("gradedchi-QQ")


QQ = RationalField()


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class PrimeField:
    """Arithmetic mod a prime p; elements are ints in [0, p)."""

    __slots__ = ("p",)
    zero = 0
    one = 1

    def __init__(self, p: int):
        if not isinstance(p, int) or not _is_prime(p):
            raise ValueError(f"{p!r} is not a prime")
        self.p = p

    def coerce(self, x):
        if isinstance(x, int):
            return x % self.p
        if isinstance(x, Fraction):
            return self.div(x.numerator % self.p, x.denominator % self.p)
        raise TypeError(f"cannot coerce {x!r} into GF({self.p})")

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return (a * self.inv(b)) % self.p

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("gradedchi-GF", self.p))


def field_from_name(name: str):
    """Parse a field spec: "qq", or "fp:P" for GF(P)."""
    s = name.strip().lower()
    if s == "qq":
        return QQ
    if s.startswith("fp:"):
        try:
            p = int(s[3:])
        except ValueError:
            raise ValueError(f"bad prime in field spec {name!r}") from None
        return PrimeField(p)
    raise ValueError(f"unknown field {name!r} (expected qq or fp:P)")


# ---------------------------------------------------------------------------
# monomial orders


class MonomialOrder:
    """A weighted-degree-first total monomial order.

    Both supported tie-breaks (grevlex, deglex) compare weighted degree
    first, so every order here is degree compatible: m | m' and m != m'
    implies m < m'. That property is what makes leading-term Hilbert series
    computations valid.
    """

    KINDS = ("grevlex", "deglex")
    __slots__ = ("kind", "weights")

    def __init__(self, kind: str, weights: tuple[int, ...]):
        if kind not in self.KINDS:
            raise ValueError(
                f"unknown monomial order {kind!r}; degree-compatible orders: {self.KINDS}"
            )
        self.kind = kind
        self.weights = tuple(weights)

    def key(self, m):
        """Sort key; bigger key = bigger monomial."""
        d = sum(e * w for e, w in zip(m, self.weights))
        if self.kind == "grevlex":
            return (d, tuple(-e for e in reversed(m)))
        return (d, m)

    def __eq__(self, other):
        return (
            isinstance(other, MonomialOrder)
            and other.kind == self.kind
            and other.weights == self.weights
        )

    def __hash__(self):
        return hash((self.kind, self.weights))

    def __repr__(self):
        return f"MonomialOrder({self.kind!r}, weights={self.weights})"


# ---------------------------------------------------------------------------
# rings and polynomials


class PolyRing:
    """An ambient weighted polynomial ring k[x_1, ..., x_s]."""

    __slots__ = ("names", "weights", "field", "order")

    def __init__(self, names, weights=None, field=QQ, order="grevlex"):
        names = tuple(names)
        if not names:
            raise ValueError("a ring needs at least one variable")
        if len(set(names)) != len(names):
            raise ValueError("duplicate variable names")
        if weights is None:
            weights = (1,) * len(names)
        weights = tuple(weights)
        if len(weights) != len(names):
            raise ValueError("one weight per variable required")
        for w in weights:
            if not isinstance(w, int) or w <= 0:
                raise ValueError(f"weight {w!r} must be a positive integer")
        self.names = names
        self.weights = weights
        self.field = field
        if isinstance(order, str):
            order = MonomialOrder(order, weights)
        elif order.weights != weights:
            raise ValueError("monomial order weights disagree with the ring weights")
        self.order = order

    @property
    def nvars(self) -> int:
        return len(self.names)

    def wdeg(self, m) -> int:
        return wdeg(m, self.weights)

    def zero(self) -> "Poly":
        return Poly(self, {})

    def one(self) -> "Poly":
        return Poly(self, {(0,) * self.nvars: self.field.one})

    def gen(self, i: int) -> "Poly":
        e = [0] * self.nvars
        e[i] = 1
        return Poly(self, {tuple(e): self.field.one})

    def gens(self) -> tuple["Poly", ...]:
        return tuple(self.gen(i) for i in range(self.nvars))

    def monomial(self, exps, coeff=1) -> "Poly":
        exps = tuple(exps)
        if len(exps) != self.nvars:
            raise ValueError("wrong number of exponents")
        c = self.field.coerce(coeff)
        return Poly(self, {exps: c} if c else {})

    def constant(self, c) -> "Poly":
        return self.monomial((0,) * self.nvars, c)

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and other.names == self.names
            and other.weights == self.weights
            and other.field == self.field
            and other.order == self.order
        )

    def __hash__(self):
        return hash((self.names, self.weights, self.field, self.order))

    def __repr__(self):
        vs = ", ".join(f"{n}:{w}" for n, w in zip(self.names, self.weights))
        return f"PolyRing({vs}; {self.field!r}; {self.order.kind})"


class Poly:
    """A sparse polynomial: a map from exponent tuples to nonzero coefficients."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = {m: c for m, c in terms.items() if c}

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.ring != self.ring:
                raise ValueError("polynomials belong to different rings")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.constant(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        f = self.ring.field
        out = dict(self.terms)
        for m, c in o.terms.items():
            s = f.add(out.get(m, f.zero), c)
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Poly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        f = self.ring.field
        return Poly(self.ring, {m: f.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        f = self.ring.field
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in o.terms.items():
                m = mono_mul(m1, m2)
                s = f.add(out.get(m, f.zero), f.mul(c1, c2))
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return Poly(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        o = self._coerce(other) if isinstance(other, (Poly, int, Fraction)) else None
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        return hash((self.ring, self.canonical_key()))

    def canonical_key(self):
        """A hashable canonical form (sorted term tuple)."""
        return tuple(sorted(self.terms.items()))

    def coeff(self, m):
        return self.terms.get(tuple(m), self.ring.field.zero)

    def sorted_terms(self, reverse: bool = True):
        """Terms ordered by the ring's monomial order (descending by default)."""
        key = self.ring.order.key
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=reverse)

    def leading_monomial(self):
        if not self.terms:
            raise AlgebraError("zero polynomial has no leading term")
        return max(self.terms, key=self.ring.order.key)

    def leading_coeff(self):
        return self.terms[self.leading_monomial()]

    def homogeneous_degree(self):
        """The common weighted degree of all terms.

        Returns "any" for the zero polynomial (homogeneous of every degree)
        and None when the polynomial is not homogeneous.
        """
        if not self.terms:
            return "any"
        degs = {self.ring.wdeg(m) for m in self.terms}
        if len(degs) == 1:
            return degs.pop()
        return None

    def is_homogeneous(self) -> bool:
        return self.homogeneous_degree() is not None

    def max_wdeg(self) -> int:
        """Largest weighted degree among the terms (-1 for zero)."""
        if not self.terms:
            return -1
        return max(self.ring.wdeg(m) for m in self.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        names = self.ring.names
        parts = []
        for m, c in self.sorted_terms():
            factors = []
            for n, e in zip(names, m):
                if e == 1:
                    factors.append(n)
                elif e > 1:
                    factors.append(f"{n}^{e}")
            mono = "*".join(factors)
            neg = isinstance(c, (int, Fraction)) and c < 0
            mag = -c if neg else c
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not parts:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f"{'-' if neg else '+'} {body}")
        return " ".join(parts)

    def __repr__(self):
        return f"<Poly {self}>"


class GradedRing:
    """A graded quotient R = S/(relations), presented over an ambient PolyRing.

    Relations must be homogeneous of positive weighted degree, so R_0 is the
    ground field. Groebner bases of (relations + extra generators) are cached
    on the ring; the cache is invisible to callers.
    """

    __slots__ = ("ambient", "relations", "_gb_cache")

    def __init__(self, ambient: PolyRing, relations=()):
        rels = []
        for r in relations:
            if not isinstance(r, Poly) or r.ring != ambient:
                raise ValueError("relation does not live in the ambient ring")
            if r.is_zero:
                continue
            d = r.homogeneous_degree()
            if d is None:
                raise HomogeneityError(f"relation {r} is not homogeneous")
            if d == 0:
                raise AlgebraError(f"relation {r} has degree 0; R_0 must be the ground field")
            rels.append(r)
        self.ambient = ambient
        self.relations = tuple(rels)
        self._gb_cache = {}

    @property
    def names(self):
        return self.ambient.names

    @property
    def weights(self):
        return self.ambient.weights

    @property
    def field(self):
        return self.ambient.field

    @property
    def order(self):
        return self.ambient.order

    @property
    def nvars(self):
        return self.ambient.nvars

    def groebner(self, gens=()):
        """Reduced Groebner basis of (relations + gens), cached."""
        from .groebner import buchberger

        gens = tuple(gens)
        for g in gens:
            if not isinstance(g, Poly) or g.ring != self.ambient:
                raise ValueError("generator does not live in the ambient ring")
        key = tuple(sorted(g.canonical_key() for g in gens))
        gb = self._gb_cache.get(key)
        if gb is None:
            gb = buchberger(self.relations + gens, self.ambient)
            self._gb_cache[key] = gb
        return gb

    def relations_gb(self):
        return self.groebner(())

    def canonical_key(self):
        return (self.ambient, tuple(sorted(r.canonical_key() for r in self.relations)))

    def __eq__(self, other):
        return isinstance(other, GradedRing) and other.canonical_key() == self.canonical_key()

    def __hash__(self):
        return hash(self.canonical_key())

    def __repr__(self):
        rel = ", ".join(str(r) for r in self.relations) or "0"
        return f"GradedRing({self.ambient!r} / ({rel}))"
