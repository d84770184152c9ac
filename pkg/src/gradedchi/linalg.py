"""Exact sparse linear algebra over QQ and GF(p): spans, ranks, kernels.

Vectors are dicts mapping column index to a nonzero coefficient. Over the
rationals every stored row is scaled to a primitive integer vector whose
leading (smallest-index) entry is positive; scaling is invisible to row
spaces, so ranks and kernels are unaffected while entries stay small. The
reduced echelon form is unique, which makes every kernel basis computed
here canonical: identical inputs give identical output, entry for entry.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm


def _primitive_int_row(row: dict) -> dict:
    """Scale a QQ row to coprime integers with a positive leading entry."""
    if not row:
        return {}
    den = 1
    for v in row.values():
        if isinstance(v, Fraction):
            den = lcm(den, v.denominator)
    num = 0
    ints = {}
    for c, v in row.items():
        n = int(v * den) if isinstance(v, Fraction) else v * den
        if n:
            ints[c] = n
            num = gcd(num, n)
    if not ints:
        return {}
    if ints[min(ints)] < 0:
        num = -num
    if num != 1:
        ints = {c: v // num for c, v in ints.items()}
    return ints


class EchelonSpan:
    """A growing row space kept in echelon form, for ranks and residuals.

    The lead of a row is its smallest column index. reduce() eliminates the
    lead of a vector against stored rows until it is either zero or a fresh
    lead; since stored rows and the normalization are canonical given the
    insertion history, residuals are deterministic.
    """

    __slots__ = ("field", "rows")

    def __init__(self, field):
        self.field = field
        self.rows: dict = {}  # lead column -> normalized row

    @property
    def dim(self) -> int:
        return len(self.rows)

    def _normalize(self, row: dict) -> dict:
        if self.field.p == 0:
            return _primitive_int_row(row)
        inv = self.field.inv(row[min(row)])
        return {c: (v * inv) % self.field.p for c, v in row.items()}

    def reduce(self, vec: dict) -> dict:
        """Residual of vec modulo the current row space, canonically scaled."""
        v = dict(vec)
        if self.field.p == 0:
            v = _primitive_int_row(v)
            while v:
                lead = min(v)
                row = self.rows.get(lead)
                if row is None:
                    break
                a, p = v[lead], row[lead]
                g = gcd(a, p)
                sv, sr = p // g, a // g
                if sv != 1:
                    v = {c: val * sv for c, val in v.items()}
                for c, val in row.items():
                    nv = v.get(c, 0) - sr * val
                    if nv:
                        v[c] = nv
                    else:
                        v.pop(c, None)
                v = _primitive_int_row(v)
            return v
        p = self.field.p
        for c in list(v):
            v[c] %= p
            if not v[c]:
                del v[c]
        while v:
            lead = min(v)
            row = self.rows.get(lead)
            if row is None:
                break
            a = v[lead]
            for c, val in row.items():
                nv = (v.get(c, 0) - a * val) % p
                if nv:
                    v[c] = nv
                else:
                    v.pop(c, None)
        return self._normalize(v) if v else {}

    def add(self, vec: dict) -> bool:
        """Insert vec; True if it enlarged the span."""
        r = self.reduce(vec)
        if not r:
            return False
        self.rows[min(r)] = r
        return True

    def contains(self, vec: dict) -> bool:
        return not self.reduce(vec)


def rank_of_vectors(vecs, field) -> int:
    span = EchelonSpan(field)
    for v in vecs:
        span.add(v)
    return span.dim


def rref_rows(rows, field):
    """Canonical reduced echelon form of a list of row vectors.

    Returns (pivots, prows): the sorted pivot columns and a map pivot -> row,
    where each pivot column occurs in exactly one row. Rows are primitive
    integer vectors over QQ (monic over GF(p)), so the output is the unique
    reduced echelon form up to that fixed scaling.
    """
    span = EchelonSpan(field)
    for r in rows:
        span.add(r)
    pivots = sorted(span.rows)
    prows = {c: dict(span.rows[c]) for c in pivots}
    if field.p == 0:
        for p in reversed(pivots):
            src = prows[p]
            for q in pivots:
                if q >= p:
                    break
                tgt = prows[q]
                a = tgt.get(p)
                if not a:
                    continue
                b = src[p]
                g = gcd(a, b)
                st, ss = b // g, a // g
                if st != 1:
                    for c in tgt:
                        tgt[c] *= st
                for c, val in src.items():
                    nv = tgt.get(c, 0) - ss * val
                    if nv:
                        tgt[c] = nv
                    else:
                        tgt.pop(c, None)
                prows[q] = _primitive_int_row(tgt)
    else:
        pm = field.p
        for p in reversed(pivots):
            src = prows[p]
            for q in pivots:
                if q >= p:
                    break
                tgt = prows[q]
                a = tgt.get(p)
                if not a:
                    continue
                for c, val in src.items():
                    nv = (tgt.get(c, 0) - a * val) % pm
                    if nv:
                        tgt[c] = nv
                    else:
                        tgt.pop(c, None)
    return pivots, prows


def kernel_of_columns(cols, ncols: int, field):
    """Canonical basis of the nullspace {x : sum_j x_j * cols[j] = 0}.

    cols is a list of sparse column vectors; the kernel vectors are indexed
    by column position, one per non-pivot column of the reduced echelon form,
    in ascending column order.
    """
    rows: dict = {}
    for j, col in enumerate(cols):
        for r, c in col.items():
            if c:
                rows.setdefault(r, {})[j] = c
    pivots, prows = rref_rows([rows[r] for r in sorted(rows)], field)
    pivot_set = set(pivots)
    out = []
    if field.p == 0:
        for f in range(ncols):
            if f in pivot_set:
                continue
            vec = {f: Fraction(1)}
            for p in pivots:
                a = prows[p].get(f)
                if a:
                    vec[p] = Fraction(-a, prows[p][p])
            out.append(_primitive_int_row(vec))
    else:
        pm = field.p
        for f in range(ncols):
            if f in pivot_set:
                continue
            vec = {f: 1}
            for p in pivots:
                a = prows[p].get(f)
                if a:
                    vec[p] = (-a) % pm
            lead = min(vec)
            if vec[lead] != 1:
                inv = field.inv(vec[lead])
                vec = {c: (v * inv) % pm for c, v in vec.items()}
            out.append(vec)
    return out


def rank_of_columns(cols, field) -> int:
    return rank_of_vectors(cols, field)
