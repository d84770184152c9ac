"""The session language: one ring declaration, named ideals, commands.

Grammar (informally):

    session    := ring-decl (ideal-decl | command)*
    ring-decl  := "ring" NAME "{" "vars" var ("," var)* ";"
                  ("relations" poly ("," poly)* ";")? "}"
    var        := NAME (":" INT)?            -- weight defaults to 1
    ideal-decl := "ideal" NAME "=" "(" poly ("," poly)* ")" ";"
    command    := "hilbert" NAME ";"
                | "chi" NAME NAME ";"
                | "tor" NAME NAME flag* ";"
                | "check" NAME NAME flag* ";"
                | "gulliksen" NAME NAME ";"
                | "cartier" poly INT NAME ";"
    flag       := "--imax" INT | "--dmax" INT

Polynomials use integer (or INT/INT fraction) coefficients, "+", "-", "*",
"^" and parentheses. "#" starts a comment through end of line. Everything
referenced must be declared earlier; errors carry line and column.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import lcm

from .arith import IntPoly, RatFun, ratfun_normalize
from .errors import SessionError
from .rings import QQ, GradedRing, Poly, PolyRing

_SYMBOLS = set("{}(),;:=+-*^/")
_COMMANDS = ("hilbert", "chi", "tor", "check", "gulliksen", "cartier")


@dataclass(frozen=True)
class Token:
    kind: str  # IDENT, INT, FLAG, SYM, EOF
    value: str
    line: int
    col: int


def tokenize(text: str):
    toks = []
    line, col, i, n = 1, 1, 0, len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        if ch == "#":
            while i < n and text[i] != "\n":
                i += 1
            continue
        if ch == "-" and text.startswith("--", i):
            j = i + 2
            while j < n and (text[j].isalnum() or text[j] in "_-"):
                j += 1
            name = text[i + 2 : j]
            if not name:
                raise SessionError("stray '--'", line, col)
            toks.append(Token("FLAG", name, line, col))
            col += j - i
            i = j
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(Token("INT", text[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            toks.append(Token("IDENT", text[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch in _SYMBOLS:
            toks.append(Token("SYM", ch, line, col))
            col += 1
            i += 1
            continue
        raise SessionError(f"unexpected character {ch!r}", line, col)
    toks.append(Token("EOF", "", line, col))
    return toks


@dataclass(frozen=True)
class Command:
    kind: str
    idents: tuple
    poly: Poly | None = None
    number: int | None = None
    flags: dict = dc_field(default_factory=dict)
    line: int = 0
    col: int = 0


@dataclass
class Session:
    ring_name: str
    ring: GradedRing
    ideals: dict
    commands: list

    @property
    def ambient(self) -> PolyRing:
        return self.ring.ambient


class _Parser:
    def __init__(self, tokens, field):
        self.toks = tokens
        self.pos = 0
        self.field = field
        self.ring = None
        self.ring_name = None
        self.ambient = None
        self.var_index: dict = {}
        self.ideals: dict = {}
        self.commands: list = []

    # -- token plumbing

    def peek(self) -> Token:
        return self.toks[self.pos]

    def advance(self) -> Token:
        t = self.toks[self.pos]
        self.pos += 1
        return t

    @staticmethod
    def _show(t: Token) -> str:
        if t.kind == "EOF":
            return "end of input"
        if t.kind == "FLAG":
            return f"'--{t.value}'"
        return f"'{t.value}'"

    def expect_sym(self, s: str) -> Token:
        t = self.advance()
        if t.kind != "SYM" or t.value != s:
            raise SessionError(f"expected '{s}', found {self._show(t)}", t.line, t.col)
        return t

    def expect_ident(self, what: str = "a name") -> Token:
        t = self.advance()
        if t.kind != "IDENT":
            raise SessionError(f"expected {what}, found {self._show(t)}", t.line, t.col)
        return t

    def expect_int(self, what: str = "an integer") -> int:
        t = self.advance()
        if t.kind != "INT":
            raise SessionError(f"expected {what}, found {self._show(t)}", t.line, t.col)
        return int(t.value)

    def at_sym(self, s: str) -> bool:
        t = self.peek()
        return t.kind == "SYM" and t.value == s

    # -- declarations

    def parse(self) -> Session:
        t = self.peek()
        if not (t.kind == "IDENT" and t.value == "ring"):
            raise SessionError("a session must start with a ring declaration", t.line, t.col)
        self.parse_ring()
        while True:
            t = self.peek()
            if t.kind == "EOF":
                break
            if t.kind != "IDENT":
                raise SessionError(
                    f"expected a declaration or command, found {self._show(t)}", t.line, t.col
                )
            if t.value == "ring":
                raise SessionError("only one ring declaration is allowed per session", t.line, t.col)
            if t.value == "ideal":
                self.parse_ideal()
            elif t.value in _COMMANDS:
                self.parse_command()
            else:
                raise SessionError(f"unknown command {t.value!r}", t.line, t.col)
        return Session(
            ring_name=self.ring_name,
            ring=self.ring,
            ideals=self.ideals,
            commands=self.commands,
        )

    def parse_ring(self):
        self.advance()  # "ring"
        self.ring_name = self.expect_ident("a ring name").value
        self.expect_sym("{")
        kw = self.expect_ident()
        if kw.value != "vars":
            raise SessionError(f"expected 'vars', found {self._show(kw)}", kw.line, kw.col)
        names: list = []
        weights: list = []
        while True:
            t = self.expect_ident("a variable name")
            if t.value in names:
                raise SessionError(f"duplicate variable {t.value!r}", t.line, t.col)
            w = 1
            if self.at_sym(":"):
                self.advance()
                wt = self.peek()
                w = self.expect_int("a weight")
                if w <= 0:
                    raise SessionError(
                        f"variable {t.value!r} has weight {w}; weights must be >= 1",
                        wt.line,
                        wt.col,
                    )
            names.append(t.value)
            weights.append(w)
            if self.at_sym(","):
                self.advance()
                continue
            break
        self.expect_sym(";")
        self.ambient = PolyRing(tuple(names), tuple(weights), field=self.field)
        self.var_index = {nm: i for i, nm in enumerate(names)}
        relations = []
        t = self.peek()
        if t.kind == "IDENT" and t.value == "relations":
            self.advance()
            while True:
                start = self.peek()
                p = self.parse_poly()
                if not p.is_zero:
                    d = p.homogeneous_degree()
                    if d is None:
                        raise SessionError(
                            f"relation {p} is not homogeneous", start.line, start.col
                        )
                    if d == 0:
                        raise SessionError(
                            f"relation {p} has degree 0; the degree-0 part must be the field",
                            start.line,
                            start.col,
                        )
                    relations.append(p)
                if self.at_sym(","):
                    self.advance()
                    continue
                break
            self.expect_sym(";")
        self.expect_sym("}")
        self.ring = GradedRing(self.ambient, relations)

    def parse_ideal(self):
        self.advance()  # "ideal"
        name_tok = self.expect_ident("an ideal name")
        name = name_tok.value
        if name in self.ideals:
            raise SessionError(f"ideal {name!r} is already declared", name_tok.line, name_tok.col)
        self.expect_sym("=")
        self.expect_sym("(")
        gens: list = []
        while True:
            start = self.peek()
            p = self.parse_poly()
            if not p.is_zero:
                d = p.homogeneous_degree()
                if d is None:
                    raise SessionError(f"generator {p} is not homogeneous", start.line, start.col)
                if d == 0:
                    raise SessionError(
                        f"generator {p} is a nonzero constant", start.line, start.col
                    )
                gens.append(p)
            if self.at_sym(","):
                self.advance()
                continue
            break
        self.expect_sym(")")
        self.expect_sym(";")
        self.ideals[name] = tuple(gens)

    # -- commands

    def ideal_ref(self) -> str:
        t = self.expect_ident("an ideal name")
        if t.value not in self.ideals:
            raise SessionError(f"unknown ideal {t.value!r}", t.line, t.col)
        return t.value

    def parse_flags(self) -> dict:
        flags: dict = {}
        while self.peek().kind == "FLAG":
            t = self.advance()
            if t.value not in ("imax", "dmax"):
                raise SessionError(f"unknown flag --{t.value}", t.line, t.col)
            flags[t.value] = self.expect_int(f"a value for --{t.value}")
        return flags

    def parse_command(self):
        t = self.advance()
        kind = t.value
        poly = None
        number = None
        flags: dict = {}
        if kind == "hilbert":
            idents = (self.ideal_ref(),)
        elif kind in ("chi", "gulliksen"):
            idents = (self.ideal_ref(), self.ideal_ref())
        elif kind in ("tor", "check"):
            idents = (self.ideal_ref(), self.ideal_ref())
            flags = self.parse_flags()
        elif kind == "cartier":
            poly = self.parse_poly()
            number = self.expect_int("the integer multiple e")
            idents = (self.ideal_ref(),)
        else:  # unreachable: filtered by the caller
            raise SessionError(f"unknown command {kind!r}", t.line, t.col)
        self.expect_sym(";")
        self.commands.append(
            Command(
                kind=kind,
                idents=idents,
                poly=poly,
                number=number,
                flags=flags,
                line=t.line,
                col=t.col,
            )
        )

    # -- polynomial expressions

    def parse_poly(self) -> Poly:
        return self.parse_sum()

    def parse_sum(self) -> Poly:
        p = self.parse_term()
        while True:
            t = self.peek()
            if t.kind == "SYM" and t.value in "+-":
                self.advance()
                q = self.parse_term()
                p = p + q if t.value == "+" else p - q
            else:
                return p

    def parse_term(self) -> Poly:
        p = self.parse_factor()
        while self.at_sym("*"):
            self.advance()
            p = p * self.parse_factor()
        return p

    def parse_factor(self) -> Poly:
        if self.at_sym("-"):
            self.advance()
            return -self.parse_factor()
        base = self.parse_atom()
        while self.at_sym("^"):
            self.advance()
            e = self.expect_int("an exponent")
            base = base**e
        return base

    def parse_atom(self) -> Poly:
        t = self.advance()
        if t.kind == "INT":
            v = int(t.value)
            if self.at_sym("/") and self.toks[self.pos + 1].kind == "INT":
                self.advance()
                d = self.expect_int("a denominator")
                if d == 0:
                    raise SessionError("division by zero in a coefficient", t.line, t.col)
                return self.ambient.constant(Fraction(v, d))
            return self.ambient.constant(v)
        if t.kind == "IDENT":
            idx = self.var_index.get(t.value)
            if idx is None:
                raise SessionError(f"unknown variable {t.value!r}", t.line, t.col)
            return self.ambient.gen(idx)
        if t.kind == "SYM" and t.value == "(":
            p = self.parse_sum()
            self.expect_sym(")")
            return p
        raise SessionError(f"expected a polynomial, found {self._show(t)}", t.line, t.col)


def parse_session(text: str, field=QQ) -> Session:
    """Parse session text into a validated Session over the given field."""
    return _Parser(tokenize(text), field).parse()


def parse_polynomial(text: str, ring) -> Poly:
    """Parse a standalone polynomial against a PolyRing or GradedRing."""
    ambient = ring.ambient if isinstance(ring, GradedRing) else ring
    p = _Parser(tokenize(text), ambient.field)
    p.ambient = ambient
    p.var_index = {nm: i for i, nm in enumerate(ambient.names)}
    poly = p.parse_sum()
    t = p.peek()
    if t.kind != "EOF":
        raise SessionError(f"trailing input after polynomial: {p._show(t)}", t.line, t.col)
    return poly


_T_RING = PolyRing(("t",))


def parse_t_polynomial(text: str) -> IntPoly:
    """Parse a univariate integer polynomial in t (as printed by reports)."""
    poly = parse_polynomial(text, _T_RING)
    coeffs = [0] * (max((m[0] for m in poly.terms), default=-1) + 1)
    for (k,), c in poly.terms.items():
        if c.denominator != 1:
            raise SessionError(f"coefficient {c} is not an integer")
        coeffs[k] = int(c)
    return IntPoly(coeffs)


def parse_rational_function(text: str) -> RatFun:
    """Parse 'num / den' as printed by reports, normalizing the result."""
    p = _Parser(tokenize(text), QQ)
    p.ambient = _T_RING
    p.var_index = {"t": 0}
    num = p.parse_sum()
    if p.at_sym("/"):
        p.advance()
        den = p.parse_factor()
    else:
        den = _T_RING.one()
    t = p.peek()
    if t.kind != "EOF":
        raise SessionError(f"trailing input after rational function: {p._show(t)}", t.line, t.col)

    # fractional coefficients are fine here: scale both sides integral
    scale = 1
    for q in (num, den):
        for c in q.terms.values():
            scale = lcm(scale, Fraction(c).denominator)

    def to_int_poly(q: Poly) -> IntPoly:
        coeffs = [0] * (max((m[0] for m in q.terms), default=-1) + 1)
        for (k,), c in q.terms.items():
            coeffs[k] = int(c * scale)
        return IntPoly(coeffs)

    return ratfun_normalize(to_int_poly(num), to_int_poly(den))
