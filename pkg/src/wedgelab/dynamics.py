"""Iteration, dynatomic polynomials, wedge invariants and stable 2-set types."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .arith import divisors, mobius
from .errors import InvariantViolation
from .field import FieldCtx
from .polyring import Poly, is_irreducible
from .wedge import wedge


def iterate(f: Poly, n: int) -> Poly:
    """n-fold composition f o ... o f, with f^0 = x."""
    if n < 0:
        raise ValueError("iteration count must be non-negative")
    out = Poly.x(f.ctx)
    for _ in range(n):
        out = f.compose(out)
    return out


def phi_poly(f: Poly, n: int) -> Poly:
    """Dynatomic polynomial prod_{d | n} (f^d(x) - x)^mu(n/d), by exact division."""
    if n < 1:
        raise ValueError("period must be positive")
    x = Poly.x(f.ctx)
    num = Poly.const(f.ctx, f.ctx.one)
    den = Poly.const(f.ctx, f.ctx.one)
    it = x
    done = 0
    for d in divisors(n):
        it = _advance(f, it, d - done)
        done = d
        m = mobius(n // d)
        if m == 1:
            num = num * (it - x)
        elif m == -1:
            den = den * (it - x)
    if not den:
        raise InvariantViolation("degenerate f: f^d - x vanishes identically")
    quo, rem = divmod(num, den)
    if rem:
        raise InvariantViolation(f"inexact division computing Phi_{n}")
    return quo


def _advance(f: Poly, it: Poly, steps: int) -> Poly:
    for _ in range(steps):
        it = f.compose(it)
    return it


def is_right_invariant(f: Poly, g: Poly) -> bool:
    """f |> g == g: f permutes the roots of g."""
    return wedge(f, g).h == g


def is_left_invariant(f: Poly, g: Poly) -> bool:
    """g |> f == g: g maps the roots of f onto those of g."""
    return wedge(g, f).h == g


@dataclass(frozen=True)
class TwoSetType:
    """Type of a 2-set {f, g}: "I", "II", "III" or "none"; ``sink`` for type III."""

    tag: str
    sink: Optional[Poly] = None

    @property
    def stable(self) -> bool:
        return self.tag != "none"


def classify_2set(f: Poly, g: Poly) -> TwoSetType:
    if f == g:
        raise ValueError("a 2-set needs two distinct polynomials")
    fg = wedge(f, g).h
    gf = wedge(g, f).h
    return classify_images(f, g, fg, gf)


def classify_images(f: Poly, g: Poly, fg: Poly, gf: Poly) -> TwoSetType:
    """Pattern-match the two wedge images f |> g and g |> f."""
    if fg == g and gf == f:
        return TwoSetType("I")
    if fg == f and gf == g:
        return TwoSetType("II")
    if fg == g and gf == g:
        return TwoSetType("III", g)
    if fg == f and gf == f:
        return TwoSetType("III", f)
    return TwoSetType("none")


@dataclass(frozen=True)
class Type1Family:
    first: Poly
    second: Poly
    irreducible: bool

    def __iter__(self):
        return iter((self.first, self.second))


def type1_family(f: Poly, ctx: Optional[FieldCtx] = None) -> Type1Family:
    """{f(x^2), f(x^2) - x} (char != 2) or {f, f - x} (char 2); stable of type I when irreducible."""
    ctx = ctx or f.ctx
    x = Poly.x(ctx)
    base = f if ctx.char == 2 else f.compose(x * x)
    other = base - x
    irreducible = base.degree >= 1 and is_irreducible(base) and is_irreducible(other)
    return Type1Family(base, other, irreducible)
