"""The wedge operator ``f |> g``: minimal polynomial of f(a) for a root a of g.

The main route never touches roots.  Multiplication by f(x) on K[x]/(g)
is a linear map whose matrix ``M`` has the minimal polynomial ``h = f |> g``
and characteristic polynomial ``h^r``.  A Frobenius-orbit computation inside
F_q[x]/(g) gives an independent check over finite fields.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvariantViolation
from .field import Fe, FieldCtx
from .polyring import IrrPoly, Poly, QuotientRing, as_irreducible, is_irreducible, poly_lcm

KMatrix = list[list[Fe]]


@dataclass(frozen=True)
class WedgeResult:
    h: IrrPoly
    r: int  # r * deg(h) == deg(g)

    def __iter__(self):
        return iter((self.h, self.r))


def mult_matrix(f: Poly, g: Poly) -> KMatrix:
    """Matrix of multiplication by f on K[x]/(g) in the basis 1, x, ..., x^(n-1).

    Column k holds the coefficients of f(x) x^k mod g(x).
    """
    ctx = g.ctx
    n = g.degree
    if n < 1:
        raise ValueError("g must be non-constant")
    ring = QuotientRing(g)
    col = ring.reduce(f)
    x = Poly.x(ctx)
    M = [[ctx.zero] * n for _ in range(n)]
    for k in range(n):
        for i in range(n):
            M[i][k] = col.coeff(i)
        if k + 1 < n:
            col = ring.mul(col, x)
    return M


def _matvec(ctx: FieldCtx, M: KMatrix, v: list[Fe]) -> list[Fe]:
    add, mul = ctx.add, ctx.mul
    out = []
    for row in M:
        acc = ctx.zero
        for a, b in zip(row, v):
            if a != 0 and b != 0:
                acc = add(acc, mul(a, b))
        out.append(acc)
    return out


def _krylov_minpoly(ctx: FieldCtx, M: KMatrix, v: list[Fe]) -> Poly:
    """Monic generator of {p : p(M) v = 0} by Gaussian elimination on v, Mv, M^2 v, ..."""
    n = len(M)
    basis: list[tuple[int, list[Fe], list[Fe]]] = []  # (pivot, reduced vector, poly coeffs)
    w = list(v)
    i = 0
    while True:
        comb = [ctx.zero] * i + [ctx.one]
        red = list(w)
        for piv, vec, pc in basis:
            c = red[piv]
            if c != 0:
                c = ctx.div(c, vec[piv])
                red = [ctx.sub(a, ctx.mul(c, b)) for a, b in zip(red, vec)]
                comb = [
                    ctx.sub(comb[j] if j < len(comb) else ctx.zero, ctx.mul(c, pc[j]) if j < len(pc) else ctx.zero)
                    for j in range(max(len(comb), len(pc)))
                ]
        pivot = next((j for j, a in enumerate(red) if a != 0), None)
        if pivot is None:
            return Poly(ctx, comb)
        basis.append((pivot, red, comb))
        if i >= n:  # pragma: no cover - Cayley-Hamilton forbids this
            raise InvariantViolation("Krylov chain longer than the dimension")
        w = _matvec(ctx, M, w)
        i += 1


def min_poly_matrix(M: KMatrix, ctx: FieldCtx) -> Poly:
    """Minimal polynomial of a square matrix: lcm of the Krylov minimal polynomials of e_1..e_n."""
    n = len(M)
    if any(len(row) != n for row in M):
        raise ValueError("matrix must be square")
    result = Poly.const(ctx, ctx.one)
    for j in range(n):
        e = [ctx.zero] * n
        e[j] = ctx.one
        result = poly_lcm(result, _krylov_minpoly(ctx, M, e))
    return result


def wedge(f: Poly, g: Poly, check: bool = True) -> WedgeResult:
    """h = f |> g together with r = deg(g) / deg(h).

    g must be monic irreducible; a plain Poly is certified first.  With
    ``check`` the result is re-certified irreducible, and a failure raises
    :class:`InvariantViolation`.
    """
    if f.ctx != g.ctx:
        raise ValueError("f and g live over different fields")
    g = as_irreducible(g)
    ctx = g.ctx
    n = g.degree
    if n == 1:
        a = ctx.neg(g.coeffs[0])
        h = Poly(ctx, (ctx.neg(f.eval(a)), ctx.one))
        return WedgeResult(IrrPoly(h, check=False), 1)
    M = mult_matrix(f, g)
    # K[x]/(g) is a field, so every nonzero vector has the same annihilator as M;
    # e_1 = 1 gives the Krylov chain 1, beta, beta^2, ... with beta = f(alpha).
    e1 = [ctx.one] + [ctx.zero] * (n - 1)
    h = _krylov_minpoly(ctx, M, e1)
    d = h.degree
    if n % d:
        raise InvariantViolation(f"deg({h}) does not divide deg({g})")
    if check and not is_irreducible(h):
        raise InvariantViolation(f"wedge produced reducible {h}")
    return WedgeResult(IrrPoly(h, check=False), n // d)


def wedge_poly(f: Poly, g: Poly) -> IrrPoly:
    return wedge(f, g).h


def wedge_oracle(f: Poly, g: Poly) -> Poly:
    """f |> g via the Frobenius orbit of f(alpha) inside F_q[x]/(g)."""
    ctx = g.ctx
    if ctx.kind == "rational":
        raise ValueError("the Frobenius oracle needs a finite field")
    ring = QuotientRing(g)
    beta = ring.reduce(f)
    conj = [beta]
    cur = ring.pow(beta, ctx.q)
    while cur != beta:
        conj.append(cur)
        cur = ring.pow(cur, ctx.q)
    # prod (y - c) with coefficients in the quotient ring
    coeffs = [Poly.const(ctx, ctx.one)]
    for c in conj:
        shifted = [Poly(ctx)] + coeffs
        for i in range(len(coeffs)):
            shifted[i] = shifted[i] - ring.mul(c, coeffs[i])
        coeffs = shifted
    out = []
    for c in coeffs:
        if c.degree > 0:
            raise InvariantViolation("conjugate product has non-constant coefficients")
        out.append(c.coeff(0))
    return Poly(ctx, out)
