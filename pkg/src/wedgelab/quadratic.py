"""Quadratic 2-sets with a common constant term and the skew map on (u, v, r).

A pair f = x^2 + b x + r, g = x^2 + c x + r is encoded by u = b - c,
v = b + c.  One self-image step is (u, v, r) -> (u v, -u^2, r u^2), where
the new pair is (f |> g, g |> f); swapping f and g only negates u.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import divisors, totient
from .errors import InvariantViolation
from .field import Fe, FieldCtx, is_square, roots_of_unity, sqrt
from .polyring import IrrPoly, Poly
from .wedge import wedge


@dataclass(frozen=True)
class SkewState:
    ctx: FieldCtx
    u: Fe
    v: Fe
    r: Fe

    def astuple(self) -> tuple[Fe, Fe, Fe]:
        return (self.u, self.v, self.r)

    def collapsing(self) -> bool:
        return self.u == 0 or self.v == 0 or self.r == 0


def pair_to_state(f: Poly, g: Poly) -> SkewState:
    ctx = f.ctx
    if f.degree != 2 or g.degree != 2 or not (f.is_monic() and g.is_monic()):
        raise ValueError("expected two monic quadratics")
    if f.coeff(0) != g.coeff(0):
        raise ValueError("constant terms differ")
    b, c = f.coeff(1), g.coeff(1)
    return SkewState(ctx, ctx.sub(b, c), ctx.add(b, c), f.coeff(0))


def state_coeffs(s: SkewState) -> tuple[Fe, Fe]:
    """Middle coefficients (b, c) = ((v + u)/2, (v - u)/2)."""
    ctx = s.ctx
    if ctx.char == 2:
        raise ValueError("(u, v) does not determine (b, c) in characteristic 2")
    half = ctx.inv(ctx.elem(2))
    return ctx.mul(ctx.add(s.v, s.u), half), ctx.mul(ctx.sub(s.v, s.u), half)


def state_to_pair(s: SkewState) -> tuple[Poly, Poly]:
    ctx = s.ctx
    b, c = state_coeffs(s)
    return Poly(ctx, (s.r, b, ctx.one)), Poly(ctx, (s.r, c, ctx.one))


def skew_step(s: SkewState) -> SkewState:
    ctx = s.ctx
    u2 = ctx.mul(s.u, s.u)
    return SkewState(ctx, ctx.mul(s.u, s.v), ctx.neg(u2), ctx.mul(s.r, u2))


def e_t(t: int) -> int:
    """1, 1, 3, 5, 11, 21, ...: (2^t + (-1)^(t+1)) / 3."""
    if t < 1:
        raise ValueError("t must be positive")
    return (2**t + (1 if t % 2 else -1)) // 3


def d_t(t: int) -> int:
    """2^t - 1 for odd t, (2^t - 1)/3 for even t."""
    return 3 * e_t(t) - 2 if t % 2 else e_t(t)


def minimal_orders(t: int) -> list[int]:
    """Divisors of d_t not dividing d_t' for proper divisors t' of t of the same parity (descending)."""
    keep = set(divisors(d_t(t)))
    for tp in divisors(t):
        if tp < t and tp % 2 == t % 2:
            keep -= set(divisors(d_t(tp)))
    return sorted(keep, reverse=True)


def skew_closed_form(s: SkewState, t: int) -> SkewState:
    """Psi^t via z_t = (u^2 v)^(e_t); agrees exactly with t applications of skew_step."""
    if t < 1:
        raise ValueError("t must be positive")
    ctx = s.ctx
    u, v, r = s.u, s.v, s.r
    z = ctx.pow(ctx.mul(ctx.mul(u, u), v), e_t(t))
    if t % 2:
        if u == 0 or v == 0:
            raise ValueError("odd closed form needs u v != 0")
        w = ctx.div(z, ctx.mul(u, v))
        return SkewState(ctx, ctx.div(z, u), ctx.neg(ctx.div(z, v)), ctx.mul(r, ctx.mul(w, w)))
    return SkewState(ctx, ctx.neg(ctx.mul(u, z)), ctx.neg(ctx.mul(v, z)), ctx.mul(r, ctx.mul(z, z)))


def pair_key(s: SkewState) -> tuple:
    """Key of the unordered pair encoded by s (u and -u give the same key)."""
    ctx = s.ctx
    u = min(s.u, ctx.neg(s.u), key=ctx.key)
    return (ctx.key(u), ctx.key(s.v), ctx.key(s.r))


def canonical_orientation(s: SkewState) -> SkewState:
    ctx = s.ctx
    return SkewState(ctx, min(s.u, ctx.neg(s.u), key=ctx.key), s.v, s.r)


def pair_period(s: SkewState, limit: int) -> int:
    """Least t >= 1 with the unordered pair back at s, or 0 if none within limit."""
    start = pair_key(s)
    cur = s
    for t in range(1, limit + 1):
        cur = skew_step(cur)
        if pair_key(cur) == start:
            return t
    return 0


@dataclass(frozen=True)
class CycleRecord:
    period: int
    pairs: tuple[tuple[Poly, Poly], ...]
    zeta: Fe
    order: int  # multiplicative order of zeta, 2d

    def unordered(self) -> list[frozenset]:
        return [frozenset(p) for p in self.pairs]


def _pair_irreducible(ctx: FieldCtx, b: Fe, c: Fe, r: Fe) -> bool:
    four_r = ctx.mul(ctx.elem(4), r)
    d1 = ctx.sub(ctx.mul(b, b), four_r)
    d2 = ctx.sub(ctx.mul(c, c), four_r)
    return d1 != 0 and d2 != 0 and not is_square(ctx, d1) and not is_square(ctx, d2)


def periodic_states(ctx: FieldCtx, t: int) -> list[tuple[SkewState, Fe, int]]:
    """Irreducible states solving the period-t equation from roots of unity of order 2d, d in D_t."""
    if not ctx.is_finite or ctx.char == 2:
        raise ValueError("periodic 2-sets are constructed over finite fields of odd characteristic")
    q = ctx.q
    half = ctx.inv(ctx.elem(2))
    found: dict[tuple, tuple[SkewState, Fe, int]] = {}
    for d in sorted(minimal_orders(t)):
        if (q - 1) % (2 * d):
            continue
        for zeta in roots_of_unity(ctx, 2 * d):
            if t % 2:
                uv = [(zeta, zeta)]  # u = +-v, v^(d_t) = -1
            else:
                sq = is_square(ctx, zeta)
                uv = []
                for v in ctx.nonzero():
                    if is_square(ctx, v) == sq:
                        uv.append((sqrt(ctx, ctx.div(zeta, v)), v))
            for u, v in uv:
                b = ctx.mul(ctx.add(v, u), half)
                c = ctx.mul(ctx.sub(v, u), half)
                for r in ctx.nonzero():
                    if _pair_irreducible(ctx, b, c, r):
                        s = canonical_orientation(SkewState(ctx, u, v, r))
                        found.setdefault(pair_key(s), (s, zeta, 2 * d))
    return list(found.values())


def construct_periodic_sets(ctx: FieldCtx, t: int, verify: bool = True) -> list[CycleRecord]:
    """All cycles of quadratic 2-sets with minimal period t (odd characteristic).

    Candidates come from roots of unity; each is re-certified by iterating
    the skew map, and (with ``verify``) each cycle by explicit wedges.
    """
    cands = periodic_states(ctx, t)
    minimal = {pair_key(s): (s, z, o) for s, z, o in cands if pair_period(s, t) == t}
    cycles = []
    done: set[tuple] = set()
    for key in sorted(minimal):
        if key in done:
            continue
        s, zeta, order = minimal[key]
        states = [s]
        for _ in range(t - 1):
            states.append(skew_step(states[-1]))
        for st in states:
            done.add(pair_key(st))
            if pair_key(st) not in minimal:
                raise InvariantViolation("cycle leaves the constructed periodic set")
        pairs = tuple(state_to_pair(st) for st in states)
        if verify:
            _verify_cycle(pairs)
        cycles.append(CycleRecord(t, pairs, zeta, order))
    return cycles


def _verify_cycle(pairs: tuple[tuple[Poly, Poly], ...]) -> None:
    t = len(pairs)
    for i, (f, g) in enumerate(pairs):
        f_next, g_next = pairs[(i + 1) % t]
        img = {wedge(f, IrrPoly(g, check=False)).h, wedge(g, IrrPoly(f, check=False)).h}
        if img != {f_next, g_next}:
            raise InvariantViolation(f"self-image of {{{f}, {g}}} is not the next pair of the cycle")


@dataclass(frozen=True)
class CountingFormulas:
    q: int
    N_I: int
    N_II: int
    N_III: int
    periodic_upper_bound: int

    def minimal_period_count(self, t: int) -> int:
        """Points (unordered pairs) from roots of unity of order 2d, d in D_t, present in F_q."""
        q = self.q
        total = 0
        for d in minimal_orders(t):
            if (q - 1) % (2 * d):
                continue
            if t % 2:
                per_root = (q - 1) // 4 if q % 4 == 1 else (q - 3) // 4
            else:
                per_root = (q - 1) * (q - 3) // 8
            total += totient(2 * d) * per_root
        return total


def counting_formulas(q: int) -> CountingFormulas:
    if q % 2 == 0:
        raise ValueError("closed-form counts need odd q")
    n1 = (q - 1) // 4 if q % 4 == 1 else (q - 3) // 4
    bound = (q - 1) ** 2 * (q - 3) // 8
    return CountingFormulas(q, n1, 0, q - 1, bound)


def two_cycle_family(ctx: FieldCtx, r: Fe, s: Fe) -> tuple[tuple[Poly, Poly], tuple[Poly, Poly]]:
    """The two-parameter 2-cycle {f0, g0} <-> {f1, g1} specialized at (r, s), s != 0."""
    one, two = ctx.one, ctx.elem(2)
    s3 = ctx.pow(s, 3)

    def quad(b: Fe, c0: Fe) -> Poly:
        return Poly(ctx, (c0, b, one))

    b0 = ctx.neg(ctx.div(ctx.add(s3, one), ctx.mul(two, s)))
    c0 = ctx.neg(ctx.div(ctx.sub(s3, one), ctx.mul(two, s)))
    s2 = ctx.mul(s, s)
    b1 = ctx.div(ctx.sub(s3, one), ctx.mul(two, s2))
    c1 = ctx.neg(ctx.div(ctx.add(s3, one), ctx.mul(two, s2)))
    r1 = ctx.div(r, s2)
    return (quad(b0, r), quad(c0, r)), (quad(b1, r1), quad(c1, r1))


def table1_families(ctx: FieldCtx, r: Fe) -> list[tuple[Poly, Poly, str]]:
    """The three parametrized quadratic stable 2-sets (f, g, type), specialized at r."""
    half = ctx.inv(ctx.elem(2))
    one = ctx.one
    q = lambda b, c0: Poly(ctx, (c0, b, one))  # noqa: E731
    three_half = ctx.mul(ctx.elem(3), half)
    return [
        (q(ctx.zero, r), q(ctx.neg(one), r), "I"),
        (q(half, r), q(ctx.neg(half), r), "III"),
        (q(ctx.neg(three_half), ctx.add(half, r)), q(ctx.neg(half), r), "III"),
    ]
