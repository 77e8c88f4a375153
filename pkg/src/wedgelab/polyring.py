"""Dense univariate polynomials over a :class:`~wedgelab.field.FieldCtx`.

Coefficients are stored ascending (``coeffs[i]`` multiplies ``x**i``) with
trailing zeros stripped.  Besides ring arithmetic this module provides
resultants and discriminants, irreducibility tests (finite fields and Q),
enumeration of monic irreducibles and the affine action
``sigma_{a,b}(f)(x) = a^(-deg f) f(a x + b)``.
"""

from __future__ import annotations

import math
import random
import re
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Iterator, Optional, Sequence, Union

import numpy as np

from .arith import divisors, is_prime, mobius, prime_factors, primes
from .field import Fe, FieldCtx, field_create

NEG_INF = float("-inf")
# Monic polynomials are sieved in memory only up to this many candidates.
SIEVE_LIMIT = 1 << 24
# Irreducibility over Q is decided only up to this degree.
MAX_RATIONAL_DEGREE = 8


def _strip(cs: list) -> tuple:
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


class Poly:
    """Immutable polynomial over a field."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: FieldCtx, coeffs: Iterable[Fe] = ()):
        cs = list(coeffs)
        if ctx.kind == "rational":
            cs = [Fraction(c) for c in cs]
        self.ctx = ctx
        self.coeffs = _strip(cs)

    # -- constructors --------------------------------------------------------

    @classmethod
    def x(cls, ctx: FieldCtx) -> "Poly":
        return Poly(ctx, (ctx.zero, ctx.one))

    @classmethod
    def const(cls, ctx: FieldCtx, c: Fe) -> "Poly":
        return Poly(ctx, (c,))

    @classmethod
    def from_ints(cls, ctx: FieldCtx, values: Sequence[Union[int, Fraction]]) -> "Poly":
        """Ascending coefficients given as integers (or rationals), mapped into ctx."""
        return Poly(ctx, [ctx.elem(v) for v in values])

    @classmethod
    def monomial(cls, ctx: FieldCtx, e: int, c: Optional[Fe] = None) -> "Poly":
        return Poly(ctx, [ctx.zero] * e + [ctx.one if c is None else c])

    # -- basic properties ----------------------------------------------------

    @property
    def degree(self):
        """Degree; the zero polynomial has degree ``-inf``."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lc(self) -> Fe:
        return self.coeffs[-1] if self.coeffs else self.ctx.zero

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.ctx.one

    def coeff(self, i: int) -> Fe:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.ctx.zero

    def monic(self) -> "Poly":
        if not self.coeffs:
            raise ZeroDivisionError("zero polynomial has no monic associate")
        if self.is_monic():
            return self
        return self.scale(self.ctx.inv(self.lc))

    shift_to_monic = monic

    def key(self):
        """Canonical order: degree, then coefficients from the constant term up."""
        k = self.ctx.key
        return (len(self.coeffs), tuple(k(c) for c in self.coeffs))

    # -- dunder plumbing -------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly):
            return self.ctx == other.ctx and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly.const(self.ctx, self.ctx.elem(other)).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __lt__(self, other: "Poly") -> bool:
        return self.key() < other.key()

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({self}, {self.ctx.spec()})"

    def __str__(self) -> str:
        return format_poly(self)

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.ctx != self.ctx:
                raise ValueError("polynomials over different fields")
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.const(self.ctx, self.ctx.elem(other))
        return NotImplemented

    # -- ring operations -------------------------------------------------------

    def __add__(self, other) -> "Poly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Poly(self.ctx, _add(self.ctx, self.coeffs, other.coeffs))

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        neg = self.ctx.neg
        return Poly(self.ctx, [neg(c) for c in self.coeffs])

    def __sub__(self, other) -> "Poly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Poly(self.ctx, _sub(self.ctx, self.coeffs, other.coeffs))

    def __rsub__(self, other) -> "Poly":
        return -(self - other)

    def __mul__(self, other) -> "Poly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Poly(self.ctx, _mul(self.ctx, self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def scale(self, c: Fe) -> "Poly":
        mul = self.ctx.mul
        return Poly(self.ctx, [mul(c, a) for a in self.coeffs])

    def __pow__(self, e: int) -> "Poly":
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.const(self.ctx, self.ctx.one)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other) -> tuple["Poly", "Poly"]:
        other = self._coerce(other)
        q, r = _divmod(self.ctx, self.coeffs, other.coeffs)
        return Poly(self.ctx, q), Poly(self.ctx, r)

    def __floordiv__(self, other) -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other) -> "Poly":
        other = self._coerce(other)
        return Poly(self.ctx, _mod(self.ctx, self.coeffs, other.coeffs))

    def __call__(self, arg):
        """Evaluate at a field element, or compose with a polynomial."""
        if isinstance(arg, Poly):
            return self.compose(arg)
        return self.eval(arg)

    def eval(self, a: Fe) -> Fe:
        add, mul = self.ctx.add, self.ctx.mul
        acc = self.ctx.zero
        for c in reversed(self.coeffs):
            acc = add(mul(acc, a), c)
        return acc

    def compose(self, g: "Poly") -> "Poly":
        """self(g(x)) by Horner's rule."""
        acc = Poly(self.ctx)
        for c in reversed(self.coeffs):
            acc = acc * g + Poly.const(self.ctx, c)
        return acc

    def derivative(self) -> "Poly":
        ctx = self.ctx
        return Poly(ctx, [ctx.mul(ctx.elem(i), c) for i, c in enumerate(self.coeffs)][1:])


class IrrPoly(Poly):
    """A monic polynomial certified irreducible, with its discriminant cached."""

    __slots__ = ("_disc",)

    def __init__(self, poly: Poly, check: bool = True):
        super().__init__(poly.ctx, poly.coeffs)
        self._disc = None
        if check:
            if not self.is_monic():
                raise ValueError(f"{poly} is not monic")
            if not is_irreducible(self):
                raise ValueError(f"{poly} is not irreducible over {poly.ctx.spec()}")
            if self.disc == 0:
                raise ValueError(f"{poly} is inseparable")

    @property
    def disc(self) -> Fe:
        if self._disc is None:
            self._disc = discriminant(self)
        return self._disc

    def __repr__(self) -> str:
        return f"IrrPoly({self}, {self.ctx.spec()})"


def as_irreducible(f: Poly) -> IrrPoly:
    return f if isinstance(f, IrrPoly) else IrrPoly(f)


# --- coefficient-tuple kernels --------------------------------------------------

def _add(ctx, a, b):
    if len(a) < len(b):
        a, b = b, a
    add = ctx.add
    out = list(a)
    for i, c in enumerate(b):
        out[i] = add(out[i], c)
    return out


def _sub(ctx, a, b):
    sub, neg = ctx.sub, ctx.neg
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        if i < len(a) and i < len(b):
            out.append(sub(a[i], b[i]))
        elif i < len(a):
            out.append(a[i])
        else:
            out.append(neg(b[i]))
    return out


def _mul(ctx, a, b):
    if not a or not b:
        return []
    out_len = len(a) + len(b) - 1
    if ctx.kind == "extension":
        add, mul = ctx.add, ctx.mul
        out = [0] * out_len
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] = add(out[i + j], mul(x, y))
        return out
    out = [0] * out_len
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    if ctx.kind == "prime":
        p = ctx.p
        return [c % p for c in out]
    return out


def _divmod(ctx, a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    db = len(b) - 1
    if len(a) - 1 < db:
        return [], list(a)
    inv = ctx.inv(b[-1])
    mul, sub = ctx.mul, ctx.sub
    r = list(a)
    q = [ctx.zero] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = r[i]
        if c == 0:
            continue
        c = mul(c, inv)
        q[i - db] = c
        for j in range(db + 1):
            r[i - db + j] = sub(r[i - db + j], mul(c, b[j]))
    return q, r[:db]


def _mod(ctx, a, b):
    if len(a) < len(b):
        return list(a)
    return _divmod(ctx, a, b)[1]


# --- gcd, resultant, discriminant ---------------------------------------------------

def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic gcd (zero if both inputs are zero)."""
    a, b = f, g
    while b:
        a, b = b, a % b
    return a.monic() if a else a


def poly_lcm(f: Poly, g: Poly) -> Poly:
    if not f or not g:
        return Poly(f.ctx)
    return ((f * g) // poly_gcd(f, g)).monic()


def resultant(f: Poly, g: Poly) -> Fe:
    """Res(f, g) = lc(f)^deg g * prod_{f(a)=0} g(a), by the Euclidean remainder chain."""
    if not f or not g:
        raise ValueError("resultant of a zero polynomial")
    ctx = f.ctx
    a, b = f.coeffs, g.coeffs
    acc = ctx.one
    while True:
        da, db = len(a) - 1, len(b) - 1
        if db == 0:
            return ctx.mul(acc, ctx.pow(b[0], da))
        if da == 0:
            return ctx.mul(acc, ctx.pow(a[0], db))
        r = _strip(list(_mod(ctx, a, b)))
        if not r:
            return ctx.zero
        dr = len(r) - 1
        # Res(a, b) = (-1)^(da db) lc(b)^(da - dr) Res(b, r)
        factor = ctx.pow(b[-1], da - dr)
        if (da * db) % 2:
            factor = ctx.neg(factor)
        acc = ctx.mul(acc, factor)
        a, b = b, r


def discriminant(f: Poly) -> Fe:
    """prod_{i<j} (a_i - a_j)^2 for monic f, as (-1)^(n(n-1)/2) Res(f, f')."""
    n = f.degree
    if n < 1:
        raise ValueError("discriminant of a constant")
    f = f.monic()
    df = f.derivative()
    if not df:
        return f.ctx.zero
    res = resultant(f, df)
    return f.ctx.neg(res) if (n * (n - 1) // 2) % 2 else res


# --- quotient rings -------------------------------------------------------------

class QuotientRing:
    """Arithmetic in K[x]/(m) on reduced coefficient tuples (a field when m is irreducible)."""

    def __init__(self, modulus: Poly):
        if modulus.degree < 1:
            raise ValueError("modulus must be non-constant")
        self.ctx = modulus.ctx
        self.modulus = modulus.monic()
        self._m = self.modulus.coeffs

    def reduce(self, f: Poly) -> Poly:
        return Poly(self.ctx, _mod(self.ctx, f.coeffs, self._m))

    def mul(self, a: Poly, b: Poly) -> Poly:
        ctx = self.ctx
        return Poly(ctx, _mod(ctx, _mul(ctx, a.coeffs, b.coeffs), self._m))

    def pow(self, a: Poly, e: int) -> Poly:
        result = Poly.const(self.ctx, self.ctx.one)
        base = self.reduce(a)
        while e:
            if e & 1:
                result = self.mul(result, base)
            e >>= 1
            if e:
                base = self.mul(base, base)
        return result

    def eval(self, f: Poly, a: Poly) -> Poly:
        """f(a) in the quotient ring."""
        acc = Poly(self.ctx)
        for c in reversed(f.coeffs):
            acc = self.mul(acc, a) + Poly.const(self.ctx, c)
        return acc

    def frobenius(self, a: Poly, times: int = 1) -> Poly:
        for _ in range(times):
            a = self.pow(a, self.ctx.q)
        return a


# --- irreducibility ---------------------------------------------------------------

def is_irreducible(f: Poly) -> bool:
    """Irreducibility over the field of f (finite fields: Rabin; Q: certificate up to degree 8)."""
    n = f.degree
    if n < 1:
        raise ValueError("irreducibility of a constant is undefined")
    if n == 1:
        return True
    if f.ctx.kind == "rational":
        return _is_irreducible_rational(f)
    ring = QuotientRing(f)
    x = Poly.x(f.ctx)
    xn = ring.frobenius(x, n)
    if xn != ring.reduce(x):
        return False
    for ell in prime_factors(n):
        h = ring.frobenius(x, n // ell) - x
        if poly_gcd(f, h).degree != 0:
            return False
    return True


def distinct_degree_factorization(f: Poly) -> list[tuple[int, Poly]]:
    """[(d, product of the degree-d irreducible factors)] for monic squarefree f over F_q."""
    ctx = f.ctx
    ctx._need_finite()
    out = []
    rest = f.monic()
    x = Poly.x(ctx)
    h = x
    d = 0
    while rest.degree >= 2 * (d + 1):
        d += 1
        ring = QuotientRing(rest)
        h = ring.pow(h, ctx.q)
        g = poly_gcd(rest, h - x)
        if g.degree > 0:
            out.append((d, g))
            rest = rest // g
            h = h % rest if rest.degree > 0 else h
    if rest.degree > 0:
        out.append((rest.degree, rest))
    return out


def equal_degree_factorization(f: Poly, d: int, rng: Optional[random.Random] = None) -> list[Poly]:
    """Split monic f, a product of distinct irreducibles of degree d, over F_q with q odd."""
    ctx = f.ctx
    if ctx.p == 2:
        raise ValueError("equal-degree splitting implemented for odd characteristic only")
    rng = rng or random.Random(0)
    if f.degree == d:
        return [f]
    ring = QuotientRing(f)
    e = (ctx.q**d - 1) // 2
    while True:
        a = Poly(ctx, [ctx.random(rng) for _ in range(f.degree)])
        if a.degree < 1:
            continue
        g = poly_gcd(f, a)
        if 0 < g.degree < f.degree:
            break
        g = poly_gcd(f, ring.pow(a, e) - 1)
        if 0 < g.degree < f.degree:
            break
    return equal_degree_factorization(g, d, rng) + equal_degree_factorization(f // g, d, rng)


def factor_squarefree(f: Poly, rng: Optional[random.Random] = None) -> list[Poly]:
    """Monic irreducible factors of a squarefree polynomial over a finite field of odd order."""
    out = []
    for d, g in distinct_degree_factorization(f):
        out.extend(equal_degree_factorization(g, d, rng))
    return sorted(out, key=Poly.key)


def _integral_monic(f: Poly) -> list[int]:
    """Monic integer polynomial with a root D*a for each root a of monic rational f."""
    f = f.monic()
    n = f.degree
    den = 1
    for c in f.coeffs:
        den = math.lcm(den, c.denominator)
    return [int(c * den ** (n - i)) for i, c in enumerate(f.coeffs)]


def _int_divides(h: list[int], g: list[int]) -> bool:
    """Exact division test for monic integer polynomials."""
    r = list(g)
    dh = len(h) - 1
    for i in range(len(r) - 1, dh - 1, -1):
        c = r[i]
        if c:
            for j in range(dh + 1):
                r[i - dh + j] -= c * h[j]
    return not any(r[:dh])


def _is_irreducible_rational(f: Poly) -> bool:
    n = f.degree
    if n > MAX_RATIONAL_DEGREE:
        raise ValueError(f"irreducibility over Q is supported up to degree {MAX_RATIONAL_DEGREE}")
    g = _integral_monic(f)
    if g[0] == 0:
        return False
    # rational roots of a monic integer polynomial are divisors of the constant term
    c0 = abs(g[0])
    for d in divisors(c0):
        for r in (d, -d):
            if sum(c * r**i for i, c in enumerate(g)) == 0:
                return False
    if n <= 3:
        return True
    disc = discriminant(Poly(f.ctx, g))
    if disc == 0:
        return False
    disc_num = abs(disc.numerator)
    # degree patterns modulo good primes restrict possible factor degrees
    possible = set(range(1, n))
    good = 0
    for p in primes(3):
        if disc_num % p == 0:
            continue
        fp = Poly.from_ints(field_create(p), g)
        sums = {0}
        for d, part in distinct_degree_factorization(fp):
            for _ in range(part.degree // d):
                sums |= {s + d for s in sums}
        possible &= sums
        if not possible & set(range(1, n)):
            return True
        good += 1
        if good >= 12:
            break
    # bounded search: candidate factors are lifts of products of factors mod a large prime
    norm = math.isqrt(sum(c * c for c in g)) + 1
    bound = max(math.comb(d, d // 2) for d in range(1, n // 2 + 1)) * norm
    big = next(p for p in primes(2 * bound + 3) if disc_num % p)
    fp = Poly.from_ints(field_create(big), g)
    factors = factor_squarefree(fp)
    half = big // 2
    for size in range(1, len(factors)):
        for combo in combinations(factors, size):
            deg = sum(h.degree for h in combo)
            if deg > n // 2 or deg not in possible:
                continue
            prod = Poly.const(fp.ctx, 1)
            for h in combo:
                prod = prod * h
            lift = [c - big if c > half else c for c in prod.coeffs]
            if _int_divides(lift, g):
                return False
    return True


# --- enumeration ----------------------------------------------------------------------

def count_irreducibles(q: int, n: int) -> int:
    """Number of monic irreducibles of degree n over F_q (Moebius sum)."""
    if n < 1:
        raise ValueError("degree must be positive")
    total = sum(mobius(d) * q ** (n // d) for d in divisors(n))
    return total // n


def _decode_monic(ctx: FieldCtx, idx: np.ndarray, n: int) -> np.ndarray:
    """Coefficient rows (ascending, with the monic leading term) of indexed monic polys."""
    q = ctx.q
    out = np.empty((len(idx), n + 1), dtype=np.int64)
    rest = idx.astype(np.int64)
    for i in range(n - 1, -1, -1):
        out[:, i] = rest % q
        rest = rest // q
    out[:, n] = ctx.one
    return out


def _np_tables(ctx: FieldCtx):
    cached = getattr(ctx, "_np_cache", None)
    if cached is None:
        q = ctx.q
        els = np.arange(q)
        add = np.array([[ctx.add(a, b) for b in range(q)] for a in range(q)], dtype=np.int64)
        mul = np.array([[ctx.mul(a, b) for b in range(q)] for a in range(q)], dtype=np.int64)
        cached = (add, mul, els)
        ctx._np_cache = cached
    return cached


def _irreducible_indices(ctx: FieldCtx, n: int) -> np.ndarray:
    q = ctx.q
    if n == 1:
        return np.arange(q, dtype=np.int64)
    total = q**n
    composite = np.zeros(total, dtype=bool)
    powers = np.array([q ** (n - 1 - i) for i in range(n)], dtype=np.int64)
    for d in range(1, n // 2 + 1):
        G = _decode_monic(ctx, _irreducible_indices(ctx, d), d)
        H = _decode_monic(ctx, np.arange(q ** (n - d), dtype=np.int64), n - d)
        for g in G:
            P = _np_convolve(ctx, g, H)
            composite[P[:, :n] @ powers] = True
    return np.flatnonzero(~composite)


def _np_convolve(ctx: FieldCtx, g: np.ndarray, H: np.ndarray) -> np.ndarray:
    rows, width = H.shape
    P = np.zeros((rows, width + len(g) - 1), dtype=np.int64)
    if ctx.kind == "prime":
        for i, gi in enumerate(g):
            if gi:
                P[:, i : i + width] += gi * H
        return P % ctx.p
    add, mul, _ = _np_tables(ctx)
    for i, gi in enumerate(g):
        if gi:
            P[:, i : i + width] = add[P[:, i : i + width], mul[gi][H]]
    return P


def enumerate_irreducibles(ctx: FieldCtx, n: int) -> Iterator[IrrPoly]:
    """All monic irreducibles of degree n over a finite field, in canonical order."""
    if ctx.kind == "rational":
        raise ValueError("irreducibles over Q cannot be enumerated")
    if n < 1:
        raise ValueError("degree must be positive")
    q = ctx.q
    if q**n <= SIEVE_LIMIT:
        idx = _irreducible_indices(ctx, n)
        rows = _decode_monic(ctx, idx, n)
        for row in rows.tolist():
            yield IrrPoly(Poly(ctx, row), check=False)
        return
    for i in range(q**n):  # pragma: no cover - beyond desk scale
        row = _decode_monic(ctx, np.array([i]), n)[0].tolist()
        f = Poly(ctx, row)
        if is_irreducible(f):
            yield IrrPoly(f, check=False)


def monic_polys(ctx: FieldCtx, n: int) -> Iterator[Poly]:
    """All monic polynomials of degree n, in canonical order."""
    ctx._need_finite()
    q = ctx.q
    for i in range(q**n):
        row = []
        rest = i
        for _ in range(n):
            row.append(rest % q)
            rest //= q
        row.reverse()
        yield Poly(ctx, row + [ctx.one])


# --- the affine group action ---------------------------------------------------------

def sigma_apply(a: Fe, b: Fe, f: Poly) -> Poly:
    """sigma_{a,b}(f)(x) = a^(-deg f) f(a x + b); irreducible inputs give IrrPoly outputs."""
    ctx = f.ctx
    if a == 0:
        raise ValueError("sigma_{a,b} needs a != 0")
    n = f.degree
    lin = Poly(ctx, (b, a))
    g = f.compose(lin).scale(ctx.pow(ctx.inv(a), n))
    return IrrPoly(g, check=False) if isinstance(f, IrrPoly) else g


def shift(f: Poly, b: Fe) -> Poly:
    """f_b^+ = sigma_{1,b}(f), i.e. f(x + b); roots move by -b."""
    return sigma_apply(f.ctx.one, b, f)


# --- text syntax -----------------------------------------------------------------------

def format_poly(f: Poly) -> str:
    """Term syntax, highest degree first, e.g. ``x^2+2*x+3`` or ``(t+1)*x^2+t``."""
    ctx = f.ctx
    if not f.coeffs:
        return "0"
    parts = []
    for e in range(len(f.coeffs) - 1, -1, -1):
        c = f.coeffs[e]
        if c == 0:
            continue
        negative = ctx.kind == "rational" and c < 0
        mag = -c if negative else c
        cs = ctx.fmt(mag)
        mono = "" if e == 0 else ("x" if e == 1 else f"x^{e}")
        if mono and mag == ctx.one:
            term = mono
        elif mono:
            if ctx.kind == "extension" and ("+" in cs or "*" in cs or "t" in cs and cs != "t"):
                cs = f"({cs})"
            term = f"{cs}*{mono}"
        else:
            term = cs if ctx.kind != "extension" or "+" not in cs else f"({cs})"
        if not parts:
            parts.append(("-" if negative else "") + term)
        else:
            parts.append(("-" if negative else "+") + term)
    return "".join(parts)


def _split_terms(s: str) -> list[str]:
    terms, depth, cur = [], 0, ""
    for i, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch in "+-" and depth == 0 and cur and cur[-1] not in "*/^":
            terms.append(cur)
            cur = ch
        else:
            cur += ch
    if cur:
        terms.append(cur)
    return terms


def parse_poly(ctx: FieldCtx, text: str) -> Poly:
    """Parse term syntax (``2*x^2+x+1``) or an ascending comma list (``1,1,2``)."""
    s = text.strip().replace(" ", "")
    if not s:
        raise ValueError("empty polynomial")
    if "," in s or ("x" not in s and re.fullmatch(r"[-+]?[\d/]+", s) is None):
        return Poly(ctx, [ctx.parse(c) for c in s.split(",")])
    coeffs: dict[int, Fe] = {}
    for term in _split_terms(s):
        sign = -1 if term.startswith("-") else 1
        body = term.lstrip("+-")
        if "x" in body:
            head, _, tail = body.partition("x")
            if tail.startswith("^"):
                e = int(tail[1:])
            elif tail == "":
                e = 1
            else:
                raise ValueError(f"bad term {term!r}")
            head = head.rstrip("*")
            c = ctx.parse(head) if head else ctx.one
        else:
            e, c = 0, ctx.parse(body)
        if sign < 0:
            c = ctx.neg(c)
        coeffs[e] = ctx.add(coeffs.get(e, ctx.zero), c)
    top = max(coeffs)
    return Poly(ctx, [coeffs.get(i, ctx.zero) for i in range(top + 1)])
