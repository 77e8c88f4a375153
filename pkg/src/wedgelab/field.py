"""Exact arithmetic in F_p, F_{p^k} and Q behind one small interface.

Elements are plain Python values:

* prime fields: ``int`` residues in ``[0, p)``;
* extension fields: ``int`` codes in ``[0, q)``.  The code of
  ``c_0 + c_1 t + ... + c_{k-1} t^{k-1}`` is ``sum(c_i * p**(k-1-i))``, so
  integer order on codes is the canonical element order (coefficient
  vectors compared with the constant term most significant);
* rationals: ``fractions.Fraction``.

All arithmetic goes through the :class:`FieldCtx` methods.
"""

from __future__ import annotations

import random as _random
import re
from fractions import Fraction
from math import gcd, isqrt
from typing import Iterator, Optional, Sequence, Union

from .arith import divisors, factorize, is_prime, prime_factors

Fe = Union[int, Fraction]

# Largest order for which extension fields are built (log/exp tables).
MAX_EXTENSION_ORDER = 1 << 16
# Addition tables are materialized only below this order.
_ADD_TABLE_LIMIT = 729
# sqrt switches from exhaustive search to Tonelli-Shanks above this order.
SQRT_SEARCH_LIMIT = 1024


# --- tiny F_p[t] helpers used to build extension fields -------------------

def _fp_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _fp_mod(a: list[int], m: list[int], p: int) -> list[int]:
    a = a[:]
    dm = len(m) - 1
    inv = pow(m[-1], p - 2, p)
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i] * inv % p
        if c:
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - c * m[j]) % p
    return _fp_trim(a[:dm])


def _fp_mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _fp_trim(out)


def _fp_powmod(a: list[int], e: int, m: list[int], p: int) -> list[int]:
    result = [1]
    base = _fp_mod(a, m, p)
    while e:
        if e & 1:
            result = _fp_mod(_fp_mul(result, base, p), m, p)
        base = _fp_mod(_fp_mul(base, base, p), m, p)
        e >>= 1
    return result


def _fp_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _fp_trim(a[:]), _fp_trim(b[:])
    while b:
        a, b = b, _fp_mod(a, b, p)
    return a


def _fp_sub(a: list[int], b: list[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)]
    return _fp_trim(out)


def _fp_is_irreducible(f: list[int], p: int) -> bool:
    """Rabin's test for a monic polynomial over F_p (ascending coefficients)."""
    n = len(f) - 1
    if n < 1:
        return False
    x = [0, 1]

    def frob(times: int) -> list[int]:
        r = x
        for _ in range(times):
            r = _fp_powmod(r, p, f, p)
        return r

    if _fp_sub(frob(n), x, p) != []:
        return False
    for ell in prime_factors(n):
        g = _fp_gcd(f, _fp_sub(frob(n // ell), x, p), p)
        if len(g) != 1:
            return False
    return True


def least_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Least monic irreducible of degree k over F_p (constant term most significant)."""
    for idx in range(p**k):
        low = []
        rest = idx
        for _ in range(k):
            low.append(rest % p)
            rest //= p
        # idx enumerates with the constant term most significant
        low.reverse()
        f = low + [1]
        if _fp_is_irreducible(f, p):
            return tuple(f)
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


class FieldCtx:
    """A field: F_p (``kind='prime'``), F_{p^k} (``'extension'``) or Q (``'rational'``)."""

    def __init__(self, kind: str, p: int = 0, k: int = 1):
        self.kind = kind
        self.p = p
        self.k = k
        self.modulus: Optional[tuple[int, ...]] = None
        if kind == "rational":
            self.q = None
            self.zero, self.one = Fraction(0), Fraction(1)
            self.add = lambda a, b: a + b
            self.sub = lambda a, b: a - b
            self.neg = lambda a: -a
            self.mul = lambda a, b: a * b
        elif kind == "prime":
            self.q = p
            self.zero, self.one = 0, 1
            self.add = lambda a, b: (a + b) % p
            self.sub = lambda a, b: (a - b) % p
            self.neg = lambda a: -a % p
            self.mul = lambda a, b: a * b % p
        elif kind == "extension":
            self._build_extension()
        else:
            raise ValueError(f"unknown field kind {kind!r}")

    # -- construction ------------------------------------------------------

    def _build_extension(self) -> None:
        p, k = self.p, self.k
        q = p**k
        if q > MAX_EXTENSION_ORDER:
            raise ValueError(f"extension field of order {q} exceeds {MAX_EXTENSION_ORDER}")
        self.q = q
        self.modulus = least_irreducible(p, k)
        self.zero, self.one = 0, p ** (k - 1)
        weights = [p ** (k - 1 - i) for i in range(k)]
        self._weights = weights
        mod = list(self.modulus)

        def enc(vec: Sequence[int]) -> int:
            return sum(c * w for c, w in zip(vec, weights))

        # exp/log tables from the least primitive element
        exp = log = None
        for cand in range(1, q):
            vec = self.to_vector(cand)
            powers = [0] * (q - 1)
            cur = [1]
            seen_one = False
            for i in range(q - 1):
                code = enc(cur + [0] * (k - len(cur)))
                if i > 0 and code == self.one:
                    seen_one = True
                    break
                powers[i] = code
                cur = _fp_mod(_fp_mul(cur, _fp_trim(list(vec)), p), mod, p)
            if not seen_one:
                exp = powers
                log = [0] * q
                for i, c in enumerate(powers):
                    log[c] = i
                self._primitive = cand
                break
        assert exp is not None
        self._exp, self._log = exp, log
        qm1 = q - 1

        def mul(a: int, b: int) -> int:
            if a == 0 or b == 0:
                return 0
            return exp[(log[a] + log[b]) % qm1]

        if p == 2:
            def add(a: int, b: int) -> int:
                return a ^ b
            sub = add

            def neg(a: int) -> int:
                return a
        else:
            def add_slow(a: int, b: int) -> int:
                out = 0
                for w in weights:
                    out += ((a // w + b // w) % p) * w
                    a %= w
                    b %= w
                return out

            def neg_slow(a: int) -> int:
                out = 0
                for w in weights:
                    out += (-(a // w) % p) * w
                    a %= w
                return out

            negs = [neg_slow(a) for a in range(q)]
            if q <= _ADD_TABLE_LIMIT:
                table = [add_slow(a, b) for a in range(q) for b in range(q)]

                def add(a: int, b: int) -> int:
                    return table[a * q + b]
            else:
                add = add_slow

            def neg(a: int) -> int:
                return negs[a]

            def sub(a: int, b: int) -> int:
                return add(a, negs[b])

        self.add, self.sub, self.neg, self.mul = add, sub, neg, mul

    # -- identity ----------------------------------------------------------

    def _ident(self):
        return (self.kind, self.p, self.k)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FieldCtx) and self._ident() == other._ident()

    def __hash__(self) -> int:
        return hash(self._ident())

    def __repr__(self) -> str:
        return f"FieldCtx({self.spec()!r})"

    def spec(self) -> str:
        if self.kind == "rational":
            return "Q"
        return str(self.p) if self.k == 1 else f"{self.p}^{self.k}"

    @property
    def is_finite(self) -> bool:
        return self.kind != "rational"

    @property
    def char(self) -> int:
        return self.p

    # -- elements ----------------------------------------------------------

    def elem(self, n: Union[int, Fraction]) -> Fe:
        """Image of an integer (or, over Q, a rational) in the field."""
        if self.kind == "rational":
            return Fraction(n)
        if isinstance(n, Fraction):
            return self.div(self.elem(n.numerator), self.elem(n.denominator))
        if self.kind == "prime":
            return n % self.p
        return (n % self.p) * self.one

    def elements(self) -> Iterator[Fe]:
        """All elements in canonical order (finite fields only)."""
        self._need_finite()
        return iter(range(self.q))

    def nonzero(self) -> Iterator[Fe]:
        self._need_finite()
        return iter(range(1, self.q))

    def key(self, a: Fe):
        """Sort key realizing the canonical element order."""
        if self.kind == "rational":
            return (a.denominator, a.numerator)
        return a

    def to_vector(self, a: int) -> tuple[int, ...]:
        """Coefficient vector (c_0, ..., c_{k-1}) of an element of F_{p^k}."""
        if self.kind == "rational":
            raise ValueError("rationals have no coefficient vector")
        if self.k == 1:
            return (a,)
        out = []
        for w in self._weights:
            out.append(a // w)
            a %= w
        return tuple(out)

    def from_vector(self, vec: Sequence[int]) -> int:
        if self.k == 1:
            return vec[0] % self.p
        padded = list(vec) + [0] * (self.k - len(vec))
        return sum((c % self.p) * w for c, w in zip(padded, self._weights))

    def random(self, rng: _random.Random, nonzero: bool = False) -> Fe:
        if self.kind == "rational":
            while True:
                x = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
                if x or not nonzero:
                    return x
        return rng.randrange(1 if nonzero else 0, self.q)

    # -- arithmetic ----------------------------------------------------------

    def inv(self, a: Fe) -> Fe:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.kind == "rational":
            return 1 / a
        if self.kind == "prime":
            return pow(a, -1, self.p)
        return self._exp[-self._log[a] % (self.q - 1)]

    def div(self, a: Fe, b: Fe) -> Fe:
        return self.mul(a, self.inv(b))

    def pow(self, a: Fe, e: int) -> Fe:
        if e < 0:
            a, e = self.inv(a), -e
        if self.kind == "prime":
            return pow(a, e, self.p)
        if self.kind == "rational":
            return a**e
        if a == 0:
            return self.one if e == 0 else 0
        return self._exp[self._log[a] * e % (self.q - 1)]

    def eq(self, a: Fe, b: Fe) -> bool:
        return a == b

    def _need_finite(self) -> None:
        if self.kind == "rational":
            raise ValueError("operation requires a finite field")

    # -- text --------------------------------------------------------------

    def fmt(self, a: Fe) -> str:
        if self.kind != "extension":
            return str(a)
        terms = []
        for i, c in reversed(list(enumerate(self.to_vector(a)))):
            if not c:
                continue
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            if not mono:
                terms.append(str(c))
            else:
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return "+".join(terms) if terms else "0"

    def parse(self, text: str) -> Fe:
        """Parse an element: integer, fraction (Q) or polynomial in ``t``."""
        s = text.strip().replace(" ", "")
        if s.startswith("(") and s.endswith(")"):
            s = s[1:-1]
        if self.kind == "rational":
            return Fraction(s)
        if "t" not in s:
            return self.elem(int(s))
        if self.kind != "extension":
            raise ValueError(f"'t' is meaningless in {self.spec()}")
        vec = [0] * self.k
        for sign, body in re.findall(r"([+-]?)([^+-]+)", s):
            m = re.fullmatch(r"(?:(\d+)\*?)?t(?:\^(\d+))?|(\d+)", body)
            if not m:
                raise ValueError(f"bad field element {text!r}")
            if m.group(3) is not None:
                c, e = int(m.group(3)), 0
            else:
                c = int(m.group(1)) if m.group(1) else 1
                e = int(m.group(2)) if m.group(2) else 1
            c = -c if sign == "-" else c
            # reduce t^e by the modulus if needed
            poly = [0] * e + [c % self.p]
            poly = _fp_mod(_fp_trim(poly), list(self.modulus), self.p)
            for i, ci in enumerate(poly):
                vec[i] = (vec[i] + ci) % self.p
        return self.from_vector(vec)


def field_create(p: int, k: int = 1) -> FieldCtx:
    """F_p for k == 1, otherwise F_{p^k} with the least irreducible modulus."""
    if not isinstance(p, int) or not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if k < 1:
        raise ValueError("extension degree must be >= 1")
    return FieldCtx("prime", p) if k == 1 else FieldCtx("extension", p, k)


def rationals() -> FieldCtx:
    return FieldCtx("rational")


def field_from_order(q: int) -> FieldCtx:
    fac = factorize(q) if q > 1 else ()
    if len(fac) != 1:
        raise ValueError(f"{q} is not a prime power")
    return field_create(*fac[0])


def parse_field(spec: str) -> FieldCtx:
    """Field from a CLI string: ``"p"``, ``"p^k"`` or ``"Q"``."""
    s = spec.strip()
    if s in ("Q", "q", "QQ"):
        return rationals()
    m = re.fullmatch(r"(\d+)(?:\^(\d+))?", s)
    if not m:
        raise ValueError(f"bad field spec {spec!r}")
    p = int(m.group(1))
    k = int(m.group(2)) if m.group(2) else 1
    if k == 1 and not is_prime(p):
        # allow a prime power written out, e.g. "9"
        return field_from_order(p)
    return field_create(p, k)


# --- quadratic characters, roots, orders ------------------------------------

def is_square(ctx: FieldCtx, a: Fe) -> bool:
    if a == 0:
        return True
    if ctx.kind == "rational":
        return a > 0 and isqrt(a.numerator) ** 2 == a.numerator and isqrt(a.denominator) ** 2 == a.denominator
    if ctx.p == 2:
        return True  # Frobenius is bijective
    return ctx.pow(a, (ctx.q - 1) // 2) == ctx.one


def sqrt(ctx: FieldCtx, a: Fe) -> Optional[Fe]:
    """A square root of a, or None.  Of the two roots the smaller encoding is returned."""
    if a == 0:
        return ctx.zero
    if ctx.kind == "rational":
        if not is_square(ctx, a):
            return None
        return Fraction(isqrt(a.numerator), isqrt(a.denominator))
    if ctx.p == 2:
        return ctx.pow(a, ctx.q // 2)
    if not is_square(ctx, a):
        return None
    if ctx.q <= SQRT_SEARCH_LIMIT:
        for s in ctx.elements():
            if ctx.mul(s, s) == a:
                return s
        raise AssertionError("square without root")  # pragma: no cover
    s = _tonelli_shanks(ctx, a)
    return min(s, ctx.neg(s), key=ctx.key)


def _tonelli_shanks(ctx: FieldCtx, a: Fe) -> Fe:
    q = ctx.q
    s, e = q - 1, 0
    while s % 2 == 0:
        s //= 2
        e += 1
    z = next(c for c in ctx.nonzero() if not is_square(ctx, c))
    m = e
    c = ctx.pow(z, s)
    t = ctx.pow(a, s)
    r = ctx.pow(a, (s + 1) // 2)
    while t != ctx.one:
        i, t2 = 0, t
        while t2 != ctx.one:
            t2 = ctx.mul(t2, t2)
            i += 1
        b = ctx.pow(c, 1 << (m - i - 1))
        m = i
        c = ctx.mul(b, b)
        t = ctx.mul(t, c)
        r = ctx.mul(r, b)
    return r


def element_order(ctx: FieldCtx, a: Fe) -> int:
    """Multiplicative order of a nonzero element of a finite field."""
    ctx._need_finite()
    if a == 0:
        raise ValueError("zero has no multiplicative order")
    order = ctx.q - 1
    for ell in prime_factors(order):
        while order % ell == 0 and ctx.pow(a, order // ell) == ctx.one:
            order //= ell
    return order


def primitive_element(ctx: FieldCtx) -> Fe:
    """Generator of the multiplicative group with the least encoding."""
    ctx._need_finite()
    for a in ctx.nonzero():
        if element_order(ctx, a) == ctx.q - 1:
            return a
    raise AssertionError("cyclic group without generator")  # pragma: no cover


def roots_of_unity(ctx: FieldCtx, m: int) -> list[Fe]:
    """All elements of multiplicative order exactly m, in canonical order."""
    if m <= 0:
        raise ValueError("order must be positive")
    ctx._need_finite()
    if (ctx.q - 1) % m:
        return []
    eta = primitive_element(ctx)
    step = (ctx.q - 1) // m
    roots = [ctx.pow(eta, i * step) for i in range(m) if gcd(i, m) == 1]
    return sorted(roots, key=ctx.key)


def orders_present(ctx: FieldCtx) -> list[int]:
    """Orders of elements of the multiplicative group, i.e. divisors of q - 1."""
    ctx._need_finite()
    return divisors(ctx.q - 1)
