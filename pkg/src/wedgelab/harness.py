"""Table reproduction jobs, the normalized-period experiment over primes, and exporters."""

from __future__ import annotations

import csv
import io
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from .arith import is_prime, primes
from .field import field_create
from .polyring import Poly, count_irreducibles, is_irreducible
from .search import enumerate_stable_2sets

# --- stable 2-set table ---------------------------------------------------------------


@dataclass(frozen=True)
class Table3Row:
    p: int
    n: int
    size: int  # number of monic irreducibles of degree n
    I: int
    II: int
    III: int

    def counts(self) -> tuple[int, int, int]:
        return (self.I, self.II, self.III)


@dataclass
class Table3Report:
    rows: list[Table3Row]
    scanned: list[Table3Row]  # every extension searched, zero rows included

    def format(self) -> str:
        cell = lambda v: str(v) if v else "-"  # noqa: E731
        lines = [f"{'p':>3} {'n':>3} {'#E':>5} {'I':>3} {'II':>3} {'III':>4}"]
        for r in self.rows:
            lines.append(f"{r.p:>3} {r.n:>3} {r.size:>5} {cell(r.I):>3} {cell(r.II):>3} {cell(r.III):>4}")
        return "\n".join(lines) + "\n"


def table3_extensions(max_set_size: int) -> list[tuple[int, int, int]]:
    """(p, n, #E) for prime p and n >= 2 with #E(p^n) <= max_set_size, ordered by p then n."""
    out = []
    for p in primes():
        if count_irreducibles(p, 2) > max_set_size:
            break
        n = 2
        while (size := count_irreducibles(p, n)) <= max_set_size:
            out.append((p, n, size))
            n += 1
    return out


def cmd_table3(max_set_size: int = 500) -> Table3Report:
    if max_set_size < 2:
        raise ValueError("max_set_size must be at least 2")
    rows, scanned = [], []
    for p, n, size in table3_extensions(max_set_size):
        c = enumerate_stable_2sets(field_create(p), n).counts
        row = Table3Row(p, n, size, c["I"], c["II"], c["III"])
        scanned.append(row)
        if any(row.counts()):
            rows.append(row)
    return Table3Report(rows, scanned)


# --- normalized periods over primes ---------------------------------------------------

IntPoly = Union[Poly, Sequence[int]]


def _int_coeffs(f: IntPoly) -> list[int]:
    """Ascending integer coefficients of a monic polynomial given as a Poly over Q or a list."""
    if isinstance(f, Poly):
        cs = [Fraction(c) for c in f.coeffs]
        if any(c.denominator != 1 for c in cs):
            raise ValueError("integer coefficients expected")
        return [int(c) for c in cs]
    return [int(c) for c in f]


def _quadratic_irreducible_mod(c: list[int], p: int) -> bool:
    r, b = c[0] % p, c[1] % p
    if p == 2:
        return r == 1 and b == 1
    disc = (b * b - 4 * r) % p
    return disc != 0 and pow(disc, (p - 1) // 2, p) == p - 1


def admissible_primes(f: IntPoly, g: IntPoly, count: int, start: int = 2) -> list[int]:
    """Primes where f and g are both irreducible and b + c, b - c are nonzero."""
    fc, gc = _int_coeffs(f), _int_coeffs(g)
    if len(fc) != 3 or len(gc) != 3 or fc[2] != 1 or gc[2] != 1:
        raise ValueError("monic integer quadratics expected")
    b, c = fc[1], gc[1]
    out = []
    for p in primes(start):
        if len(out) >= count:
            break
        if (b + c) % p == 0 or (b - c) % p == 0:
            continue
        if _quadratic_irreducible_mod(fc, p) and _quadratic_irreducible_mod(gc, p):
            out.append(p)
    return out


def recheck_admissible(f: IntPoly, g: IntPoly, p: int) -> bool:
    """Per-prime check through the generic irreducibility test."""
    if not is_prime(p):
        return False
    F = field_create(p)
    fc, gc = _int_coeffs(f), _int_coeffs(g)
    ok = is_irreducible(Poly.from_ints(F, fc)) and is_irreducible(Poly.from_ints(F, gc))
    return ok and (fc[1] + gc[1]) % p != 0 and (fc[1] - gc[1]) % p != 0


@dataclass(frozen=True)
class ArtinRow:
    p: int
    period: int  # 0 if the orbit collapsed
    transient: int
    T: Fraction  # period / (p - 1)


def pair_orbit_mod_p(f: IntPoly, g: IntPoly, p: int, max_steps: Optional[int] = None) -> tuple[int, int]:
    """(transient, period) of the pair {f, g} mod p under the self-image map.

    Uses the quadratic step b' = c(b - c), c' = -b(b - c), r' = r(b - c)^2 on
    unordered states; period 0 means the pair degenerated (b = c).
    """
    fc, gc = _int_coeffs(f), _int_coeffs(g)
    if fc[0] != gc[0]:
        raise ValueError("constant terms must agree")
    r, b, c = fc[0] % p, fc[1] % p, gc[1] % p
    limit = max_steps if max_steps is not None else 4 * p * p + 8
    seen: dict[tuple[int, int, int], int] = {}
    for step in range(limit):
        if b == c:
            return step, 0
        key = (r, b, c) if b < c else (r, c, b)
        if key in seen:
            return seen[key], step - seen[key]
        seen[key] = step
        u = (b - c) % p
        b, c, r = c * u % p, -b * u % p, r * u * u % p
    raise RuntimeError(f"no recurrence mod {p} within {limit} steps")


def artin_rows(f: IntPoly, g: IntPoly, ps: Iterable[int]) -> list[ArtinRow]:
    rows = []
    for p in ps:
        transient, period = pair_orbit_mod_p(f, g, p)
        rows.append(ArtinRow(p, period, transient, Fraction(period, p - 1)))
    return rows


@dataclass
class DistReport:
    values: list[tuple[Fraction, int]]  # sorted distinct T with multiplicities
    samples: list[tuple[Fraction, Fraction]]  # (x, D(x)) at each jump
    transients: dict[int, int]
    total: int = 0
    steps: list[tuple[Fraction, Fraction]] = field(default_factory=list)  # (x, jump), largest first

    def transient_proportions(self) -> dict[int, float]:
        return {k: v / self.total for k, v in sorted(self.transients.items())}

    def odd_denominator_fraction(self) -> float:
        odd = sum(m for x, m in self.values if x.denominator % 2)
        return odd / self.total if self.total else 0.0

    def format(self, top: int = 8) -> str:
        lines = [f"primes: {self.total}", "transient histogram:"]
        for k, v in sorted(self.transients.items()):
            lines.append(f"  {k}: {v} ({v / self.total:.4f})")
        lines.append("largest steps of D:")
        for x, jump in self.steps[:top]:
            lines.append(f"  x={x}: +{float(jump):.4f}")
        return "\n".join(lines) + "\n"


def dist_report(rows: Sequence[ArtinRow]) -> DistReport:
    live = [r for r in rows if r.period > 0]
    total = len(live)
    counts = Counter(r.T for r in live)
    values = sorted(counts.items())
    samples, acc = [], 0
    for x, m in values:
        acc += m
        samples.append((x, Fraction(acc, total)))
    steps = sorted(((x, Fraction(m, total)) for x, m in values), key=lambda s: (-s[1], s[0]))
    trans = dict(sorted(Counter(r.transient for r in live).items()))
    return DistReport(values, samples, trans, total, steps)


ARTIN_PAIR = ([-1, 1, 1], [-1, 2, 1])  # x^2+x-1, x^2+2x-1


def cmd_artin(
    f: IntPoly = ARTIN_PAIR[0],
    g: IntPoly = ARTIN_PAIR[1],
    num_primes: int = 2000,
    out_path: Optional[str] = None,
) -> tuple[list[ArtinRow], DistReport]:
    if num_primes < 1:
        raise ValueError("num_primes must be positive")
    rows = artin_rows(f, g, admissible_primes(f, g, num_primes))
    if out_path is not None:
        with open(out_path, "w", newline="") as fh:
            fh.write(cmd_csv(rows))
    return rows, dist_report(rows)


# --- exporters --------------------------------------------------------------------------

CSV_COLUMNS = ("p", "period", "transient", "T_num", "T_den")


def cmd_csv(rows: Iterable[ArtinRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in rows:
        w.writerow((r.p, r.period, r.transient, r.T.numerator, r.T.denominator))
    return buf.getvalue()


def parse_csv(text: str) -> list[ArtinRow]:
    out = []
    for rec in csv.DictReader(io.StringIO(text)):
        T = Fraction(int(rec["T_num"]), int(rec["T_den"]))
        out.append(ArtinRow(int(rec["p"]), int(rec["period"]), int(rec["transient"]), T))
    return out


def cmd_dot(graph) -> str:
    """DOT text for a PolyGraph or BlockGraph."""
    return graph.to_dot()
