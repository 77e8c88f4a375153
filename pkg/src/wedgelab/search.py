"""Self-images of polynomial sets, orbits, stable 2-set enumeration and the graph Gamma(S)."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

import numpy as np

from .dynamics import TwoSetType, classify_2set
from .errors import InvariantViolation
from .field import FieldCtx
from .polyring import IrrPoly, Poly, as_irreducible, enumerate_irreducibles, format_poly
from .wedge import wedge


class PolySet:
    """Sorted, duplicate-free tuple of irreducibles over one field."""

    __slots__ = ("members", "ctx")

    def __init__(self, polys: Iterable[Poly], check: bool = True):
        items = list(polys)
        if not items:
            self.members: tuple[IrrPoly, ...] = ()
            self.ctx = None
            return
        ctx = items[0].ctx
        if any(f.ctx != ctx for f in items):
            raise ValueError("all polynomials must live over one field")
        if check:
            items = [as_irreducible(f) for f in items]
        else:
            items = [f if isinstance(f, IrrPoly) else IrrPoly(f, check=False) for f in items]
        self.members = tuple(sorted(set(items), key=Poly.key))
        self.ctx = ctx

    def encode(self) -> str:
        return ";".join(format_poly(f) for f in self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, f) -> bool:
        return f in self.members

    def __getitem__(self, i):
        return self.members[i]

    def __eq__(self, other) -> bool:
        return isinstance(other, PolySet) and self.members == other.members

    def __hash__(self) -> int:
        return hash(self.members)

    def __le__(self, other: "PolySet") -> bool:
        return set(self.members) <= set(other.members)

    def __repr__(self) -> str:
        return "{" + ", ".join(format_poly(f) for f in self.members) + "}"


def self_image(S: PolySet) -> PolySet:
    """F(S) = {f_i |> f_j : i != j}."""
    if len(S) < 2:
        raise ValueError("the self-image needs at least two polynomials")
    out = [wedge(f, g).h for g in S for f in S if f != g]
    return PolySet(out, check=False)


def is_stable(S: PolySet) -> bool:
    return self_image(S) <= S


@dataclass
class OrbitInfo:
    transient: int
    period: int  # 0 when collapsed
    cycle: list[PolySet]
    collapsed: bool = False


def orbit(S: PolySet, max_steps: int = 100_000) -> OrbitInfo:
    """Transient and minimal period of S, F(S), F^2(S), ... by first recurrence."""
    if S.ctx is not None and not S.ctx.is_finite:
        raise ValueError("orbits are only guaranteed to terminate over finite fields")
    seen: dict[str, int] = {}
    path: list[PolySet] = []
    cur = S
    for step in range(max_steps + 1):
        if len(cur) < 2:
            return OrbitInfo(step, 0, [cur], collapsed=True)
        key = cur.encode()
        if key in seen:
            start = seen[key]
            return OrbitInfo(start, step - start, path[start:])
        seen[key] = step
        path.append(cur)
        cur = self_image(cur)
    raise RuntimeError(f"no recurrence within {max_steps} steps")


# --- stable 2-sets ---------------------------------------------------------------------

@dataclass
class StableReport:
    ctx: FieldCtx
    degree: int
    counts: dict[str, int]
    sets: list[tuple[IrrPoly, IrrPoly, TwoSetType]] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "field": self.ctx.spec(),
            "degree": self.degree,
            "counts": dict(self.counts),
            "sets": [
                {"f": format_poly(f), "g": format_poly(g), "type": t.tag} for f, g, t in self.sets
            ],
        }


def _np_mulmod(A: np.ndarray, B: np.ndarray, g: np.ndarray, p: int) -> np.ndarray:
    """Row-wise product of residues modulo the monic g (ascending coefficients, length n+1)."""
    n = len(g) - 1
    C = np.zeros((A.shape[0], 2 * n - 1), dtype=np.int64)
    for i in range(n):
        C[:, i : i + n] += A[:, i : i + 1] * B
    C %= p
    for k in range(2 * n - 2, n - 1, -1):
        C[:, k - n : k] -= C[:, k : k + 1] * g[:n]
        C[:, k - n : k] %= p
    return C[:, :n]


def _np_eval(P: np.ndarray, R: np.ndarray, g: np.ndarray, p: int) -> np.ndarray:
    """Row i: P_i(R_i) in F_p[x]/(g); P holds ascending coefficients (one row or one per R row)."""
    rows, n = R.shape
    P = np.broadcast_to(P, (rows, P.shape[1]))
    acc = np.zeros((rows, n), dtype=np.int64)
    for j in range(P.shape[1] - 1, -1, -1):
        acc = _np_mulmod(acc, R, g, p)
        acc[:, 0] = (acc[:, 0] + P[:, j]) % p
    return acc


def _invariance_tables(ctx: FieldCtx, polys: list[IrrPoly]) -> tuple[np.ndarray, np.ndarray]:
    """right[i, j]: f_i |> f_j == f_j;  left[i, j]: f_i |> f_j == f_i (prime fields)."""
    p = ctx.p
    F = np.array([list(f.coeffs) for f in polys], dtype=np.int64)
    N, width = F.shape
    n = width - 1
    right = np.zeros((N, N), dtype=bool)
    left = np.zeros((N, N), dtype=bool)
    for j in range(N):
        g = F[j]
        R = (F[:, :n] - F[:, n : n + 1] * g[:n]) % p  # f_i(alpha) as residues mod g
        right[:, j] = ~_np_eval(g[None, :], R, g, p).any(axis=1)
        left[:, j] = ~_np_eval(F, R, g, p).any(axis=1)
    return right, left


def enumerate_stable_2sets(ctx: FieldCtx, n: int, polys: Optional[list[IrrPoly]] = None) -> StableReport:
    """Every stable unordered pair of degree-n irreducibles, classified by type."""
    if not ctx.is_finite:
        raise ValueError("exhaustive search needs a finite field")
    polys = list(polys) if polys is not None else list(enumerate_irreducibles(ctx, n))
    counts = {"I": 0, "II": 0, "III": 0}
    report = StableReport(ctx, n, counts)
    N = len(polys)
    if ctx.kind == "prime" and n >= 2:
        right, left = _invariance_tables(ctx, polys)
        ok = right | left
        for i in range(N):
            for j in np.flatnonzero(ok[i, i + 1 :] & ok[i + 1 :, i]) + i + 1:
                _record(report, polys[i], polys[int(j)])
    else:
        for i in range(N):
            for j in range(i + 1, N):
                f, g = polys[i], polys[j]
                fg = wedge(f, g).h
                if fg != f and fg != g:
                    continue
                _record(report, f, g)
    return report


def _record(report: StableReport, f: IrrPoly, g: IrrPoly) -> None:
    t = classify_2set(f, g)
    if t.stable:
        report.counts[t.tag] += 1
        report.sets.append((f, g, t))
    elif report.ctx.kind == "prime" and report.degree >= 2:
        raise InvariantViolation(f"screen accepted the unstable pair {f}, {g}")


# --- the graph Gamma(S) ----------------------------------------------------------------

@dataclass
class PolyGraph:
    """Arcs g -> h labelled by omega = {f in S : f |> g = h}; f = g is allowed."""

    vertices: list[IrrPoly]
    arcs: dict[tuple[IrrPoly, IrrPoly], frozenset] = field(default_factory=dict)

    def multiplicity(self, g: Poly, h: Poly) -> int:
        return len(self.arcs.get((g, h), ()))

    def is_complete(self) -> bool:
        return all((g, h) in self.arcs for g in self.vertices for h in self.vertices)

    def to_dot(self) -> str:
        idx = {v: i for i, v in enumerate(self.vertices)}
        lines = ["digraph G {"]
        for v, i in idx.items():
            lines.append(f'  v{i} [label="{format_poly(v)}"];')
        for (g, h), omega in sorted(self.arcs.items(), key=lambda kv: (idx[kv[0][0]], idx[kv[0][1]])):
            label = ", ".join(format_poly(f) for f in sorted(omega, key=Poly.key))
            lines.append(f'  v{idx[g]} -> v{idx[h]} [label="{label}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_graph(S: PolySet) -> PolyGraph:
    """Gamma(S) on the members of S; images falling outside S (such as f |> f = x) carry no arc."""
    vertices = list(S)
    arcs: dict[tuple[IrrPoly, IrrPoly], set] = {}
    for g in S:
        for f in S:
            h = wedge(f, g).h
            if h in S:
                arcs.setdefault((g, h), set()).add(f)
    return PolyGraph(vertices, {k: frozenset(v) for k, v in arcs.items()})


def extension_graph(ctx: FieldCtx, n: int) -> PolyGraph:
    """Gamma(E(q^n)): all monic irreducibles of degree n acting on each other."""
    return build_graph(PolySet(enumerate_irreducibles(ctx, n), check=False))
