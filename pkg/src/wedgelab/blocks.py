"""Blocks (orbits under root shifts), clusters, the block map F_b and block graphs."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .arith import divisors, mobius
from .field import Fe, FieldCtx
from .polyring import IrrPoly, Poly, as_irreducible, enumerate_irreducibles, shift, sigma_apply
from .wedge import wedge


@dataclass(frozen=True)
class Block:
    rep: IrrPoly
    members: tuple[IrrPoly, ...]
    disc: Fe

    @property
    def degree(self) -> int:
        return self.rep.degree

    @property
    def ctx(self) -> FieldCtx:
        return self.rep.ctx

    def __contains__(self, f: Poly) -> bool:
        return f in self.members

    def __len__(self) -> int:
        return len(self.members)


def block_of(f: Poly) -> Block:
    """Theta_f = {f_b^+ : b in K}; the representative is the least member."""
    f = as_irreducible(f)
    ctx = f.ctx
    if not ctx.is_finite:
        raise ValueError("blocks are infinite over Q")
    members = sorted({shift(f, b) for b in ctx.elements()}, key=Poly.key)
    return Block(members[0], tuple(members), f.disc)


def partition_blocks(ctx: FieldCtx, n: int) -> list[Block]:
    """The blocks of E(q^n), ordered by representative."""
    seen: set[Poly] = set()
    out = []
    for f in enumerate_irreducibles(ctx, n):
        if f in seen:
            continue
        blk = block_of(f)
        seen.update(blk.members)
        out.append(blk)
    return out


def partition_clusters(ctx: FieldCtx, n: int) -> list[tuple[IrrPoly, ...]]:
    """Orbits of E(q^n) under the full affine group sigma_{a,b}."""
    seen: set[Poly] = set()
    out = []
    for f in enumerate_irreducibles(ctx, n):
        if f in seen:
            continue
        orbit = sorted({sigma_apply(a, b, f) for a in ctx.nonzero() for b in ctx.elements()}, key=Poly.key)
        seen.update(orbit)
        out.append(tuple(orbit))
    return out


def count_blocks_formula(q: int, n: int) -> int:
    """(1/(n q)) sum_{d | n} mu(d) q^(n/d), valid for gcd(q, n) = 1 and n > 1."""
    if n <= 1:
        raise ValueError("the block count needs n > 1")
    if gcd(q, n) != 1:
        raise ValueError("the block count formula needs gcd(q, n) = 1")
    total = sum(mobius(d) * q ** (n // d) for d in divisors(n))
    return total // (n * q)


def self_image_poly(f: Poly, b: Fe) -> IrrPoly:
    """f |> f_b^+, the same for every member of f's block."""
    return wedge(f, shift(f, b)).h


def block_map(theta: Block, b: Fe) -> Block:
    """F_b(Theta_f) = Theta_{f |> f_b^+} for b != 0."""
    if b == 0:
        raise ValueError("F_b is defined for b != 0 only")
    return block_of(self_image_poly(theta.rep, b))


def block_centre(theta: Block) -> IrrPoly:
    """Centre (x - 1/4)^2 - Delta/4 of a quadratic block in odd characteristic."""
    ctx = theta.ctx
    if theta.degree != 2:
        raise ValueError("block centres are defined for quadratic blocks")
    if ctx.char == 2:
        raise ValueError("block centres need characteristic != 2")
    quarter = ctx.inv(ctx.elem(4))
    lin = Poly(ctx, (ctx.neg(quarter), ctx.one))
    centre = lin * lin - Poly.const(ctx, ctx.mul(theta.disc, quarter))
    centre = IrrPoly(centre, check=False)
    if centre not in theta.members:
        raise ValueError("centre computed outside the block")
    return centre


@dataclass
class BlockGraph:
    """Block graph: arcs (i, j) carry the set of b with F_b(vertices[i]) = vertices[j]."""

    vertices: list[Block]
    arcs: dict[tuple[int, int], frozenset] = field(default_factory=dict)
    degree: int = 0

    def index(self, blk: Block) -> int:
        return next(i for i, v in enumerate(self.vertices) if v.rep == blk.rep)

    def is_complete(self) -> bool:
        """Every ordered pair of degree-n blocks (loops included) is joined."""
        own = [i for i, v in enumerate(self.vertices) if v.degree == self.degree]
        return all((i, j) in self.arcs for i in own for j in own)

    def to_dot(self) -> str:
        ctx = self.vertices[0].ctx if self.vertices else None
        lines = ["digraph blocks {"]
        for i, v in enumerate(self.vertices):
            lines.append(f'  b{i} [label="{v.rep} (disc {ctx.fmt(v.disc)}, size {len(v)})"];')
        for (i, j), bs in sorted(self.arcs.items()):
            label = ",".join(ctx.fmt(b) for b in sorted(bs, key=ctx.key))
            lines.append(f'  b{i} -> b{j} [label="{label}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_block_graph(ctx: FieldCtx, n: int) -> BlockGraph:
    vertices = partition_blocks(ctx, n)
    by_member = {m: i for i, blk in enumerate(vertices) for m in blk.members}
    arcs: dict[tuple[int, int], set] = {}
    for i, blk in enumerate(list(vertices)):
        for b in ctx.nonzero():
            img = self_image_poly(blk.rep, b)
            j = by_member.get(img)
            if j is None:
                # image of another degree: add its block as an extra vertex
                new = block_of(img)
                vertices.append(new)
                j = len(vertices) - 1
                by_member.update({m: j for m in new.members})
            arcs.setdefault((i, j), set()).add(b)
    return BlockGraph(vertices, {k: frozenset(v) for k, v in arcs.items()}, n)


def block_permutation(blocks: list[Block], b: Fe) -> tuple[int, ...]:
    """F_b as a permutation of block indices (assumes the image degree is preserved)."""
    by_member = {m: i for i, blk in enumerate(blocks) for m in blk.members}
    return tuple(by_member[self_image_poly(blk.rep, b)] for blk in blocks)
