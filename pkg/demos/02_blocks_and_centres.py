"""
Blocks, centres and the block graph
===================================

A block collects the root shifts f(x + b) of one polynomial.
All members share a discriminant, and in odd characteristic each
quadratic block holds a single right-left invariant: its centre.
"""

from wedgelab import (
    build_block_graph,
    count_blocks_formula,
    field_create,
    field_from_order,
    format_poly,
    partition_blocks,
)
from wedgelab.blocks import block_centre

F = field_create(7)
blocks = partition_blocks(F, 2)
print(f"E(7^2) splits into {len(blocks)} blocks (formula: {count_blocks_formula(7, 2)})")
for blk in blocks:
    theta = block_centre(blk)
    print(f"  disc {F.fmt(blk.disc)}: {len(blk)} members, centre {format_poly(theta)}")

# the self-image map permutes blocks; for quadratics the graph is complete
G = build_block_graph(F, 2)
print("complete block graph:", G.is_complete())

# counts versus exhaustive partition for a few coprime (q, n)
for q, n in [(2, 3), (3, 4), (5, 3), (4, 3)]:
    print(f"  q={q} n={n}: {count_blocks_formula(q, n)} == {len(partition_blocks(field_from_order(q), n))}")
