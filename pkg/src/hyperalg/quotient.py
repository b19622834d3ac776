"""Double cosets and quotient hypergroups.

The quotient of H over a closed subset F lives on the double cosets
F·h·F; the induced product of two blocks is the set of blocks meeting
a·F·b.  Normality of F is not required.  The induced table is run
through the full axiom validator every time: that is our strongest
internal consistency check.
"""

from __future__ import annotations

from dataclasses import dataclass

from hyperalg.closed import is_closed, is_strongly_normal
from hyperalg.core import Hypergroup, bits, validate


class NotClosed(Exception):
    """Raised when a quotient kernel fails the closedness test."""


def double_coset(h: Hypergroup, x: int, f: int) -> int:
    return h.set_product(h.set_product(f, 1 << x), f)


@dataclass(frozen=True)
class Quotient:
    base: Hypergroup
    kernel: int
    blocks: tuple[int, ...]
    block_of: tuple[int, ...]
    induced: Hypergroup

    def __len__(self) -> int:
        return len(self.blocks)


def build_quotient(h: Hypergroup, f: int) -> Quotient:
    """Partition into double cosets and validate the induced hypergroup.

    Blocks are ordered by smallest member, which puts the kernel first.
    Cached per (hypergroup, kernel).
    """
    cache = h.__dict__.setdefault("_quotient_cache", {})
    got = cache.get(f)
    if got is not None:
        return got
    if f == 0 or not is_closed(h, f):
        raise NotClosed(f"kernel {sorted(bits(f))} is not a closed subset")

    blocks: list[int] = []
    block_of = [-1] * h.order
    seen = 0
    for x in h.elements():
        if (seen >> x) & 1:
            continue
        b = double_coset(h, x, f)
        assert b & seen == 0, "double cosets failed to partition"
        for y in bits(b):
            block_of[y] = len(blocks)
        blocks.append(b)
        seen |= b
    assert seen == h.full and blocks[0] == f

    reps = [b & -b for b in blocks]  # smallest member of each block, as a mask
    nb = len(blocks)
    table = []
    for a in reps:
        fa = h.set_product(a, f)
        row = []
        for b in reps:
            prod = h.set_product(fa, b)
            cell = 0
            for x in bits(prod):
                cell |= 1 << block_of[x]
            row.append(cell)
        table.append(row)
    induced = validate(nb, table)

    # Blockwise star transport: the star of a block is the block of the star.
    assert all(induced.star[block_of[x]] == block_of[h.star[x]] for x in h.elements())

    q = Quotient(base=h, kernel=f, blocks=tuple(blocks),
                 block_of=tuple(block_of), induced=induced)
    cache[f] = q
    return q


def project_subset(q: Quotient, s: int) -> int:
    """Image of an element set as a set of block indices."""
    out = 0
    for x in bits(s):
        out |= 1 << q.block_of[x]
    return out


def lift_blocks(q: Quotient, bmask: int) -> int:
    """Union of the member blocks, as an element set of the base."""
    out = 0
    for i in bits(bmask):
        out |= q.blocks[i]
    return out


def quotient_is_thin(q: Quotient) -> bool:
    """Thinness of the induced hypergroup.

    Equivalent to strong normality of the kernel in the base; both sides
    are computed and the equivalence asserted on every call.
    """
    thin = q.induced.is_thin()
    assert thin == is_strongly_normal(q.base, q.kernel)
    return thin
