"""Finite hypergroups over bitmask element sets.

Elements are indices 0..order-1 with the identity pinned at index 0.
Subsets of elements are plain ints used as bit vectors (bit i set means
element i is a member), so all set algebra is bitwise arithmetic and a
table cell is just an int.  Orders above 64 are rejected; every target
computation lives at order <= 60.

A table is valid when

  (H1)  p(qr) = (pq)r          for all elements p, q, r,
  (H2)  s * 1 = {s}            for all s (column 0 forced),
  (H3)  r in pq  implies  q in p*r  and  p in rq*,

where p* is the inverse partner derived from the table: the unique q
with 1 in pq.  The left-identity row and the involutivity of * are
consequences of H2/H3 and are asserted, never trusted.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

MAX_ORDER = 64


def mask_of(members: Iterable[int]) -> int:
    """Pack an iterable of element indices into a bitmask."""
    m = 0
    for x in members:
        m |= 1 << x
    return m


def bits(mask: int) -> Iterator[int]:
    """Iterate the set bits of a mask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def members(mask: int) -> tuple[int, ...]:
    return tuple(bits(mask))


class HypergroupError(Exception):
    """Base class for table-validation failures."""


class EmptyProduct(HypergroupError):
    def __init__(self, i: int, j: int, count: int = 1):
        self.witness = (i, j)
        self.count = count
        super().__init__(f"empty product at cell ({i},{j}); {count} empty cell(s) total")


class IdentityViolation(HypergroupError):
    def __init__(self, i: int, count: int = 1):
        self.witness = i
        self.count = count
        super().__init__(f"row {i}: product with the identity is not {{{i}}}; "
                         f"{count} row(s) violate")


class NoInverse(HypergroupError):
    def __init__(self, i: int, count: int = 1):
        self.witness = i
        self.count = count
        super().__init__(f"row {i} has no cell containing the identity; "
                         f"{count} row(s) affected")


class AmbiguousInverse(HypergroupError):
    def __init__(self, i: int, count: int = 1):
        self.witness = i
        self.count = count
        super().__init__(f"row {i} has several cells containing the identity; "
                         f"{count} row(s) affected")


class AssocViolation(HypergroupError):
    def __init__(self, i: int, j: int, k: int, count: int = 1):
        self.witness = (i, j, k)
        self.count = count
        super().__init__(f"associativity fails at triple ({i},{j},{k}); "
                         f"{count} triple(s) fail")


class ExchangeViolation(HypergroupError):
    def __init__(self, i: int, j: int, k: int, count: int = 1):
        self.witness = (i, j, k)
        self.count = count
        super().__init__(f"exchange condition fails at triple ({i},{j},{k}); "
                         f"{count} triple(s) fail")


@dataclass(frozen=True)
class Hypergroup:
    """A validated finite hypergroup.

    Instances are immutable: ``table`` is a tuple of row tuples of cell
    masks and ``star`` is the derived inverse permutation.  Construct via
    :func:`validate`; the constructor itself does not re-check anything.
    Derived data (lattices, series, ...) is memoised on the instance by
    the modules that compute it.
    """

    order: int
    table: tuple[tuple[int, ...], ...]
    star: tuple[int, ...]

    identity = 0

    def __hash__(self) -> int:
        return self._hash

    @cached_property
    def _hash(self) -> int:
        return hash((self.order, self.table))

    @property
    def full(self) -> int:
        return (1 << self.order) - 1

    def elements(self) -> range:
        return range(self.order)

    def product(self, i: int, j: int) -> int:
        return self.table[i][j]

    def set_product(self, p: int, q: int) -> int:
        """Union of the cell masks over all member pairs (total, empty-safe)."""
        acc = 0
        table = self.table
        pp = p
        while pp:
            lo = pp & -pp
            row = table[lo.bit_length() - 1]
            pp ^= lo
            qq = q
            while qq:
                lo2 = qq & -qq
                acc |= row[lo2.bit_length() - 1]
                qq ^= lo2
        return acc

    def set_product_many(self, *sets: int) -> int:
        """Left-to-right chained set product (associative by H1)."""
        acc = sets[0]
        for s in sets[1:]:
            acc = self.set_product(acc, s)
        return acc

    def set_star(self, s: int) -> int:
        acc = 0
        star = self.star
        while s:
            lo = s & -s
            acc |= 1 << star[lo.bit_length() - 1]
            s ^= lo
        return acc

    def is_thin_element(self, s: int) -> bool:
        return self.table[self.star[s]][s] == 1

    @cached_property
    def thin_part(self) -> int:
        """Mask of all thin elements; always contains the identity."""
        m = 0
        for s in self.elements():
            if self.is_thin_element(s):
                m |= 1 << s
        return m

    def is_thin(self) -> bool:
        return self.thin_part == self.full

    def commutes(self, a: int, b: int) -> bool:
        return self.table[a][b] == self.table[b][a]


def _as_mask(cell, order: int) -> int:
    if isinstance(cell, int):
        m = cell
    else:
        m = mask_of(cell)
    if m < 0 or m >> order:
        raise ValueError(f"cell mask {m:#x} has members outside 0..{order - 1}")
    return m


def validate(order: int, raw_table: Sequence[Sequence[int]] | Sequence[Sequence[Iterable[int]]]) -> Hypergroup:
    """Check the hypergroup axioms on a raw table and build the value.

    Cells may be given as masks or as iterables of indices.  Checks run
    in a fixed order (empties, right identity, inverse derivation,
    associativity, exchange) and the first failing check raises with its
    first witness plus the count of all violations of that check.
    """
    if not isinstance(order, int) or order < 1:
        raise ValueError("order must be a positive integer")
    if order > MAX_ORDER:
        raise ValueError(f"order {order} exceeds the supported maximum {MAX_ORDER}")
    if len(raw_table) != order or any(len(row) != order for row in raw_table):
        raise ValueError("table must be square of side `order`")

    table = tuple(tuple(_as_mask(cell, order) for cell in row) for row in raw_table)

    empties = [(i, j) for i in range(order) for j in range(order) if table[i][j] == 0]
    if empties:
        raise EmptyProduct(*empties[0], count=len(empties))

    bad_id = [i for i in range(order) if table[i][0] != 1 << i]
    if bad_id:
        raise IdentityViolation(bad_id[0], count=len(bad_id))

    star = [0] * order
    none_rows = []
    multi_rows = []
    for i in range(order):
        js = [j for j in range(order) if table[i][j] & 1]
        if not js:
            none_rows.append(i)
        elif len(js) > 1:
            multi_rows.append(i)
        else:
            star[i] = js[0]
    if none_rows and (not multi_rows or none_rows[0] < multi_rows[0]):
        raise NoInverse(none_rows[0], count=len(none_rows))
    if multi_rows:
        raise AmbiguousInverse(multi_rows[0], count=len(multi_rows))

    h = Hypergroup(order=order, table=table, star=tuple(star))

    assoc_bad = []
    for i in range(order):
        row_i = table[i]
        for j in range(order):
            ij = row_i[j]
            row_j = table[j]
            for k in range(order):
                left = 0
                jk = row_j[k]
                while jk:
                    lo = jk & -jk
                    left |= row_i[lo.bit_length() - 1]
                    jk ^= lo
                right = 0
                m = ij
                while m:
                    lo = m & -m
                    right |= table[lo.bit_length() - 1][k]
                    m ^= lo
                if left != right:
                    assoc_bad.append((i, j, k))
    if assoc_bad:
        raise AssocViolation(*assoc_bad[0], count=len(assoc_bad))

    exch_bad = []
    for i in range(order):
        si = star[i]
        for j in range(order):
            sj = star[j]
            cell = table[i][j]
            for k in bits(cell):
                if not (table[si][k] >> j) & 1 or not (table[k][sj] >> i) & 1:
                    exch_bad.append((i, j, k))
    if exch_bad:
        raise ExchangeViolation(*exch_bad[0], count=len(exch_bad))

    # Consequences of the axioms; a failure here is a validator bug.
    assert star[0] == 0
    assert all(star[star[i]] == i for i in range(order))
    assert all(table[0][j] == 1 << j for j in range(order))
    return h


def is_group_check(h: Hypergroup) -> bool:
    """True when every product is a singleton and those singletons form a group.

    Runs the plain group axioms on the collapsed table, independently of
    the thinness test; the two must agree on every valid hypergroup.
    """
    n = h.order
    cayley = []
    for i in range(n):
        row = []
        for j in range(n):
            cell = h.table[i][j]
            if cell & (cell - 1):
                return False
            row.append(cell.bit_length() - 1)
        cayley.append(row)
    if any(cayley[i][0] != i or cayley[0][i] != i for i in range(n)):
        return False
    if any(0 not in cayley[i] for i in range(n)):
        return False
    return all(
        cayley[cayley[i][j]][k] == cayley[i][cayley[j][k]]
        for i in range(n) for j in range(n) for k in range(n)
    )
