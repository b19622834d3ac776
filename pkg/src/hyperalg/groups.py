"""Cayley tables of small groups and their import as thin hypergroups.

Tables are lists of rows of element indices with the identity at index 0.
Every bundled table is checked by the same group validator that guards
user-supplied input, so a typo here cannot survive the test suite.
"""

from __future__ import annotations

from itertools import permutations

from hyperalg.core import Hypergroup, validate


class NotAGroup(Exception):
    def __init__(self, reason: str):
        self.reason = reason
        super().__init__(reason)


def check_group_table(table: list[list[int]]) -> None:
    """Raise NotAGroup unless `table` is a group table with identity 0."""
    n = len(table)
    if n == 0 or any(len(row) != n for row in table):
        raise NotAGroup("table is not square")
    for row in table:
        for v in row:
            if not isinstance(v, int) or not 0 <= v < n:
                raise NotAGroup(f"entry {v!r} out of range")
    for i in range(n):
        if table[i][0] != i or table[0][i] != i:
            raise NotAGroup(f"index 0 is not an identity at element {i}")
    for i in range(n):
        if 0 not in table[i]:
            raise NotAGroup(f"element {i} has no inverse")
    for i in range(n):
        for j in range(n):
            tij = table[i][j]
            for k in range(n):
                if table[tij][k] != table[i][table[j][k]]:
                    raise NotAGroup(f"associativity fails at ({i},{j},{k})")


def from_group(table: list[list[int]]) -> Hypergroup:
    """Import a Cayley table as the thin hypergroup with singleton products."""
    check_group_table(table)
    n = len(table)
    h = validate(n, [[1 << table[i][j] for j in range(n)] for i in range(n)])
    assert h.is_thin()
    return h


def cyclic(n: int) -> list[list[int]]:
    return [[(i + j) % n for j in range(n)] for i in range(n)]


def direct_product(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    na, nb = len(a), len(b)
    idx = lambda x, y: x * nb + y
    out = []
    for x1 in range(na):
        for y1 in range(nb):
            row = []
            for x2 in range(na):
                for y2 in range(nb):
                    row.append(idx(a[x1][x2], b[y1][y2]))
            out.append(row)
    return out


def dihedral(n: int) -> list[list[int]]:
    """Order-2n dihedral group: rotations 0..n-1, reflections n..2n-1."""
    def mul(x, y):
        fx, ax = divmod(x, n)
        fy, ay = divmod(y, n)
        if fx == 0 and fy == 0:
            return (ax + ay) % n
        if fx == 0 and fy == 1:
            return n + (ay - ax) % n
        if fx == 1 and fy == 0:
            return n + (ax + ay) % n
        return (ay - ax) % n
    return [[mul(x, y) for y in range(2 * n)] for x in range(2 * n)]


def quaternion8() -> list[list[int]]:
    """Unit quaternions 1,-1,i,-i,j,-j,k,-k."""
    names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
    base = {
        ("1", "1"): "1", ("1", "i"): "i", ("1", "j"): "j", ("1", "k"): "k",
        ("i", "1"): "i", ("i", "i"): "-1", ("i", "j"): "k", ("i", "k"): "-j",
        ("j", "1"): "j", ("j", "i"): "-k", ("j", "j"): "-1", ("j", "k"): "i",
        ("k", "1"): "k", ("k", "i"): "j", ("k", "j"): "-i", ("k", "k"): "-1",
    }

    def mul(x: str, y: str) -> str:
        sign = 1
        if x.startswith("-"):
            sign, x = -sign, x[1:]
        if y.startswith("-"):
            sign, y = -sign, y[1:]
        z = base[(x, y)]
        if z.startswith("-"):
            sign, z = -sign, z[1:]
        return z if sign > 0 else "-" + z

    return [[names.index(mul(x, y)) for y in names] for x in names]


def _perm_group(perms: list[tuple[int, ...]]) -> list[list[int]]:
    perms = sorted(perms)  # identity sorts first
    index = {p: i for i, p in enumerate(perms)}
    table = []
    for p in perms:
        row = []
        for q in perms:
            row.append(index[tuple(p[q[x]] for x in range(len(p)))])
        table.append(row)
    return table


def symmetric(n: int) -> list[list[int]]:
    return _perm_group([tuple(p) for p in permutations(range(n))])


def _parity(p: tuple[int, ...]) -> int:
    seen = [False] * len(p)
    sign = 0
    for i in range(len(p)):
        if seen[i]:
            continue
        j = i
        length = 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        sign ^= (length - 1) & 1
    return sign


def alternating(n: int) -> list[list[int]]:
    return _perm_group([tuple(p) for p in permutations(range(n)) if _parity(p) == 0])


def _builtin_tables() -> list[tuple[str, list[list[int]]]]:
    c2 = cyclic(2)
    c4 = cyclic(4)
    return [
        ("c2", c2),
        ("c3", cyclic(3)),
        ("c4", c4),
        ("v4", direct_product(c2, c2)),
        ("c5", cyclic(5)),
        ("c6", cyclic(6)),
        ("s3", symmetric(3)),
        ("c7", cyclic(7)),
        ("c8", cyclic(8)),
        ("c4xc2", direct_product(c4, c2)),
        ("c2xc2xc2", direct_product(direct_product(c2, c2), c2)),
        ("d4", dihedral(4)),
        ("q8", quaternion8()),
        ("c9", cyclic(9)),
        ("c3xc3", direct_product(cyclic(3), cyclic(3))),
        ("c10", cyclic(10)),
        ("d5", dihedral(5)),
        ("c11", cyclic(11)),
        ("c12", cyclic(12)),
        ("d6", dihedral(6)),
        ("a4", alternating(4)),
        ("a5", alternating(5)),
    ]


def builtin_groups(max_order: int) -> list[tuple[str, list[list[int]]]]:
    """Bundled Cayley tables of order at most `max_order`.

    Covers every group of order <= 8, the usual suspects up to 12, and
    the order-60 simple group as the non-solvable stress case.
    """
    return [(name, t) for name, t in _builtin_tables() if len(t) <= max_order]
