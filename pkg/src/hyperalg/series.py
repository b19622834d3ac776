"""Commutator series, centers, thin residue, solvability and RT structure.

Indexing convention for the lower central series: the first term is the
whole hypergroup, each later term is the commutator of its predecessor
with the whole hypergroup, and the nilpotency class is the least n whose
(n+1)-st term is trivial (so anything abelian-like has class 1).

Quantities that the theory presents as well defined but that we can
compute along two routes (thin residue, valency) are computed along both
and compared; a disagreement raises InternalMismatch because it can only
mean a bug.
"""

from __future__ import annotations

from dataclasses import dataclass

from hyperalg.closed import (
    EmptySet,
    all_closed_subsets,
    closed_center,
    generated_closure,
    is_closed,
    is_normal,
    is_strongly_normal,
    strong_normalizer,
    sub_hypergroup,
    to_sub_mask,
)
from hyperalg.core import Hypergroup, bits, members
from hyperalg.quotient import build_quotient, lift_blocks, project_subset

MAX_RT_CHAINS = 10000

HOLDS = "holds"
HYPOTHESIS_NOT_MET = "hypothesis-not-met"
VIOLATED = "VIOLATED"


class InternalMismatch(Exception):
    """Two routes to the same quantity disagreed; this is a bug, not data."""


class NotRT(Exception):
    """No chain of closed subsets with thin quotients exists."""


class UnknownStatement(Exception):
    pass


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def commutator_elements(h: Hypergroup, a: int, b: int) -> int:
    """The element set star(a)·star(b)·a·b."""
    m = h.table[h.star[a]][h.star[b]]
    m = h.set_product(m, 1 << a)
    return h.set_product(m, 1 << b)


def commutator_subset(h: Hypergroup, amask: int, bmask: int) -> int:
    """Smallest closed subset containing every elementwise commutator of A x B."""
    if amask == 0 or bmask == 0:
        raise EmptySet("commutator of an empty set")
    cache = h.__dict__.setdefault("_commutator_cache", {})
    got = cache.get((amask, bmask))
    if got is not None:
        return got
    gen = 0
    for a in bits(amask):
        for b in bits(bmask):
            gen |= commutator_elements(h, a, b)
    out = generated_closure(h, gen)
    cache[(amask, bmask)] = out
    return out


def lower_central_series(h: Hypergroup) -> tuple[int, ...]:
    """Descending commutator series, first term the whole set, stabilised."""
    got = h.__dict__.get("_lower_central")
    if got is not None:
        return got
    series = [h.full]
    for _ in range(h.order + 1):
        nxt = commutator_subset(h, series[-1], h.full)
        assert nxt & ~series[-1] == 0, "lower central series must be descending"
        if nxt == series[-1]:
            break
        series.append(nxt)
    else:
        raise InternalMismatch("lower central series failed to stabilise")
    out = tuple(series)
    h.__dict__["_lower_central"] = out
    return out


def is_nilpotent(h: Hypergroup) -> tuple[bool, int | None]:
    """Nilpotency verdict plus class (least n whose (n+1)-st term is trivial)."""
    series = lower_central_series(h)
    if series[-1] != 1:
        return False, None
    return True, series.index(1)


def closed_center_series(h: Hypergroup) -> tuple[int, ...]:
    """Ascending closed-center series from the trivial subset, stabilised.

    Each new term is the union of the blocks forming the closed center of
    the quotient over the previous term; every term is checked to be a
    normal closed subset.
    """
    got = h.__dict__.get("_center_series")
    if got is not None:
        return got
    series = [1]
    for _ in range(h.order + 1):
        q = build_quotient(h, series[-1])
        lifted = lift_blocks(q, closed_center(q.induced))
        assert series[-1] & ~lifted == 0, "closed center series must be ascending"
        assert is_closed(h, lifted) and is_normal(h, lifted)
        if lifted == series[-1]:
            break
        series.append(lifted)
    else:
        raise InternalMismatch("closed center series failed to stabilise")
    out = tuple(series)
    h.__dict__["_center_series"] = out
    return out


def inv_hypercenter(h: Hypergroup) -> int:
    return closed_center_series(h)[-1]


def thin_residue(h: Hypergroup) -> int:
    """Smallest strongly normal closed subset, computed two ways.

    Route one intersects all strongly normal members of the lattice;
    route two closes the union of the sets star(x)·x.  The two must agree
    and the result must itself be strongly normal.
    """
    got = h.__dict__.get("_thin_residue")
    if got is not None:
        return got
    lat = all_closed_subsets(h)
    meet = h.full
    for m in lat.strongly_normal_members():
        meet &= m
    gen = 0
    for x in h.elements():
        gen |= h.table[h.star[x]][x]
    closed_route = generated_closure(h, gen)
    if meet != closed_route:
        raise InternalMismatch(
            f"thin residue mismatch: lattice meet {members(meet)} vs "
            f"commutator closure {members(closed_route)}")
    if not is_strongly_normal(h, meet):
        raise InternalMismatch("thin residue is not strongly normal")
    h.__dict__["_thin_residue"] = meet
    return meet


def _step_quotient(h: Hypergroup, small: int, big: int):
    """Quotient of the sub-hypergroup on `big` over `small`."""
    sub, elems = sub_hypergroup(h, big)
    return build_quotient(sub, to_sub_mask(small, elems))


def is_solvable(h: Hypergroup) -> tuple[bool, tuple[int, ...] | None, tuple[int, ...] | None]:
    """Search the lattice for a chain with thin quotients of prime order.

    Returns (verdict, chain of masks from the trivial subset to the whole
    set, per-step quotient orders).  The search is depth-first in lattice
    order with memoised dead ends, so the witness is deterministic and a
    failure is exhaustive.
    """
    got = h.__dict__.get("_solvable")
    if got is not None:
        return got
    lat = all_closed_subsets(h)
    dead: set[int] = set()

    def extend(f: int) -> list[int] | None:
        if f == h.full:
            return [f]
        if f in dead:
            return None
        for k in lat.supersets(f):
            if not lat.strongly_normal_in(f, k):
                continue
            q = _step_quotient(h, f, k)
            if not q.induced.is_thin() or not _is_prime(q.induced.order):
                continue
            tail = extend(k)
            if tail is not None:
                return [f] + tail
        dead.add(f)
        return None

    chain = extend(1)
    if chain is None:
        out = (False, None, None)
    else:
        orders = tuple(len(_step_quotient(h, chain[i], chain[i + 1]))
                       for i in range(len(chain) - 1))
        out = (True, tuple(chain), orders)
    h.__dict__["_solvable"] = out
    return out


def _rt_chains(h: Hypergroup) -> tuple[list[tuple[int, ...]], bool]:
    """All complete chains with thin step quotients, capped at MAX_RT_CHAINS."""
    got = h.__dict__.get("_rt_chains")
    if got is not None:
        return got
    lat = all_closed_subsets(h)
    chains: list[tuple[int, ...]] = []
    truncated = False
    dead: set[int] = set()

    def walk(f: int, prefix: list[int]) -> bool:
        """Extend prefix from f; report whether any completion exists."""
        nonlocal truncated
        if f == h.full:
            if len(chains) < MAX_RT_CHAINS:
                chains.append(tuple(prefix))
            else:
                truncated = True
            return True
        if f in dead:
            return False
        any_done = False
        for k in lat.supersets(f):
            if lat.strongly_normal_in(f, k):
                if walk(k, prefix + [k]):
                    any_done = True
        if not any_done:
            dead.add(f)
        return any_done

    walk(1, [1])
    out = (chains, truncated)
    h.__dict__["_rt_chains"] = out
    return out


def valency(h: Hypergroup) -> int:
    """Product of step-quotient orders along a thin-quotient chain.

    Raises NotRT when no chain exists, InternalMismatch if two chains
    disagree on the product (chain independence is checked, not assumed).
    """
    got = h.__dict__.get("_valency")
    if got is not None:
        return got
    chains, _truncated = _rt_chains(h)
    if not chains:
        raise NotRT("no chain of closed subsets with thin quotients")
    values = set()
    for chain in chains:
        v = 1
        for small, big in zip(chain, chain[1:]):
            v *= len(_step_quotient(h, small, big))
        values.add(v)
    if len(values) != 1:
        raise InternalMismatch(f"valency is chain dependent: {sorted(values)}")
    out = values.pop()
    h.__dict__["_valency"] = out
    return out


@dataclass(frozen=True)
class RTReport:
    chain: tuple[int, ...]
    step_orders: tuple[int, ...]
    valency: int
    chain_count: int
    chains_truncated: bool
    p_subsets: dict[int, tuple[int, ...]]
    sylow: dict[int, tuple[int, ...]]
    non_rt_closed: tuple[int, ...]


def _prime_power(n: int) -> int | None:
    """The prime p with n a power of p, or None (1 is a power of anything)."""
    if n == 1:
        return 1
    for p in range(2, n + 1):
        if n % p == 0:
            while n % p == 0:
                n //= p
            return p if n == 1 else None
    return None


def rt_analysis(h: Hypergroup) -> RTReport:
    """Witness chain, valency, and the p-subset / Sylow classification.

    A closed subset qualifies as a p-subset only when it is itself RT as
    a standalone hypergroup (its valency is undefined otherwise); the
    ones that are not are reported separately rather than dropped.
    """
    chains, truncated = _rt_chains(h)
    if not chains:
        raise NotRT("no chain of closed subsets with thin quotients")
    n_h = valency(h)
    chain = min(chains, key=lambda c: (len(c), c))
    step_orders = tuple(len(_step_quotient(h, a, b)) for a, b in zip(chain, chain[1:]))

    primes = []
    rest = n_h
    p = 2
    while rest > 1:
        if rest % p == 0:
            primes.append(p)
            while rest % p == 0:
                rest //= p
        p += 1

    lat = all_closed_subsets(h)
    sub_valency: dict[int, int | None] = {}
    non_rt = []
    for c in lat.masks:
        sub, _elems = sub_hypergroup(h, c)
        try:
            sub_valency[c] = valency(sub)
        except NotRT:
            sub_valency[c] = None
            non_rt.append(c)

    p_subsets: dict[int, tuple[int, ...]] = {}
    sylow: dict[int, tuple[int, ...]] = {}
    for p in primes:
        ps = [c for c, v in sub_valency.items()
              if v is not None and _prime_power(v) in (1, p)]
        p_subsets[p] = tuple(ps)
        sylow[p] = tuple(c for c in ps
                         if n_h % sub_valency[c] == 0
                         and (n_h // sub_valency[c]) % p != 0)

    return RTReport(chain=chain, step_orders=step_orders, valency=n_h,
                    chain_count=len(chains), chains_truncated=truncated,
                    p_subsets=p_subsets, sylow=sylow, non_rt_closed=tuple(non_rt))


# --- statement verification -------------------------------------------------

@dataclass(frozen=True)
class Verdict:
    statement: str
    status: str
    witness: str | None = None


def _holds(sid: str) -> Verdict:
    return Verdict(sid, HOLDS)


def _skip(sid: str, why: str) -> Verdict:
    return Verdict(sid, HYPOTHESIS_NOT_MET, why)


def _violated(sid: str, witness: str) -> Verdict:
    return Verdict(sid, VIOLATED, witness)


def _check_thm_center(h: Hypergroup, sid: str) -> Verdict:
    nil, _ = is_nilpotent(h)
    if not nil:
        return _skip(sid, "not nilpotent")
    if inv_hypercenter(h) == h.full:
        return _holds(sid)
    return _violated(sid, f"hypercenter stalls at {members(inv_hypercenter(h))}")


def _check_thm_ct(h: Hypergroup, sid: str) -> Verdict:
    if inv_hypercenter(h) != h.full:
        return _skip(sid, "hypercenter never reaches the whole set")
    q = build_quotient(h, thin_residue(h))
    if is_nilpotent(q.induced)[0]:
        return _holds(sid)
    return _violated(sid, "quotient over the thin residue is not nilpotent")


def _check_thm_strongly(h: Hypergroup, sid: str) -> Verdict:
    if not is_nilpotent(h)[0]:
        return _skip(sid, "not nilpotent")
    lat = all_closed_subsets(h)
    for m in lat.masks:
        if m != 1 and not lat.is_strongly_subnormal(m):
            return _violated(sid, f"closed subset {members(m)} not strongly subnormal")
    return _holds(sid)


def _check_thm_ns(h: Hypergroup, sid: str) -> Verdict:
    if not is_nilpotent(h)[0]:
        return _skip(sid, "not nilpotent")
    ok, _chain, _orders = is_solvable(h)
    if ok:
        return _holds(sid)
    return _violated(sid, "no solvability chain exists")


def _check_prop_s(h: Hypergroup, sid: str) -> Verdict:
    if not is_nilpotent(h)[0]:
        return _skip(sid, "not nilpotent")
    for m in all_closed_subsets(h).masks:
        sub, _ = sub_hypergroup(h, m)
        if not is_nilpotent(sub)[0]:
            return _violated(sid, f"closed subset {members(m)} is not nilpotent")
    return _holds(sid)


def _check_prop_nq(h: Hypergroup, sid: str) -> Verdict:
    if not is_nilpotent(h)[0]:
        return _skip(sid, "not nilpotent")
    for m in all_closed_subsets(h).masks:
        if not is_normal(h, m):
            continue
        q = build_quotient(h, m)
        if not is_nilpotent(q.induced)[0]:
            return _violated(sid, f"quotient over {members(m)} is not nilpotent")
    return _holds(sid)


def _check_lem_cq(h: Hypergroup, sid: str) -> Verdict:
    lat = all_closed_subsets(h)
    normals = [m for m in lat.masks if is_normal(h, m)]
    for f in normals:
        q = build_quotient(h, f)
        for c in lat.masks:
            pc = project_subset(q, c)
            for d in lat.masks:
                lhs = commutator_subset(q.induced, pc, project_subset(q, d))
                rhs = project_subset(q, h.set_product(commutator_subset(h, c, d), f))
                if lhs != rhs:
                    return _violated(
                        sid, f"kernel {members(f)}, C {members(c)}, D {members(d)}")
    return _holds(sid)


def _series_term(series: tuple[int, ...], s: int) -> int:
    """Term number s (1-based) of a stabilised series."""
    return series[min(s - 1, len(series) - 1)]


def _check_cor_n(h: Hypergroup, sid: str) -> Verdict:
    base = lower_central_series(h)
    for f in all_closed_subsets(h).masks:
        if not is_normal(h, f):
            continue
        q = build_quotient(h, f)
        quo = lower_central_series(q.induced)
        for s in range(1, max(len(base), len(quo)) + 2):
            lhs = _series_term(quo, s)
            rhs = project_subset(q, h.set_product(_series_term(base, s), f))
            if lhs != rhs:
                return _violated(sid, f"kernel {members(f)}, term {s}")
    return _holds(sid)


def _check_lem_cen(h: Hypergroup, sid: str) -> Verdict:
    for f in all_closed_subsets(h).masks:
        if commutator_subset(h, h.full, f) != 1:
            continue
        for x in h.elements():
            for y in bits(f):
                if not h.commutes(x, y):
                    return _violated(sid, f"subset {members(f)}, pair ({x},{y})")
    return _holds(sid)


def _check_lem_qu(h: Hypergroup, sid: str) -> Verdict:
    res = thin_residue(h)
    for f in all_closed_subsets(h).masks:
        if not is_normal(h, f):
            continue
        q = build_quotient(h, f)
        lhs = project_subset(q, h.set_product(res, f))
        rhs = thin_residue(q.induced)
        if lhs != rhs:
            return _violated(sid, f"kernel {members(f)}")
    return _holds(sid)


def _check_lem_sn(h: Hypergroup, sid: str) -> Verdict:
    lat = all_closed_subsets(h)
    for k in lat.masks:
        for f in lat.masks:
            if k & ~f:
                continue
            q = build_quotient(h, k)
            pf = project_subset(q, f)
            assert is_closed(q.induced, pf)
            lhs = strong_normalizer(q.induced, pf)
            rhs = project_subset(q, strong_normalizer(h, f))
            if lhs != rhs:
                return _violated(sid, f"kernel {members(k)}, subset {members(f)}")
    return _holds(sid)


def _check_lem_main1(h: Hypergroup, sid: str) -> Verdict:
    for term in closed_center_series(h):
        if not is_closed(h, term) or not is_normal(h, term):
            return _violated(sid, f"series term {members(term)}")
    return _holds(sid)


def _check_lem_com(h: Hypergroup, sid: str) -> Verdict:
    for term in lower_central_series(h):
        if not is_strongly_normal(h, term):
            return _violated(sid, f"series term {members(term)}")
    return _holds(sid)


STATEMENTS: dict[str, tuple[str, object]] = {
    "thm-center": ("nilpotent implies the closed center series reaches the whole set",
                   _check_thm_center),
    "thm-ct": ("a full hypercenter forces the thin-residue quotient to be nilpotent",
               _check_thm_ct),
    "thm-strongly": ("in a nilpotent hypergroup every nontrivial closed subset is "
                     "strongly subnormal", _check_thm_strongly),
    "thm-ns": ("nilpotent implies solvable", _check_thm_ns),
    "prop-s": ("closed subsets of a nilpotent hypergroup are nilpotent", _check_prop_s),
    "prop-nq": ("quotients of a nilpotent hypergroup over normal closed subsets are "
                "nilpotent", _check_prop_nq),
    "lem-cq": ("commutators commute with quotients", _check_lem_cq),
    "cor-n": ("lower central terms of a quotient are the pushed-forward terms",
              _check_cor_n),
    "lem-cen": ("a trivial commutator subset forces elementwise commuting",
                _check_lem_cen),
    "lem-qu": ("the thin residue pushes forward through quotients", _check_lem_qu),
    "lem-sn": ("strong normalizers commute with quotients", _check_lem_sn),
    "lem-main1": ("closed center series terms are normal closed subsets",
                  _check_lem_main1),
    "lem-com": ("lower central terms are strongly normal", _check_lem_com),
}


def statement_ids() -> tuple[str, ...]:
    return tuple(STATEMENTS)


def verify_statement(h: Hypergroup, statement_id: str) -> Verdict:
    try:
        _desc, fn = STATEMENTS[statement_id]
    except KeyError:
        raise UnknownStatement(statement_id) from None
    return fn(h, statement_id)
