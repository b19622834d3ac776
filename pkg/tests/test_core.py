from itertools import product

import pytest

from hyperalg.core import (
    AmbiguousInverse,
    AssocViolation,
    EmptyProduct,
    ExchangeViolation,
    IdentityViolation,
    NoInverse,
    is_group_check,
    mask_of,
    members,
    validate,
)

C2 = [[1, 2], [2, 1]]
NONTHIN2 = [[1, 2], [2, 3]]

# Order-3 tables that pass the early checks and die on one specific axiom,
# mined from the exhaustive sweep.
ASSOC_BAD3 = [[1, 2, 4], [2, 1, 2], [4, 1, 2]]
EXCH_BAD3 = [[1, 2, 4], [2, 2, 7], [4, 2, 5]]


def test_validate_c2():
    h = validate(2, C2)
    assert h.order == 2 and h.star == (0, 1)
    assert h.table == ((1, 2), (2, 1))


def test_validate_accepts_member_lists():
    h = validate(2, [[[0], [1]], [[1], [0, 1]]])
    assert h.table == ((1, 2), (2, 3))


def test_no_inverse_when_identity_never_appears():
    with pytest.raises(NoInverse) as err:
        validate(2, [[1, 2], [2, 2]])  # a·a = {a}
    assert err.value.witness == 1 and err.value.count == 1


def test_nonthin_order2_is_valid():
    h = validate(2, NONTHIN2)
    assert h.star == (0, 1)
    assert not h.is_thin_element(1)


def test_empty_product_reported_with_count():
    with pytest.raises(EmptyProduct) as err:
        validate(2, [[1, 0], [2, 0]])
    assert err.value.witness == (0, 1) and err.value.count == 2


def test_identity_violation():
    with pytest.raises(IdentityViolation) as err:
        validate(2, [[1, 2], [3, 1]])
    assert err.value.witness == 1


def test_ambiguous_inverse():
    # row 1 sees the identity in two cells
    with pytest.raises(AmbiguousInverse) as err:
        validate(3, [[1, 2, 4], [2, 1, 1], [4, 4, 1]])
    assert err.value.witness == 1 and err.value.count == 1


def test_assoc_violation_witness():
    with pytest.raises(AssocViolation) as err:
        validate(3, ASSOC_BAD3)
    assert err.value.witness == (1, 1, 2) and err.value.count == 7


def test_exchange_violation_witness():
    with pytest.raises(ExchangeViolation) as err:
        validate(3, EXCH_BAD3)
    assert err.value.witness == (1, 0, 1) and err.value.count == 4


def test_order_bounds():
    with pytest.raises(ValueError):
        validate(0, [])
    with pytest.raises(ValueError):
        validate(65, [[1] * 65] * 65)
    with pytest.raises(ValueError):
        validate(2, [[1, 2]])  # not square


def test_trivial_hypergroup():
    h = validate(1, [[1]])
    assert h.is_thin() and h.star == (0,)


def test_set_product_basics(nonthin2):
    h = validate(2, C2)
    assert h.set_product(2, 1) == 2          # {a}·{1} = {a}
    assert h.set_product(0, 3) == 0          # empty operand
    assert nonthin2.set_product(3, 3) == 3   # {1,a}·{1,a} = {1,a}


def test_set_star():
    h = validate(2, C2)
    assert h.set_star(1) == 1
    assert h.set_star(2) == 2


def test_set_star_is_involution(small_corpus):
    for h in small_corpus:
        for s in range(h.full + 1):
            assert h.set_star(h.set_star(s)) == s


def test_thin_parts(c2_thin, nonthin2, s3):
    assert c2_thin.thin_part == c2_thin.full and c2_thin.is_thin()
    assert nonthin2.thin_part == 1 and not nonthin2.is_thin()
    assert s3.is_thin()
    for h in (c2_thin, nonthin2, s3):
        assert h.thin_part & 1


def test_is_group_check_agrees_with_thinness(small_corpus):
    for h in small_corpus:
        assert is_group_check(h) == h.is_thin()


def test_star_antihomomorphism_exhaustive(small_corpus):
    """star(A·B) = star(B)·star(A), checked over every subset pair."""
    for h in small_corpus:
        if h.order > 3:
            continue
        for a in range(h.full + 1):
            for b in range(h.full + 1):
                assert h.set_star(h.set_product(a, b)) == \
                    h.set_product(h.set_star(b), h.set_star(a))


def test_identity_membership_characterises_inverses(small_corpus):
    for h in small_corpus:
        for p in h.elements():
            for q in h.elements():
                has_identity = bool(h.table[p][q] & 1)
                assert has_identity == (q == h.star[p])
                assert has_identity == (p == h.star[q])


# A valid order-4 hypergroup falsifying "identity in the commutator implies
# commuting": cells (1,2) = {2} and (2,1) = {1,2} intersect without being
# equal, yet 1 ∈ [1,2].  Found by the exhaustive order-4 sweep and pinned
# here; re-validated from scratch on every run.
COMMUTATION_COUNTEREXAMPLE = [
    [1, 2, 4, 8],
    [2, 2, 4, 15],
    [4, 6, 15, 4],
    [8, 11, 12, 8],
]


def _commutator(h, a, b):
    return h.set_product_many(1 << h.star[a], 1 << h.star[b], 1 << a, 1 << b)


def test_commuting_implies_identity_in_commutator(small_corpus):
    for h in small_corpus:
        for a in h.elements():
            for b in h.elements():
                if h.commutes(a, b):
                    assert _commutator(h, a, b) & 1


def test_identity_in_commutator_iff_products_intersect(small_corpus):
    for h in small_corpus + [validate(4, COMMUTATION_COUNTEREXAMPLE)]:
        for a in h.elements():
            for b in h.elements():
                meets = bool(h.table[a][b] & h.table[b][a])
                assert bool(_commutator(h, a, b) & 1) == meets


def test_singleton_commutator_forces_commuting(small_corpus):
    for h in small_corpus + [validate(4, COMMUTATION_COUNTEREXAMPLE)]:
        for a in h.elements():
            for b in h.elements():
                if _commutator(h, a, b) == 1:
                    assert h.commutes(a, b)


def test_commutation_biconditional_holds_up_to_order_3(small_corpus):
    for h in small_corpus:
        if h.order > 3:
            continue
        for a in h.elements():
            for b in h.elements():
                assert h.commutes(a, b) == bool(_commutator(h, a, b) & 1)


def test_commutation_biconditional_fails_at_order_4():
    h = validate(4, COMMUTATION_COUNTEREXAMPLE)  # passes all axioms
    assert h.star == (0, 3, 2, 1)
    assert h.table[1][2] == 4 and h.table[2][1] == 6  # {2} vs {1,2}
    assert not h.commutes(1, 2)
    assert _commutator(h, 1, 2) & 1  # identity in the commutator anyway


def test_revalidation_reproduces_star(small_corpus):
    for h in small_corpus:
        again = validate(h.order, h.table)
        assert again.star == h.star and again.table == h.table


def test_subset_associativity_exhaustive(enum2, enum3):
    for h in list(enum2.survivors) + list(enum3.survivors):
        full = h.full
        for a, b, c in product(range(full + 1), repeat=3):
            assert h.set_product(a, h.set_product(b, c)) == \
                h.set_product(h.set_product(a, b), c)


def test_mask_helpers():
    assert mask_of([0, 2, 5]) == 0b100101
    assert members(0b100101) == (0, 2, 5)
    assert members(0) == ()
