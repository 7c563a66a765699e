import pytest
from hypothesis import given, settings, strategies as st

from hyperring import (
    RawRing,
    is_nilpotent,
    is_unit,
    make_zn_multiplier_ring,
    power,
    power_orbit,
    set_product,
    structure_properties,
    trivial_ring,
    validate_structure,
)
from hyperring.errors import (
    BadModulus,
    EmptyMultiplierSet,
    EmptyProduct,
    ForeignElement,
    IdentityClaimFalse,
    NoIdentity,
    NotAGroup,
    ValidationError,
)


def _raw_from(ring, **overrides):
    fields = dict(
        order=ring.order, zero=ring.zero, add=ring.add, neg=ring.neg,
        hyp=ring.hyp, name=ring.name,
    )
    fields.update(overrides)
    return RawRing(**fields)


class TestValidateStructure:
    def test_r6_valid_with_props(self, r6):
        assert r6.props.commutative
        assert r6.props.strongly_distributive
        assert r6.props.zero_absorbing
        assert r6.props.identity is None

    def test_r12_not_strongly_distributive(self, r12):
        assert r12.props.commutative
        assert not r12.props.strongly_distributive
        assert r12.props.zero_absorbing

    def test_trivial_ring(self):
        ring = trivial_ring()
        assert ring.order == 1
        assert ring.props.zero_absorbing

    def test_revalidation_is_idempotent(self, r6, r12):
        for ring in (r6, r12):
            again = validate_structure(_raw_from(ring))
            assert again.props == ring.props

    def test_non_associative_cell_rejected(self, r6):
        hyp = [list(row) for row in r6.hyp]
        hyp[1][1] = frozenset((1,))
        with pytest.raises(ValidationError):
            validate_structure(_raw_from(r6, hyp=tuple(tuple(r) for r in hyp)))

    def test_empty_cell_rejected(self, r6):
        hyp = [list(row) for row in r6.hyp]
        hyp[2][3] = frozenset()
        with pytest.raises(EmptyProduct):
            validate_structure(_raw_from(r6, hyp=tuple(tuple(r) for r in hyp)))

    def test_broken_group_rejected(self, r6):
        add = [list(row) for row in r6.add]
        add[1][2] = 1
        with pytest.raises(NotAGroup):
            validate_structure(_raw_from(r6, add=tuple(tuple(r) for r in add)))

    def test_false_identity_claim_rejected(self, r6):
        with pytest.raises(IdentityClaimFalse):
            validate_structure(_raw_from(r6, identity=1, identity_flavor="weak"))

    def test_dimension_mismatch_is_a_value_error(self, r6):
        with pytest.raises(ValueError):
            validate_structure(_raw_from(r6, neg=(0, 5, 4)))


class TestZnFamily:
    def test_bad_modulus(self):
        with pytest.raises(BadModulus):
            make_zn_multiplier_ring(1, [1])

    def test_empty_multipliers(self):
        with pytest.raises(EmptyMultiplierSet):
            make_zn_multiplier_ring(6, [])

    def test_multipliers_reduced_mod_n(self):
        ring = make_zn_multiplier_ring(6, [8])
        assert ring.name == "Z6[2]"

    def test_degenerate_multiplier_tag(self, r6, r12):
        assert "degenerate_multiplier" in r6.tags
        assert "degenerate_multiplier" not in r12.tags

    def test_scalar_identity_of_classical_z5(self, z5_classical):
        assert z5_classical.props.identity == 1
        assert z5_classical.props.identity_flavor == "scalar"

    def test_family_invariants_across_moduli(self):
        # commutative and zero-absorbing always; strongly distributive
        # exactly for a single multiplier
        for n, mults in ((4, [2]), (6, [1, 2]), (9, [3, 6]), (10, [7]), (12, [2, 3, 5])):
            ring = make_zn_multiplier_ring(n, mults)
            assert ring.props.commutative
            assert ring.props.zero_absorbing
            assert ring.props.strongly_distributive == (len(set(m % n for m in mults)) == 1)


class TestSetArithmetic:
    def test_set_product_examples(self, r6, r12):
        assert set_product(r6, {1}, {2}) == frozenset({4})
        assert set_product(r12, {1}, {1}) == frozenset({2, 3})
        assert set_product(r6, frozenset(), {1, 2}) == frozenset()

    def test_foreign_element(self, r6):
        with pytest.raises(ForeignElement):
            set_product(r6, {1}, {9})

    def test_power_examples(self, r6):
        assert power(r6, 3, 2) == frozenset({0})
        assert power(r6, 2, 3) == frozenset({2})
        assert power(r6, 5, 1) == frozenset({5})

    def test_orbit_examples(self, r6):
        assert power_orbit(r6, 3) == (frozenset({3}), frozenset({0}))
        assert power_orbit(r6, 2) == (frozenset({2}),)
        assert power_orbit(r6, 0) == (frozenset({0}),)

    def test_orbit_decides_all_powers(self, r12):
        # every later power re-lands on an orbit member
        for x in range(12):
            orbit = set(power_orbit(r12, x))
            for n in range(1, 20):
                assert power(r12, x, n) in orbit

    def test_nilpotence(self, r6):
        assert is_nilpotent(r6, 3)
        assert not is_nilpotent(r6, 2)
        assert is_nilpotent(r6, 0)

    def test_units(self, z5_classical, r6):
        assert is_unit(z5_classical, 3)
        assert not is_unit(z5_classical, 0)
        with pytest.raises(NoIdentity):
            is_unit(r6, 1)


_RINGS = None


def _ring_pool():
    global _RINGS
    if _RINGS is None:
        _RINGS = [
            make_zn_multiplier_ring(6, [2]),
            make_zn_multiplier_ring(12, [2, 3]),
            make_zn_multiplier_ring(8, [0, 2, 4, 6]),
            make_zn_multiplier_ring(9, [3, 4]),
        ]
    return _RINGS


@st.composite
def ring_and_subsets(draw, count=2):
    ring = draw(st.sampled_from(_ring_pool()))
    subsets = [
        frozenset(draw(st.sets(st.integers(0, ring.order - 1), max_size=ring.order)))
        for _ in range(count)
    ]
    return (ring, *subsets)


class TestAlgebraicProperties:
    @settings(max_examples=150, deadline=None)
    @given(ring_and_subsets(count=3))
    def test_set_product_associative(self, data):
        ring, xs, ys, zs = data
        left = set_product(ring, set_product(ring, xs, ys), zs)
        right = set_product(ring, xs, set_product(ring, ys, zs))
        assert left == right

    @settings(max_examples=100, deadline=None)
    @given(ring_and_subsets(count=2))
    def test_set_product_commutative_on_commutative_rings(self, data):
        ring, xs, ys = data
        assert set_product(ring, xs, ys) == set_product(ring, ys, xs)

    def test_power_splits_additively(self):
        for ring in _ring_pool():
            for x in range(ring.order):
                orbit_len = len(power_orbit(ring, x))
                for m in range(1, orbit_len + 1):
                    for k in range(1, orbit_len + 1):
                        assert power(ring, x, m + k) == set_product(
                            ring, power(ring, x, m), power(ring, x, k)
                        )

    def test_structure_properties_matches_validation(self):
        for ring in _ring_pool():
            assert structure_properties(ring) == ring.props
