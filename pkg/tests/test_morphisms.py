import pytest

from hyperring import (
    commutes,
    compose,
    enumerate_endomorphisms,
    good_homomorphism,
    identity_endomorphism,
    image_ideal,
    is_good_homomorphism,
    is_hyperideal,
    kernel,
    make_zn_multiplier_ring,
    preimage_ideal,
    proper_hyperideals,
    scale_endomorphism,
    trivial_ring,
    zero_ideal,
)
from hyperring.corpus import fixture_full_cell
from hyperring.errors import BadHomomorphism, CapExceeded


class TestGoodness:
    def test_tripling_good_on_r6(self, r6):
        ok, witness = is_good_homomorphism(tuple(3 * x % 6 for x in range(6)), r6, r6)
        assert ok and witness is None

    def test_doubling_not_good_on_r6(self, r6):
        ok, witness = is_good_homomorphism(tuple(2 * x % 6 for x in range(6)), r6, r6)
        assert not ok
        assert witness == ("multiplicative", 1, 1)

    def test_identity_always_good(self, r6, r12):
        for ring in (r6, r12, fixture_full_cell()):
            ok, _ = is_good_homomorphism(tuple(range(ring.order)), ring, ring)
            assert ok

    def test_constructor_raises_with_witness(self, r6):
        with pytest.raises(BadHomomorphism) as info:
            good_homomorphism(r6, r6, tuple(2 * x % 6 for x in range(6)))
        assert info.value.witness is not None

    def test_zero_map_good_only_when_zero_square_collapses(self, r6):
        # on the full-cell ring 0 o 0 is the whole carrier, so the zero map
        # breaks the multiplicative law
        full2 = fixture_full_cell()
        ok, _ = is_good_homomorphism((0, 0), full2, full2)
        assert not ok
        ok, _ = is_good_homomorphism((0,) * 6, r6, r6)
        assert ok


class TestEnumeration:
    def test_r6_endos(self, r6):
        endos = enumerate_endomorphisms(r6)
        assert [e.name for e in endos] == ["zero", "id", "scale3", "scale4"]

    def test_r5_endos(self, r5):
        assert [e.name for e in enumerate_endomorphisms(r5)] == ["zero", "id"]

    def test_trivial_ring_single_endo(self):
        ring = trivial_ring()
        assert len(enumerate_endomorphisms(ring)) == 1

    def test_identity_always_listed(self, r6, r12):
        for ring in (r6, r12, fixture_full_cell()):
            names = [e.map for e in enumerate_endomorphisms(ring)]
            assert tuple(range(ring.order)) in names

    def test_cap(self):
        big = make_zn_multiplier_ring(20, [3])
        with pytest.raises(CapExceeded):
            enumerate_endomorphisms(big, max_order=16)

    def test_noncyclic_addition_is_covered(self, r6, r5):
        # the product of two rings has a 2-generator addition; enumeration
        # must still find exactly the componentwise-compatible maps
        from hyperring import product_ring

        small = product_ring(make_zn_multiplier_ring(2, [1]), make_zn_multiplier_ring(2, [1]))
        endos = enumerate_endomorphisms(small.ring)
        assert tuple(range(4)) in [e.map for e in endos]
        assert all(is_good_homomorphism(e.map, small.ring, small.ring)[0] for e in endos)
        assert len(endos) >= 4


class TestKernelImagePreimage:
    def test_kernel_examples(self, r6, r5, r6_scale3):
        assert kernel(r6_scale3).elements == frozenset({0, 2, 4})
        assert kernel(identity_endomorphism(r6)).elements == zero_ideal(r6).elements
        zero_map = scale_endomorphism(r5, 0)
        assert kernel(zero_map).elements == frozenset(range(5))
        assert not kernel(zero_map).proper

    def test_kernel_uses_generated_zero_ideal(self):
        full2 = fixture_full_cell()
        ident = identity_endomorphism(full2)
        assert kernel(ident).elements == frozenset({0, 1})

    def test_kernel_always_hyperideal(self, r6, r12):
        for ring in (r6, r12):
            for endo in enumerate_endomorphisms(ring):
                assert is_hyperideal(ring, kernel(endo).elements)

    def test_preimage_examples(self, r6, i03, i024, r6_scale3, r6_scale4):
        assert preimage_ideal(identity_endomorphism(r6), i03).elements == i03.elements
        pre = preimage_ideal(r6_scale3, i03)
        assert pre.elements == frozenset(range(6))
        assert not pre.proper
        assert preimage_ideal(r6_scale4, i024).elements == frozenset(range(6))

    def test_image_examples(self, r6, i03, i024, r6_scale3, r6_scale4):
        assert image_ideal(identity_endomorphism(r6), i03).elements == i03.elements
        assert image_ideal(r6_scale3, i024).elements == frozenset({0})
        assert image_ideal(r6_scale4, i03).elements == frozenset({0})

    def test_image_preimage_relationship(self, r6):
        for endo in enumerate_endomorphisms(r6):
            for ideal in proper_hyperideals(r6):
                pre = endo.preimage_of(ideal.elements)
                assert endo.image_of(pre) <= ideal.elements
                if endo.is_surjective:
                    assert endo.image_of(pre) == ideal.elements & endo.image_of(
                        frozenset(range(r6.order))
                    )


class TestComposition:
    def test_compose_is_good(self, r6):
        endos = enumerate_endomorphisms(r6)
        for f in endos:
            for g in endos:
                combined = compose(f, g)
                ok, _ = is_good_homomorphism(combined.map, r6, r6)
                assert ok

    def test_commutes_examples(self, r6, r6_scale3, r6_scale4, r6_id):
        assert commutes(r6_id, r6_scale3, r6_scale3)
        assert commutes(r6_scale3, r6_scale4, r6_scale4)
        assert not commutes(r6_scale3, r6_id, r6_scale4)
