import pytest

from hyperring import (
    alpha_nilradical,
    alpha_radical,
    as_hyperideal,
    colon,
    d_radical_set,
    enumerate_hyperideals,
    generate_hyperideal,
    identity_endomorphism,
    is_alpha_integral_hyperdomain,
    is_alpha_prime,
    is_c_hyperideal,
    is_hyperideal,
    is_maximal,
    is_primary,
    is_prime,
    make_zn_multiplier_ring,
    nilradical,
    prime_radical,
    proper_hyperideals,
    radical_detail,
    scale_endomorphism,
    sum_ideals,
    zero_divisors,
    zero_ideal,
)
from hyperring.corpus import fixture_full_cell
from hyperring.errors import CapExceeded, EmptySet, NotAHyperideal, NotProper
from hyperring.ideals import alpha_prime_violation, prime_violation


class TestMembershipAndGeneration:
    def test_is_hyperideal_examples(self, r6):
        assert is_hyperideal(r6, {0, 3})
        assert is_hyperideal(r6, {0, 2, 4})
        assert not is_hyperideal(r6, {0, 1})

    def test_as_hyperideal_rejects_with_witness(self, r6):
        with pytest.raises(NotAHyperideal) as info:
            as_hyperideal(r6, {0, 1})
        assert info.value.witness is not None

    def test_generate_examples(self, r6, r12):
        assert generate_hyperideal(r6, {2}).elements == frozenset({0, 2, 4})
        assert generate_hyperideal(r6, {0}).elements == frozenset({0})
        assert generate_hyperideal(r12, {3}).elements == frozenset({0, 3, 6, 9})

    def test_zero_ideal_can_exceed_zero(self):
        full2 = fixture_full_cell()
        assert zero_ideal(full2).elements == frozenset({0, 1})
        assert not zero_ideal(full2).proper

    def test_generated_is_least_containing(self, r6, r12):
        for ring in (r6, r12):
            all_ideals = enumerate_hyperideals(ring)
            for seed in ({1}, {2}, {3}, {0}, {2, 3}):
                seed = {x % ring.order for x in seed}
                generated = generate_hyperideal(ring, seed).elements
                containing = [
                    i.elements for i in all_ideals if seed <= i.elements
                ]
                assert generated == min(containing, key=len)


class TestEnumeration:
    def test_counts(self, r6, r5):
        assert len(enumerate_hyperideals(r6)) == 4
        assert len(enumerate_hyperideals(r5)) == 2

    def test_trivial_ring(self):
        from hyperring import trivial_ring

        ring = trivial_ring()
        ideals = enumerate_hyperideals(ring)
        assert len(ideals) == 1
        assert ideals[0].elements == frozenset({0})

    def test_cap(self):
        big = make_zn_multiplier_ring(18, [2])
        with pytest.raises(CapExceeded):
            enumerate_hyperideals(big, max_order=16)


class TestCStatus:
    def test_examples(self, r6, r12):
        assert is_c_hyperideal(r6, {0, 3}) == "yes"
        assert is_c_hyperideal(r12, {0, 3, 6, 9}) == "no"
        assert is_c_hyperideal(r12, {0, 2, 4, 6, 8, 10}) == "no"

    def test_unknown_on_tiny_caps(self, r12):
        assert is_c_hyperideal(r12, {0, 3, 6, 9}, max_sets=4096, max_ops=3) in (
            "no",
            "unknown",
        )
        assert (
            is_c_hyperideal(r12, frozenset(range(12)), max_sets=2, max_ops=2)
            == "unknown"
        )


class TestPrimeness:
    def test_prime_examples(self, r6, r12, i03, i024):
        assert is_prime(r6, i03)
        assert not is_prime(r6, i024)
        evens = as_hyperideal(r12, set(range(0, 12, 2)))
        assert is_prime(r12, evens)

    def test_improper_raises(self, r6):
        full = as_hyperideal(r6, set(range(6)))
        with pytest.raises(NotProper):
            is_prime(r6, full)

    def test_alpha_prime_examples(self, r6, i03, i024, r6_scale3, r6_id):
        assert is_alpha_prime(r6, i03, r6_scale3)
        assert not is_alpha_prime(r6, i024, r6_scale3)
        assert alpha_prime_violation(r6, i024, r6_scale3) == (1, 1)

    def test_alpha_prime_with_identity_collapses_to_prime(self, r6, r12):
        for ring in (r6, r12):
            ident = identity_endomorphism(ring)
            for ideal in proper_hyperideals(ring):
                assert is_alpha_prime(ring, ideal, ident) == is_prime(ring, ideal)

    def test_mirror_agrees_on_commutative_rings(self, r6, r6_scale3, r6_scale4):
        for ideal in proper_hyperideals(r6):
            for alpha in (r6_scale3, r6_scale4):
                stated = alpha_prime_violation(r6, ideal, alpha) is None
                mirrored = alpha_prime_violation(r6, ideal, alpha, mirrored=True) is None
                assert stated == mirrored

    def test_primary_examples(self, r6, i03, i024):
        assert is_primary(r6, i03)
        assert is_primary(r6, i024)

    def test_zero_ideal_primary_needs_flag(self, r5):
        zero = as_hyperideal(r5, {0})
        assert not is_primary(r5, zero)
        assert is_primary(r5, zero, allow_zero_primary=True)

    def test_maximal_examples(self, r6, r5, i03):
        assert is_maximal(r6, i03)
        assert not is_maximal(r6, as_hyperideal(r6, {0}))
        assert is_maximal(r5, as_hyperideal(r5, {0}))


class TestRadicals:
    def test_prime_radical_examples(self, r6, r5, i03):
        assert prime_radical(r6, {0}) == frozenset({0, 3})
        assert prime_radical(r6, i03.elements) == frozenset({0, 3})
        assert prime_radical(r5, {0}) == frozenset({0})

    def test_radical_of_uncontained_ideal_is_carrier(self, r6):
        # no prime contains the even ideal of the mod-6 ring
        assert prime_radical(r6, {0, 2, 4}) == frozenset(range(6))

    def test_d_set_inside_intersection_everywhere(self):
        for n, mults in ((6, [2]), (12, [2, 3]), (8, [0, 2, 4, 6]), (10, [5, 6])):
            ring = make_zn_multiplier_ring(n, mults)
            for ideal in proper_hyperideals(ring):
                inter, dset, status = radical_detail(ring, ideal.elements)
                assert dset <= inter
                if status == "yes":
                    assert dset == inter

    def test_alpha_radical_examples(self, r6, r6_scale3, r6_id):
        assert alpha_radical(r6, {0}, r6_scale3) == frozenset(range(6))
        assert alpha_radical(r6, {0}, r6_id) == d_radical_set(r6, {0})
        assert alpha_radical(r6, frozenset(range(6)), r6_scale3) == frozenset(range(6))

    def test_alpha_radical_needs_absorption(self):
        full2 = fixture_full_cell()
        from hyperring.errors import NotZeroAbsorbing

        with pytest.raises(NotZeroAbsorbing):
            alpha_radical(full2, {0}, identity_endomorphism(full2))

    def test_nilradicals(self, r6, r5, r6_scale3):
        assert nilradical(r6) == frozenset({0, 3})
        assert alpha_nilradical(r6, r6_scale3) == frozenset(range(6))
        assert alpha_nilradical(r5, scale_endomorphism(r5, 0)) == frozenset(range(5))

    def test_alpha_nilradical_with_identity_is_nilradical(self, r6, r12, r6_id):
        assert alpha_nilradical(r6, r6_id) == nilradical(r6)
        ident12 = identity_endomorphism(r12)
        assert alpha_nilradical(r12, ident12) == nilradical(r12)

    def test_nil_matches_alpha_radical_of_zero_when_absorbing_and_c(self):
        # guarded form: needs absorption and a C zero ideal
        for n, mults in ((6, [2]), (5, [2]), (12, [2, 3])):
            ring = make_zn_multiplier_ring(n, mults)
            zi = zero_ideal(ring)
            if not ring.props.zero_absorbing or zi.c_status != "yes":
                continue
            ident = identity_endomorphism(ring)
            assert alpha_nilradical(ring, ident) == alpha_radical(
                ring, zi.elements, ident
            )

    def test_nilpotence_is_weaker_than_power_membership(self):
        # 3 squares to {0,3} in the {2,3}-multiplier mod-6 ring: it is
        # nilpotent (0 appears) but no power ever collapses into {0}, so
        # the guard on the previous test is necessary
        ring = make_zn_multiplier_ring(6, [2, 3])
        assert 3 in nilradical(ring)
        assert 3 not in d_radical_set(ring, zero_ideal(ring).elements)
        assert zero_ideal(ring).c_status == "no"


class TestIdealArithmetic:
    def test_colon_examples(self, r6, i03):
        assert colon(r6, i03, {3}).elements == frozenset(range(6))
        assert not colon(r6, i03, {3}).proper
        zero = as_hyperideal(r6, {0})
        assert colon(r6, zero, {1}).elements == frozenset({0, 3})
        assert colon(r6, i03, i03.elements).elements == frozenset(range(6))

    def test_colon_needs_nonempty(self, r6, i03):
        with pytest.raises(EmptySet):
            colon(r6, i03, set())

    def test_colon_always_hyperideal(self, r6, r12):
        for ring in (r6, r12):
            for ideal in proper_hyperideals(ring):
                for s in range(ring.order):
                    assert is_hyperideal(ring, colon(ring, ideal, {s}).elements)

    def test_sum_examples(self, r6, i03, i024):
        assert sum_ideals(r6, i03, i024).elements == frozenset(range(6))
        zero = as_hyperideal(r6, {0})
        assert sum_ideals(r6, i03, zero).elements == i03.elements


class TestZeroDivisors:
    def test_examples(self, r6, r5, z7_classical):
        assert zero_divisors(r6) == frozenset(range(6))
        assert zero_divisors(r5) == frozenset({0})
        assert zero_divisors(z7_classical) == frozenset({0})

    def test_diagnostic_variant(self, r5):
        assert zero_divisors(r5, exclude_zero=True) == frozenset()

    def test_integral_hyperdomain(self, r5, r6, r6_id, r6_zero):
        assert is_alpha_integral_hyperdomain(r5, identity_endomorphism(r5))
        assert not is_alpha_integral_hyperdomain(r6, r6_id)
        assert is_alpha_integral_hyperdomain(r6, r6_zero)
