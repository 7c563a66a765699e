from collections import Counter

from hyperring.corpus import (
    CorpusConfig,
    corpus_rings,
    DEFAULT_CONFIG,
    fixture_even_multipliers,
    fixture_full_cell,
    fixture_inclusion_only,
    fixture_weak_identity,
    generate_corpus,
    large_product,
)
from hyperring.verifier import KIND_PRODUCT, KIND_RING_ALPHA_IDEAL


class TestFixtures:
    def test_weak_identity_ring(self):
        ring = fixture_weak_identity()
        assert ring.props.identity == 1
        assert ring.props.identity_flavor == "weak"

    def test_inclusion_only_ring(self):
        ring = fixture_inclusion_only()
        assert not ring.props.strongly_distributive
        assert ring.props.commutative

    def test_full_cell_ring(self):
        ring = fixture_full_cell()
        assert not ring.props.zero_absorbing
        assert ring.props.strongly_distributive

    def test_even_multiplier_ring(self):
        ring = fixture_even_multipliers()
        assert ring.order == 8
        assert ring.props.zero_absorbing

    def test_large_product(self):
        product = large_product()
        assert product.ring.order == 1225
        assert product.ring.props.commutative
        assert product.ring.props.zero_absorbing
        assert product.ring.props.identity_flavor == "weak"


class TestGeneration:
    def test_singleton_config_yields_one_ring(self):
        config = CorpusConfig(
            modulus_min=5,
            modulus_max=5,
            multiplier_sets=((2,),),
            include_fixtures=False,
            include_homs=False,
            include_products=False,
            include_large_product=False,
        )
        rings = corpus_rings(config)
        assert [r.name for r in rings] == ["Z5[2]"]

    def test_r6_contributes_twelve_triples(self):
        corpus = generate_corpus(DEFAULT_CONFIG)
        triples = [
            inst
            for inst in corpus
            if inst.kind == KIND_RING_ALPHA_IDEAL and inst.ring.name == "Z6[2]"
        ]
        assert len(triples) == 12  # 4 endomorphisms x 3 proper hyperideals

    def test_uids_unique_and_stable(self):
        corpus = generate_corpus(DEFAULT_CONFIG)
        uids = [inst.uid for inst in corpus]
        assert len(uids) == len(set(uids))
        again = generate_corpus(DEFAULT_CONFIG)
        assert [i.uid for i in again] == uids

    def test_tables_deduplicated(self):
        config = CorpusConfig(
            modulus_min=2,
            modulus_max=4,
            include_fixtures=False,
            include_homs=False,
            include_products=False,
            include_large_product=False,
        )
        rings = corpus_rings(config)
        tables = [(r.order, r.hyp) for r in rings]
        assert len(tables) == len(set(tables))

    def test_kind_mix_present(self):
        corpus = generate_corpus(DEFAULT_CONFIG)
        kinds = Counter(inst.kind for inst in corpus)
        assert set(kinds) == {
            "ring_alpha_ideal", "ring_alpha", "ring_ideal", "hom", "product",
        }
        assert kinds[KIND_PRODUCT] >= 10

    def test_large_product_instances_present(self):
        corpus = generate_corpus(DEFAULT_CONFIG)
        big = [i for i in corpus if i.kind == KIND_PRODUCT and i.ring.order == 1225]
        assert len(big) == 3
        box = next(
            i for i in big if i.left_ideal.proper and i.right_ideal.proper
        )
        assert len(box.ideal.elements) == 35
