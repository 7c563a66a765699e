"""Finite multiplicative hyperrings: structures, ideals, and verification."""

from .core import (
    ElementSet,
    HyperRing,
    RawRing,
    StructureProps,
    is_nilpotent,
    is_unit,
    make_zn_multiplier_ring,
    power,
    power_orbit,
    set_product,
    set_sum,
    structure_properties,
    trivial_ring,
    validate_structure,
)
from .ideals import (
    HyperIdeal,
    alpha_nilradical,
    alpha_radical,
    as_hyperideal,
    colon,
    d_radical_set,
    enumerate_hyperideals,
    generate_hyperideal,
    is_alpha_integral_hyperdomain,
    is_alpha_prime,
    is_c_hyperideal,
    is_hyperideal,
    is_maximal,
    is_primary,
    is_prime,
    nilradical,
    prime_radical,
    proper_hyperideals,
    radical_detail,
    sum_ideals,
    zero_divisors,
    zero_ideal,
)
from .morphisms import (
    Homomorphism,
    commutes,
    compose,
    enumerate_endomorphisms,
    good_homomorphism,
    identity_endomorphism,
    image_ideal,
    is_good_homomorphism,
    kernel,
    preimage_ideal,
    scale_endomorphism,
)
from .constructions import (
    ProductRing,
    QuotientRing,
    induced_quotient_endo,
    product_endomorphism,
    product_ideal,
    product_ring,
    quotient_ring,
)
from .verifier import (
    Instance,
    TheoremCheck,
    VerdictReport,
    catalog,
    catalog_ids,
    check,
    render_report,
    reverify_witness,
    run_suite,
    summarize,
    unledgered_failures,
)
from .corpus import CorpusConfig, DEFAULT_CONFIG, generate_corpus, worked_example_records

__version__ = "0.1.0"
