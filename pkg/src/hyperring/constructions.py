"""Quotients, binary products, and the endomorphisms they induce.

Small constructions are re-validated from scratch like any other ring.
Products above the full-check threshold are too large for cubic axiom
sweeps; they use a computed backend whose cells come straight from the
factors, and their validity follows componentwise from the validated
factors (the equivalence of the two paths is asserted on small products).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .core import (
    FLAVOR_NONE,
    FLAVOR_SCALAR,
    FLAVOR_WEAK,
    HyperRing,
    RawRing,
    StructureProps,
    validate_structure,
)
from .errors import (
    BadEndomorphism,
    CapExceeded,
    NotInvariant,
    NotProper,
    NotWellDefined,
)
from .ideals import ConsistencyError, HyperIdeal, as_hyperideal
from .morphisms import (
    Homomorphism,
    good_homomorphism,
    good_homomorphism_violation,
)

PRODUCT_ORDER_CAP = 4096
FULL_CHECK_THRESHOLD = 256


# ---------------------------------------------------------------------------
# quotients


@dataclass(frozen=True, eq=False)
class QuotientRing:
    """R/I with cosets indexed by rank of their smallest member."""

    base: HyperRing
    ideal: HyperIdeal
    cosets: tuple
    ring: HyperRing
    projection: Homomorphism

    def coset_of(self, x: int) -> int:
        return self.projection.map[x]

    def coset_members(self, c: int) -> frozenset:
        return self.cosets[c]


@lru_cache(maxsize=None)
def quotient_ring(base: HyperRing, ideal: HyperIdeal) -> QuotientRing:
    """Build and fully validate R/I.

    The coset product (x+I) o (y+I) collects every coset meeting x o y + I.
    Representative independence is checked over all pairs of the base, and
    the derived tables go through the same axiom validation as any ring.
    """
    if ideal.ring is not base:
        raise NotProper("ideal does not belong to the ring being quotiented")
    if not ideal.proper:
        raise NotProper(f"cannot quotient {base.name} by the full carrier")
    n = base.order
    add = base.add_of
    members = ideal.elements

    coset_key = {}
    cosets = []
    for x in range(n):
        cs = frozenset(add(x, i) for i in members)
        if cs not in coset_key:
            coset_key[cs] = None
            cosets.append(cs)
    cosets.sort(key=min)
    index_of_coset = {cs: c for c, cs in enumerate(cosets)}
    proj = tuple(index_of_coset[frozenset(add(x, i) for i in members)] for x in range(n))
    m = len(cosets)
    zero_c = proj[base.zero]
    if cosets[zero_c] != members:
        raise ConsistencyError("zero coset differs from the ideal")

    qadd = [[None] * m for _ in range(m)]
    qhyp = [[None] * m for _ in range(m)]
    prod = base.product_of
    for x in range(n):
        cx = proj[x]
        for y in range(n):
            cy = proj[y]
            s = proj[add(x, y)]
            if qadd[cx][cy] is None:
                qadd[cx][cy] = s
            elif qadd[cx][cy] != s:
                raise NotWellDefined(
                    f"coset addition depends on representatives at ({x},{y})",
                    witness=(x, y),
                )
            shifted = set()
            for t in prod(x, y):
                for i in members:
                    shifted.add(add(t, i))
            cell = frozenset(index_of_coset[cs] for cs in cosets if cs & shifted)
            if qhyp[cx][cy] is None:
                qhyp[cx][cy] = cell
            elif qhyp[cx][cy] != cell:
                raise NotWellDefined(
                    f"coset product depends on representatives at ({x},{y})",
                    witness=(x, y),
                )

    qneg = [None] * m
    for c in range(m):
        rep = min(cosets[c])
        qneg[c] = proj[base.neg_of(rep)]

    raw = RawRing(
        order=m,
        zero=zero_c,
        add=tuple(tuple(row) for row in qadd),
        neg=tuple(qneg),
        hyp=tuple(tuple(row) for row in qhyp),
        name=f"{base.name}/{'{' + ','.join(str(i) for i in sorted(members)) + '}'}",
        tags=("quotient",),
    )
    ring = validate_structure(raw)
    projection = good_homomorphism(base, ring, proj, name="proj")
    if not projection.is_surjective:
        raise ConsistencyError("quotient projection is not surjective")
    return QuotientRing(base, ideal, tuple(cosets), ring, projection)


@lru_cache(maxsize=None)
def induced_quotient_endo(quotient: QuotientRing, alpha: Homomorphism) -> Homomorphism:
    """alpha* on R/J: alpha*(x + J) = alpha(x) + J.

    Requires alpha(J) <= J; anything else would make the induced map
    representative-dependent, and is reported as an error, never guessed
    around.
    """
    base = quotient.base
    if alpha.source is not base or alpha.target is not base:
        raise BadEndomorphism("alpha is not an endomorphism of the quotiented ring")
    members = quotient.ideal.elements
    if not alpha.image_of(members) <= members:
        raise NotInvariant(
            f"{alpha.name} does not preserve the ideal; no induced map exists"
        )
    proj = quotient.projection.map
    table = [None] * quotient.ring.order
    for x in range(base.order):
        c = proj[x]
        v = proj[alpha.map[x]]
        if table[c] is None:
            table[c] = v
        elif table[c] != v:
            raise NotInvariant(
                f"induced map of {alpha.name} is representative-dependent at {x}"
            )
    return good_homomorphism(
        quotient.ring, quotient.ring, tuple(table), name=f"{alpha.name}*"
    )


# ---------------------------------------------------------------------------
# binary products


class ProductBackedRing(HyperRing):
    """Computes cells from the factors; used above the full-check threshold."""

    __slots__ = ("left", "right")

    def __init__(self, left: HyperRing, right: HyperRing, name: str, props: StructureProps):
        super().__init__(
            order=left.order * right.order,
            zero=left.zero * right.order + right.zero,
            add=None,
            neg=None,
            hyp=None,
            name=name,
            props=props,
            tags=("product", "computed_cells"),
        )
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "right", right)

    def add_of(self, a: int, b: int) -> int:
        o2 = self.right.order
        a1, a2 = divmod(a, o2)
        b1, b2 = divmod(b, o2)
        return self.left.add_of(a1, b1) * o2 + self.right.add_of(a2, b2)

    def neg_of(self, a: int) -> int:
        o2 = self.right.order
        a1, a2 = divmod(a, o2)
        return self.left.neg_of(a1) * o2 + self.right.neg_of(a2)

    def product_of(self, a: int, b: int) -> frozenset:
        o2 = self.right.order
        a1, a2 = divmod(a, o2)
        b1, b2 = divmod(b, o2)
        lefts = self.left.product_of(a1, b1)
        rights = self.right.product_of(a2, b2)
        return frozenset(x * o2 + y for x in lefts for y in rights)

    def sub_of(self, a: int, b: int) -> int:
        return self.add_of(a, self.neg_of(b))


@dataclass(frozen=True, eq=False)
class ProductRing:
    """R1 x R2 with row-major pair indexing (i1 * order2 + i2)."""

    left: HyperRing
    right: HyperRing
    ring: HyperRing

    def pair_index(self, i1: int, i2: int) -> int:
        return i1 * self.right.order + i2

    def pair_of(self, i: int) -> tuple:
        return divmod(i, self.right.order)

    def left_projection(self, i: int) -> int:
        return i // self.right.order

    def right_projection(self, i: int) -> int:
        return i % self.right.order


def _derived_product_props(left: HyperRing, right: HyperRing, order2: int) -> StructureProps:
    lp, rp = left.props, right.props
    if lp.identity is None or rp.identity is None:
        identity, flavor = None, FLAVOR_NONE
    else:
        identity = lp.identity * order2 + rp.identity
        if lp.identity_flavor == FLAVOR_SCALAR and rp.identity_flavor == FLAVOR_SCALAR:
            flavor = FLAVOR_SCALAR
        else:
            flavor = FLAVOR_WEAK
    return StructureProps(
        commutative=lp.commutative and rp.commutative,
        strongly_distributive=lp.strongly_distributive and rp.strongly_distributive,
        zero_absorbing=lp.zero_absorbing and rp.zero_absorbing,
        identity=identity,
        identity_flavor=flavor,
    )


def product_ring(
    left: HyperRing,
    right: HyperRing,
    max_order: int = PRODUCT_ORDER_CAP,
    full_check: bool | None = None,
) -> ProductRing:
    """Componentwise product with (x1,x2) o (y1,y2) = (x1 o y1) x (x2 o y2).

    Products up to the full-check threshold get tables plus a complete
    axiom validation, and the exhaustively computed property record must
    agree with the componentwise derivation.  Larger products keep the
    computed backend with derived properties.
    """
    order = left.order * right.order
    if order > max_order:
        raise CapExceeded(
            f"product order {order} exceeds the cap {max_order}"
        )
    if full_check is None:
        full_check = order <= FULL_CHECK_THRESHOLD
    o2 = right.order
    name = f"({left.name}x{right.name})"
    derived = _derived_product_props(left, right, o2)
    if not full_check:
        ring = ProductBackedRing(left, right, name, derived)
        return ProductRing(left, right, ring)

    add = tuple(
        tuple(
            left.add_of(a // o2, b // o2) * o2 + right.add_of(a % o2, b % o2)
            for b in range(order)
        )
        for a in range(order)
    )
    neg = tuple(left.neg_of(a // o2) * o2 + right.neg_of(a % o2) for a in range(order))
    hyp = tuple(
        tuple(
            frozenset(
                x * o2 + y
                for x in left.product_of(a // o2, b // o2)
                for y in right.product_of(a % o2, b % o2)
            )
            for b in range(order)
        )
        for a in range(order)
    )
    raw = RawRing(
        order=order,
        zero=left.zero * o2 + right.zero,
        add=add,
        neg=neg,
        hyp=hyp,
        name=name,
        tags=("product",),
    )
    ring = validate_structure(raw)
    got = ring.props
    if (
        got.commutative != derived.commutative
        or got.strongly_distributive != derived.strongly_distributive
        or got.zero_absorbing != derived.zero_absorbing
        or got.identity_flavor != derived.identity_flavor
        or (got.identity is None) != (derived.identity is None)
    ):
        raise ConsistencyError(
            f"componentwise property derivation disagrees with the full scan on {name}"
        )
    return ProductRing(left, right, ring)


def product_ideal(product: ProductRing, left_part, right_part) -> HyperIdeal:
    """I1 x I2 as a hyperideal of the product (fully verified)."""
    o2 = product.right.order
    left_els = left_part.elements if isinstance(left_part, HyperIdeal) else frozenset(left_part)
    right_els = right_part.elements if isinstance(right_part, HyperIdeal) else frozenset(right_part)
    members = frozenset(x * o2 + y for x in left_els for y in right_els)
    return as_hyperideal(product.ring, members)


@lru_cache(maxsize=None)
def product_endomorphism(
    product: ProductRing,
    left_alpha: Homomorphism,
    right_alpha: Homomorphism,
    printed_reading: bool = False,
) -> Homomorphism:
    """The componentwise endomorphism (r1, r2) -> (a1(r1), a2(r2)).

    ``printed_reading`` applies the second map to the first coordinate
    instead; it is only type-correct for equal factor orders and almost
    never yields a good endomorphism, so it is verified exhaustively and
    rejected when bad.
    """
    if left_alpha.source is not product.left or left_alpha.target is not product.left:
        raise BadEndomorphism("left map is not an endomorphism of the left factor")
    if right_alpha.source is not product.right or right_alpha.target is not product.right:
        raise BadEndomorphism("right map is not an endomorphism of the right factor")
    o2 = product.right.order
    order = product.ring.order
    am, bm = left_alpha.map, right_alpha.map
    if printed_reading:
        if product.left.order != product.right.order:
            raise BadEndomorphism(
                "the printed reading needs equal factor orders to type-check"
            )
        table = tuple(am[i // o2] * o2 + bm[i // o2] for i in range(order))
        witness = good_homomorphism_violation(table, product.ring, product.ring)
        if witness is not None:
            raise BadEndomorphism(
                f"printed reading is not a good endomorphism ({witness})",
                witness=witness,
            )
        return Homomorphism(
            product.ring, product.ring, table, f"({left_alpha.name},{right_alpha.name})@printed"
        )
    table = tuple(am[i // o2] * o2 + bm[i % o2] for i in range(order))
    name = f"({left_alpha.name},{right_alpha.name})"
    if product.ring.has_tables:
        witness = good_homomorphism_violation(table, product.ring, product.ring)
        if witness is not None:
            raise BadEndomorphism(
                f"componentwise map is not a good endomorphism ({witness})",
                witness=witness,
            )
    return Homomorphism(product.ring, product.ring, table, name)
