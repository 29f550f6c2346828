from fractions import Fraction as F

import pytest

from dimalg import (
    DimensionMapMismatch,
    EndoRing,
    ProductDimRing,
    RationalScalars,
    endo_distributivity_report,
    ring_axiom_report,
)
from dimalg.algebra import ProbeSpace, bilinear_check
from dimalg.errors import CarrierError
from dimalg.monoid import DimMonoid


@pytest.fixture
def endo2():
    base = ProductDimRing(RationalScalars(), DimMonoid.cyclic(2))
    return EndoRing(base)


class TestComposition:
    def test_hand_composed_example(self, endo2):
        # oracle by hand: composing with the swap relabels the coefficients
        f = endo2.endo({0: 0, 1: 1}, {0: F(2), 1: F(3)})
        g = endo2.endo({0: 1, 1: 0}, {0: F(1), 1: F(1)})
        h = endo2.mul(f, g)
        assert endo2.dim_map_of(h) == {0: 1, 1: 0}
        assert endo2.coeff_of(h, 0) == 3 and endo2.coeff_of(h, 1) == 2

    def test_identity_is_neutral(self, endo2, rng):
        for _ in range(20):
            f = endo2.sample(rng)
            assert endo2.eq(endo2.mul(f, endo2.one), f)
            assert endo2.eq(endo2.mul(endo2.one, f), f)

    def test_composition_matches_action_on_base(self, endo2, rng):
        """(F∘G)(x) = F(G(x)) for the action on base-ring elements."""
        for _ in range(30):
            f, g = endo2.sample(rng), endo2.sample(rng)
            x = endo2.base.sample(rng)
            assert endo2.apply_to_base(endo2.mul(f, g), x) == endo2.apply_to_base(
                f, endo2.apply_to_base(g, x)
            )

    def test_addition_needs_equal_dimension_maps(self, endo2):
        f = endo2.endo({0: 0, 1: 1}, {0: F(1), 1: F(1)})
        g = endo2.endo({0: 1, 1: 0}, {0: F(1), 1: F(1)})
        with pytest.raises(DimensionMapMismatch):
            endo2.add(f, g)

    def test_distributivity_both_sides(self, endo2, rng):
        for _ in range(30):
            psi = endo2.sample(rng)
            phi = endo2.sample(rng)
            theta = endo2.sample(rng, dim=phi.dim)
            lhs = endo2.mul(endo2.add(phi, theta), psi)
            rhs = endo2.add(endo2.mul(phi, psi), endo2.mul(theta, psi))
            assert endo2.eq(lhs, rhs)
            lhs = endo2.mul(psi, endo2.add(phi, theta))
            rhs = endo2.add(endo2.mul(psi, phi), endo2.mul(psi, theta))
            assert endo2.eq(lhs, rhs)


class TestSuites:
    def test_axiom_report_small(self, endo2, rng):
        assert ring_axiom_report(endo2, rng).ok

    def test_exhaustive_distributivity_up_to_three_points(self, rng):
        for n in (1, 2, 3):
            base = ProductDimRing(RationalScalars(), DimMonoid.cyclic(n))
            rep = endo_distributivity_report(EndoRing(base))
            assert rep.ok

    def test_needs_finite_dimension_set(self, q_x_z):
        with pytest.raises(CarrierError):
            EndoRing(q_x_z)


class TestModuleStructure:
    def test_base_ring_action(self, endo2, rng):
        """(r·F)(x) = r·F(x) with the dimension map shifted by r's dim."""
        base = endo2.base
        for _ in range(30):
            r = base.sample(rng)
            f = endo2.sample(rng)
            x = base.sample(rng)
            assert endo2.apply_to_base(endo2.act(r, f), x) == base.mul(
                r, endo2.apply_to_base(f, x)
            )

    def test_composition_is_bilinear_over_multiplication_operators(self, endo2, rng):
        """Composition restricted to multiplication operators (the ring
        acting on itself) is a dimensioned bilinear multiplication."""
        base = endo2.base

        def as_operator(r):
            # multiplication by r: constant coefficients, translation on dims
            return endo2.endo(
                {d: base.monoid.combine(r.dim, d) for d in endo2.points},
                {d: r.value for d in endo2.points},
            )

        def translation(g):
            # dimension maps of multiplication operators are translations
            return tuple(base.monoid.combine(g, d) for d in endo2.points)

        space = ProbeSpace(
            sample=lambda rng_: as_operator(base.sample(rng_)),
            sample_like=lambda rng_, a: endo2.sample(rng_, dim=a.dim),
            add=endo2.add,
            eq=endo2.eq,
            dim_of=lambda a: a.dim,
            act=endo2.act,
            sample_ring=base.sample,
            ring_dim_act=lambda g, phi: tuple(
                base.monoid.combine(g, img) for img in phi
            ),
            sample_dim=lambda rng_: translation(base.monoid.sample(rng_)),
        )
        rep = bilinear_check(
            space,
            endo2.mul,
            lambda phi, psi: endo2.map_monoid.combine(phi, psi),
            rng,
            probes=25,
        )
        assert rep.ok, rep.failures
