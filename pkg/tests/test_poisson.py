import itertools
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from dimalg import (
    ConstructionError,
    GradedPolyRing,
    coisotrope_check,
    make_poisson,
    poisson_axiom_report,
    poisson_product_hetero,
    poisson_product_homo,
    poisson_reduce,
)

small_vec = st.tuples(*[st.integers(-5, 5)] * 3)


@given(small_vec, small_vec, small_vec, small_vec, small_vec)
def test_leibniz_term_dimensions_agree(b, p, g, h, k):
    """The three dimension projections appearing in the Leibniz identity
    coincide for any commutative dimension group."""
    add = lambda *vs: tuple(sum(xs) for xs in zip(*vs))
    assert add(b, g, p, h, k) == add(p, b, g, h, k) == add(p, h, b, g, k)


class TestCanonicalBracket:
    def test_hamilton_pairs(self, canonical_poisson):
        ring = canonical_poisson.ring
        # oracle by Leibniz expansion: {q^2, p} = 2q{q, p} = 2q
        assert canonical_poisson.bracket(
            ring.monomial((2, 0)), ring.generator("p")
        ) == ring.poly({(1, 0): F(2)})
        # and {q, p^2} = 2p
        assert canonical_poisson.bracket(
            ring.generator("q"), ring.monomial((0, 2))
        ) == ring.poly({(0, 1): F(2)})

    def test_self_bracket_vanishes(self, canonical_poisson, rng):
        ring = canonical_poisson.ring
        for _ in range(20):
            f = ring.sample(rng)
            assert ring.is_zero(canonical_poisson.bracket(f, f))

    def test_axiom_suite(self, canonical_poisson, rng):
        assert poisson_axiom_report(canonical_poisson, rng).ok

    def test_bracket_dimension_projection(self, canonical_poisson, rng):
        ring = canonical_poisson.ring
        for _ in range(20):
            f, g = ring.sample(rng), ring.sample(rng)
            assert canonical_poisson.bracket(f, g).dim == (f.dim[0] + g.dim[0],)

    def test_broken_table_is_rejected_loudly(self, canonical_ring):
        with pytest.raises(ConstructionError):
            make_poisson(
                canonical_ring,
                {("q", "p"): canonical_ring.one, ("p", "q"): canonical_ring.one},
            )


class TestCoisotropes:
    def test_single_constraint_is_coisotropic(self, canonical_poisson):
        assert coisotrope_check(canonical_poisson, ["q"]).ok

    def test_full_pair_is_not(self, canonical_poisson):
        rep = coisotrope_check(canonical_poisson, ["q", "p"])
        assert not rep.ok
        assert any("outside the ideal" in r.witness for r in rep.failures)

    def test_zero_ideal_is_coisotropic(self, canonical_poisson):
        assert coisotrope_check(canonical_poisson, []).ok


class TestReduction:
    def test_two_generator_reduction_keeps_only_constants(self, canonical_poisson):
        """Oracle: a degree-bounded brute force over monomials, with the
        bracket computed from the closed form
        {q^a p^b, q^c p^d} = (ad - bc) q^(a+c-1) p^(b+d-1)."""
        cutoff = 6

        def oracle_in_idealizer(a, b):
            # {q^a p^b, q} = -b q^a p^(b-1); membership in (q) needs b = 0
            # or a >= 1
            coeff = -(b)
            return coeff == 0 or a >= 1

        survivors = sorted(
            (a, b)
            for a in range(cutoff + 1)
            for b in range(cutoff + 1 - a)
            if oracle_in_idealizer(a, b) and a == 0  # not already in (q)
        )
        red = poisson_reduce(canonical_poisson, ["q"], cutoff)
        got = sorted(m.value[0][0] for m in red.basis)
        assert got == [(a, b) for a, b in survivors]
        assert got == [(0, 0)]  # only the constants survive

    def test_zero_ideal_reduction_is_the_algebra_up_to_cutoff(self, canonical_poisson):
        cutoff = 4
        red = poisson_reduce(canonical_poisson, [], cutoff)
        expect = sorted(
            (a, b) for a in range(cutoff + 1) for b in range(cutoff + 1 - a)
        )
        assert sorted(m.value[0][0] for m in red.basis) == expect

    def test_four_generator_reduction_matches_oracle(self):
        """Reducing the 4-generator canonical algebra by (q1) leaves the
        canonical algebra on (q2, p2) up to the cutoff."""
        cutoff = 5
        ring = GradedPolyRing(
            ["q1", "p1", "q2", "p2"], [(1,), (-1,), (1,), (-1,)]
        )
        p4 = make_poisson(ring, {("q1", "p1"): ring.one, ("q2", "p2"): ring.one})
        red = poisson_reduce(p4, ["q1"], cutoff)

        # oracle: monomials with q1-exponent zero survive iff p1-exponent
        # is zero (direct bracket computation, done by hand above)
        expect = sorted(
            (0, 0, c, d)
            for c in range(cutoff + 1)
            for d in range(cutoff + 1 - c)
        )
        got = sorted(m.value[0][0] for m in red.basis)
        assert got == expect

        # the surviving bracket is the canonical one on (q2, p2)
        q2 = ring.generator("q2")
        p2 = ring.generator("p2")
        assert red.bracket(q2, p2) == ring.one
        assert red.axiom_report(probes=10).ok

    def test_bracket_descends(self, canonical_poisson, rng):
        """Changing a numerator representative by an ideal element does not
        change the reduced bracket: reduce-then-bracket agrees with
        bracket-then-reduce up to the cutoff."""
        cutoff = 6
        red = poisson_reduce(canonical_poisson, ["q"], cutoff)
        ring = canonical_poisson.ring
        for _ in range(20):
            n = ring.scale(F(rng.randint(-3, 3)), rng.choice(red.basis))
            m = ring.scale(F(rng.randint(-3, 3)), rng.choice(red.basis))
            # an ideal element in the same slice as n
            i = ring.mul(
                ring.sample(rng, dim=(n.dim[0] - 1,)), ring.generator("q")
            )
            lifted = ring.add(n, i)
            lhs = red.bracket(lifted, m)
            rhs = red.bracket(n, m)
            assert ring.eq(lhs, rhs)
            # the commutative product descends the same way
            assert ring.eq(red.product(lifted, m), red.product(n, m))

    def test_rejects_non_coisotrope(self, canonical_poisson):
        with pytest.raises(ConstructionError):
            poisson_reduce(canonical_poisson, ["q", "p"], 4)

    def test_rejects_bad_cutoff(self, canonical_poisson):
        from dimalg.errors import CarrierError

        with pytest.raises(CarrierError):
            poisson_reduce(canonical_poisson, ["q"], 0)


class TestHeterogeneousProduct:
    def test_two_canonical_factors_give_the_four_generator_bracket(self, rng):
        a_ring = GradedPolyRing(["q1", "p1"], [(1,), (-1,)])
        b_ring = GradedPolyRing(["q2", "p2"], [(1,), (-1,)])
        pa = make_poisson(a_ring, {("q1", "p1"): a_ring.one})
        pb = make_poisson(b_ring, {("q2", "p2"): b_ring.one})
        prod = poisson_product_hetero(pa, pb, rng)
        ring = prod.ring
        expect = {
            ("q1", "p1"): ring.one,
            ("q2", "p2"): ring.one,
        }
        for x, y in itertools.combinations(ring.gen_names, 2):
            got = prod.bracket(ring.generator(x), ring.generator(y))
            want = expect.get((x, y), ring.zero(got.dim))
            assert ring.eq(got, want), (x, y)

    def test_trivial_factor_leaves_the_other_bracket(self, rng):
        a_ring = GradedPolyRing(["q1", "p1"], [(1,), (-1,)])
        b_ring = GradedPolyRing(["x"], [(1,)])
        pa = make_poisson(a_ring, {("q1", "p1"): a_ring.one})
        pb = make_poisson(b_ring, {})  # zero bracket
        prod = poisson_product_hetero(pa, pb, rng)
        ring = prod.ring
        assert ring.eq(
            prod.bracket(ring.generator("q1"), ring.generator("p1")), ring.one
        )
        assert ring.is_zero(prod.bracket(ring.generator("q1"), ring.generator("x")))
        assert ring.is_zero(prod.bracket(ring.generator("x"), ring.generator("x")))

    def test_self_bracket_of_decomposables_vanishes(self, rng):
        a_ring = GradedPolyRing(["q1", "p1"], [(1,), (-1,)])
        b_ring = GradedPolyRing(["q2", "p2"], [(1,), (-1,)])
        pa = make_poisson(a_ring, {("q1", "p1"): a_ring.one})
        pb = make_poisson(b_ring, {("q2", "p2"): b_ring.one})
        prod = poisson_product_hetero(pa, pb, rng)
        ring = prod.ring
        for _ in range(15):
            f = ring.sample(rng)
            assert ring.is_zero(prod.bracket(f, f))

    def test_displayed_formula_on_decomposables(self, rng):
        """{a(x)b, a'(x)b'} = {a,a'}(x)bb' + aa'(x){b,b'} with all elements
        embedded into the combined ring."""
        a_ring = GradedPolyRing(["q1", "p1"], [(1,), (-1,)])
        b_ring = GradedPolyRing(["q2", "p2"], [(1,), (-1,)])
        pa = make_poisson(a_ring, {("q1", "p1"): a_ring.one})
        pb = make_poisson(b_ring, {("q2", "p2"): b_ring.one})
        prod = poisson_product_hetero(pa, pb, rng)
        ring = prod.ring
        from dimalg.poisson import _embed

        pad_a = lambda d: d + (0,)
        pad_b = lambda d: (0,) + d
        ea = lambda el: _embed(ring, a_ring, 0, pad_a, el)
        eb = lambda el: _embed(ring, b_ring, 2, pad_b, el)
        for _ in range(15):
            a1, a2 = a_ring.sample(rng), a_ring.sample(rng)
            b1, b2 = b_ring.sample(rng), b_ring.sample(rng)
            lhs = prod.bracket(
                ring.mul(ea(a1), eb(b1)), ring.mul(ea(a2), eb(b2))
            )
            rhs = ring.add(
                ring.mul(ea(pa.bracket(a1, a2)), eb(b_ring.mul(b1, b2))),
                ring.mul(ea(a_ring.mul(a1, a2)), eb(pb.bracket(b1, b2))),
            )
            assert ring.eq(lhs, rhs)

    def test_hypothesis_product_equals_bracket_dim(self, rng):
        a_ring = GradedPolyRing(["q1", "p1", "z"], [(1,), (-1,), (1,)])
        pa = make_poisson(
            a_ring,
            {("q1", "p1"): a_ring.monomial((0, 0, 2))},
            product_dim=(1,),
            scale=a_ring.generator("z"),
        )  # product dim 1 != bracket dim 2
        b_ring = GradedPolyRing(["x"], [(1,)])
        pb = make_poisson(b_ring, {})
        with pytest.raises(ConstructionError):
            poisson_product_hetero(pa, pb, rng)


class TestHomogeneousProduct:
    @staticmethod
    def _factor_1_2():
        ring = GradedPolyRing(["a1", "a2", "z"], [(1,), (-1,), (1,)])
        return make_poisson(
            ring,
            {("a1", "a2"): ring.monomial((0, 0, 2))},
            product_dim=(1,),
            scale=ring.generator("z"),
        )

    @staticmethod
    def _factor_3_4():
        ring = GradedPolyRing(["b1", "b2", "w"], [(2,), (-2,), (1,)])
        return make_poisson(
            ring,
            {("b1", "b2"): ring.monomial((0, 0, 4))},
            product_dim=(3,),
            scale=ring.monomial((0, 0, 3)),
        )

    def test_accepts_compatible_dimensions(self, rng):
        # (p, b, q, c) = (1, 2, 3, 4): b+q = 5 = p+c
        prod = poisson_product_homo(self._factor_1_2(), self._factor_3_4(), rng)
        assert prod.product_dim == (4,)
        assert prod.bracket_dim == (5,)
        assert poisson_axiom_report(prod, rng, probes=10).ok

    def test_rejects_incompatible_dimensions(self, rng):
        # (p, b, q, c) = (0, 1, 0, 0): 1 != 0
        ring = GradedPolyRing(["x", "y", "u"], [(1,), (-1,), (1,)])
        p1 = make_poisson(ring, {("x", "y"): ring.generator("u")})  # b = 1, p = 0
        other = GradedPolyRing(["s", "t"], [(1,), (-1,)])
        p0 = make_poisson(other, {("s", "t"): other.one})  # q = 0, c = 0
        with pytest.raises(ConstructionError) as exc:
            poisson_product_homo(p1, p0, rng)
        assert "(1,)" in str(exc.value) and "(0,)" in str(exc.value)

    def test_equal_dimensions_reduce_to_the_heterogeneous_shape(self, rng):
        """With p = b and q = c the compatibility is automatic and the
        combined table matches the factor-wise formula."""
        a_ring = GradedPolyRing(["q1", "p1"], [(1,), (-1,)])
        b_ring = GradedPolyRing(["q2", "p2"], [(1,), (-1,)])
        pa = make_poisson(a_ring, {("q1", "p1"): a_ring.one})
        pb = make_poisson(b_ring, {("q2", "p2"): b_ring.one})
        prod = poisson_product_homo(pa, pb, rng)
        ring = prod.ring
        assert prod.product_dim == (0,)
        assert prod.bracket_dim == (0,)
        assert ring.eq(
            prod.bracket(ring.generator("q1"), ring.generator("p1")), ring.one
        )
