"""Bilinear multiplications on dimensioned modules, their property
checkers, and derivations with a dimension shift.

The checkers treat candidate multiplications as black boxes: a function
on element pairs together with its dimension map.  Failures come back as
report lines with witnesses, never as exceptions, so hand-broken
candidates can be exercised.
"""

import random
from dataclasses import dataclass
from typing import Callable

from .errors import CarrierError, ConstructionError, DimensionMismatch
from .group import DimElement
from .poly import GradedPolyRing
from .report import CheckReport


@dataclass
class ProbeSpace:
    """Sampling and arithmetic hooks the checkers draw probes from."""

    sample: Callable                 # rng -> element
    sample_like: Callable            # rng, element -> same-slice element
    add: Callable
    eq: Callable
    dim_of: Callable                 # element -> dimension
    act: Callable                    # (ring elem, element) -> element
    sample_ring: Callable            # rng -> ring element
    ring_dim_act: Callable           # (ring dim, dim) -> dim
    sample_dim: Callable             # rng -> dimension
    neg: Callable = None
    is_zero: Callable = None


def ring_probe_space(ring) -> ProbeSpace:
    """A dimensioned ring as a module over itself."""
    return ProbeSpace(
        sample=ring.sample,
        sample_like=lambda rng, a: ring.sample(rng, dim=a.dim),
        add=ring.add,
        eq=ring.eq,
        dim_of=lambda a: a.dim,
        act=ring.mul,
        sample_ring=ring.sample,
        ring_dim_act=ring.dim_combine,
        sample_dim=ring.sample_dim,
        neg=ring.neg,
        is_zero=ring.is_zero,
    )


def module_probe_space(m) -> ProbeSpace:
    return ProbeSpace(
        sample=m.sample,
        sample_like=m.sample_like,
        add=m.add,
        eq=m.eq,
        dim_of=lambda a: a.dim,
        act=m.act,
        sample_ring=m.ring.sample,
        ring_dim_act=m.gset.act,
        sample_dim=lambda rng: m.sample(rng).dim,
        neg=m.neg,
        is_zero=m.is_zero,
    )


def bilinear_check(
    space: ProbeSpace,
    mul: Callable,
    dim_map: Callable,
    rng=None,
    probes: int = 30,
) -> CheckReport:
    """The three bilinearity laws of a candidate multiplication plus the
    equivariance of its dimension map under the monoid action."""
    rng = rng or random.Random(41)
    rep = CheckReport("bilinear multiplication")
    ok_l = ok_r = ok_act = ok_cover = ok_equi = True
    w_l = w_r = w_act = w_cover = w_equi = ""
    for _ in range(probes):
        a = space.sample(rng)
        b = space.sample_like(rng, a)
        c = space.sample(rng)
        r = space.sample_ring(rng)
        s = space.sample_ring(rng)

        lhs = mul(space.add(a, b), c)
        rhs = space.add(mul(a, c), mul(b, c))
        if not space.eq(lhs, rhs):
            ok_l, w_l = False, f"M(a+b, c) != M(a,c)+M(b,c) at {a}, {b}, {c}"
        lhs = mul(c, space.add(a, b))
        rhs = space.add(mul(c, a), mul(c, b))
        if not space.eq(lhs, rhs):
            ok_r, w_r = False, f"M(c, a+b) != M(c,a)+M(c,b) at {c}, {a}, {b}"
        lhs = mul(space.act(r, a), space.act(s, c))
        rhs = space.act(r, space.act(s, mul(a, c)))
        if not space.eq(lhs, rhs):
            ok_act, w_act = False, f"M(r·a, s·c) != r·s·M(a,c) at {r}, {s}, {a}, {c}"
        if space.dim_of(mul(a, c)) != dim_map(space.dim_of(a), space.dim_of(c)):
            ok_cover, w_cover = False, f"dim of M({a}, {c}) is not mu(d, e)"
        d, e = space.dim_of(a), space.dim_of(c)
        g, h = r.dim, s.dim
        lhs_d = dim_map(space.ring_dim_act(g, d), space.ring_dim_act(h, e))
        rhs_d = space.ring_dim_act(g, space.ring_dim_act(h, dim_map(d, e)))
        if lhs_d != rhs_d:
            ok_equi, w_equi = False, f"mu(gd, he) != gh·mu(d, e) at {g!r}, {h!r}, {d!r}, {e!r}"
    rep.check("additive in the left slot", ok_l, w_l)
    rep.check("additive in the right slot", ok_r, w_r)
    rep.check("module action moves outside", ok_act, w_act)
    rep.check("dimension map covers the product", ok_cover, w_cover)
    rep.check("dimension map is equivariant", ok_equi, w_equi)
    return rep


PROPERTIES = ("symmetric", "antisymmetric", "associative", "jacobi")


def property_check(
    space: ProbeSpace,
    mul: Callable,
    dim_map: Callable,
    prop: str,
    rng=None,
    probes: int = 30,
) -> CheckReport:
    """Check a 2-/3-element identity of a multiplication on probe tuples.

    The dimension binar is checked first: (anti)symmetry forces it to be
    commutative and associativity/Jacobi force it to be associative, so a
    failure there is reported before any element-level check runs.
    """
    if prop not in PROPERTIES:
        raise CarrierError(f"unknown property {prop!r}")
    rng = rng or random.Random(43)
    rep = CheckReport(f"property: {prop}")

    ok, w = True, ""
    for _ in range(probes):
        d = space.sample_dim(rng)
        e = space.sample_dim(rng)
        f = space.sample_dim(rng)
        if prop in ("symmetric", "antisymmetric"):
            if dim_map(d, e) != dim_map(e, d):
                ok, w = False, f"dimension binar not commutative at {d!r}, {e!r}"
        else:
            if dim_map(dim_map(d, e), f) != dim_map(d, dim_map(e, f)):
                ok, w = False, f"dimension binar not associative at {d!r}, {e!r}, {f!r}"
    rep.check("dimension binar prerequisite", ok, w)
    if not ok:
        return rep

    ok, w = True, ""
    for _ in range(probes):
        a = space.sample(rng)
        b = space.sample(rng)
        c = space.sample(rng)
        if prop == "symmetric":
            if not space.eq(mul(a, b), mul(b, a)):
                ok, w = False, f"M(a,b) != M(b,a) at {a}, {b}"
        elif prop == "antisymmetric":
            if not space.eq(mul(a, b), space.neg(mul(b, a))):
                ok, w = False, f"M(a,b) != -M(b,a) at {a}, {b}"
        elif prop == "associative":
            if not space.eq(mul(mul(a, b), c), mul(a, mul(b, c))):
                ok, w = False, f"associator nonzero at {a}, {b}, {c}"
        else:  # jacobi
            jac = space.add(
                mul(a, mul(b, c)),
                space.add(mul(b, mul(c, a)), mul(c, mul(a, b))),
            )
            if not space.is_zero(jac):
                ok, w = False, f"jacobiator nonzero at {a}, {b}, {c}"
    rep.check(f"{prop} identity on probes", ok, w)
    return rep


# ---------------------------------------------------------------------------
# Derivations of a graded polynomial ring
# ---------------------------------------------------------------------------


class DimDerivation:
    """A derivation with a dimension shift: it obeys the Leibniz rule and
    moves every slice by one fixed monoid element."""

    def __init__(self, ring: GradedPolyRing, shift, images: dict, label: str = "D"):
        self.ring = ring
        self.shift = tuple(shift)
        self.images = {}
        for name in ring.gen_names:
            img = images.get(name, ring.zero(
                tuple(s + g for s, g in zip(self.shift, ring.gen_dims[ring.index[name]]))
            ))
            expect = tuple(
                s + g for s, g in zip(self.shift, ring.gen_dims[ring.index[name]])
            )
            if img.dim != expect:
                raise ConstructionError(
                    f"image of {name} sits at {img.dim}, expected shift+dim {expect}"
                )
            self.images[name] = img
        self.label = label

    def apply(self, f: DimElement) -> DimElement:
        """Leibniz extension from the generator images; the result lives
        in the slice shifted by the derivation's shift."""
        ring = self.ring
        out = ring.zero(tuple(s + d for s, d in zip(self.shift, f.dim)))
        for name in ring.gen_names:
            df = ring.partial(f, name)
            if not df.value:
                continue
            out = ring.add(out, ring.mul(df, self.images[name]))
        return out

    __call__ = apply

    def leibniz_report(self, rng=None, probes: int = 25) -> CheckReport:
        rng = rng or random.Random(47)
        rep = CheckReport(f"derivation {self.label}")
        ok, w = True, ""
        for _ in range(probes):
            f = self.ring.sample(rng)
            g = self.ring.sample(rng)
            lhs = self.apply(self.ring.mul(f, g))
            rhs = self.ring.add(
                self.ring.mul(self.apply(f), g), self.ring.mul(f, self.apply(g))
            )
            if not self.ring.eq(lhs, rhs):
                ok, w = False, f"Leibniz fails at {self.ring.show(f)}, {self.ring.show(g)}"
        rep.check("Leibniz rule on probes", ok, w)
        return rep

    def commutator(self, other: "DimDerivation", rng=None) -> "DimDerivation":
        """[self, other] = self∘other - other∘self; shifts add because the
        dimension group is commutative."""
        if self.ring is not other.ring:
            raise CarrierError("commutator needs one carrier ring")
        ring = self.ring
        shift = tuple(a + b for a, b in zip(self.shift, other.shift))
        images = {}
        for name in ring.gen_names:
            x = ring.generator(name)
            images[name] = ring.sub(self.apply(other.apply(x)), other.apply(self.apply(x)))
        out = DimDerivation(ring, shift, images, f"[{self.label},{other.label}]")
        rep = out.leibniz_report(rng or random.Random(53), probes=10)
        if not rep.ok:
            raise ConstructionError(f"commutator lost the Leibniz rule: {rep.failures[0].witness}")
        return out

    def eq(self, other: "DimDerivation") -> bool:
        return self.shift == other.shift and all(
            self.ring.eq(self.images[n], other.images[n]) for n in self.ring.gen_names
        )

    def is_zero(self) -> bool:
        return all(self.ring.is_zero(img) for img in self.images.values())


def dimensionless_restriction(delta: DimDerivation):
    """Restrict a shift-zero derivation to the dimensionless slice, where
    it is an ordinary ring derivation."""
    if any(s != 0 for s in delta.shift):
        raise CarrierError("only shift-zero derivations restrict to the dimensionless ring")

    zero_dim = (0,) * delta.ring.rank

    class Restricted:
        ring = delta.ring
        label = f"{delta.label}|dimensionless"

        @staticmethod
        def apply(f: DimElement) -> DimElement:
            if f.dim != zero_dim:
                raise DimensionMismatch(f.dim, zero_dim, "dimensionless restriction")
            return delta.apply(f)

        __call__ = apply

    return Restricted()
