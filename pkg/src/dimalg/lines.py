"""Lines, factors, and power rings: the rigorous model of physical quantities.

A line is a 1-dimensional rational vector space -- a set of numbers
without a chosen unit.  Its power ring collects all integer tensor
powers into a dimensioned field over the exponent group Z^k; elements
carry a coordinate relative to an internal reference basis that is never
exposed: every observable is invariant under re-expressing through a
factor, which the functoriality suite checks.

Coordinate conventions: the dual reference basis pairs to 1, so the
tensor multiplication multiplies coordinates and adds exponent vectors,
and the power of a factor with scalar b acts on exponent n by b**n.
"""

import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import CarrierError, DimensionMismatch
from .group import DimElement
from .monoid import DimMonoid, DimSet
from .report import CheckReport
from .ring import (
    DimRing,
    RingMorphism,
    SectionCheck,
    multiplicative_section,
    unit_section_check,
)
from .sampling import rand_fraction, rand_nonzero_fraction


@dataclass(frozen=True)
class Line:
    """A 1-dimensional rational vector space, identified by name only."""

    name: str


@dataclass(frozen=True)
class Factor:
    """An invertible linear map between lines: a unit-free conversion factor.

    `scalar` is the coordinate of the image of the source reference basis.
    """

    src: Line
    dst: Line
    scalar: Fraction

    def __post_init__(self):
        if self.scalar == 0:
            raise CarrierError("a factor must be invertible (nonzero)")

    def compose(self, other: "Factor") -> "Factor":
        """self after other."""
        if other.dst != self.src:
            raise CarrierError("factors do not compose")
        return Factor(other.src, self.dst, self.scalar * other.scalar)

    @staticmethod
    def identity(line: Line) -> "Factor":
        return Factor(line, line, Fraction(1))


class PowerRing(DimRing):
    """All tensor powers of an ordered system of lines: a dimensioned field
    over the exponent group Z^k.

    Element encoding: value = rational coordinate, dim = exponent vector.
    """

    is_field = True

    def __init__(self, lines):
        self.lines = tuple(lines)
        if not self.lines:
            raise CarrierError("a power ring needs at least one line")
        k = len(self.lines)
        self.monoid = DimMonoid.free_abelian(k)
        self.dims = DimSet.of_monoid(self.monoid)
        self.label = f"({','.join(l.name for l in self.lines)})^power"

    @property
    def rank(self) -> int:
        return len(self.lines)

    def element(self, coord, exps) -> DimElement:
        exps = tuple(exps)
        if not self.dims.contains(exps):
            raise CarrierError(f"bad exponent vector {exps!r}")
        return DimElement(Fraction(coord), exps)

    def scalar(self, coord) -> DimElement:
        """An element of the scalar slice (all exponents zero)."""
        return self.element(coord, (0,) * self.rank)

    # -- additive structure -------------------------------------------------
    def add(self, a, b):
        if a.dim != b.dim:
            raise DimensionMismatch(a.dim, b.dim, self.label)
        return DimElement(a.value + b.value, a.dim)

    def neg(self, a):
        return DimElement(-a.value, a.dim)

    def zero(self, d):
        return DimElement(Fraction(0), tuple(d))

    # -- multiplicative structure -------------------------------------------
    def mul(self, a, b):
        """Tensor multiplication in coordinates; the six even/odd/mixed
        power cases all reduce to coordinate product + exponent sum under
        the pairing normalization."""
        return DimElement(a.value * b.value, self.monoid.combine(a.dim, b.dim))

    odot = mul

    @property
    def one(self):
        return self.scalar(1)

    def reciprocal(self, a):
        if a.value == 0:
            raise ZeroDivisionError("reciprocal of a zero power-ring element")
        return DimElement(1 / a.value, self.monoid.inverse(a.dim))

    def sample(self, rng: random.Random, dim=None):
        d = self.sample_dim(rng) if dim is None else tuple(dim)
        return DimElement(rand_fraction(rng), d)

    def sample_nonzero(self, rng: random.Random, dim=None):
        d = self.sample_dim(rng) if dim is None else tuple(dim)
        return DimElement(rand_nonzero_fraction(rng), d)

    def show(self, a):
        return f"{a.value}·[{','.join(map(str, a.dim))}]"


def power_functor(factor: Factor) -> RingMorphism:
    """The power of a factor: on exponent n the coordinate multiplies by
    scalar**n (negative powers act through the inverse transpose), and the
    scalar slice is fixed pointwise.  The result is a morphism of
    dimensioned rings between the two single-line power rings."""
    src_ring = PowerRing((factor.src,))
    dst_ring = PowerRing((factor.dst,))
    beta = factor.scalar

    def fn(a: DimElement) -> DimElement:
        n = a.dim[0]
        return DimElement(a.value * beta**n, a.dim)

    return RingMorphism(src_ring, dst_ring, lambda d: d, fn, f"{factor.src.name}->{factor.dst.name}^power")


def functoriality_check(
    b: Factor, c: Factor, rng=None, coords: int = 4, exp_range=range(-3, 4)
) -> CheckReport:
    """Composition and identity laws of the power construction on probe
    elements across the given exponents."""
    rng = rng or random.Random(7)
    rep = CheckReport("power functor laws")
    if b.dst != c.src:
        raise CarrierError("factors do not compose")
    cb = power_functor(c.compose(b))
    c_after_b = power_functor(c).compose(power_functor(b))
    src = PowerRing((b.src,))
    probe_coords = [Fraction(1), Fraction(-2), Fraction(3, 7)]
    probe_coords += [rand_fraction(rng) for _ in range(coords)]
    ok, w = True, ""
    for n in exp_range:
        for q in probe_coords:
            x = src.element(q, (n,))
            if cb(x) != c_after_b(x):
                ok, w = False, f"(C∘B)^power != C^power∘B^power at {src.show(x)}"
    rep.check("composition law", ok, w)
    ident = power_functor(Factor.identity(b.src))
    ok, w = True, ""
    for n in exp_range:
        for q in probe_coords:
            x = src.element(q, (n,))
            if ident(x) != x:
                ok, w = False, f"(id)^power moved {src.show(x)}"
    rep.check("identity law", ok, w)
    ok, w = True, ""
    bp = power_functor(b)
    for n in exp_range:
        for m in exp_range:
            x = src.element(probe_coords[0], (n,))
            y = src.element(probe_coords[2], (m,))
            if bp(src.mul(x, y)) != bp.codomain.mul(bp(x), bp(y)):
                ok, w = False, f"B^power not multiplicative at {src.show(x)},{src.show(y)}"
    rep.check("preserves the tensor multiplication", ok, w)
    return rep


def line_unit_to_section(ring: PowerRing, unit_coords) -> SectionCheck:
    """Turn one nonzero element per line into a unit section of the power
    ring: U(n_1..n_k) is the tensor product of the per-line unit powers."""
    coords = [Fraction(c) for c in unit_coords]
    if len(coords) != ring.rank:
        raise CarrierError("need exactly one unit per line")
    if any(c == 0 for c in coords):
        raise CarrierError("a unit in a line must be nonzero")
    gens = {
        i: ring.element(c, tuple(int(j == i) for j in range(ring.rank)))
        for i, c in enumerate(coords)
    }
    return unit_section_check(ring, multiplicative_section(ring, gens))


def embed_line(ring: PowerRing, i: int) -> RingMorphism:
    """The i-th single-line power ring as a dimensioned subfield: all other
    exponents pinned at zero."""
    sub = PowerRing((ring.lines[i],))

    def dim_map(d):
        return tuple(d[0] if j == i else 0 for j in range(ring.rank))

    def fn(a: DimElement) -> DimElement:
        return DimElement(a.value, dim_map(a.dim))

    return RingMorphism(sub, ring, dim_map, fn, f"embed {ring.lines[i].name}")
