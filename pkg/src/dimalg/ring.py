"""Dimensioned rings and fields.

A dimensioned ring is a dimensional abelian group carrying a *total*
multiplication whose dimension projection is a monoid morphism, with
distributivity holding wherever the partial addition is defined and the
zero family acting absorbently.  Fields additionally have reciprocals
for every nonzero element, which forces the dimension monoid to be a
group.
"""

import itertools
import random
from abc import ABC, abstractmethod
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable

from .errors import CarrierError, ConstructionError, DimensionMismatch
from .group import DimElement
from .monoid import DimMonoid, DimSet
from .report import CheckReport
from .sampling import rand_fraction, rand_nonzero_fraction


class DimRing(ABC):
    """Protocol every concrete dimensioned ring implements.

    Elements are DimElement values; `value` encodings are ring-specific.
    """

    dims: DimSet
    commutative: bool = True
    is_field: bool = False
    label: str = "ring"

    # -- additive structure (partial) -----------------------------------
    @abstractmethod
    def add(self, a: DimElement, b: DimElement) -> DimElement: ...

    @abstractmethod
    def neg(self, a: DimElement) -> DimElement: ...

    @abstractmethod
    def zero(self, d) -> DimElement: ...

    # -- multiplicative structure (total) -------------------------------
    @abstractmethod
    def mul(self, a: DimElement, b: DimElement) -> DimElement: ...

    @property
    @abstractmethod
    def one(self) -> DimElement: ...

    # -- probing ---------------------------------------------------------
    @abstractmethod
    def sample(self, rng: random.Random, dim=None) -> DimElement: ...

    def sample_dim(self, rng: random.Random):
        return self.dims.sample(rng)

    def probe_dims(self) -> tuple:
        return self.dims.probe()

    # -- derived ----------------------------------------------------------
    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def eq(self, a: DimElement, b: DimElement) -> bool:
        return a.dim == b.dim and a.value == b.value

    def is_zero(self, a: DimElement) -> bool:
        return self.eq(a, self.zero(a.dim))

    def dim_combine(self, d, e):
        return self.dims.monoid.combine(d, e)

    def reciprocal(self, a: DimElement) -> DimElement:
        raise CarrierError(f"{self.label} has no reciprocals")

    def is_unit(self, a: DimElement) -> bool:
        try:
            self.reciprocal(a)
            return True
        except (CarrierError, ZeroDivisionError, DimensionMismatch):
            return False

    def pow(self, a: DimElement, n: int) -> DimElement:
        if n < 0:
            return self.pow(self.reciprocal(a), -n)
        out = self.one
        for _ in range(n):
            out = self.mul(out, a)
        return out

    def show(self, a: DimElement) -> str:
        return str(a)


# ---------------------------------------------------------------------------
# Scalar rings (the first factor of a product dimensioned ring)
# ---------------------------------------------------------------------------


class ScalarRing(ABC):
    """An ordinary ring of raw values, used as every slice of a product ring."""

    is_field = False

    @abstractmethod
    def add(self, a, b): ...

    @abstractmethod
    def neg(self, a): ...

    @abstractmethod
    def mul(self, a, b): ...

    @abstractmethod
    def zero(self): ...

    @abstractmethod
    def one(self): ...

    @abstractmethod
    def sample(self, rng): ...

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def reciprocal(self, a):
        raise CarrierError("not a field")


class RationalScalars(ScalarRing):
    is_field = True

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def sample(self, rng):
        return rand_fraction(rng)

    def sample_nonzero(self, rng):
        return rand_nonzero_fraction(rng)

    def reciprocal(self, a):
        if a == 0:
            raise ZeroDivisionError("reciprocal of zero")
        return 1 / a

    def __str__(self):
        return "Q"


class ProductDimRing(DimRing):
    """The product of an ordinary ring with a dimension monoid.

    Elements are (value, dimension) pairs: addition is slice-wise in the
    value, multiplication multiplies values and combines dimensions.
    """

    def __init__(self, scalars: ScalarRing, monoid: DimMonoid, label: str = ""):
        self.scalars = scalars
        self.monoid = monoid
        self.dims = DimSet.of_monoid(monoid)
        self.is_field = scalars.is_field and monoid.is_group
        self.label = label or f"{scalars}x{monoid.kind}"

    def element(self, value, dim) -> DimElement:
        if not self.dims.contains(dim):
            raise CarrierError(f"unknown dimension {dim!r}")
        return DimElement(value, dim)

    def add(self, a, b):
        if a.dim != b.dim:
            raise DimensionMismatch(a.dim, b.dim, self.label)
        return DimElement(self.scalars.add(a.value, b.value), a.dim)

    def neg(self, a):
        return DimElement(self.scalars.neg(a.value), a.dim)

    def zero(self, d):
        return DimElement(self.scalars.zero(), d)

    def mul(self, a, b):
        return DimElement(
            self.scalars.mul(a.value, b.value), self.monoid.combine(a.dim, b.dim)
        )

    @property
    def one(self):
        return DimElement(self.scalars.one(), self.monoid.identity)

    def reciprocal(self, a):
        if not self.is_field:
            raise CarrierError(f"{self.label} is not a dimensioned field")
        return DimElement(
            self.scalars.reciprocal(a.value), self.monoid.inverse(a.dim)
        )

    def sample(self, rng, dim=None):
        d = self.sample_dim(rng) if dim is None else dim
        return DimElement(self.scalars.sample(rng), d)


# ---------------------------------------------------------------------------
# The dimensionless slice as an ordinary ring
# ---------------------------------------------------------------------------


class DimlessRingView(ScalarRing):
    """The slice over the monoid identity, exposed with ordinary ring ops.

    Values are the raw slice values of the parent ring at the identity
    dimension, so the view plugs in wherever a ScalarRing is expected.
    """

    def __init__(self, ring: DimRing):
        self.ring = ring
        self._id = ring.dims.monoid.identity
        self.is_field = ring.is_field

    def _wrap(self, v):
        return DimElement(v, self._id)

    def add(self, a, b):
        return self.ring.add(self._wrap(a), self._wrap(b)).value

    def neg(self, a):
        return self.ring.neg(self._wrap(a)).value

    def mul(self, a, b):
        out = self.ring.mul(self._wrap(a), self._wrap(b))
        return out.value

    def zero(self):
        return self.ring.zero(self._id).value

    def one(self):
        return self.ring.one.value

    def sample(self, rng):
        return self.ring.sample(rng, dim=self._id).value

    def reciprocal(self, a):
        return self.ring.reciprocal(self._wrap(a)).value

    def __str__(self):
        return f"{self.ring.label}@1"


def dimensionless_ring(ring: DimRing) -> DimlessRingView:
    return DimlessRingView(ring)


# ---------------------------------------------------------------------------
# Ring morphisms
# ---------------------------------------------------------------------------


class RingMorphism:
    """A dimensioned map that preserves multiplication and the unit."""

    def __init__(
        self,
        domain: DimRing,
        codomain: DimRing,
        dim_map: Callable,
        fn: Callable[[DimElement], DimElement],
        label: str = "morphism",
    ):
        self.domain = domain
        self.codomain = codomain
        self.dim_map = dim_map
        self.fn = fn
        self.label = label

    def __call__(self, a: DimElement) -> DimElement:
        return self.fn(a)

    @staticmethod
    def identity(ring: DimRing) -> "RingMorphism":
        return RingMorphism(ring, ring, lambda d: d, lambda a: a, "id")

    def compose(self, other: "RingMorphism") -> "RingMorphism":
        return RingMorphism(
            other.domain,
            self.codomain,
            lambda d: self.dim_map(other.dim_map(d)),
            lambda a: self(other(a)),
            f"{self.label}∘{other.label}",
        )

    def check(self, rng: random.Random, probes: int = 40) -> CheckReport:
        """Morphism laws on random probes: the dimension square commutes,
        addition within slices, multiplication, and the unit."""
        rep = CheckReport(f"morphism {self.label}")
        dom, cod = self.domain, self.codomain
        sq = add = mul = True
        w_sq = w_add = w_mul = ""
        for _ in range(probes):
            a = dom.sample(rng)
            b = dom.sample(rng, dim=a.dim)
            c = dom.sample(rng)
            fa = self(a)
            if fa.dim != self.dim_map(a.dim):
                sq, w_sq = False, f"dim({self.label}({a})) != phi({a.dim})"
            if not cod.eq(self(dom.add(a, b)), cod.add(fa, self(b))):
                add, w_add = False, f"additivity fails at {a}, {b}"
            if not cod.eq(self(dom.mul(a, c)), cod.mul(fa, self(c))):
                mul, w_mul = False, f"multiplicativity fails at {a}, {c}"
        rep.check("dimension square commutes", sq, w_sq)
        rep.check("additive within slices", add, w_add)
        rep.check("multiplicative", mul, w_mul)
        rep.check(
            "preserves unit",
            cod.eq(self(dom.one), cod.one),
            f"{self.label}(1) != 1",
        )
        return rep


# ---------------------------------------------------------------------------
# Unit sections
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class UnitSection:
    """A multiplicative, nowhere-zero section of the dimension projection."""

    ring: DimRing
    fn: Callable[[Any], DimElement]

    def __call__(self, d) -> DimElement:
        return self.fn(d)


@dataclass(frozen=True)
class SectionCheck:
    ok: bool
    section: "UnitSection | None"
    report: CheckReport


def multiplicative_section(ring: DimRing, gen_values: dict) -> Callable:
    """Extend values on the free-abelian generators multiplicatively.

    `gen_values[i]` is the section value on the i-th positive unit vector;
    negative exponents use reciprocals, so the ring must be a field.
    """
    monoid = ring.dims.monoid
    if monoid.kind != "free_abelian":
        raise CarrierError("multiplicative extension needs a free abelian monoid")

    def u(d):
        out = ring.one
        for i, n in enumerate(d):
            out = ring.mul(out, ring.pow(gen_values[i], n))
        return out

    return u


def unit_section_check(ring: DimRing, candidate: Callable) -> SectionCheck:
    """Validate a candidate section: it must split the dimension projection,
    never hit a slice zero, and be multiplicative on all probed pairs."""
    rep = CheckReport(f"unit section on {ring.label}")
    dims = ring.dims.elements()
    if dims is None:
        # documented probe: all words of length <= 3 in the monoid generators
        dims = ring.dims.monoid.probe_words(3)
    sect = ok_sect = ok_zero = True
    w_sect = w_zero = ""
    values = {}
    for d in dims:
        v = candidate(d)
        values[d] = v
        if v.dim != d:
            ok_sect, w_sect = False, f"delta(u({d!r})) = {v.dim!r} != {d!r}"
        if ring.is_zero(v):
            ok_zero, w_zero = False, f"section hits zero at slice {d!r}"
    rep.check("splits the projection", ok_sect, w_sect)
    rep.check("nowhere zero", ok_zero, w_zero)
    ok_mul, w_mul = True, ""
    for d, e in itertools.product(dims, repeat=2):
        de = ring.dim_combine(d, e)
        lhs = values[de] if de in values else candidate(de)
        rhs = ring.mul(values[d], values[e])
        if not ring.eq(lhs, rhs):
            ok_mul, w_mul = False, f"u({d!r}∘{e!r}) != u({d!r})·u({e!r})"
            break
    rep.check("multiplicative on probed pairs", ok_mul, w_mul)
    ok = rep.ok
    return SectionCheck(ok, UnitSection(ring, candidate) if ok else None, rep)


def search_unit_section(ring, slice_elements: Callable) -> "SectionCheck":
    """Exhaustive search for a unit section of a finite dimensioned ring.

    `slice_elements(d)` lists all elements over d.  Returns a failure
    report naming an empty-of-nonzeros slice when none can exist.
    """
    dims = ring.dims.elements()
    if dims is None:
        raise CarrierError("exhaustive search needs a finite dimension set")
    choices = {}
    for d in dims:
        nonzero = [a for a in slice_elements(d) if not ring.is_zero(a)]
        if not nonzero:
            rep = CheckReport(f"unit section search on {ring.label}")
            rep.check(
                "nowhere zero",
                False,
                f"slice {d!r} contains only its zero; no section can exist",
            )
            return SectionCheck(False, None, rep)
        choices[d] = nonzero
    last = None
    for combo in itertools.product(*(choices[d] for d in dims)):
        table = dict(zip(dims, combo))
        result = unit_section_check(ring, lambda d: table[d])
        if result.ok:
            return result
        last = result
    return last


# ---------------------------------------------------------------------------
# Slice-wise multiplication and trivialization by units
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SliceMul:
    """Multiplication by a fixed nonzero field element, slice e -> slice de."""

    ring: DimRing
    by: DimElement
    src_dim: Any

    @property
    def dst_dim(self):
        return self.ring.dim_combine(self.by.dim, self.src_dim)

    def apply(self, b: DimElement) -> DimElement:
        if b.dim != self.src_dim:
            raise DimensionMismatch(b.dim, self.src_dim, "slice_mul")
        return self.ring.mul(self.by, b)

    def inverse(self) -> "SliceMul":
        return SliceMul(self.ring, self.ring.reciprocal(self.by), self.dst_dim)


def slice_mul(field: DimRing, a: DimElement, e) -> SliceMul:
    if field.is_zero(a):
        raise CarrierError("slice multiplication by zero is not bijective")
    return SliceMul(field, a, e)


@dataclass(frozen=True)
class Trivialization:
    """The isomorphism a unit section induces with the product dimensioned field."""

    product: ProductDimRing
    to_field: RingMorphism     # (r, d) |-> u(d)·r
    from_field: RingMorphism   # a_d |-> (u(d)^-1 · a_d, d)


def units_trivialization(field: DimRing, u: UnitSection) -> Trivialization:
    if not field.is_field:
        raise CarrierError("trivialization needs a dimensioned field")
    monoid = field.dims.monoid
    view = dimensionless_ring(field)
    product = ProductDimRing(view, monoid, label=f"{view}x{monoid.kind}")
    ident = monoid.identity

    def fwd(a: DimElement) -> DimElement:
        return field.mul(u(a.dim), DimElement(a.value, ident))

    def bwd(a: DimElement) -> DimElement:
        r = field.mul(field.reciprocal(u(a.dim)), a)
        return DimElement(r.value, a.dim)

    to_field = RingMorphism(product, field, lambda d: d, fwd, "Phi_u")
    from_field = RingMorphism(field, product, lambda d: d, bwd, "Phi_u^-1")
    return Trivialization(product, to_field, from_field)


# ---------------------------------------------------------------------------
# Ideals and quotient rings
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Ideal:
    """An ideal presented by generators plus a normal-form chooser.

    Membership is decided by the normal form: a is in the ideal exactly
    when nf(a) is the zero of its slice.  Consistency of nf is validated
    on probes when a quotient is constructed, never proved.
    """

    ring: DimRing
    generators: tuple
    normal_form: Callable[[DimElement], DimElement]

    def contains(self, a: DimElement) -> bool:
        return self.ring.is_zero(self.normal_form(a))


def zero_ideal(ring: DimRing) -> Ideal:
    return Ideal(ring, (), lambda a: a)


def whole_ideal(ring: DimRing) -> Ideal:
    return Ideal(ring, (ring.one,), lambda a: ring.zero(a.dim))


class QuotientDimRing(DimRing):
    """Elements are normal forms of the base ring; ops compute then reduce."""

    def __init__(self, base: DimRing, ideal: Ideal, rng=None, probes: int = 30):
        self.base = base
        self.ideal = ideal
        self.dims = base.dims
        self.commutative = base.commutative
        self.label = f"{base.label}/I"
        self._validate(rng or random.Random(20240501), probes)

    def _validate(self, rng, probes):
        nf = self.ideal.normal_form
        base = self.base
        for _ in range(probes):
            a = base.sample(rng)
            b = base.sample(rng, dim=a.dim)
            c = base.sample(rng)
            if not base.eq(nf(base.add(a, b)), nf(base.add(nf(a), nf(b)))):
                raise ConstructionError(
                    f"normal form is not additive at {a}, {b}; construction rejected"
                )
            if not base.eq(nf(base.mul(a, c)), nf(base.mul(nf(a), nf(c)))):
                raise ConstructionError(
                    f"normal form is not multiplicative at {a}, {c}"
                )
            for i in self.ideal.generators:
                if not self.ideal.contains(base.mul(c, i)):
                    raise ConstructionError(
                        f"ideal law fails: {c} * {i} leaves the ideal"
                    )

    def project(self, a: DimElement) -> DimElement:
        return self.ideal.normal_form(a)

    @property
    def projection(self) -> RingMorphism:
        return RingMorphism(self.base, self, lambda d: d, self.project, "q")

    def add(self, a, b):
        return self.project(self.base.add(a, b))

    def neg(self, a):
        return self.project(self.base.neg(a))

    def zero(self, d):
        return self.project(self.base.zero(d))

    def mul(self, a, b):
        return self.project(self.base.mul(a, b))

    @property
    def one(self):
        return self.project(self.base.one)

    def sample(self, rng, dim=None):
        return self.project(self.base.sample(rng, dim=dim))

    def show(self, a):
        return f"[{self.base.show(a)}]"


def quotient_ring(base: DimRing, ideal: Ideal, rng=None) -> QuotientDimRing:
    return QuotientDimRing(base, ideal, rng=rng)


# ---------------------------------------------------------------------------
# The ring axiom suite
# ---------------------------------------------------------------------------


def _probe_elements(ring, rng, budget):
    custom = getattr(ring, "probe_elements", None)
    if custom is not None:
        elems = list(custom(rng, budget))
    else:
        elems = [ring.sample(rng) for _ in range(budget)]
        elems.append(ring.one)
        if elems:
            elems.append(ring.zero(elems[0].dim))
    return elems


def ring_axiom_report(ring: DimRing, rng=None, budget: int = 30) -> CheckReport:
    """Run every dimensioned-ring law and report pass/fail with witnesses.

    Laws: the dimension monoid's own axioms, the projection being a monoid
    morphism, distributivity wherever addition is defined, absorbency of
    the zero family, unitality, associativity, and slice abelian-group
    axioms (plus commutativity when declared).
    """
    rng = rng or random.Random(20240229)
    rep = CheckReport(f"dimensioned ring {ring.label}")
    elems = _probe_elements(ring, rng, budget)
    dims = list(ring.probe_dims())

    ok, w = True, ""
    for d, e, f in itertools.islice(itertools.product(dims, repeat=3), 3000):
        if ring.dim_combine(ring.dim_combine(d, e), f) != ring.dim_combine(
            d, ring.dim_combine(e, f)
        ):
            ok, w = False, f"monoid associativity fails at {d!r},{e!r},{f!r}"
            break
    rep.check("dimension monoid: associativity", ok, w)

    ident = getattr(ring.dims.monoid, "identity", None) if ring.dims.monoid else None
    if ident is None:
        ident = ring.one.dim
    ok, w = True, ""
    for d in dims:
        if ring.dim_combine(ident, d) != d or ring.dim_combine(d, ident) != d:
            ok, w = False, f"monoid identity fails at {d!r}"
            break
    rep.check("dimension monoid: identity", ok, w)

    ok, w = True, ""
    for a, b in itertools.islice(itertools.product(elems, repeat=2), 4000):
        p = ring.mul(a, b)
        if p.dim != ring.dim_combine(a.dim, b.dim):
            ok, w = False, f"dim({ring.show(a)}·{ring.show(b)}) != combined dims"
            break
    rep.check("projection is a monoid morphism", ok, w)

    ok, w = True, ""
    pairs = [(a, b) for a in elems for b in elems if a.dim == b.dim]
    for (a, b), c in itertools.islice(itertools.product(pairs, elems), 6000):
        lhs = ring.mul(ring.add(a, b), c)
        rhs = ring.add(ring.mul(a, c), ring.mul(b, c))
        if not ring.eq(lhs, rhs):
            ok, w = False, f"(a+b)c != ac+bc at {ring.show(a)},{ring.show(b)},{ring.show(c)}"
            break
        lhs = ring.mul(c, ring.add(a, b))
        rhs = ring.add(ring.mul(c, a), ring.mul(c, b))
        if not ring.eq(lhs, rhs):
            ok, w = False, f"c(a+b) != ca+cb at {ring.show(a)},{ring.show(b)},{ring.show(c)}"
            break
    rep.check("distributivity where defined", ok, w)

    ok, w = True, ""
    for d, a in itertools.islice(itertools.product(dims, elems), 4000):
        z = ring.zero(d)
        de = ring.dim_combine(d, a.dim)
        if not ring.eq(ring.mul(z, a), ring.zero(de)):
            ok, w = False, f"0_{d!r}·{ring.show(a)} != 0"
            break
        ed = ring.dim_combine(a.dim, d)
        if not ring.eq(ring.mul(a, z), ring.zero(ed)):
            ok, w = False, f"{ring.show(a)}·0_{d!r} != 0"
            break
    rep.check("zero family is absorbent", ok, w)

    ok, w = True, ""
    for a in elems:
        if not ring.eq(ring.mul(ring.one, a), a) or not ring.eq(ring.mul(a, ring.one), a):
            ok, w = False, f"unit law fails at {ring.show(a)}"
            break
    rep.check("unitality", ok, w)

    ok, w = True, ""
    for a, b, c in itertools.islice(itertools.product(elems, repeat=3), 6000):
        if not ring.eq(ring.mul(ring.mul(a, b), c), ring.mul(a, ring.mul(b, c))):
            ok, w = False, f"(ab)c != a(bc) at {ring.show(a)},{ring.show(b)},{ring.show(c)}"
            break
    rep.check("multiplicative associativity", ok, w)

    if ring.commutative:
        ok, w = True, ""
        for a, b in itertools.islice(itertools.product(elems, repeat=2), 4000):
            if not ring.eq(ring.mul(a, b), ring.mul(b, a)):
                ok, w = False, f"ab != ba at {ring.show(a)},{ring.show(b)}"
                break
        rep.check("commutativity", ok, w)

    ok, w = True, ""
    for a, b in pairs[:4000]:
        z = ring.zero(a.dim)
        if not ring.eq(ring.add(a, b), ring.add(b, a)):
            ok, w = False, f"a+b != b+a at {ring.show(a)},{ring.show(b)}"
            break
        if not ring.eq(ring.add(ring.add(a, b), b), ring.add(a, ring.add(b, b))):
            ok, w = False, f"(a+b)+b != a+(b+b) at {ring.show(a)},{ring.show(b)}"
            break
        if not ring.eq(ring.add(a, z), a):
            ok, w = False, f"a+0 != a at {ring.show(a)}"
            break
        if not ring.eq(ring.add(a, ring.neg(a)), z):
            ok, w = False, f"a+(-a) != 0 at {ring.show(a)}"
            break
    rep.check("slices are abelian groups", ok, w)

    return rep
