"""Dimension-homogeneous polynomials over exact rationals.

The carrier for dimensioned algebras, derivations, and Poisson brackets:
a polynomial ring whose generators carry dimension vectors in Z^k.  The
dimension of a monomial is the dimension-weighted sum of its exponents;
every stored element is homogeneous, addition rejects mixed dimensions,
and multiplication adds dimensions.  Zero polynomials exist in every
slice, so each slice is a (possibly infinite-dimensional) rational
vector space containing at least its zero.
"""

import itertools
import random
from fractions import Fraction

from .errors import CarrierError, DimensionMismatch
from .group import DimElement
from .monoid import DimMonoid, DimSet
from .ring import DimRing, Ideal
from .sampling import rand_fraction


def _vec_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _vec_scale(n, a):
    return tuple(n * x for x in a)


class GradedPolyRing(DimRing):
    """Polynomials on dimension-tagged generators, as a dimensioned ring.

    Element encoding: value = sorted tuple of (exponent tuple, coefficient)
    with nonzero coefficients; dim = the shared dimension vector.
    """

    def __init__(self, gen_names, gen_dims, label: str = ""):
        self.gen_names = tuple(gen_names)
        self.gen_dims = tuple(tuple(d) for d in gen_dims)
        if len(self.gen_names) != len(self.gen_dims):
            raise CarrierError("one dimension vector per generator")
        if len(set(self.gen_names)) != len(self.gen_names):
            raise CarrierError("duplicate generator names")
        ranks = {len(d) for d in self.gen_dims} or {0}
        if len(ranks) != 1:
            raise CarrierError("generator dimensions must share one rank")
        self.rank = ranks.pop()
        self.monoid = DimMonoid.free_abelian(self.rank)
        self.dims = DimSet.of_monoid(self.monoid)
        self.index = {n: i for i, n in enumerate(self.gen_names)}
        self.label = label or f"Q[{','.join(self.gen_names)}]"

    # -- monomials ------------------------------------------------------
    @property
    def nvars(self) -> int:
        return len(self.gen_names)

    def monomial_dim(self, alpha) -> tuple:
        out = (0,) * self.rank
        for e, d in zip(alpha, self.gen_dims):
            out = _vec_add(out, _vec_scale(e, d))
        return out

    def monomials_of_dim(self, dim, max_degree: int):
        """All exponent tuples of total degree <= max_degree whose
        dimension is `dim` (brute force over the bounded exponent box)."""
        dim = tuple(dim)
        out = []
        for alpha in itertools.product(range(max_degree + 1), repeat=self.nvars):
            if sum(alpha) <= max_degree and self.monomial_dim(alpha) == dim:
                out.append(alpha)
        return out

    # -- element construction ---------------------------------------------
    def poly(self, terms: dict, dim=None) -> DimElement:
        canon: dict = {}
        for alpha, coeff in terms.items():
            alpha = tuple(alpha)
            if len(alpha) != self.nvars or any(e < 0 for e in alpha):
                raise CarrierError(f"bad exponent tuple {alpha!r}")
            c = canon.get(alpha, Fraction(0)) + Fraction(coeff)
            canon[alpha] = c
        canon = {a: c for a, c in canon.items() if c != 0}
        mono_dims = {self.monomial_dim(a) for a in canon}
        if len(mono_dims) > 1:
            raise DimensionMismatch(*sorted(mono_dims)[:2], context=self.label)
        if canon:
            inferred = mono_dims.pop()
            if dim is not None and tuple(dim) != inferred:
                raise DimensionMismatch(tuple(dim), inferred, self.label)
            dim = inferred
        elif dim is None:
            dim = (0,) * self.rank
        return DimElement(tuple(sorted(canon.items())), tuple(dim))

    def monomial(self, alpha, coeff=1) -> DimElement:
        return self.poly({tuple(alpha): coeff})

    def generator(self, name) -> DimElement:
        alpha = tuple(int(i == self.index[name]) for i in range(self.nvars))
        return self.monomial(alpha)

    def constant(self, c) -> DimElement:
        return self.poly({(0,) * self.nvars: c})

    # -- ring structure ------------------------------------------------------
    def add(self, a, b):
        if a.dim != b.dim:
            raise DimensionMismatch(a.dim, b.dim, self.label)
        acc = dict(a.value)
        for alpha, c in b.value:
            acc[alpha] = acc.get(alpha, Fraction(0)) + c
        return self.poly(acc, dim=a.dim)

    def neg(self, a):
        return DimElement(tuple((al, -c) for al, c in a.value), a.dim)

    def zero(self, d):
        return DimElement((), tuple(d))

    def mul(self, a, b):
        acc: dict = {}
        for (al, ca), (bl, cb) in itertools.product(a.value, b.value):
            key = _vec_add(al, bl)
            acc[key] = acc.get(key, Fraction(0)) + ca * cb
        return self.poly(acc, dim=_vec_add(a.dim, b.dim))

    @property
    def one(self):
        return self.constant(1)

    def scale(self, c, a) -> DimElement:
        return DimElement(
            tuple((al, Fraction(c) * co) for al, co in a.value), a.dim
        ) if c != 0 else self.zero(a.dim)

    def is_unit(self, a) -> bool:
        return len(a.value) == 1 and a.value[0][0] == (0,) * self.nvars

    def degree(self, a) -> int:
        """Total degree; -1 for zero polynomials."""
        return max((sum(al) for al, _ in a.value), default=-1)

    def truncate(self, a, max_degree: int) -> DimElement:
        return DimElement(
            tuple((al, c) for al, c in a.value if sum(al) <= max_degree), a.dim
        )

    # -- calculus ----------------------------------------------------------------
    def partial(self, a: DimElement, name) -> DimElement:
        """The partial derivative along a generator; the result sits in the
        slice shifted down by that generator's dimension."""
        i = self.index[name]
        acc: dict = {}
        for alpha, c in a.value:
            if alpha[i] == 0:
                continue
            down = tuple(e - int(j == i) for j, e in enumerate(alpha))
            acc[down] = acc.get(down, Fraction(0)) + c * alpha[i]
        dim = tuple(x - y for x, y in zip(a.dim, self.gen_dims[i]))
        return self.poly(acc, dim=dim) if acc else self.zero(dim)

    # -- probing --------------------------------------------------------------------
    def sample_dim(self, rng: random.Random):
        alpha = tuple(rng.randint(0, 2) for _ in range(self.nvars))
        return self.monomial_dim(alpha)

    def sample(self, rng: random.Random, dim=None, max_degree: int = 3) -> DimElement:
        if dim is None:
            dim = self.sample_dim(rng)
        monos = self.monomials_of_dim(dim, max_degree)
        if not monos:
            return self.zero(dim)
        rng.shuffle(monos)
        picked = monos[: rng.randint(1, min(3, len(monos)))]
        return self.poly({al: rand_fraction(rng) for al in picked}, dim=tuple(dim))

    def probe_dims(self):
        dims = {self.monomial_dim(a) for a in
                itertools.product(range(2), repeat=self.nvars)}
        return tuple(sorted(dims))

    def probe_elements(self, rng: random.Random, budget: int = 30):
        out = [self.one, self.zero((0,) * self.rank)]
        out += [self.generator(n) for n in self.gen_names]
        out += [self.sample(rng) for _ in range(budget)]
        return tuple(out)

    # -- monomial ideals ---------------------------------------------------------------
    def monomial_divides(self, alpha, beta) -> bool:
        return all(x <= y for x, y in zip(alpha, beta))

    def monomial_ideal_contains(self, gens, x: DimElement) -> bool:
        """Membership in the monomial ideal the generators span: every
        monomial of x must be divisible by some generator monomial."""
        gen_alphas = []
        for g in gens:
            if len(g.value) != 1:
                raise CarrierError("monomial ideal generators must be monomials")
            gen_alphas.append(g.value[0][0])
        return all(
            any(self.monomial_divides(ga, al) for ga in gen_alphas)
            for al, _ in x.value
        )

    def monomial_ideal(self, gens) -> Ideal:
        """The ideal of everything divisible by one of the generator
        monomials, with the normal form that drops exactly those terms.

        `gens` may be generator names or monomial elements.
        """
        elems = tuple(
            self.generator(g) if isinstance(g, str) else g for g in gens
        )
        alphas = []
        for g in elems:
            if len(g.value) != 1:
                raise CarrierError("monomial ideal generators must be monomials")
            alphas.append(g.value[0][0])

        def nf(a: DimElement) -> DimElement:
            kept = tuple(
                (al, c)
                for al, c in a.value
                if not any(self.monomial_divides(ga, al) for ga in alphas)
            )
            return DimElement(kept, a.dim)

        return Ideal(self, elems, nf)

    # -- rendering -------------------------------------------------------------------------
    def show(self, a: DimElement) -> str:
        if not a.value:
            return "0"
        parts = []
        for alpha, c in a.value:
            factors = [
                f"{n}^{e}" if e > 1 else n
                for n, e in zip(self.gen_names, alpha)
                if e
            ]
            if not factors:
                parts.append(str(c))
            elif c == 1:
                parts.append("*".join(factors))
            elif c == -1:
                parts.append("-" + "*".join(factors))
            else:
                parts.append("*".join([str(c)] + factors))
        out = " + ".join(parts)
        return out.replace("+ -", "- ")
