"""Dimensioned Poisson algebras on graded polynomial carriers.

The commutative product has a homogeneous dimension p: it is the
polynomial product scaled by a fixed monomial of dimension p (the plain
product when p = 0).  The bracket has homogeneous dimension b and is the
biderivation extension of an antisymmetric table of structure constants
{x_i, x_j}, each homogeneous of dimension b + g_i + g_j.  Construction
verifies antisymmetry, Jacobi on generator triples (which suffices for
biderivations, and is cross-checked on random probes), and the Leibniz
interaction -- which for a scaled product additionally needs the scaling
element to bracket to zero with everything; that is checked, not assumed.
"""

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import CarrierError, ConstructionError
from .group import DimElement
from .linalg import nullspace
from .poly import GradedPolyRing
from .report import CheckReport


@dataclass(frozen=True)
class DimPoisson:
    ring: GradedPolyRing
    product_dim: tuple
    bracket_dim: tuple
    scale: DimElement                  # homogeneous, dim = product_dim
    table: dict                        # (name, name) -> structure constant

    # -- the two multiplications ---------------------------------------
    def product(self, f: DimElement, g: DimElement) -> DimElement:
        return self.ring.mul(self.scale, self.ring.mul(f, g))

    def bracket(self, f: DimElement, g: DimElement) -> DimElement:
        """Biderivation extension of the structure-constant table; the
        result sits in the slice b + dim(f) + dim(g)."""
        ring = self.ring
        out = ring.zero(
            tuple(b + x + y for b, x, y in zip(self.bracket_dim, f.dim, g.dim))
        )
        partials_f = {}
        partials_g = {}
        for i, ni in enumerate(ring.gen_names):
            for j, nj in enumerate(ring.gen_names):
                if i == j:
                    continue
                t = self.table[(ni, nj)]
                if not t.value:
                    continue
                if ni not in partials_f:
                    partials_f[ni] = ring.partial(f, ni)
                if nj not in partials_g:
                    partials_g[nj] = ring.partial(g, nj)
                df, dg = partials_f[ni], partials_g[nj]
                if not df.value or not dg.value:
                    continue
                out = ring.add(out, ring.mul(ring.mul(df, dg), t))
        return out

    def show(self, f: DimElement) -> str:
        return self.ring.show(f)


def make_poisson(
    ring: GradedPolyRing,
    bracket_table: dict,
    bracket_dim=None,
    product_dim=None,
    scale: "DimElement | None" = None,
    rng=None,
    probes: int = 20,
    validate: bool = True,
) -> DimPoisson:
    """Assemble and (by default) validate a dimensioned Poisson algebra.

    `bracket_table` maps generator-name pairs to homogeneous elements;
    missing pairs default to zero and missing mirror entries to the
    negated transpose.  Violations are rejected loudly with a witness.
    """
    rng = rng or random.Random(61)
    product_dim = tuple(product_dim) if product_dim is not None else (0,) * ring.rank
    if scale is None:
        if any(product_dim):
            raise CarrierError("a nonzero product dimension needs a scaling element")
        scale = ring.one
    if scale.dim != product_dim:
        raise ConstructionError(
            f"scaling element sits at {scale.dim}, not the product dimension {product_dim}"
        )

    table = {}
    for (a, b), v in bracket_table.items():
        table[(a, b)] = v
    if bracket_dim is None:
        for (a, b), v in table.items():
            if v.value:
                ga = ring.gen_dims[ring.index[a]]
                gb = ring.gen_dims[ring.index[b]]
                bracket_dim = tuple(d - x - y for d, x, y in zip(v.dim, ga, gb))
                break
        else:
            bracket_dim = (0,) * ring.rank
    bracket_dim = tuple(bracket_dim)

    full = {}
    for i, ni in enumerate(ring.gen_names):
        for j, nj in enumerate(ring.gen_names):
            expect = tuple(
                b + x + y
                for b, x, y in zip(
                    bracket_dim, ring.gen_dims[i], ring.gen_dims[j]
                )
            )
            if (ni, nj) in table:
                full[(ni, nj)] = table[(ni, nj)]
            elif (nj, ni) in table:
                full[(ni, nj)] = ring.neg(table[(nj, ni)])
            else:
                full[(ni, nj)] = ring.zero(expect)
    p = DimPoisson(ring, product_dim, bracket_dim, scale, full)
    if validate:
        rep = poisson_axiom_report(p, rng=rng, probes=probes)
        if not rep.ok:
            raise ConstructionError(
                f"Poisson construction rejected: {rep.failures[0].line()}"
            )
    return p


def poisson_axiom_report(p: DimPoisson, rng=None, probes: int = 25) -> CheckReport:
    """The full dimensioned-Poisson axiom suite, exact and tolerance-free."""
    rng = rng or random.Random(67)
    ring = p.ring
    rep = CheckReport(f"Poisson algebra on {ring.label}")

    ok, w = True, ""
    for i, ni in enumerate(ring.gen_names):
        for j, nj in enumerate(ring.gen_names):
            if i == j:
                continue
            t = p.table[(ni, nj)]
            expect = tuple(
                b + x + y
                for b, x, y in zip(p.bracket_dim, ring.gen_dims[i], ring.gen_dims[j])
            )
            if t.dim != expect:
                ok, w = False, f"dim({{{ni},{nj}}}) = {t.dim}, expected {expect}"
    rep.check("structure constants sit at b+g_i+g_j", ok, w)

    ok, w = True, ""
    for i, ni in enumerate(ring.gen_names):
        for nj in ring.gen_names[i:]:
            if ni == nj:
                continue
            lhs = p.table[(ni, nj)]
            rhs = ring.neg(p.table[(nj, ni)])
            if not ring.eq(lhs, rhs):
                ok, w = False, f"table not antisymmetric at ({ni},{nj})"
    rep.check("table antisymmetry", ok, w)

    ok, w = True, ""
    for _ in range(probes):
        f = ring.sample(rng)
        g = ring.sample(rng)
        if not ring.eq(p.bracket(f, g), ring.neg(p.bracket(g, f))):
            ok, w = False, f"{{f,g}} != -{{g,f}} at {ring.show(f)}, {ring.show(g)}"
    rep.check("bracket antisymmetry on probes", ok, w)

    ok, w = True, ""
    for na, nb, nc in itertools.combinations(ring.gen_names, 3):
        a, b, c = map(ring.generator, (na, nb, nc))
        jac = ring.add(
            p.bracket(a, p.bracket(b, c)),
            ring.add(p.bracket(b, p.bracket(c, a)), p.bracket(c, p.bracket(a, b))),
        )
        if not ring.is_zero(jac):
            ok, w = False, f"Jacobi fails on generators ({na},{nb},{nc})"
    rep.check("Jacobi on generator triples", ok, w)

    ok, w = True, ""
    for _ in range(probes):
        f, g, h = (ring.sample(rng) for _ in range(3))
        jac = ring.add(
            p.bracket(f, p.bracket(g, h)),
            ring.add(p.bracket(g, p.bracket(h, f)), p.bracket(h, p.bracket(f, g))),
        )
        if not ring.is_zero(jac):
            ok, w = False, f"Jacobi fails at {ring.show(f)}, {ring.show(g)}, {ring.show(h)}"
    rep.check("Jacobi on random probes", ok, w)

    ok, w = True, ""
    for _ in range(probes):
        f, g, h = (ring.sample(rng) for _ in range(3))
        lhs = p.bracket(f, p.product(g, h))
        rhs = ring.add(
            p.product(p.bracket(f, g), h), p.product(g, p.bracket(f, h))
        )
        if not ring.eq(lhs, rhs):
            ok, w = False, f"Leibniz fails at {ring.show(f)}, {ring.show(g)}, {ring.show(h)}"
    rep.check("Leibniz between bracket and product", ok, w)

    ok, w = True, ""
    for _ in range(probes):
        f = ring.sample(rng)
        g = ring.sample(rng)
        br = p.bracket(f, g)
        expect = tuple(b + x + y for b, x, y in zip(p.bracket_dim, f.dim, g.dim))
        if br.dim != expect:
            ok, w = False, f"dim({{f,g}}) != b+dim(f)+dim(g) at {ring.show(f)}, {ring.show(g)}"
        pr = p.product(f, g)
        expectp = tuple(q + x + y for q, x, y in zip(p.product_dim, f.dim, g.dim))
        if pr.dim != expectp:
            ok, w = False, f"dim(f*g) != p+dim(f)+dim(g) at {ring.show(f)}, {ring.show(g)}"
    rep.check("dimension projections of both products", ok, w)

    ok, w = True, ""
    for _ in range(probes):
        f = ring.sample(rng)
        g = ring.sample(rng)
        if not ring.eq(p.product(f, g), p.product(g, f)):
            ok, w = False, f"product not commutative at {ring.show(f)}, {ring.show(g)}"
        h = ring.sample(rng)
        if not ring.eq(
            p.product(p.product(f, g), h), p.product(f, p.product(g, h))
        ):
            ok, w = False, f"product not associative at {ring.show(f)}"
    rep.check("commutative associative product", ok, w)

    return rep


# ---------------------------------------------------------------------------
# Coisotropes and reduction
# ---------------------------------------------------------------------------


def coisotrope_check(p: DimPoisson, ideal_gens, rng=None, probes: int = 20) -> CheckReport:
    """Is the monomial constraint ideal a coisotrope: an ideal for the
    product (probed, though automatic for monomial ideals) and a Lie
    subalgebra for the bracket (generator pairs plus random probes)."""
    rng = rng or random.Random(71)
    ring = p.ring
    ideal = ring.monomial_ideal(ideal_gens)
    rep = CheckReport(f"coisotrope candidate ({', '.join(map(str, ideal_gens))})")

    ok, w = True, ""
    for _ in range(probes):
        f = ring.sample(rng)
        for g in ideal.generators:
            if not ideal.contains(p.product(f, g)):
                ok, w = False, f"product leaks: f*{ring.show(g)} left the ideal"
    rep.check("ideal for the product", ok, w)

    ok, w = True, ""
    for g1, g2 in itertools.product(ideal.generators, repeat=2):
        if not ideal.contains(p.bracket(g1, g2)):
            ok, w = (
                False,
                f"{{{ring.show(g1)},{ring.show(g2)}}} = "
                f"{ring.show(p.bracket(g1, g2))} is outside the ideal",
            )
    rep.check("bracket closes on generator pairs", ok, w)

    ok, w = True, ""
    for _ in range(probes):
        f = ring.sample(rng)
        for g1, g2 in itertools.product(ideal.generators, repeat=2):
            el = ring.mul(f, g1)
            if not ideal.contains(p.bracket(el, g2)):
                ok, w = False, f"bracket leaks on ideal probe {ring.show(el)}"
    rep.check("bracket closes on random ideal elements", ok, w)
    return rep


class ReducedPoisson:
    """The subquotient N(I)/I presented degree-by-degree up to a cutoff.

    N(I) is the largest subspace whose bracket against the ideal stays in
    the ideal; membership is decided by bracketing with the ideal
    generators.  Representatives are ideal normal forms; operations
    compute upstairs, reduce, and truncate at the cutoff.
    """

    def __init__(self, parent: DimPoisson, ideal_gens, cutoff: int, rng=None):
        if cutoff < 1:
            raise CarrierError("cutoff must be >= 1")
        rng = rng or random.Random(73)
        co = coisotrope_check(parent, ideal_gens, rng=rng)
        if not co.ok:
            raise ConstructionError(
                f"not a coisotrope: {co.failures[0].witness}"
            )
        self.parent = parent
        self.ring = parent.ring
        self.ideal = self.ring.monomial_ideal(ideal_gens)
        self.cutoff = cutoff
        self.basis = self._compute_basis()

    def in_idealizer(self, f: DimElement) -> bool:
        return all(
            self.ideal.contains(self.parent.bracket(f, g))
            for g in self.ideal.generators
        )

    def _compute_basis(self):
        """Per degree, solve the linear conditions cutting N(I) out of the
        span of non-ideal monomials; representatives modulo I."""
        ring = self.ring
        basis = []
        nf = self.ideal.normal_form
        for deg in range(0, self.cutoff + 1):
            monos = [
                alpha
                for alpha in itertools.product(range(deg + 1), repeat=ring.nvars)
                if sum(alpha) == deg
                and not self.ideal.contains(ring.monomial(alpha))
            ]
            if not monos:
                continue
            by_dim: dict = {}
            for alpha in monos:
                by_dim.setdefault(ring.monomial_dim(alpha), []).append(alpha)
            for dim, alphas in sorted(by_dim.items()):
                # rows: one linear condition per (ideal generator, residual monomial)
                conditions: dict = {}
                for col, alpha in enumerate(alphas):
                    m = ring.monomial(alpha)
                    for g in self.ideal.generators:
                        residual = nf(self.parent.bracket(m, g))
                        for beta, coeff in residual.value:
                            conditions.setdefault((g, beta), {})[col] = coeff
                rows = [
                    tuple(cond.get(c, Fraction(0)) for c in range(len(alphas)))
                    for cond in conditions.values()
                ]
                for vec in nullspace(rows, len(alphas)):
                    terms = {
                        alpha: c for alpha, c in zip(alphas, vec) if c != 0
                    }
                    basis.append(ring.poly(terms, dim=dim))
        return tuple(basis)

    # -- the reduced structure ------------------------------------------------
    def reduce(self, f: DimElement) -> DimElement:
        """Project a numerator element to its coset representative."""
        if not self.in_idealizer(f):
            raise CarrierError("element is not in the idealizer")
        return self.ring.truncate(self.ideal.normal_form(f), self.cutoff)

    def product(self, f, g):
        return self.ring.truncate(
            self.ideal.normal_form(self.parent.product(f, g)), self.cutoff
        )

    def bracket(self, f, g):
        return self.ring.truncate(
            self.ideal.normal_form(self.parent.bracket(f, g)), self.cutoff
        )

    def sample(self, rng: random.Random) -> DimElement:
        from .sampling import rand_fraction

        pick = rng.choice(self.basis)
        return self.ring.scale(rand_fraction(rng), pick)

    def axiom_report(self, rng=None, probes: int = 20) -> CheckReport:
        """Poisson laws on reduced representatives, degree-guarded so the
        cutoff truncation can never be mistaken for a failure."""
        rng = rng or random.Random(79)
        ring = self.ring
        rep = CheckReport(f"reduced Poisson (cutoff {self.cutoff})")
        lowdeg = [b for b in self.basis if ring.degree(b) <= self.cutoff // 3]
        ok_a = ok_j = ok_l = True
        w_a = w_j = w_l = ""
        for _ in range(probes):
            f, g, h = (rng.choice(lowdeg) for _ in range(3))
            if not ring.eq(self.bracket(f, g), ring.neg(self.bracket(g, f))):
                ok_a, w_a = False, f"antisymmetry fails at {ring.show(f)}, {ring.show(g)}"
            jac = ring.add(
                self.bracket(f, self.bracket(g, h)),
                ring.add(
                    self.bracket(g, self.bracket(h, f)),
                    self.bracket(h, self.bracket(f, g)),
                ),
            )
            if not ring.is_zero(jac):
                ok_j, w_j = False, f"Jacobi fails at {ring.show(f)}, {ring.show(g)}, {ring.show(h)}"
            lhs = self.bracket(f, self.product(g, h))
            rhs = ring.add(
                self.product(self.bracket(f, g), h),
                self.product(g, self.bracket(f, h)),
            )
            if not ring.eq(lhs, rhs):
                ok_l, w_l = False, f"Leibniz fails at {ring.show(f)}, {ring.show(g)}, {ring.show(h)}"
        rep.check("antisymmetry", ok_a, w_a)
        rep.check("Jacobi", ok_j, w_j)
        rep.check("Leibniz", ok_l, w_l)
        return rep


def poisson_reduce(p: DimPoisson, ideal_gens, cutoff: int, rng=None) -> ReducedPoisson:
    return ReducedPoisson(p, ideal_gens, cutoff, rng=rng)


# ---------------------------------------------------------------------------
# Products of dimensioned Poisson algebras
# ---------------------------------------------------------------------------


def _combined_ring(a: DimPoisson, b: DimPoisson, pad: bool) -> GradedPolyRing:
    names = a.ring.gen_names + b.ring.gen_names
    if len(set(names)) != len(names):
        raise CarrierError("factor algebras must use distinct generator names")
    if pad:
        ka, kb = a.ring.rank, b.ring.rank
        dims = [d + (0,) * kb for d in a.ring.gen_dims]
        dims += [(0,) * ka + d for d in b.ring.gen_dims]
    else:
        if a.ring.rank != b.ring.rank:
            raise CarrierError("homogeneous product needs one dimension group")
        dims = list(a.ring.gen_dims) + list(b.ring.gen_dims)
    return GradedPolyRing(names, dims, label=f"{a.ring.label}(x){b.ring.label}")


def _embed(ring: GradedPolyRing, sub: GradedPolyRing, offset: int, pad, el: DimElement) -> DimElement:
    terms = {}
    for alpha, c in el.value:
        beta = [0] * ring.nvars
        for i, e in enumerate(alpha):
            beta[offset + i] = e
        terms[tuple(beta)] = c
    dim = pad(el.dim)
    return ring.poly(terms, dim=dim) if terms else ring.zero(dim)


def _combine_tables(a: DimPoisson, b: DimPoisson, ring, pad_a, pad_b):
    """Structure constants of the product bracket on the combined ring:
    an A-pair brackets to {x,y}_A tensor the B-scale, a B-pair to the
    A-scale tensor {u,v}_B, and cross pairs vanish."""
    na, nb = a.ring.nvars, b.ring.nvars
    sa = _embed(ring, a.ring, 0, pad_a, a.scale)
    sb = _embed(ring, b.ring, na, pad_b, b.scale)
    table = {}
    for x, y in itertools.permutations(a.ring.gen_names, 2):
        table[(x, y)] = ring.mul(_embed(ring, a.ring, 0, pad_a, a.table[(x, y)]), sb)
    for u, v in itertools.permutations(b.ring.gen_names, 2):
        table[(u, v)] = ring.mul(sa, _embed(ring, b.ring, na, pad_b, b.table[(u, v)]))
    return table, sa, sb


def poisson_product_hetero(a: DimPoisson, b: DimPoisson, rng=None) -> DimPoisson:
    """Product of two algebras whose bracket and product dimensions agree
    factor-wise; the result lives over the product dimension group."""
    if a.product_dim != a.bracket_dim:
        raise ConstructionError(
            f"left factor has product dim {a.product_dim} != bracket dim {a.bracket_dim}"
        )
    if b.product_dim != b.bracket_dim:
        raise ConstructionError(
            f"right factor has product dim {b.product_dim} != bracket dim {b.bracket_dim}"
        )
    ring = _combined_ring(a, b, pad=True)
    ka, kb = a.ring.rank, b.ring.rank
    pad_a = lambda d: d + (0,) * kb
    pad_b = lambda d: (0,) * ka + d
    table, sa, sb = _combine_tables(a, b, ring, pad_a, pad_b)
    scale = ring.mul(sa, sb)
    bracket_dim = tuple(
        x + y for x, y in zip(pad_a(a.bracket_dim), pad_b(b.bracket_dim))
    )
    return make_poisson(
        ring,
        table,
        bracket_dim=bracket_dim,
        product_dim=scale.dim,
        scale=scale,
        rng=rng,
    )


def poisson_product_homo(a: DimPoisson, b: DimPoisson, rng=None) -> DimPoisson:
    """Product of two algebras over one dimension group, subject to the
    compatibility b+q = p+c between bracket and product dimensions."""
    if a.ring.rank != b.ring.rank:
        raise ConstructionError("homogeneous product needs one dimension group")
    lhs = tuple(x + y for x, y in zip(a.bracket_dim, b.product_dim))
    rhs = tuple(x + y for x, y in zip(a.product_dim, b.bracket_dim))
    if lhs != rhs:
        raise ConstructionError(
            f"dimension condition fails: b+q = {lhs} but p+c = {rhs}"
        )
    ring = _combined_ring(a, b, pad=False)
    ident = lambda d: d
    table, sa, sb = _combine_tables(a, b, ring, ident, ident)
    scale = ring.mul(sa, sb)
    return make_poisson(
        ring,
        table,
        bracket_dim=lhs,
        product_dim=scale.dim,
        scale=scale,
        rng=rng,
    )
