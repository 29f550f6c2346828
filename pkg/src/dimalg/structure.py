"""User-declared finite dimensioned structures and Poisson descriptions.

Structure files declare a finite dimension monoid table, slice element
lists, per-slice addition tables, a global multiplication table, and an
optional unit-section candidate.  Shape problems (missing cells, unknown
names) are input errors; axiom violations are findings reported with
witnesses.  Poisson files declare generators with integer dimension
vectors, the two homogeneous dimensions, a bracket table of polynomial
strings, and an optional monomial ideal.
"""

import itertools
import json
import random
from fractions import Fraction

from .errors import (
    CarrierError,
    DimensionMismatch,
    InputFormatError,
)
from .exprparse import parse_poly_expr
from .group import DimElement
from .monoid import DimSet
from .poisson import make_poisson
from .poly import GradedPolyRing
from .report import CheckReport
from .ring import DimRing, ring_axiom_report, unit_section_check


def _load_json(source) -> dict:
    if isinstance(source, dict):
        return source
    try:
        with open(source) as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputFormatError(f"cannot read file: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputFormatError(
            f"not valid JSON (line {exc.lineno}, column {exc.colno})"
        ) from exc


class TableDimRing(DimRing):
    """A finite dimensioned ring given entirely by lookup tables.

    Nothing is assumed about the tables beyond totality: the axiom suite
    decides whether they actually form a dimensioned ring.
    """

    def __init__(self, doc: dict):
        try:
            mon = doc["monoid"]
            self.dim_elems = tuple(str(x) for x in mon["elements"])
            self.dim_identity = str(mon["identity"])
            self.dim_op = {
                str(a): {str(b): str(c) for b, c in row.items()}
                for a, row in mon["op"].items()
            }
            self.slices = {
                str(d): tuple(str(x) for x in xs) for d, xs in doc["slices"].items()
            }
            self.add_table = {
                str(d): {
                    str(a): {str(b): str(c) for b, c in row.items()}
                    for a, row in tbl.items()
                }
                for d, tbl in doc["add"].items()
            }
            self.mul_table = {
                str(a): {str(b): str(c) for b, c in row.items()}
                for a, row in doc["mul"].items()
            }
            self.one_name = str(doc["one"])
        except (KeyError, TypeError, AttributeError) as exc:
            raise InputFormatError(f"structure file missing or malformed field: {exc}") from exc

        # shape validation: declared names only, tables total
        if len(set(self.dim_elems)) != len(self.dim_elems):
            raise InputFormatError("duplicate dimension names")
        if self.dim_identity not in self.dim_elems:
            raise InputFormatError(f"identity {self.dim_identity!r} is not a declared dimension")
        for a in self.dim_elems:
            row = self.dim_op.get(a)
            if row is None or set(row) != set(self.dim_elems):
                raise InputFormatError(f"monoid row {a!r} is not total")
            for c in row.values():
                if c not in self.dim_elems:
                    raise InputFormatError(f"monoid table references undeclared dimension {c!r}")
        if set(self.slices) != set(self.dim_elems):
            raise InputFormatError("slices must cover exactly the declared dimensions")
        self.dim_of = {}
        for d, xs in self.slices.items():
            if not xs:
                raise InputFormatError(f"slice {d!r} is empty")
            for x in xs:
                if x in self.dim_of:
                    raise InputFormatError(f"element name {x!r} appears in two slices")
                self.dim_of[x] = d
        all_names = set(self.dim_of)
        for d, xs in self.slices.items():
            tbl = self.add_table.get(d)
            if tbl is None or set(tbl) != set(xs):
                raise InputFormatError(f"addition table for slice {d!r} is not total")
            for a, row in tbl.items():
                if set(row) != set(xs):
                    raise InputFormatError(f"addition row {a!r} in slice {d!r} is not total")
                for c in row.values():
                    if c not in all_names:
                        raise InputFormatError(f"addition references undeclared element {c!r}")
        if set(self.mul_table) != all_names:
            raise InputFormatError("multiplication table is not total")
        for a, row in self.mul_table.items():
            if set(row) != all_names:
                raise InputFormatError(f"multiplication row {a!r} is not total")
            for c in row.values():
                if c not in all_names:
                    raise InputFormatError(f"multiplication references undeclared element {c!r}")
        if self.one_name not in self.dim_of:
            raise InputFormatError(f"declared unit {self.one_name!r} is not an element")

        self.dims = DimSet.plain(self.dim_elems)
        self.commutative = bool(doc.get("commutative", True))
        self.label = str(doc.get("name", "structure"))
        self._zeros = self._find_zeros()
        self._unit_candidate = doc.get("unit_candidate")

    def _find_zeros(self) -> dict:
        zeros = {}
        for d, xs in self.slices.items():
            tbl = self.add_table[d]
            for z in xs:
                if all(tbl[z][x] == x and tbl[x][z] == x for x in xs):
                    zeros[d] = z
                    break
        return zeros

    # -- DimRing protocol ---------------------------------------------------
    def dim_combine(self, d, e):
        return self.dim_op[d][e]

    def el(self, name: str) -> DimElement:
        return DimElement(name, self.dim_of[name])

    def add(self, a, b):
        if a.dim != b.dim:
            raise DimensionMismatch(a.dim, b.dim, self.label)
        return self.el(self.add_table[a.dim][a.value][b.value])

    def neg(self, a):
        z = self._zeros.get(a.dim)
        if z is None:
            raise CarrierError(f"slice {a.dim!r} has no additive identity")
        tbl = self.add_table[a.dim]
        for x in self.slices[a.dim]:
            if tbl[a.value][x] == z:
                return self.el(x)
        raise CarrierError(f"{a.value!r} has no additive inverse")

    def zero(self, d):
        z = self._zeros.get(d)
        if z is None:
            raise CarrierError(f"slice {d!r} has no additive identity")
        return self.el(z)

    def mul(self, a, b):
        return self.el(self.mul_table[a.value][b.value])

    @property
    def one(self):
        return self.el(self.one_name)

    def sample(self, rng: random.Random, dim=None):
        d = dim if dim is not None else rng.choice(self.dim_elems)
        return self.el(rng.choice(self.slices[d]))

    def elements(self):
        return tuple(self.el(x) for x in self.dim_of)

    def probe_elements(self, rng, budget=0):
        return self.elements()

    def slice_elements(self, d):
        return tuple(self.el(x) for x in self.slices[d])

    def show(self, a):
        return str(a.value)


def slice_group_report(ring: TableDimRing) -> CheckReport:
    """Exhaustive abelian-group laws for every declared slice."""
    rep = CheckReport(f"slice groups of {ring.label}")
    ok_cl = ok_id = ok_inv = ok_as = ok_cm = True
    w_cl = w_id = w_inv = w_as = w_cm = ""
    for d, xs in ring.slices.items():
        tbl = ring.add_table[d]
        for a, b in itertools.product(xs, repeat=2):
            if tbl[a][b] not in xs:
                ok_cl, w_cl = False, f"{a}+{b} leaves slice {d!r}"
        if d not in ring._zeros:
            ok_id, w_id = False, f"slice {d!r} has no additive identity"
            continue
        z = ring._zeros[d]
        for a in xs:
            if not any(tbl[a][x] == z for x in xs):
                ok_inv, w_inv = False, f"{a} in slice {d!r} has no inverse"
        for a, b, c in itertools.product(xs, repeat=3):
            if tbl[tbl[a][b]][c] != tbl[a][tbl[b][c]]:
                ok_as, w_as = False, f"addition not associative at {a},{b},{c}"
                break
        for a, b in itertools.product(xs, repeat=2):
            if tbl[a][b] != tbl[b][a]:
                ok_cm, w_cm = False, f"addition not commutative at {a},{b}"
    rep.check("slices closed under addition", ok_cl, w_cl)
    rep.check("additive identities exist", ok_id, w_id)
    rep.check("additive inverses exist", ok_inv, w_inv)
    rep.check("addition associative", ok_as, w_as)
    rep.check("addition commutative", ok_cm, w_cm)
    return rep


def structure_axiom_report(ring: TableDimRing, rng=None) -> CheckReport:
    """The full suite for a declared structure: slice groups first, then
    the dimensioned-ring laws, then the unit-section candidate if any."""
    rng = rng or random.Random(97)
    rep = slice_group_report(ring)
    if rep.ok:
        rep = rep.merged(ring_axiom_report(ring, rng=rng))
        if ring._unit_candidate is not None:
            cand = {str(d): str(x) for d, x in ring._unit_candidate.items()}
            missing = set(ring.dim_elems) - set(cand)
            if missing:
                raise InputFormatError(
                    f"unit candidate misses dimensions {sorted(missing)}"
                )
            for d, x in cand.items():
                if x not in ring.dim_of:
                    raise InputFormatError(f"unit candidate names unknown element {x!r}")
            check = unit_section_check(ring, lambda d: ring.el(cand[d]))
            rep = rep.merged(check.report)
    return rep


def load_structure(source) -> TableDimRing:
    return TableDimRing(_load_json(source))


def check_structure(source, rng=None):
    """Load and check a structure file.

    Returns (exit_code, lines): 0 all laws pass, 1 an axiom fails.
    Input-shape errors raise InputFormatError (the CLI maps them to 2).
    """
    ring = load_structure(source)
    rep = structure_axiom_report(ring, rng=rng)
    return (0 if rep.ok else 1), rep.lines()


# ---------------------------------------------------------------------------
# Polynomial parsing and Poisson descriptions
# ---------------------------------------------------------------------------


def parse_poly(ring: GradedPolyRing, src: str) -> DimElement:
    """Evaluate a polynomial expression over a graded ring's generators."""
    tree = parse_poly_expr(src, known_symbol=lambda s: s in ring.index)

    def power(base, n):
        if n >= 0:
            return ring.pow(base, n)
        if ring.is_unit(base):
            c = base.value[0][1]
            return ring.constant(Fraction(1) / c ** (-n))
        raise CarrierError("negative powers are only defined for constants")

    def div(a, b):
        if not ring.is_unit(b):
            raise CarrierError("division is only defined by nonzero constants")
        return ring.scale(1 / b.value[0][1], a)

    from .exprparse import eval_tree

    return eval_tree(
        tree,
        leaf_number=ring.constant,
        leaf_symbol=lambda name, pos: ring.generator(name),
        add=ring.add,
        sub=ring.sub,
        mul=ring.mul,
        div=div,
        power=power,
    )


def load_poisson(source, validate: bool = True, rng=None):
    """Build a DimPoisson (plus its declared ideal) from a JSON document."""
    doc = _load_json(source)
    try:
        gens = [(str(g["name"]), tuple(int(x) for x in g["dim"])) for g in doc["generators"]]
    except (KeyError, TypeError) as exc:
        raise InputFormatError(f"bad generators field: {exc}") from exc
    if not gens:
        raise InputFormatError("a Poisson description needs generators")
    ring = GradedPolyRing([n for n, _ in gens], [d for _, d in gens])

    def poly_of(text):
        try:
            return parse_poly(ring, str(text))
        except (CarrierError, DimensionMismatch) as exc:
            raise InputFormatError(f"bad polynomial {text!r}: {exc}") from exc

    table = {}
    for key, text in doc.get("bracket", {}).items():
        names = [s.strip() for s in str(key).split(",")]
        if len(names) != 2 or any(n not in ring.index for n in names):
            raise InputFormatError(f"bad bracket key {key!r}: expected 'x,y'")
        table[(names[0], names[1])] = poly_of(text)

    product_dim = tuple(int(x) for x in doc.get("product_dim", (0,) * ring.rank))
    bracket_dim = doc.get("bracket_dim")
    if bracket_dim is not None:
        bracket_dim = tuple(int(x) for x in bracket_dim)
    scale = poly_of(doc["scale"]) if "scale" in doc else None

    ideal = [str(x) for x in doc.get("ideal", [])]
    for name in ideal:
        if name not in ring.index:
            raise InputFormatError(f"ideal names unknown generator {name!r}")

    poisson = make_poisson(
        ring,
        table,
        bracket_dim=bracket_dim,
        product_dim=product_dim,
        scale=scale,
        rng=rng,
        validate=validate,
    )
    return poisson, ideal
