"""Restriction of polynomially presented spaces along a free extension.

The construction: expand each original variable u along the basis as
u = u_1 e_1 + ... + u_n e_n, push every generator through the expansion,
decompose the image into basis coordinates, and present the restricted space
by the ideal of all coordinate polynomials.  A brute-force point oracle over
small finite fields ties the construction back to its defining universal
property: base points of the restriction correspond exactly to points of the
original presentation over the extension.
"""

from __future__ import annotations

from .errors import EnumerationBoundError, IncompatibleFieldError
from .extensions import AlgebraElement, FreeExtension, charpoly, extend_scalars
from .fields import Field, canonical_embedding
from .lognorm import LogNorm
from .poly import Poly

POINT_FIELD_CAP = 100
POINT_VARIABLE_CAP = 6


class Presentation:
    """A polynomially presented space: base ring, variables, generators.

    The base is a coefficient field or a free extension of one; optional
    per-variable log-radii give the variables disc semantics (they are
    bookkeeping for the disc constructions, not constraints the point oracle
    enforces).
    """

    def __init__(self, base, variables, generators, radii=None, provenance=""):
        self.base = base
        self.variables = tuple(variables)
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("duplicate variable names")
        gens = []
        for g in generators:
            if not isinstance(g, Poly):
                raise TypeError("generators must be Poly values")
            if g.domain != base:
                raise IncompatibleFieldError("generator over a different base")
            if not g.support() <= set(self.variables):
                raise ValueError("generator uses undeclared variables %s"
                                 % sorted(g.support() - set(self.variables)))
            gens.append(g.with_variables(self.variables))
        self.generators = tuple(gens)
        if radii is not None:
            radii = tuple(LogNorm(r) if not isinstance(r, LogNorm) else r
                          for r in radii)
            if len(radii) != len(self.variables):
                raise ValueError("need one radius per variable")
        self.radii = radii
        self.provenance = provenance

    def generator_strings(self):
        return tuple(g.to_string() for g in self.generators)

    def canonical_generator_set(self):
        return frozenset(g.canonical_string() for g in self.generators)

    def __repr__(self):
        return "Presentation(%s; V(%s) over %s)" % (
            ", ".join(self.variables), ", ".join(self.generator_strings()), self.base)


class RestrictionResult:
    """Outcome of restricting a presentation along a free extension."""

    def __init__(self, presentation, coordinate_map, coefficient_index,
                 original, extension, metadata=None):
        self.presentation = presentation
        self.coordinate_map = dict(coordinate_map)
        self.coefficient_index = tuple(tuple(row) for row in coefficient_index)
        self.original = original
        self.extension = extension
        self.metadata = dict(metadata or {})

    def verify(self):
        """Re-expand the original generators and compare with the stored index."""
        for f, row in zip(self.original.generators, self.coefficient_index):
            again = expand_element(f, self.extension, self.original.variables)
            if tuple(again) != tuple(row):
                return False
        return True

    def __repr__(self):
        return "RestrictionResult(%r)" % (self.presentation,)


def block_names(variable, rank):
    """Names of the coordinate block of an original variable, 1-based."""
    return tuple("%s_%d" % (variable, j + 1) for j in range(rank))


def expand_element(f, ext, variables=None):
    """Coordinates of f after substituting u -> u_1 e_1 + ... + u_n e_n.

    Returns a vector of rank-many polynomials over the base in the block
    variables of every variable in `variables` (default: the variables of f).
    """
    if f.domain != ext:
        raise IncompatibleFieldError("polynomial is not defined over the extension")
    variables = tuple(variables) if variables is not None else f.variables
    base = ext.base
    n = ext.rank
    all_blocks = []
    for v in variables:
        all_blocks.extend(block_names(v, n))
    if len(set(all_blocks)) != len(all_blocks):
        raise ValueError("coordinate block names collide; rename the variables")
    images = {}
    for v in variables:
        coords = tuple(
            Poly.variable(base, name).with_variables(tuple(all_blocks))
            for name in block_names(v, n))
        images[v] = AlgebraElement(ext, coords)
    zero = AlgebraElement(ext, tuple(
        Poly.zero(base, tuple(all_blocks)) for _ in range(n)))
    acc = zero
    for exps, coeff in f.terms.items():
        term = AlgebraElement(ext, tuple(
            Poly.constant(base, c, tuple(all_blocks)) for c in coeff.coords))
        for v, e in zip(f.variables, exps):
            if e:
                term = term * images[v] ** e
        acc = acc + term
    return tuple(c.with_variables(tuple(all_blocks)) for c in acc.coords)


def restrict(p, ext=None, nilpotents=None, level=None):
    """Present the restriction of p along the extension by its coefficient ideal.

    The variables of the result are the blocks u_1 .. u_n of each original
    variable in order; the generators are all basis coordinates of all original
    generators.  When a finite set of topologically nilpotent scaling elements
    and an exhaustion level are supplied they are recorded as metadata (the
    induced integrality constraints carve out no subobject here).
    """
    if ext is None:
        ext = p.base
    if not isinstance(ext, FreeExtension):
        raise TypeError("restriction needs a free extension")
    if p.base != ext:
        raise IncompatibleFieldError("presentation is not defined over the extension")
    n = ext.rank
    variables = []
    for v in p.variables:
        variables.extend(block_names(v, n))
    coefficient_index = []
    generators = []
    for f in p.generators:
        row = expand_element(f, ext, p.variables)
        coefficient_index.append(row)
        generators.extend(poly for poly in row if not poly.is_zero())
    result_pres = Presentation(ext.base, variables, generators,
                               provenance="restriction of %s" % (p.provenance or "input"))
    metadata = {}
    if p.radii is not None:
        metadata["original_radii"] = tuple(str(r) for r in p.radii)
    if nilpotents is not None:
        level = 0 if level is None else int(level)
        scaled = scaling_products(nilpotents, level)
        metadata["nilpotent_set"] = tuple(str(m) for m in nilpotents)
        metadata["level"] = level
        metadata["level_products"] = tuple(str(m) for m in scaled)
        metadata["integral_constraint"] = (
            "m*x is integral for every coordinate x and every m "
            "in the level-fold product set")
    coordinate_map = {v: block_names(v, n) for v in p.variables}
    return RestrictionResult(result_pres, coordinate_map, coefficient_index,
                             original=p, extension=ext, metadata=metadata)


def scaling_products(elements, level):
    """The set of level-fold products of a finite set of elements."""
    if level == 0:
        first = elements[0]
        one = (first.field.one() if hasattr(first, "field")
               else first.extension.unit_element())
        return [one]
    out = list(elements)
    for _ in range(level - 1):
        out = [a * b for a in out for b in elements]
    seen, unique = set(), []
    for x in out:
        if x not in seen:
            seen.add(x)
            unique.append(x)
    return unique


def disc_generators(ext, radius_elements, var_block, y_prefix="y"):
    """Generators y_ij - c_j(r_i * (x_1 e_1 + ... + x_n e_n)) of a disc restriction.

    var_block names the n coordinate variables; for each radius element r_i the
    c_j are the characteristic-polynomial coefficients of r_i times the generic
    element, in the convention z^n + c_1 z^(n-1) + ... + c_n.  Returns the
    generator list together with radius bookkeeping for the y-variables: on the
    integral convention every y_ij has log-radius 0, on the scaled convention
    the j-th y of radius element r carries log-radius j * lognorm-of-r.
    """
    from .spectral import spectral_radius

    n = ext.rank
    var_block = tuple(var_block)
    if len(var_block) != n:
        raise ValueError("var_block must name %d variables" % n)
    base = ext.base
    generic = AlgebraElement(ext, tuple(
        Poly.variable(base, v).with_variables(var_block) for v in var_block))
    gens = []
    radius_meta = {}
    for i, r in enumerate(radius_elements, start=1):
        if not isinstance(r, AlgebraElement):
            r = ext.coerce(r)
        if r.extension != ext:
            raise IncompatibleFieldError("radius element outside the extension")
        scaled = r * generic
        chi = charpoly(scaled)
        rho = None
        if ext.has_valuation and not any(isinstance(c, Poly) for c in r.coords):
            rho = spectral_radius(r)
        for j in range(1, n + 1):
            y = "%s%d_%d" % (y_prefix, i, j)
            c_j = chi.coefficient(j)
            if not isinstance(c_j, Poly):
                c_j = Poly.constant(base, c_j)
            gen = Poly.variable(base, y) - c_j
            gens.append(gen)
            radius_meta[y] = {
                "integral_lognorm": str(LogNorm(0)),
                "scaled_lognorm": str(rho * j) if rho is not None else None,
            }
    return gens, radius_meta


def product(r1, r2):
    """Product of two restrictions: disjoint union of blocks and generators.

    Colliding original variables of the second factor are renamed by priming,
    and their coordinate blocks follow the renaming, so the result coincides
    with the restriction of the product presentation.
    """
    if r1.presentation.base != r2.presentation.base:
        raise IncompatibleFieldError("restrictions over different bases")
    if r1.extension != r2.extension:
        raise IncompatibleFieldError("restrictions along different extensions")
    rename = _disjoint_renaming(r1.original.variables, r2.original.variables)
    p2 = rename_presentation(r2.original, rename)
    combined = product_presentation(r1.original, p2)
    return restrict(combined, r1.extension)


def product_presentation(p1, p2):
    """Product of two presentations over the same base (variables disjoint)."""
    if p1.base != p2.base:
        raise IncompatibleFieldError("presentations over different bases")
    overlap = set(p1.variables) & set(p2.variables)
    if overlap:
        rename = _disjoint_renaming(p1.variables, p2.variables)
        p2 = rename_presentation(p2, rename)
    variables = p1.variables + p2.variables
    gens = [g.with_variables(variables) for g in p1.generators]
    gens += [g.with_variables(variables) for g in p2.generators]
    radii = None
    if p1.radii is not None and p2.radii is not None:
        radii = p1.radii + p2.radii
    return Presentation(p1.base, variables, gens, radii=radii,
                        provenance="product")


def _disjoint_renaming(taken, names):
    taken = set(taken)
    rename = {}
    for v in names:
        new = v
        while new in taken:
            new += "'"
        rename[v] = new
        taken.add(new)
    return rename


def rename_presentation(p, rename):
    variables = tuple(rename.get(v, v) for v in p.variables)
    gens = [Poly(g.domain, variables, dict(g.terms)) for g in p.generators]
    return Presentation(p.base, variables, gens, radii=p.radii,
                        provenance=p.provenance)


def base_change(p, target):
    """Move a presentation along the canonical embedding into target.

    Three shapes are supported: field to larger field (coefficients mapped),
    field to an extension of it (coefficients become scalars of the algebra),
    and extension-based presentations to the same extension with scalars
    extended into a larger coefficient field.
    """
    if isinstance(p.base, FreeExtension):
        if not isinstance(target, Field):
            raise TypeError("base change of an extension presentation targets a field")
        new_ext = extend_scalars(p.base, target)
        emb = canonical_embedding(p.base.base, target)
        gens = []
        for g in p.generators:
            terms = {}
            for exps, coeff in g.terms.items():
                terms[exps] = AlgebraElement(new_ext, tuple(emb(c) for c in coeff.coords))
            gens.append(Poly(new_ext, g.variables, terms))
        return Presentation(new_ext, p.variables, gens, radii=p.radii,
                            provenance=p.provenance)
    if isinstance(target, FreeExtension):
        emb = canonical_embedding(p.base, target.base)
        if emb is None:
            raise IncompatibleFieldError("no canonical embedding %s -> %s"
                                         % (p.base, target.base))
        gens = []
        for g in p.generators:
            terms = {exps: target.scalar(emb(c)) for exps, c in g.terms.items()}
            gens.append(Poly(target, g.variables, terms))
        return Presentation(target, p.variables, gens, radii=p.radii,
                            provenance=p.provenance)
    emb = canonical_embedding(p.base, target)
    if emb is None:
        raise IncompatibleFieldError("no canonical embedding %s -> %s"
                                     % (p.base, target))
    gens = []
    for g in p.generators:
        terms = {exps: emb(c) for exps, c in g.terms.items()}
        gens.append(Poly(target, g.variables, terms))
    return Presentation(target, p.variables, gens, radii=p.radii,
                        provenance=p.provenance)


def points_over(p, domain):
    """All solutions of the generators with coordinates in a finite domain.

    domain is a finite field (reached from the base by the canonical
    embedding) or a finite free extension; enumeration is exhaustive and the
    output is sorted canonically.  Exceeding the configured bounds raises
    EnumerationBoundError rather than truncating.
    """
    if len(p.variables) > POINT_VARIABLE_CAP:
        raise EnumerationBoundError(
            "%d variables exceed the enumeration cap of %d"
            % (len(p.variables), POINT_VARIABLE_CAP))
    if not domain.is_finite():
        raise EnumerationBoundError("point enumeration needs a finite domain")
    if domain.size() > POINT_FIELD_CAP:
        raise EnumerationBoundError(
            "domain with %d elements exceeds the enumeration cap of %d"
            % (domain.size(), POINT_FIELD_CAP))
    if domain == p.base:
        pres = p
    elif isinstance(p.base, FreeExtension):
        raise IncompatibleFieldError(
            "presentation over an extension enumerates over that extension")
    else:
        pres = base_change(p, domain)
    elems = domain.elements()
    points = []
    for assignment in _assignments(pres.variables, elems):
        if all(g.evaluate(assignment).is_zero() for g in pres.generators):
            points.append(tuple(assignment[v] for v in pres.variables))
    points.sort(key=lambda pt: tuple(x.sort_key() for x in pt))
    return points


def _assignments(variables, elems):
    if not variables:
        yield {}
        return
    head, tail = variables[0], variables[1:]
    for rest in _assignments(tail, elems):
        for e in elems:
            d = dict(rest)
            d[head] = e
            yield d


def psi_apply(result, point):
    """Map a base point of the restriction to the corresponding point of the
    original presentation over the extension (and verify it is one)."""
    pres = result.presentation
    if len(point) != len(pres.variables):
        raise ValueError("point has wrong length")
    assignment = dict(zip(pres.variables, point))
    for g in pres.generators:
        if not g.evaluate(assignment).is_zero():
            raise ValueError("input is not a point of the restriction")
    ext = result.extension
    image = {}
    for v in result.original.variables:
        coords = tuple(assignment[name] for name in result.coordinate_map[v])
        image[v] = AlgebraElement(ext, coords)
    for f in result.original.generators:
        if not f.evaluate(image).is_zero():
            raise ValueError("expanded point fails the original generators")
    return tuple(image[v] for v in result.original.variables)
