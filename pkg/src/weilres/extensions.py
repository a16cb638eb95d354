"""Finite free algebra extensions with a distinguished basis.

A FreeExtension B over a base field A is given by its rank n, basis labels
e_1 ... e_n, the structure constants c_ijk with e_i e_j = sum_k c_ijk e_k and
the coordinate vector of 1.  Commutativity, the unit law and associativity
are verified exactly at construction (derived constructions such as tensor
products inherit associativity and skip the recheck).

Elements carry coordinate vectors whose entries are either base scalars or
polynomials over the base, so the same multiplication code serves both
concrete elements and symbolic ones like x_1 e_1 + ... + x_n e_n.
"""

from __future__ import annotations

from .errors import IncompatibleFieldError, UnsupportedOperationError
from .fields import FieldElement
from .lognorm import LogNorm
from .linalg import berkowitz_charpoly, mat_is_zero, mat_pow
from .poly import Poly, PolyRing

RANK_CAP = 16


class FreeExtension:
    def __init__(self, base, basis_names, structure, unit, validate=True,
                 minimal_polynomial=None, symbol=None):
        self.base = base
        self.basis_names = tuple(basis_names)
        self.rank = len(self.basis_names)
        if self.rank < 1:
            raise ValueError("rank must be positive")
        if self.rank > RANK_CAP:
            raise ValueError("rank %d exceeds the cap %d" % (self.rank, RANK_CAP))
        self.structure = tuple(
            tuple(tuple(base.coerce(c) for c in cell) for cell in row)
            for row in structure)
        self.unit = tuple(base.coerce(c) for c in unit)
        self.minimal_polynomial = minimal_polynomial
        self.symbol = symbol
        if len(self.structure) != self.rank or any(
                len(row) != self.rank or any(len(cell) != self.rank for cell in row)
                for row in self.structure):
            raise ValueError("structure constants must form an n*n*n array")
        if len(self.unit) != self.rank:
            raise ValueError("unit vector must have length n")
        if validate:
            self._validate()

    # -- construction-time checks -------------------------------------------

    def _validate(self):
        n = self.rank
        for i in range(n):
            for j in range(i):
                if self.structure[i][j] != self.structure[j][i]:
                    raise ValueError("structure constants are not commutative at (%d, %d)"
                                     % (i, j))
        for j in range(n):
            e_j = self.basis_element(j)
            if (self.unit_element() * e_j).coords != e_j.coords:
                raise ValueError("unit law fails on basis vector %d" % j)
        for i in range(n):
            e_i = self.basis_element(i)
            for j in range(i + 1):
                e_ij = e_i * self.basis_element(j)
                for k in range(n):
                    e_k = self.basis_element(k)
                    left = e_ij * e_k
                    right = e_i * (self.basis_element(j) * e_k)
                    if left.coords != right.coords:
                        raise ValueError(
                            "associativity fails on basis triple (%d, %d, %d)" % (i, j, k))

    # -- elements ------------------------------------------------------------

    def element(self, coords):
        coords = list(coords)
        if len(coords) != self.rank:
            raise ValueError("coordinate vector must have length %d" % self.rank)
        if any(isinstance(c, Poly) for c in coords):
            lifted = []
            for c in coords:
                if isinstance(c, Poly):
                    if c.domain != self.base:
                        raise IncompatibleFieldError("coordinate over a different base")
                    lifted.append(c)
                else:
                    lifted.append(Poly.constant(self.base, self.base.coerce(c)))
            return AlgebraElement(self, tuple(lifted))
        return AlgebraElement(self, tuple(self.base.coerce(c) for c in coords))

    def basis_element(self, j):
        zero = self.base.zero()
        return AlgebraElement(self, tuple(
            self.base.one() if i == j else zero for i in range(self.rank)))

    def unit_element(self):
        return AlgebraElement(self, self.unit)

    def zero_element(self):
        zero = self.base.zero()
        return AlgebraElement(self, (zero,) * self.rank)

    def scalar(self, c):
        c = self.base.coerce(c)
        return AlgebraElement(self, tuple(u * c for u in self.unit))

    def generator(self):
        if self.minimal_polynomial is None or self.rank < 2:
            raise UnsupportedOperationError("extension is not monogenic")
        return self.basis_element(1)

    # -- domain protocol (extensions serve as Poly coefficient domains) ------

    def zero(self):
        return self.zero_element()

    def one(self):
        return self.unit_element()

    def coerce(self, v):
        if isinstance(v, AlgebraElement):
            if v.extension != self:
                raise IncompatibleFieldError("element of a different extension")
            return v
        if isinstance(v, FieldElement):
            return self.scalar(v)
        if isinstance(v, int):
            return self.scalar(self.base.coerce(v))
        if isinstance(v, Poly):
            if v.domain != self.base:
                raise IncompatibleFieldError("polynomial over a different base")
            return self.unit_element().scale(v)
        raise TypeError("cannot coerce %r into %s" % (v, self))

    def symbol_constant(self, name):
        if self.symbol is not None and name == self.symbol and self.rank >= 2:
            return self.basis_element(1)
        base_sym = self.base.symbol_constant(name)
        if base_sym is not None:
            return self.scalar(base_sym)
        return None

    def random_element(self, rng):
        return AlgebraElement(self, tuple(
            self.base.random_element(rng) for _ in range(self.rank)))

    def elements(self):
        """All elements with scalar coordinates; the base must be finite."""
        return [AlgebraElement(self, scalars)
                for scalars in _vectors(self.base.elements(), self.rank)]

    def size(self):
        return self.base.size() ** self.rank

    def is_finite(self):
        return self.base.is_finite()

    @property
    def has_valuation(self):
        return getattr(self.base, "has_valuation", False)

    def __eq__(self, other):
        return (isinstance(other, FreeExtension) and other.base == self.base
                and other.basis_names == self.basis_names
                and other.structure == self.structure and other.unit == self.unit)

    def __hash__(self):
        return hash(("ext", self.base, self.basis_names, self.structure, self.unit))

    def __repr__(self):
        if self.minimal_polynomial is not None:
            return "%s[%s]/(%s)" % (self.base, self.symbol,
                                    self.minimal_polynomial.to_string())
        return "free rank-%d algebra over %s" % (self.rank, self.base)


def _vectors(options, length):
    if length == 0:
        yield ()
        return
    for rest in _vectors(options, length - 1):
        for o in options:
            yield rest + (o,)


def _smul(x, c):
    # multiply a coordinate (base scalar or Poly) by a base scalar
    if isinstance(x, Poly):
        return x.scale(c)
    return x * c


class AlgebraElement:
    __slots__ = ("extension", "coords")

    def __init__(self, extension, coords):
        self.extension = extension
        self.coords = tuple(coords)

    @property
    def ring(self):
        """Coefficient ring of the coordinates: the base field or a PolyRing."""
        if any(isinstance(c, Poly) for c in self.coords):
            return PolyRing(self.extension.base)
        return self.extension.base

    def _check(self, other):
        if not isinstance(other, AlgebraElement):
            other = self.extension.coerce(other)
        if other.extension != self.extension:
            raise IncompatibleFieldError("elements of different extensions")
        a, b = self.coords, other.coords
        if any(isinstance(c, Poly) for c in a + b):
            a = self.extension.element(a).coords
            b = self.extension.element(b).coords
        return a, b

    def __add__(self, other):
        a, b = self._check(other)
        return AlgebraElement(self.extension, tuple(x + y for x, y in zip(a, b)))

    __radd__ = __add__

    def __neg__(self):
        return AlgebraElement(self.extension, tuple(-c for c in self.coords))

    def __sub__(self, other):
        a, b = self._check(other)
        return AlgebraElement(self.extension, tuple(x - y for x, y in zip(a, b)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        a, b = self._check(other)
        ext = self.extension
        n = ext.rank
        out = None
        for i in range(n):
            if _coord_is_zero(a[i]):
                continue
            for j in range(n):
                if _coord_is_zero(b[j]):
                    continue
                prod = a[i] * b[j]
                row = ext.structure[i][j]
                contrib = tuple(_smul(prod, c) for c in row)
                out = contrib if out is None else tuple(
                    x + y for x, y in zip(out, contrib))
        if out is None:
            if any(isinstance(c, Poly) for c in a):
                return AlgebraElement(ext, tuple(
                    Poly.zero(ext.base) for _ in range(n)))
            return ext.zero_element()
        return AlgebraElement(ext, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("powers take non-negative integer exponents")
        out = self.extension.unit_element()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def scale(self, c):
        c = self.extension.base.coerce(c) if not isinstance(c, Poly) else c
        if isinstance(c, Poly):
            lifted = self.extension.element(self.coords)
            return AlgebraElement(self.extension,
                                  tuple(x * c for x in lifted.coords))
        return AlgebraElement(self.extension, tuple(_smul(x, c) for x in self.coords))

    def is_zero(self):
        return all(_coord_is_zero(c) for c in self.coords)

    def is_scalar(self):
        """True when the element is c * 1 for a base scalar c (scalar coords)."""
        return self.scalar_part() is not None

    def scalar_part(self):
        if any(isinstance(c, Poly) for c in self.coords):
            return None
        unit = self.extension.unit
        pivot = None
        for i, u in enumerate(unit):
            if not u.is_zero():
                pivot = i
                break
        c = self.coords[pivot] * unit[pivot].inverse()
        for x, u in zip(self.coords, unit):
            if x != u * c:
                return None
        return c

    def sort_key(self):
        return tuple(c.sort_key() for c in self.coords)

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.extension.coerce(other)
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        if other.extension != self.extension:
            return False
        a, b = self._check(other)
        return a == b

    def __hash__(self):
        return hash((self.extension, self.coords))

    def __str__(self):
        parts = []
        for c, name in zip(self.coords, self.extension.basis_names):
            if _coord_is_zero(c):
                continue
            cs = str(c)
            if name == "1":
                parts.append("(%s)" % cs if _has_top_level_sign(cs) else cs)
            elif cs == "1":
                parts.append(name)
            elif cs == "-1":
                parts.append("-" + name)
            else:
                parts.append(("(%s)" % cs if _has_top_level_sign(cs) or "*" in cs
                              or "/" in cs else cs) + "*" + name)
        if not parts:
            return "0"
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def __repr__(self):
        return "<%s in %s>" % (self, self.extension)


def _coord_is_zero(c):
    return c.is_zero()


def _has_top_level_sign(s):
    depth = 0
    for i, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif depth == 0 and i > 0 and ch in "+-":
            return True
    return False


# ---------------------------------------------------------------------------
# construction paths


def from_minimal_polynomial(base, m, symbol=None):
    """Extension base[s]/(m(s)) with basis 1, s, ..., s^(n-1).

    m must be a monic univariate Poly over base; the structure constants are
    obtained by reduction of s^(i+j) modulo m.
    """
    if len(m.variables) != 1:
        raise ValueError("minimal polynomial must be univariate")
    var = m.variables[0]
    if symbol is None:
        symbol = var
    n = m.total_degree()
    if n < 1:
        raise ValueError("minimal polynomial must have degree at least 1")
    coeffs = [base.zero() for _ in range(n + 1)]
    for exps, c in m.terms.items():
        coeffs[exps[0]] = c
    if not coeffs[n].is_one():
        raise ValueError("minimal polynomial must be monic")
    zero, one = base.zero(), base.one()
    # powers[k] = coordinates of s^k for k = 0 .. 2n-2
    powers = []
    cur = [one] + [zero] * (n - 1)
    for k in range(2 * n - 1):
        powers.append(tuple(cur))
        shifted = [zero] + cur[:n - 1]
        top = cur[n - 1]
        reduced = [shifted[i] - coeffs[i] * top for i in range(n)]
        cur = reduced
    structure = tuple(tuple(powers[i + j] for j in range(n)) for i in range(n))
    names = tuple("1" if k == 0 else (symbol if k == 1 else "%s^%d" % (symbol, k))
                  for k in range(n))
    unit = (one,) + (zero,) * (n - 1)
    return FreeExtension(base, names, structure, unit, validate=False,
                         minimal_polynomial=m, symbol=symbol)


def tensor_product(b1, b2):
    """Tensor product over the common base, basis e_i (x) f_j in lex order."""
    if b1.base != b2.base:
        raise IncompatibleFieldError("tensor factors over different bases")
    base = b1.base
    n1, n2 = b1.rank, b2.rank
    names = tuple("(%s*%s)" % (a, b) for a in b1.basis_names for b in b2.basis_names)
    zero = base.zero()
    size = n1 * n2

    def idx(i, j):
        return i * n2 + j

    structure = [[[zero] * size for _ in range(size)] for _ in range(size)]
    for i in range(n1):
        for k in range(n1):
            row1 = b1.structure[i][k]
            for j in range(n2):
                for l in range(n2):
                    row2 = b2.structure[j][l]
                    cell = structure[idx(i, j)][idx(k, l)]
                    for m in range(n1):
                        c1 = row1[m]
                        if c1.is_zero():
                            continue
                        for r in range(n2):
                            c2 = row2[r]
                            if c2.is_zero():
                                continue
                            cell[idx(m, r)] = cell[idx(m, r)] + c1 * c2
    unit = tuple(u1 * u2 for u1 in b1.unit for u2 in b2.unit)
    return FreeExtension(base, names, structure, unit, validate=False)


def extend_scalars(ext, target):
    """Base change of the extension along the canonical embedding into target."""
    from .fields import canonical_embedding
    emb = canonical_embedding(ext.base, target)
    if emb is None:
        raise IncompatibleFieldError("no canonical embedding %s -> %s"
                                     % (ext.base, target))
    structure = tuple(tuple(tuple(emb(c) for c in cell) for cell in row)
                      for row in ext.structure)
    unit = tuple(emb(c) for c in ext.unit)
    mp = None
    if ext.minimal_polynomial is not None:
        mp = Poly(target, ext.minimal_polynomial.variables,
                  {exps: emb(c) for exps, c in ext.minimal_polynomial.terms.items()})
    return FreeExtension(target, ext.basis_names, structure, unit, validate=False,
                         minimal_polynomial=mp, symbol=ext.symbol)


# ---------------------------------------------------------------------------
# multiplication operators and characteristic polynomials


def mult_matrix(b):
    """Matrix of multiplication by b: column j holds the coordinates of b*e_j."""
    ext = b.extension
    n = ext.rank
    b = ext.element(b.coords)
    cols = [(b * ext.basis_element(j)).coords for j in range(n)]
    return tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))


class MonicPoly:
    """z^n + c_1 z^(n-1) + ... + c_n with exact coefficients.

    The coefficients may be base scalars or polynomials (for symbolic
    characteristic polynomials); `ring` is the matching coefficient handle.
    """

    __slots__ = ("ring", "coefficients")

    def __init__(self, ring, coefficients):
        self.ring = ring
        self.coefficients = tuple(coefficients)
        if not self.coefficients:
            raise ValueError("a monic polynomial has degree at least 1")

    @property
    def degree(self):
        return len(self.coefficients)

    def coefficient(self, i):
        """c_i for 1 <= i <= n."""
        return self.coefficients[i - 1]

    def is_pure_power(self):
        return all(c.is_zero() for c in self.coefficients)

    def __mul__(self, other):
        if not isinstance(other, MonicPoly):
            return NotImplemented
        if other.ring != self.ring:
            raise IncompatibleFieldError("monic polynomials over different rings")
        one = self.ring.one()
        a = [one] + list(self.coefficients)
        b = [one] + list(other.coefficients)
        out = [self.ring.zero() for _ in range(len(a) + len(b) - 1)]
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
        return MonicPoly(self.ring, out[1:])

    def __eq__(self, other):
        if not isinstance(other, MonicPoly):
            return NotImplemented
        return self.ring == other.ring and self.coefficients == other.coefficients

    def __hash__(self):
        return hash((self.ring, self.coefficients))

    def evaluate(self, x):
        """Horner evaluation at a ring element x (matrices go through
        charpoly_matrix_value instead)."""
        acc = self.ring.one()
        for c in self.coefficients:
            acc = acc * x + c
        return acc

    def to_string(self, var="z"):
        parts = [_mono_str(var, self.degree)]
        for i, c in enumerate(self.coefficients, start=1):
            if c.is_zero():
                continue
            cs = str(c)
            mono = _mono_str(var, self.degree - i)
            if mono == "":
                parts.append("(%s)" % cs if _has_top_level_sign(cs) else cs)
            elif cs == "1":
                parts.append(mono)
            elif cs == "-1":
                parts.append("-" + mono)
            else:
                if _has_top_level_sign(cs):
                    cs = "(%s)" % cs
                parts.append(cs + "*" + mono)
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return "MonicPoly(%s)" % self


def _mono_str(var, k):
    if k == 0:
        return ""
    if k == 1:
        return var
    return "%s^%d" % (var, k)


def charpoly(b):
    """Characteristic polynomial of multiplication by b, z^n + c_1 z^(n-1) + ...

    Computed with a division-free iteration so polynomial coordinates are
    allowed; Cayley-Hamilton holds exactly for the result.
    """
    ring = b.ring
    vec = berkowitz_charpoly(mult_matrix(b), ring)
    return MonicPoly(ring, vec[1:])


def charpoly_matrix_value(mp, matrix, ring):
    """chi(M) for a monic polynomial chi and a square matrix M over ring."""
    from .linalg import mat_identity, mat_mul, mat_scale, mat_add
    n = len(matrix)
    acc = mat_identity(n, ring)
    for c in mp.coefficients:
        acc = mat_add(mat_mul(acc, matrix), mat_scale(mat_identity(n, ring), c))
    return acc


def is_integral(b):
    """Whether every characteristic-polynomial coefficient has lognorm <= 0."""
    base = b.extension.base
    if not getattr(base, "has_valuation", False):
        raise UnsupportedOperationError("integrality needs a valued base field")
    if any(isinstance(c, Poly) for c in b.coords):
        raise UnsupportedOperationError("integrality is defined for scalar coordinates")
    zero = LogNorm(0)
    return all(base.lognorm(c) <= zero for c in charpoly(b).coefficients)


def is_nilpotent(b):
    """Whether M_b^n = 0 (equivalently the characteristic polynomial is z^n)."""
    if any(isinstance(c, Poly) for c in b.coords):
        raise UnsupportedOperationError("nilpotency is decided for scalar coordinates")
    m = mult_matrix(b)
    return mat_is_zero(mat_pow(m, b.extension.rank, b.ring))
