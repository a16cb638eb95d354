"""Exact coefficient fields, optionally carrying a rank-1 valuation.

Five kinds are supported:

  * PrimeField(p)                       -- F_p
  * GaloisField(p, modulus, symbol)     -- F_{p^m}, m <= 4, presented by an
                                           explicit irreducible polynomial
  * RationalField()                     -- Q, no valuation
  * RationalField(padic=p)              -- Q with the p-adic valuation
  * FunctionField(p, r, symbol)         -- F_p(x) with the valuation in which
                                           |x| = r for a base constant
                                           r in Q, 0 < r < 1

Valued kinds expose lognorm(a) on the additive log scale of lognorm.py with
lognorm(a) = -v(a) in standard additive-valuation notation: elements of the
valuation ring have lognorm <= 0 and lognorm(x) = -1 in the function field.

For the function field the valuation is the order of vanishing at x = 0, the
unique rank-1 valuation with |x| = r < 1 on F_p[x]; on the monomials x^k it
takes the value r^k.  On that scale one log-unit corresponds to one factor
of 1/r, so lognorm(x^-k) = +k grows without bound.

All elements are immutable values; every operation is a pure function.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import IncompatibleFieldError, UnsupportedOperationError
from .lognorm import LogNorm, MINUS_INF


# ---------------------------------------------------------------------------
# dense univariate arithmetic over F_p (coefficient tuples, ascending degree)

def _utrim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _uadd(a, b, p):
    n = max(len(a), len(b))
    return _utrim([((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p
                   for i in range(n)])


def _uneg(a, p):
    return tuple((-c) % p for c in a)


def _umul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] = (out[i + j] + ai * bj) % p
    return _utrim(out)


def _udivmod(a, b, p):
    """Quotient and remainder of a by b over F_p; b must be nonzero."""
    if not b:
        raise ZeroDivisionError("univariate division by zero polynomial")
    binv = pow(b[-1], p - 2, p)
    rem = list(a)
    quo = [0] * max(len(a) - len(b) + 1, 0)
    while len(_utrim(rem)) >= len(b):
        rem = list(_utrim(rem))
        shift = len(rem) - len(b)
        factor = (rem[-1] * binv) % p
        quo[shift] = factor
        for i, bc in enumerate(b):
            rem[shift + i] = (rem[shift + i] - factor * bc) % p
    return _utrim(quo), _utrim(rem)


def _ugcd(a, b, p):
    while b:
        _, r = _udivmod(a, b, p)
        a, b = b, r
    if a:
        inv = pow(a[-1], p - 2, p)
        a = tuple((c * inv) % p for c in a)
    return a


def _umonic(a, p):
    if not a:
        return a
    inv = pow(a[-1], p - 2, p)
    return tuple((c * inv) % p for c in a)


def _uord(a):
    """Order of vanishing at 0 (index of the lowest nonzero coefficient)."""
    for i, c in enumerate(a):
        if c != 0:
            return i
    raise ValueError("zero polynomial has no vanishing order")


def _ustr(a, symbol):
    """Canonical string, descending degree, e.g. 'x^2 + 2*x + 1'."""
    if not a:
        return "0"
    parts = []
    for d in range(len(a) - 1, -1, -1):
        c = a[d]
        if c == 0:
            continue
        if d == 0:
            parts.append(str(c))
        elif d == 1:
            parts.append(symbol if c == 1 else "%d*%s" % (c, symbol))
        else:
            parts.append("%s^%d" % (symbol, d) if c == 1 else "%d*%s^%d" % (c, symbol, d))
    return " + ".join(parts)


def _is_irreducible(coeffs, p):
    """Brute-force irreducibility over F_p for degree <= 4."""
    deg = len(coeffs) - 1
    if deg < 1:
        return False
    if deg == 1:
        return True
    # reducible iff it has a monic factor of degree 1 .. deg//2
    for d in range(1, deg // 2 + 1):
        for tail in _all_coeff_tuples(d, p):
            g = tail + (1,)
            _, rem = _udivmod(coeffs, g, p)
            if not rem:
                return False
    return True


def _all_coeff_tuples(length, p):
    if length == 0:
        yield ()
        return
    for rest in _all_coeff_tuples(length - 1, p):
        for c in range(p):
            yield rest + (c,)


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


# ---------------------------------------------------------------------------


class FieldElement:
    """An element of one of the supported fields; arithmetic delegates to it."""

    __slots__ = ("field", "value")

    def __init__(self, field, value):
        self.field = field
        self.value = value

    def _check(self, other):
        if isinstance(other, int):
            other = self.field.coerce(other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        if other.field != self.field:
            raise IncompatibleFieldError(
                "mixed coefficient fields: %s vs %s" % (self.field, other.field))
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field._add(self.value, other.value))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, self.field._neg(self.value))

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field._mul(self.value, other.value))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("field powers take non-negative integer exponents")
        out = self.field.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return FieldElement(self.field, self.field._inv(self.value))

    def is_zero(self):
        return self.value == self.field.zero().value

    def is_one(self):
        return self.value == self.field.one().value

    def lognorm(self):
        return self.field.lognorm(self)

    def sort_key(self):
        return self.field._sort_key(self.value)

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.field.coerce(other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.field == other.field and self.value == other.value

    def __hash__(self):
        return hash((self.field, self.value))

    def __str__(self):
        return self.field._format(self.value)

    def __repr__(self):
        return "<%s in %s>" % (self, self.field)


class Field:
    """Common surface of the supported exact coefficient fields."""

    kind = None
    characteristic = 0
    has_valuation = False

    def zero(self):
        return self.coerce(0)

    def one(self):
        return self.coerce(1)

    def coerce(self, v):
        raise NotImplementedError

    def __call__(self, v):
        return self.coerce(v)

    def lognorm(self, element):
        raise UnsupportedOperationError("field %s carries no valuation" % self)

    def is_finite(self):
        return False

    def elements(self):
        raise UnsupportedOperationError("field %s is not finite" % self)

    def size(self):
        raise UnsupportedOperationError("field %s is not finite" % self)

    def random_element(self, rng):
        raise NotImplementedError

    def symbol_constant(self, name):
        """Resolve an identifier to a field constant, or None."""
        return None

    def _format(self, value):
        raise NotImplementedError

    def _sort_key(self, value):
        raise NotImplementedError


class PrimeField(Field):
    kind = "prime"

    def __init__(self, p):
        if not _is_prime(p):
            raise ValueError("characteristic %r is not prime" % (p,))
        self.p = p
        self.characteristic = p

    def coerce(self, v):
        if isinstance(v, FieldElement):
            if v.field != self:
                raise IncompatibleFieldError("cannot coerce from %s" % v.field)
            return v
        if isinstance(v, Fraction):
            if v.denominator % self.p == 0:
                raise ZeroDivisionError("denominator divisible by %d" % self.p)
            return self.coerce(v.numerator) / self.coerce(v.denominator)
        if not isinstance(v, int):
            raise TypeError("cannot coerce %r into %s" % (v, self))
        return FieldElement(self, v % self.p)

    def _add(self, a, b):
        return (a + b) % self.p

    def _neg(self, a):
        return (-a) % self.p

    def _mul(self, a, b):
        return (a * b) % self.p

    def _inv(self, a):
        return pow(a, self.p - 2, self.p)

    def is_finite(self):
        return True

    def size(self):
        return self.p

    def elements(self):
        return [FieldElement(self, i) for i in range(self.p)]

    def random_element(self, rng):
        return FieldElement(self, rng.randrange(self.p))

    def _format(self, value):
        return str(value)

    def _sort_key(self, value):
        return (value,)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("prime", self.p))

    def __repr__(self):
        return "F_%d" % self.p


class GaloisField(Field):
    """F_{p^m} presented by an explicit irreducible monic polynomial.

    The modulus is given by its coefficient tuple in ascending degree,
    including the leading 1; irreducibility is verified at construction by
    brute-force factor search (hence the cap m <= 4).  Elements are
    coordinate tuples in the basis 1, s, ..., s^(m-1) where s is `symbol`.
    """

    kind = "galois"
    MAX_DEGREE = 4

    def __init__(self, p, modulus, symbol="t"):
        if not _is_prime(p):
            raise ValueError("characteristic %r is not prime" % (p,))
        modulus = _utrim(tuple(c % p for c in modulus))
        m = len(modulus) - 1
        if m < 2:
            raise ValueError("extension degree must be at least 2; use PrimeField")
        if m > self.MAX_DEGREE:
            raise ValueError("extension degree %d exceeds the supported cap %d"
                             % (m, self.MAX_DEGREE))
        if modulus[-1] != 1:
            raise ValueError("modulus must be monic")
        if not _is_irreducible(modulus, p):
            raise ValueError("modulus %s is reducible over F_%d"
                             % (_ustr(modulus, symbol), p))
        self.p = p
        self.characteristic = p
        self.modulus = modulus
        self.degree = m
        self.symbol = symbol

    def coerce(self, v):
        if isinstance(v, FieldElement):
            if v.field == self:
                return v
            if isinstance(v.field, PrimeField) and v.field.p == self.p:
                return FieldElement(self, (v.value,) + (0,) * (self.degree - 1))
            raise IncompatibleFieldError("cannot coerce from %s" % v.field)
        if isinstance(v, int):
            return FieldElement(self, (v % self.p,) + (0,) * (self.degree - 1))
        if isinstance(v, (tuple, list)):
            if len(v) != self.degree:
                raise ValueError("coordinate vector must have length %d" % self.degree)
            return FieldElement(self, tuple(c % self.p for c in v))
        raise TypeError("cannot coerce %r into %s" % (v, self))

    def generator(self):
        return FieldElement(self, (0, 1) + (0,) * (self.degree - 2))

    def _pad(self, a):
        return tuple(a) + (0,) * (self.degree - len(a))

    def _add(self, a, b):
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def _neg(self, a):
        return tuple((-x) % self.p for x in a)

    def _mul(self, a, b):
        prod = _umul(_utrim(a), _utrim(b), self.p)
        _, rem = _udivmod(prod, self.modulus, self.p)
        return self._pad(rem)

    def _inv(self, a):
        # extended Euclid in F_p[s] against the modulus
        r0, r1 = self.modulus, _utrim(a)
        s0, s1 = (), (1,)
        while r1:
            q, r = _udivmod(r0, r1, self.p)
            r0, r1 = r1, r
            s0, s1 = s1, _uadd(s0, _uneg(_umul(q, s1, self.p), self.p), self.p)
        # r0 is the gcd, a nonzero constant since the modulus is irreducible
        c = pow(r0[0], self.p - 2, self.p)
        return self._pad(tuple((x * c) % self.p for x in s0))

    def is_finite(self):
        return True

    def size(self):
        return self.p ** self.degree

    def elements(self):
        out = []
        for i in range(self.size()):
            coords = []
            n = i
            for _ in range(self.degree):
                coords.append(n % self.p)
                n //= self.p
            out.append(FieldElement(self, tuple(coords)))
        return out

    def random_element(self, rng):
        return FieldElement(self, tuple(rng.randrange(self.p) for _ in range(self.degree)))

    def symbol_constant(self, name):
        if name == self.symbol:
            return self.generator()
        return None

    def _format(self, value):
        return _ustr(_utrim(value), self.symbol)

    def _sort_key(self, value):
        return tuple(value)

    def __eq__(self, other):
        return (isinstance(other, GaloisField) and other.p == self.p
                and other.modulus == self.modulus and other.symbol == self.symbol)

    def __hash__(self):
        return hash(("galois", self.p, self.modulus, self.symbol))

    def __repr__(self):
        return "F_%d[%s]/(%s)" % (self.p, self.symbol, _ustr(self.modulus, self.symbol))


class RationalField(Field):
    """Q, optionally valued p-adically: lognorm(a) = -v_p(a)."""

    kind = "rationals"

    def __init__(self, padic=None):
        if padic is not None and not _is_prime(padic):
            raise ValueError("p-adic valuation needs a prime, got %r" % (padic,))
        self.padic = padic
        self.has_valuation = padic is not None

    def coerce(self, v):
        if isinstance(v, FieldElement):
            if v.field != self:
                raise IncompatibleFieldError("cannot coerce from %s" % v.field)
            return v
        if isinstance(v, (int, Fraction)):
            return FieldElement(self, Fraction(v))
        if isinstance(v, str):
            return FieldElement(self, Fraction(v))
        raise TypeError("cannot coerce %r into %s" % (v, self))

    def _add(self, a, b):
        return a + b

    def _neg(self, a):
        return -a

    def _mul(self, a, b):
        return a * b

    def _inv(self, a):
        return 1 / a

    def lognorm(self, element):
        if not self.has_valuation:
            raise UnsupportedOperationError("plain rationals carry no valuation")
        a = element.value
        if a == 0:
            return MINUS_INF
        p = self.padic
        v = 0
        num, den = a.numerator, a.denominator
        while num % p == 0:
            num //= p
            v += 1
        while den % p == 0:
            den //= p
            v -= 1
        return LogNorm(-v)

    def random_element(self, rng):
        return FieldElement(self, Fraction(rng.randint(-9, 9), rng.randint(1, 9)))

    def _format(self, value):
        return str(value)

    def _sort_key(self, value):
        return (value.numerator, value.denominator)

    def __eq__(self, other):
        return isinstance(other, RationalField) and other.padic == self.padic

    def __hash__(self):
        return hash(("rationals", self.padic))

    def __repr__(self):
        return "Q" if self.padic is None else "Q(%d-adic)" % self.padic


class _RatFunc:
    # internal canonical value of FunctionField elements: (num, den) coefficient
    # tuples over F_p, den monic, gcd(num, den) = 1, zero = ((), (1,))
    __slots__ = ("num", "den")

    def __init__(self, num, den):
        self.num = num
        self.den = den

    def __eq__(self, other):
        return (isinstance(other, _RatFunc)
                and other.num == self.num and other.den == self.den)

    def __hash__(self):
        return hash((self.num, self.den))


class FunctionField(Field):
    """F_p(x), valued by the order of vanishing at x = 0.

    The valuation is normalised so that |x| = r for the base constant
    r in Q with 0 < r < 1; on the additive log scale used everywhere this
    reads lognorm(x) = -1 and lognorm(x^-k) = +k.  The constant r itself
    only fixes the multiplicative scale and takes no part in arithmetic.
    """

    kind = "function"
    has_valuation = True

    def __init__(self, p, r=Fraction(1, 2), symbol="x"):
        if not _is_prime(p):
            raise ValueError("characteristic %r is not prime" % (p,))
        r = Fraction(r)
        if not (0 < r < 1):
            raise ValueError("base constant r must satisfy 0 < r < 1")
        self.p = p
        self.characteristic = p
        self.r = r
        self.symbol = symbol

    def _make(self, num, den):
        p = self.p
        num, den = _utrim(num), _utrim(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            return FieldElement(self, _RatFunc((), (1,)))
        g = _ugcd(num, den, p)
        if len(g) > 1:
            num, _ = _udivmod(num, g, p)
            den, _ = _udivmod(den, g, p)
        lead = pow(den[-1], p - 2, p)
        num = tuple((c * lead) % p for c in num)
        den = tuple((c * lead) % p for c in den)
        return FieldElement(self, _RatFunc(num, den))

    def coerce(self, v):
        if isinstance(v, FieldElement):
            if v.field != self:
                raise IncompatibleFieldError("cannot coerce from %s" % v.field)
            return v
        if isinstance(v, int):
            return self._make((v % self.p,), (1,))
        if isinstance(v, _RatFunc):
            return FieldElement(self, v)
        raise TypeError("cannot coerce %r into %s" % (v, self))

    def variable(self):
        return self._make((0, 1), (1,))

    def from_coeffs(self, num, den=(1,)):
        return self._make(num, den)

    def _add(self, a, b):
        p = self.p
        num = _uadd(_umul(a.num, b.den, p), _umul(b.num, a.den, p), p)
        return self._make(num, _umul(a.den, b.den, p)).value

    def _neg(self, a):
        return _RatFunc(_uneg(a.num, self.p), a.den)

    def _mul(self, a, b):
        p = self.p
        return self._make(_umul(a.num, b.num, p), _umul(a.den, b.den, p)).value

    def _inv(self, a):
        return self._make(a.den, a.num).value

    def lognorm(self, element):
        a = element.value
        if not a.num:
            return MINUS_INF
        return LogNorm(_uord(a.den) - _uord(a.num))

    def random_element(self, rng):
        num = tuple(rng.randrange(self.p) for _ in range(rng.randint(1, 3)))
        den = ()
        while not den:
            den = _utrim(tuple(rng.randrange(self.p) for _ in range(rng.randint(1, 3))))
        return self._make(num, den)

    def symbol_constant(self, name):
        if name == self.symbol:
            return self.variable()
        return None

    def _format(self, value):
        if not value.num:
            return "0"
        num = _ustr(value.num, self.symbol)
        if value.den == (1,):
            return num
        return "(%s)/(%s)" % (num, _ustr(value.den, self.symbol))

    def _sort_key(self, value):
        return (value.num, value.den)

    def __eq__(self, other):
        return (isinstance(other, FunctionField) and other.p == self.p
                and other.r == self.r and other.symbol == self.symbol)

    def __hash__(self):
        return hash(("function", self.p, self.r, self.symbol))

    def __repr__(self):
        return "F_%d(%s)" % (self.p, self.symbol)


# ---------------------------------------------------------------------------
# canonical embeddings between fields


def canonical_embedding(src, dst):
    """The canonical coefficient embedding src -> dst, or None.

    Valued sources must embed compatibly: an embedding that would change the
    valuation normalisation is rejected with IncompatibleFieldError.
    """
    if src == dst:
        return lambda a: a
    if isinstance(src, PrimeField):
        if isinstance(dst, GaloisField) and dst.p == src.p:
            return lambda a: dst.coerce(a)
        if isinstance(dst, PrimeField) and dst.p == src.p:
            return lambda a: dst.coerce(a.value)
    if isinstance(src, RationalField) and isinstance(dst, RationalField):
        if src.padic is None:
            return lambda a: dst.coerce(a.value)
        raise IncompatibleFieldError(
            "incompatible valuation normalizations: %s into %s" % (src, dst))
    if isinstance(src, FunctionField) and isinstance(dst, FunctionField):
        raise IncompatibleFieldError(
            "incompatible valuation normalizations: %s into %s" % (src, dst))
    return None
