"""Sparse multivariate polynomials over an exact coefficient domain.

A Poly stores an ordered variable list and a map from exponent vectors to
nonzero coefficients.  The coefficient domain is either one of the fields of
fields.py or a finite free algebra over one of them; coefficients only need
exact ring arithmetic, equality and hashing.  Arithmetic between polynomials
with different variable lists merges the lists by name, so generators written
over partial variable sets compose freely.

Canonical text form: terms sorted graded-lexicographically (total degree
first, then the exponent vector), largest first, e.g.

    u_1^2 - u_2^2 - 2
    (t + 1)*u^2 + 2*u*v + x

Compound coefficients are parenthesised; the same grammar is accepted back
by parse_poly.
"""

from __future__ import annotations

from .errors import IncompatibleFieldError, UnsupportedOperationError
from .lognorm import lognorm_max


class Poly:
    __slots__ = ("domain", "variables", "terms")

    def __init__(self, domain, variables, terms):
        self.domain = domain
        self.variables = tuple(variables)
        clean = {}
        for exps, coeff in terms.items():
            if len(exps) != len(self.variables):
                raise ValueError("exponent vector length mismatch")
            if not coeff.is_zero():
                clean[tuple(exps)] = coeff
        self.terms = clean

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, domain, variables=()):
        return cls(domain, variables, {})

    @classmethod
    def constant(cls, domain, c, variables=()):
        c = domain.coerce(c)
        variables = tuple(variables)
        return cls(domain, variables, {(0,) * len(variables): c})

    @classmethod
    def variable(cls, domain, name):
        return cls(domain, (name,), {(1,): domain.one()})

    # -- structure ----------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(all(e == 0 for e in exps) for exps in self.terms)

    def constant_value(self):
        if not self.terms:
            return self.domain.zero()
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return next(iter(self.terms.values()))

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(exps) for exps in self.terms)

    def support(self):
        """Names of the variables that actually occur."""
        used = set()
        for exps in self.terms:
            for v, e in zip(self.variables, exps):
                if e:
                    used.add(v)
        return used

    def with_variables(self, variables):
        """The same polynomial over a larger (or reordered) variable list."""
        variables = tuple(variables)
        missing = self.support() - set(variables)
        if missing:
            raise ValueError("variables %s cannot be dropped" % sorted(missing))
        pos = {v: i for i, v in enumerate(variables)}
        terms = {}
        for exps, coeff in self.terms.items():
            new = [0] * len(variables)
            for v, e in zip(self.variables, exps):
                if e:
                    new[pos[v]] = e
            key = tuple(new)
            terms[key] = terms[key] + coeff if key in terms else coeff
        return Poly(self.domain, variables, terms)

    def _merged(self, other):
        if self.domain != other.domain:
            raise IncompatibleFieldError(
                "mixed coefficient domains: %s vs %s" % (self.domain, other.domain))
        if self.variables == other.variables:
            return self.variables, self, other
        merged = list(self.variables)
        seen = set(merged)
        for v in other.variables:
            if v not in seen:
                merged.append(v)
                seen.add(v)
        merged = tuple(merged)
        return merged, self.with_variables(merged), other.with_variables(merged)

    # -- ring arithmetic ----------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly.constant(self.domain, other, self.variables)
        variables, a, b = self._merged(other)
        terms = dict(a.terms)
        for exps, coeff in b.terms.items():
            terms[exps] = terms[exps] + coeff if exps in terms else coeff
        return Poly(self.domain, variables, terms)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.domain, self.variables,
                    {exps: -c for exps, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = Poly.constant(self.domain, other, self.variables)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Poly):
            try:
                return self.scale(other)
            except TypeError:
                return NotImplemented
        variables, a, b = self._merged(other)
        terms = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                key = tuple(x + y for x, y in zip(e1, e2))
                prod = c1 * c2
                terms[key] = terms[key] + prod if key in terms else prod
        return Poly(self.domain, variables, terms)

    __rmul__ = __mul__

    def scale(self, c):
        c = self.domain.coerce(c)
        return Poly(self.domain, self.variables,
                    {exps: coeff * c for exps, coeff in self.terms.items()})

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("polynomial powers take non-negative integer exponents")
        out = Poly.constant(self.domain, self.domain.one(), self.variables)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- substitution and evaluation ----------------------------------------

    def substitute(self, bindings):
        """Simultaneous substitution of polynomials for variables.

        Bound names not occurring in the polynomial are ignored; unbound
        variables stay in place.
        """
        acc = Poly.zero(self.domain)
        for exps, coeff in self.terms.items():
            term = Poly.constant(self.domain, coeff)
            for v, e in zip(self.variables, exps):
                if e == 0:
                    continue
                factor = bindings.get(v)
                if factor is None:
                    factor = Poly.variable(self.domain, v)
                term = term * factor ** e
            acc = acc + term
        return acc

    def evaluate(self, assignment):
        """Value at a full point; every occurring variable must be assigned."""
        total = self.domain.zero()
        for exps, coeff in self.terms.items():
            val = coeff
            for v, e in zip(self.variables, exps):
                if e == 0:
                    continue
                if v not in assignment:
                    raise ValueError("no value for variable %r" % v)
                val = val * assignment[v] ** e
            total = total + val
        return total

    # -- canonical form -----------------------------------------------------

    def canonical_key(self):
        items = []
        for exps, coeff in self.terms.items():
            mono = frozenset((v, e) for v, e in zip(self.variables, exps) if e)
            items.append((mono, coeff))
        return (self.domain, frozenset(items))

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.canonical_key() == other.canonical_key()

    def __hash__(self):
        return hash(self.canonical_key())

    def sorted_terms(self, order=None):
        variables = tuple(order) if order is not None else self.variables
        aligned = self.with_variables(variables) if variables != self.variables else self
        keyed = sorted(aligned.terms.items(),
                       key=lambda item: (sum(item[0]), item[0]), reverse=True)
        return variables, keyed

    def to_string(self, order=None):
        if not self.terms:
            return "0"
        variables, keyed = self.sorted_terms(order)
        parts = []
        for exps, coeff in keyed:
            parts.append(_term_string(variables, exps, coeff))
        out = parts[0]
        for part in parts[1:]:
            if part.startswith("-"):
                out += " - " + part[1:]
            else:
                out += " + " + part
        return out

    def canonical_string(self):
        return self.to_string(order=sorted(self.support()))

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return "Poly(%s)" % self


def _needs_parens(s):
    depth = 0
    for i, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif depth == 0 and i > 0 and ch in "+-":
            return True
    return False


def _term_string(variables, exps, coeff):
    mono = "*".join(
        v if e == 1 else "%s^%d" % (v, e)
        for v, e in zip(variables, exps) if e)
    c = str(coeff)
    if not mono:
        return "(%s)" % c if _needs_parens(c) else c
    if c == "1":
        return mono
    if c == "-1":
        return "-" + mono
    if _needs_parens(c):
        c = "(%s)" % c
    return c + "*" + mono


class PolyRing:
    """Coefficient-domain handle for matrices whose entries are polynomials."""

    def __init__(self, domain):
        self.domain = domain

    def zero(self):
        return Poly.zero(self.domain)

    def one(self):
        return Poly.constant(self.domain, self.domain.one())

    def coerce(self, v):
        if isinstance(v, Poly):
            if v.domain != self.domain:
                raise IncompatibleFieldError("polynomial over a different domain")
            return v
        return Poly.constant(self.domain, self.domain.coerce(v))

    def __eq__(self, other):
        return isinstance(other, PolyRing) and other.domain == self.domain

    def __hash__(self):
        return hash(("polyring", self.domain))

    def __repr__(self):
        return "PolyRing(%s)" % (self.domain,)


# ---------------------------------------------------------------------------
# Gauss norms


def gauss_norm(p, radii):
    """Sup-norm of a polynomial on the polydisc with the given log-radii.

    radii aligns with p.variables; the value is the maximum over terms of
    lognorm(coefficient) + sum_i exponent_i * radius_i, and -inf for the zero
    polynomial.
    """
    field = p.domain
    if not getattr(field, "has_valuation", False):
        raise UnsupportedOperationError("Gauss norm needs a valued coefficient field")
    radii = list(radii)
    if len(radii) != len(p.variables):
        raise ValueError("need one radius per variable (%d expected, %d given)"
                         % (len(p.variables), len(radii)))
    values = []
    for exps, coeff in p.terms.items():
        v = field.lognorm(coeff)
        for e, radius in zip(exps, radii):
            if e:
                v = v + radius * e
        values.append(v)
    return lognorm_max(values)


# ---------------------------------------------------------------------------
# parsing of the canonical polynomial grammar
#
#   expr   := ['-'] term (('+'|'-') term)*
#   term   := factor (('*'|'/') factor)*
#   factor := atom ['^' integer]
#   atom   := integer | identifier | '(' expr ')'
#
# Identifiers are presentation variables when declared, otherwise they are
# resolved by the coefficient domain (field symbols such as x or t, basis
# labels of an extension).  Division requires a constant, invertible divisor.


class _Tokens:
    def __init__(self, text):
        self.toks = []
        i, n = 0, len(text)
        while i < n:
            ch = text[i]
            if ch.isspace():
                i += 1
                continue
            if ch.isdigit():
                j = i
                while j < n and text[j].isdigit():
                    j += 1
                self.toks.append(("int", int(text[i:j])))
                i = j
                continue
            if ch.isalpha() or ch == "_":
                j = i
                while j < n and (text[j].isalnum() or text[j] in "_'"):
                    j += 1
                self.toks.append(("name", text[i:j]))
                i = j
                continue
            if ch in "+-*/^()":
                self.toks.append((ch, ch))
                i += 1
                continue
            raise ValueError("unexpected character %r in polynomial %r" % (ch, text))
        self.pos = 0

    def peek(self):
        return self.toks[self.pos][0] if self.pos < len(self.toks) else None

    def next(self):
        tok = self.toks[self.pos]
        self.pos += 1
        return tok


def parse_poly(text, domain, variables=()):
    """Parse the canonical polynomial grammar into a Poly over `domain`."""
    variables = tuple(variables)
    toks = _Tokens(text)
    poly = _parse_expr(toks, domain, variables)
    if toks.peek() is not None:
        raise ValueError("trailing input in polynomial %r" % text)
    if variables:
        extra = tuple(v for v in poly.variables if v not in variables)
        poly = poly.with_variables(variables + extra)
    return poly


def _parse_expr(toks, domain, variables):
    negate = False
    if toks.peek() == "-":
        toks.next()
        negate = True
    acc = _parse_term(toks, domain, variables)
    if negate:
        acc = -acc
    while toks.peek() in ("+", "-"):
        op, _ = toks.next()
        term = _parse_term(toks, domain, variables)
        acc = acc + term if op == "+" else acc - term
    return acc


def _parse_term(toks, domain, variables):
    acc = _parse_factor(toks, domain, variables)
    while toks.peek() in ("*", "/"):
        op, _ = toks.next()
        rhs = _parse_factor(toks, domain, variables)
        if op == "*":
            acc = acc * rhs
        else:
            if not rhs.is_constant():
                raise ValueError("division by a non-constant polynomial")
            c = rhs.constant_value()
            if hasattr(c, "inverse"):
                acc = acc.scale(c.inverse())
            elif getattr(c, "scalar_part", lambda: None)() is not None:
                # algebra elements divide by their base-scalar multiples of 1
                inv = c.extension.scalar(c.scalar_part().inverse())
                acc = acc.scale(inv)
            else:
                raise UnsupportedOperationError(
                    "division is only defined by invertible constants")
    return acc


def _parse_factor(toks, domain, variables):
    base = _parse_atom(toks, domain, variables)
    if toks.peek() == "^":
        toks.next()
        kind, val = toks.next()
        if kind != "int":
            raise ValueError("exponent must be a non-negative integer")
        return base ** val
    return base


def _parse_atom(toks, domain, variables):
    kind, val = toks.next()
    if kind == "int":
        return Poly.constant(domain, val, variables)
    if kind == "name":
        if val in variables:
            return Poly.variable(domain, val).with_variables(variables)
        sym = domain.symbol_constant(val)
        if sym is None:
            raise ValueError("unknown identifier %r" % val)
        return Poly.constant(domain, sym, variables)
    if kind == "(":
        inner = _parse_expr(toks, domain, variables)
        closing = toks.next()
        if closing[0] != ")":
            raise ValueError("unbalanced parentheses")
        return inner
    if kind == "-":
        return -_parse_atom(toks, domain, variables)
    raise ValueError("unexpected token %r" % (val,))
