from fractions import Fraction

import pytest

from weilres import (FunctionField, Poly, PrimeField, RationalField,
                     from_minimal_polynomial, parse_poly)


@pytest.fixture
def f2():
    return PrimeField(2)


@pytest.fixture
def f3():
    return PrimeField(3)


@pytest.fixture
def rationals():
    return RationalField()


@pytest.fixture
def q2():
    return RationalField(padic=2)


@pytest.fixture
def q3():
    return RationalField(padic=3)


@pytest.fixture
def k2():
    return FunctionField(2, Fraction(1, 2))


@pytest.fixture
def k3():
    return FunctionField(3, Fraction(1, 2))


@pytest.fixture
def f4_ext(f2):
    return from_minimal_polynomial(f2, parse_poly("w^2 + w + 1", f2, ("w",)), "w")


@pytest.fixture
def f9_ext(f3):
    return from_minimal_polynomial(f3, parse_poly("t^2 + 1", f3, ("t",)), "t")


@pytest.fixture
def sqrt2_2adic(q2):
    return from_minimal_polynomial(q2, parse_poly("t^2 - 2", q2, ("t",)), "t")


def naive_charpoly_coeffs(matrix, ring):
    """Independent oracle: cofactor expansion of det(z*I - M) over ring[z].

    Returns the coefficient list [1, c_1, ..., c_n] as polynomials over the
    underlying domain (constants when the matrix entries are scalars).
    """
    n = len(matrix)
    dom = ring.domain if hasattr(ring, "domain") else ring
    entries = []
    for i in range(n):
        row = []
        for j in range(n):
            poly = _lift_entry(-matrix[i][j], dom)
            if i == j:
                poly = poly + Poly.variable(dom, "_z")
            row.append(poly)
        entries.append(row)
    det = _naive_det(entries)
    return [_z_coefficient(det, k, dom) for k in range(n, -1, -1)]


def _lift_entry(entry, dom):
    if isinstance(entry, Poly):
        return entry
    return Poly.constant(dom, entry)


def _naive_det(rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = None
    for j in range(n):
        minor = [[rows[i][k] for k in range(n) if k != j] for i in range(1, n)]
        term = rows[0][j] * _naive_det(minor)
        if j % 2 == 1:
            term = -term
        total = term if total is None else total + term
    return total


def _z_coefficient(det, k, dom):
    if "_z" not in det.variables:
        return det if k == 0 else Poly.zero(dom, det.variables)
    z_index = det.variables.index("_z")
    terms = {}
    for exps, c in det.terms.items():
        if exps[z_index] != k:
            continue
        reduced = tuple(e for i, e in enumerate(exps) if i != z_index)
        terms[reduced] = c
    reduced_vars = tuple(v for v in det.variables if v != "_z")
    return Poly(dom, reduced_vars, terms)
