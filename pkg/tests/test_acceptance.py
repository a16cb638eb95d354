"""Acceptance gate: one test per criterion, each printing a pass/fail line.

Every check is exact (tolerance zero); randomized runs are seeded and small
enough to stay well under ten seconds per criterion.
"""

import json
import random
from fractions import Fraction

from weilres import (LogNorm, Poly, RationalField, charpoly, disc_generators,
                     from_minimal_polynomial, is_integral, parse_poly)
from weilres.cli import main
from weilres.verify import (suite_adjunction, suite_descent, suite_example26,
                            suite_products, suite_rho, suite_sigma)

from test_documents import golden_doc


def _report(number, name, ok):
    print("ACCEPTANCE %d %s: %s" % (number, name, "PASS" if ok else "FAIL"))
    assert ok, "%s failed" % name


def _suite_ok(report):
    return report.ok, {row["identity"]: row["status"] for row in report.rows}


def test_criterion_1_adjunction():
    report = suite_adjunction(seed=1)
    ok, rows = _suite_ok(report)
    assert rows["adjunction_golden_count"] == "pass"
    for q, n in ((2, 2), (2, 3), (3, 2)):
        assert rows["adjunction_point_bijection_q%d_n%d" % (q, n)] == "pass"
    _report(1, "ADJUNCTION", ok)


def test_criterion_2_unbounded_nilpotent_witness():
    report = suite_example26(threshold=LogNorm(3))
    ok, rows = _suite_ok(report)
    detail = [r for r in report.rows
              if r["identity"] == "witness_scale_index"][0]["detail"]
    assert "k = 4" in detail
    assert rows["witness_element_squares_to_zero"] == "pass"
    assert rows["witness_spectral_radius_vanishes"] == "pass"
    assert rows["witness_scale_norm_unbounded"] == "pass"
    _report(2, "EXAMPLE-2.6 WITNESS", ok)


def test_criterion_3_spectral_radius_identity():
    report = suite_rho(seed=1)
    ok, rows = _suite_ok(report)
    assert rows["rho_nilpotent_vanishes"] == "pass"
    assert rows["rho_unit_is_one"] == "pass"
    assert rows["rho_sqrt2_is_half_unit"] == "pass"
    assert rows["rho_equals_sigma_of_charpoly_power_bound"] == "pass"
    _report(3, "SPECTRAL RADIUS = CHARPOLY SPECTRAL VALUE", ok)


def test_criterion_4_spectral_value_multiplicativity():
    report = suite_sigma(seed=1)
    ok, rows = _suite_ok(report)
    assert rows["spectral_value_multiplicativity_padic"] == "pass"
    assert rows["spectral_value_multiplicativity_function"] == "pass"
    _report(4, "SPECTRAL-VALUE MULTIPLICATIVITY", ok)


def test_criterion_5_integrality_criterion():
    rng = random.Random(5)
    settings = [
        (RationalField(padic=2), 2),   # ramified quadratic, 2-adic
        (RationalField(padic=3), 3),   # ramified quadratic, 3-adic
        (RationalField(padic=3), 2),   # unramified quadratic, 3-adic
    ]
    ok = True
    for field, d in settings:
        ext = from_minimal_polynomial(
            field, parse_poly("t^2 - %d" % d, field, ("t",)))
        half_root = field.lognorm(field(d)) / 2
        for _ in range(100):
            b = ext.random_element(rng)
            a1, a2 = b.coords
            # independent membership test from the explicit coordinate norms
            member = (field.lognorm(a1) <= LogNorm(0)
                      and field.lognorm(a2) + half_root <= LogNorm(0))
            if is_integral(b) != member:
                ok = False
                break
    _report(5, "INTEGRALITY CRITERION", ok)


def test_criterion_6_scaling_law():
    rng = random.Random(6)
    q2 = RationalField(padic=2)
    from weilres import FunctionField
    k3 = FunctionField(3, Fraction(1, 2))
    ok = True
    for field, mod in ((q2, "t^2 - 2"), (k3, "t^3 - x")):
        ext = from_minimal_polynomial(field, parse_poly(mod, field, ("t",)))
        for _ in range(100):
            a = field.random_element(rng)
            b = ext.random_element(rng)
            left = charpoly(b.scale(a))
            right = charpoly(b)
            for i in range(1, ext.rank + 1):
                if left.coefficient(i) != (a ** i) * right.coefficient(i):
                    ok = False
                    break
    # the disc-generator corollary: scaling the radius element by a scales
    # the j-th coefficient polynomial by a^j
    ext = from_minimal_polynomial(q2, parse_poly("t^2 - 2", q2, ("t",)))
    a = q2(Fraction(5, 2))
    r = ext.basis_element(1) + ext.unit_element()
    gens_r, _ = disc_generators(ext, [r], ("x_1", "x_2"))
    gens_ar, _ = disc_generators(ext, [r.scale(a)], ("x_1", "x_2"))
    for j in range(1, 3):
        y = Poly.variable(q2, "y1_%d" % j)
        c = y - gens_r[j - 1]
        ca = y - gens_ar[j - 1]
        if ca != c.scale(a ** j):
            ok = False
    _report(6, "CHARPOLY COEFFICIENT SCALING", ok)


def test_criterion_7_products_and_base_change():
    report = suite_products(seed=1)
    ok, rows = _suite_ok(report)
    assert rows["product_compatibility"] == "pass"
    assert rows["base_change_compatibility"] == "pass"
    _report(7, "PRODUCTS AND BASE CHANGE", ok)


def test_criterion_8_galois_descent():
    report = suite_descent(seed=1)
    ok, rows = _suite_ok(report)
    assert rows["galois_fixed_point_descent_golden"] == "pass"
    assert rows["fixed_point_reduction_golden"] == "pass"
    assert rows["galois_fixed_point_descent_random"] == "pass"
    assert rows["wild_inputs_rejected"] == "pass"
    _report(8, "GALOIS DESCENT", ok)


def test_criterion_9_determinism(tmp_path, capsys):
    path = tmp_path / "doc.json"
    path.write_text(json.dumps(golden_doc()))
    outputs = []
    for suite in ("sigma", "adjunction"):
        pair = []
        for run_index in range(2):
            out_path = tmp_path / ("%s_%d.json" % (suite, run_index))
            code = main(["verify", "--suite", suite, "--input", str(path),
                         "--output", str(out_path)])
            assert code == 0
            pair.append(out_path.read_bytes())
        outputs.append(pair)
    ok = all(a == b for a, b in outputs)
    _report(9, "DETERMINISM", ok)
