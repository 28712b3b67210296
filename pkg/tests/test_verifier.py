import random

import pytest

from matdioph import bigmatrix as bm
from matdioph.bigmatrix import BigMat
from matdioph.cayham import GchInstance, gch_matrices
from matdioph.errors import DimensionError
from matdioph.homopoly import HomoPoly, kernel
from matdioph.reports import VerifyReport
from matdioph.verifier import (
    is_nontrivial,
    lemma_scan,
    naive_power,
    verify_equation,
    verify_gch_term_order,
)

EX2 = (
    BigMat([[-54, 27], [-27, -27]]),
    BigMat([[-1, 2], [-2, 1]]),
    BigMat([[486, -243], [243, 243]]),
)
EX3 = (
    BigMat([[62, -149], [149, -87]]),
    BigMat([[-3, 8], [-8, 5]]),
    BigMat([[-14632, 18357], [-18357, 3725]]),
)


def test_example2_holds():
    report = verify_equation(*EX2, 11, 77, 7)
    assert report.holds and report.residual is None
    assert is_nontrivial(report)


def test_example3_holds():
    assert verify_equation(*EX3, 10, 25, 5).holds


def test_perturbed_exponent_fails():
    report = verify_equation(*EX2, 11, 77, 9)
    assert not report.holds
    assert not bm.is_zero(report.residual)
    assert "FAILS" in report.summary()


def test_trivial_solution_detected():
    z = bm.zeros(2)
    report = verify_equation(z, z, z, 1, 1, 1)
    assert report.holds and not is_nontrivial(report)


def test_dimension_mismatch():
    with pytest.raises(DimensionError):
        verify_equation(bm.identity(2), bm.identity(2), bm.identity(3), 1, 1, 1)


def test_report_invariant():
    with pytest.raises(ValueError):
        VerifyReport(claim={}, holds=False)
    with pytest.raises(ValueError):
        VerifyReport(claim={}, holds=True, residual=bm.identity(2))


@pytest.mark.parametrize("e", [0, 1, 2, 17, 63, 64, 65, 100, 257])
def test_naive_power_agrees_with_bigmatrix(e):
    rng = random.Random(e)
    a = BigMat([[rng.randint(-5, 5) for _ in range(3)] for _ in range(3)])
    assert BigMat(naive_power(a, e)) == bm.power(a, e)


def test_lemma_scan_examples():
    (r5,) = lemma_scan(5, 5)
    assert r5.computed_multiplicity == 1 and r5.paper_claim_eq2 is False and r5.discrepancy
    (r7,) = lemma_scan(7, 7)
    assert r7.computed_multiplicity == 2 and r7.quotient_degrees[0] == 5
    assert r7.paper_claim_eq1 is True
    (r6,) = lemma_scan(6, 6)
    assert r6.computed_multiplicity == 0
    assert r6.paper_claim_eq1 is None and r6.paper_claim_eq2 is None


def test_lemma_scan_range_and_order():
    reports = lemma_scan(2, 40)
    assert [r.m for r in reports] == list(range(2, 41))
    for r in reports:
        assert r.computed_multiplicity == {1: 2, 5: 1}.get(r.m % 6, 0)
        assert len(r.quotient_degrees) == r.computed_multiplicity
        assert r.quotient_degrees == [r.m - 2 * j for j in range(1, r.computed_multiplicity + 1)]


def test_lemma_scan_invalid():
    with pytest.raises(ValueError):
        lemma_scan(1, 5)
    with pytest.raises(ValueError):
        lemma_scan(9, 5)


def test_lemma_report_json():
    doc = lemma_scan(11, 11)[0].to_json()
    assert doc == {
        "m": 11, "residue_mod_6": 5, "computed_multiplicity": 1,
        "paper_claim_eq1": None, "paper_claim_eq2": False, "quotient_degrees": [9],
    }


def test_term_order_commuting():
    m1, m2 = gch_matrices(GchInstance.build(HomoPoly([2, -1, 3, 1]), 4, -5))
    assert verify_gch_term_order(HomoPoly([2, -1, 3, 1]), m1, m2)


def test_term_order_has_teeth():
    m1, m2 = BigMat([[0, 1], [0, 0]]), BigMat([[0, 0], [1, 0]])
    assert not verify_gch_term_order(kernel(), m1, m2)


def test_term_order_degree_one():
    rng = random.Random(0)
    for _ in range(5):
        m1 = BigMat([[rng.randint(-9, 9) for _ in range(2)] for _ in range(2)])
        m2 = BigMat([[rng.randint(-9, 9) for _ in range(2)] for _ in range(2)])
        assert verify_gch_term_order(HomoPoly([3, 1]), m1, m2)
