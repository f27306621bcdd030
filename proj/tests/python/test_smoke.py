"""End-to-end smoke tests for the compiled module."""

import json
import os

import pytest

import _pglob as pg


def idempotent_line():
    return pg.Algebra(1, [[["1"]]], unit=["1"])


def split_kk():
    return pg.Algebra(2, [[["1", "0"], ["0", "0"]], [["0", "0"], ["0", "1"]]], unit=["1", "1"])


def z2_zero_rep():
    return pg.PartialRep(pg.cyclic_group(2), [[["1"]], [["0"]]], algebra=idempotent_line())


def test_groups():
    g = pg.cyclic_group(4)
    assert g.order == 4
    assert g.inv(1) == 3
    assert g.mul(3, 2) == 1
    s3 = pg.symmetric_group_s3()
    assert s3.order == 6
    with pytest.raises(pg.MathError):
        pg.validate_group([[0, 1], [1, 1]])


def test_algebras():
    kk = split_kk()
    assert kk.is_associative()
    assert not kk.is_lie()
    assert kk.multiply(["1", "1"], ["1", "0"]) == ["1", "0"]
    assert pg.zero_algebra(3).is_lie()


def test_partial_rep_and_lambda():
    rep = z2_zero_rep()
    assert rep.check().overall
    assert not rep.is_global()
    ls = pg.build_lambda(rep)
    assert ls.dim == 2
    assert ls.theta(1) == [["0", "1"], ["1", "0"]]
    assert ls.iota() == [["1"], ["0"]]
    assert ls.tau() == [["1", "0"]]
    assert ls.has_product
    # ⌊1, e⌋·⌊g, e⌋ = 0 for the zero rep.
    one_e = ls.class_of(0, ["1"])
    g_e = ls.class_of(1, ["1"])
    assert ls.product(one_e, g_e) == ["0", "0"]
    assert ls.check_globalization().overall
    assert ls.check_product().overall
    assert ls.check_variety("associative").overall


def test_invalid_rep_is_caught():
    g = pg.cyclic_group(2)
    shear = pg.PartialRep(g, [[["1", "0"], ["0", "1"]], [["1", "1"], ["0", "1"]]])
    report = shear.check()
    assert not report.overall
    witnesses = [w for (_, ok, w) in report.checks if not ok and w]
    assert witnesses


def test_covariant_lift_and_adjunction():
    rep = z2_zero_rep()
    cov = pg.Covariant(rep, [[["1"]]], [[["1"]], [["0"]]])
    assert cov.check().overall
    lifted, module_lambda = pg.lift_to_lambda(cov)
    assert lifted.w_dim == 2
    assert lifted.T() == [["1", "0"], ["0", "0"]]
    assert module_lambda.dim == 2
    assert lifted.check().overall
    dims = pg.check_adjunction(cov, lifted)
    assert dims[0] == dims[1]
    assert dims[2].overall


def test_comparison_and_factorization():
    ls = pg.build_lambda(z2_zero_rep())
    swap = [[["1", "0"], ["0", "1"]], [["0", "1"], ["1", "0"]]]
    # K×K with the swap is another globalization; phi is an isomorphism.
    phi, report = ls.compare_globalization(swap, split_kk(), [["1"], ["0"]])
    assert report.overall
    assert phi == [["1", "0"], ["0", "1"]]
    # Universal factorization of the embedding into that target.
    factor, unique, checks = ls.factor_through(swap, [["1"], ["0"]])
    assert unique and checks.overall
    assert factor == [["1", "0"], ["0", "1"]]


def test_semidirect():
    zero1 = pg.zero_algebra(1)
    g = pg.cyclic_group(2)
    lam = pg.PartialRep(g, [[["1"]], [["0"]]], algebra=zero1)
    out = pg.check_semidirect(lam, lam, [[["1"]]])
    assert out["report"].overall
    assert out["dim_lambda_semidirect"] == out["dim_lambda_L"] + out["dim_lambda_M"]


def test_validate_document_fixture():
    fixture_dir = os.environ.get("PGLOB_FIXTURES")
    if not fixture_dir:
        pytest.skip("PGLOB_FIXTURES not set")
    with open(os.path.join(fixture_dir, "z2_zero.json")) as f:
        text = f.read()
    reports = pg.validate_document(text)
    assert reports["groups/Z2"].overall
    assert reports["partial_reps/zero"].overall
    # Round-trip sanity of the document itself.
    assert json.loads(text)["groups"]["Z2"]["order"] == 2
