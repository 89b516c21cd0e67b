import camina
import pytest


def test_group_queries():
    assert camina.order("builtin:quaternion8") == 8
    assert camina.class_sizes("builtin:quaternion8") == [1, 1, 2, 2, 2]
    assert camina.is_camina("builtin:dihedral(6)")
    assert not camina.is_camina("builtin:dihedral(12)")
    assert camina.classification_family("builtin:dihedral(6)") == "frobenius_affine"


def test_profile():
    prof = camina.camina_profile("builtin:extraspecial_exp_p(3)")
    assert prof["is_camina"]
    assert prof["k"] == 1
    assert prof["n_param"] == 3


def test_intersection_numbers():
    p = camina.intersection_numbers("builtin:quaternion8")
    assert p[0][2][2] == 2
    assert camina.almost_commutative("builtin:quaternion8")
    assert not camina.almost_commutative("builtin:dihedral12")


def test_dimensions():
    assert camina.terwilliger_dimension("builtin:quaternion8") == 28
    assert camina.terwilliger_dimension("builtin:extraspecial_exp_p(3)", closure=True) == 137
    assert camina.dimension_formula(2, 3, 1) == 28
    with pytest.raises(camina.PreconditionError):
        camina.terwilliger_dimension("builtin:dihedral(12)")


def test_verify_all():
    r = camina.verify_all("builtin:quaternion8")
    assert r.ok
    assert r.report["schema"] == camina.SCHEMA
    assert r.report["dim_T"] == 28
    assert r.report["count"] == 3


def test_exit_codes():
    assert camina.run("wedderburn", "builtin:cyclic(4)").exit_code == 1
    assert camina.run("info", "builtin:nosuch").report["error"]["type"] == "validation"


def test_synthetic():
    r = camina.synth_class3(2, 2, 1)
    assert r.ok
    assert r.report["synthetic"]["counts"] == {"W_per_middle_class": 1, "X": 1, "Y": 3}


def test_bad_input_raises():
    with pytest.raises(camina.ValidationError):
        camina.order("nonsense")
