import json
import pathlib

import pytest

import pfaffcubic

DATA = pathlib.Path(__file__).resolve().parents[2] / "data"


def read(name):
    lines = (DATA / name).read_text().splitlines()
    return "\n".join(l for l in lines if not l.lstrip().startswith("#")).strip()


def test_classify_double_plane_over_q():
    rep = pfaffcubic.classify(read("double_plane.txt"), field="q")
    assert rep["field"] == "QQ"
    assert rep["kind"] == "NonNormalPlane"


def test_classify_fermat_is_smooth():
    assert pfaffcubic.classify(read("fermat.txt"), field="p:101")["kind"] == "Smooth"


def test_known_matrix_verifies_with_lambda_one():
    out = pfaffcubic.verify(read("double_plane_matrix.txt"), read("double_plane.txt"), field="q")
    assert out["ok"] and out["lambda"] == "1"


def test_perturbed_matrix_is_rejected():
    out = pfaffcubic.verify(read("perturbed_matrix.txt"), read("double_plane.txt"), field="q")
    assert not out["ok"]


def test_pfaffianize_certificate_roundtrip():
    cert = pfaffcubic.pfaffianize(read("secant.txt"), seed=3)
    assert cert["verified"] and cert["lambda"] == "1"
    assert all(cert["checks"].values())
    again = pfaffcubic.verify_certificate(json.dumps(cert))
    assert again["ok"] and again["lambda"] == "1"
    assert pfaffcubic.pfaffianize(read("secant.txt"), seed=3) == cert


def test_lattice_counts():
    assert len(pfaffcubic.minus_one_classes()) == 27
    assert len(pfaffcubic.roots()) == 72


def test_errors_map_to_exceptions():
    with pytest.raises(pfaffcubic.ParseError):
        pfaffcubic.classify(read("malformed.txt"))
    with pytest.raises(pfaffcubic.FieldLimitation):
        pfaffcubic.pfaffianize(read("cone_fermat.txt"), field="q")
    with pytest.raises(pfaffcubic.DomainError):
        pfaffcubic.verify(read("odd_matrix.txt"), read("double_plane.txt"))
    assert issubclass(pfaffcubic.SearchExhausted, pfaffcubic.PfaffcubicError)
