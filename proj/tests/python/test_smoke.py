import json

import pytest

import tvb


def test_normalize():
    assert tvb.normalize("g2 g2 s1", 3) == "s1"
    assert tvb.normalize("r1 r1", 2) == ""


def test_parse_error():
    with pytest.raises(ValueError):
        tvb.normalize("q1", 3)


def test_images():
    assert tvb.image("phiP", 3, "s1") == "[2,1,3]"
    assert tvb.in_kernel("phiH", 3, "s2")
    assert not tvb.in_kernel("phiPT", 2, "g1")


def test_rewrite():
    assert tvb.rewrite("tvp", 3, ["s1 g3 s1^-1 g3", "g1 g1"]) == ["l1,2^-1 g3 l1,2 g3", "g1 g1"]
    assert tvb.rewrite("pl", 3, ["g1 l1,2 g1"]) == ["l1,2:1"]
    with pytest.raises(tvb.NotInKernel):
        tvb.rewrite("tvp", 3, ["s1"])


def test_presentation():
    text = tvb.presentation("tvpn", 2)
    assert sum(line.startswith("gen ") for line in text.splitlines()) == 4
    assert sum(line.startswith("rel ") for line in text.splitlines()) == 4
    assert json.loads(tvb.presentation_json("tvpn", 2))["family"] == "tvpn"


def test_abelianize():
    assert tvb.abelianize("tvpn", 3) == (3, [2, 2, 2], "Z^3 + Z_2^3")
    assert tvb.abelianize("tvhn", 4)[2] == "Z^1 + Z_2^4"


def test_verify():
    reports = tvb.verify(["rewriting", "conjugation"], 2, 3)
    assert [(r["id"], r["n"]) for r in reports] == [
        ("rewriting", 2), ("rewriting", 3), ("conjugation", 2), ("conjugation", 3)
    ]
    assert all(r["status"] == "PASS" for r in reports)
