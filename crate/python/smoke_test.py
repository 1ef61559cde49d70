"""Smoke test for the fourreg_py extension. Run with pytest or directly."""

from pathlib import Path

import pytest

import fourreg_py as fr

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def load(name, ref=None):
    text = (FIXTURES / name).read_text()
    return fr.EulerSystem(text, ref or Path(name).stem)


def test_eight_vertex_standard_form():
    c = load("eight.dow")
    p = c.parse_partition((FIXTURES / "eight.tr").read_text())
    assert sorted(len(x) for x in p.circuits()) == [3, 3, 3, 7]
    assert p.labels(c)[0] == "phi"
    m = fr.standard_form_matrix(c, p)
    assert m[5] == [0, 0, 0, 0, 1, 1, -1, 1]
    assert all(x % 2 == y for r, s in zip(m, fr.gf2_matrix(c, p)) for x, y in zip(r, s))
    assert all(ok for _, ok in fr.verify_main(c, p))
    assert len(fr.touch_edges(c, p)) == 8


def test_doubled_triangle_psi_partition():
    c = load("doubled_triangle.dow")
    p = c.partition(["psi", "psi", "psi"])
    assert len(p) == 3
    assert fr.standard_form_matrix(c, p) == [[1, 1, 1]] * 3


def test_counting_agrees_with_enumeration():
    for name in ["k5.dow", "eight.dow", "loop.dow", "two_triangles.dow"]:
        c = load(name)
        assert c.count_euler() == c.count_euler_brute()
    assert load("k5.dow").count_euler() == 11


def test_transforms():
    c = load("k5_transposition.dow")
    t = c.transposition("c", "d")
    assert t.to_dow_text() == "dow C: a+ b- e+ d- c- b+ d+ a- e- c+\n"
    k = load("k5.dow")
    assert k.kappa("a").kappa("a", "second").as_partition().is_euler_system()
    assert k.flip_sign("a").flip_sign("a").to_dow_text() == k.to_dow_text()
    s = k.signed_interlacement()
    assert all(s[i][j] == -s[j][i] for i in range(5) for j in range(5))


def test_census_and_errors():
    assert sum(n for _, n in load("k5.dow").census()) == 243
    with pytest.raises(ValueError, match="line 1"):
        fr.EulerSystem("dow C: a+ b- a+= b+")
    with pytest.raises(ValueError):
        load("two_triangles.dow").transposition("a", "x")


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
