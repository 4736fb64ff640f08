"""Algebra and Hopf layer: structure constants, axiom suites, duality."""

import pytest

from phopf.fields import GF, QQ
from phopf.linalg import Tensor3
from phopf._groups import GROUP_NAMES, named_group
from phopf.algebras import (AlgebraData, HopfData, Report, algebra_check,
                            dual_hopf, group_algebra, hom_hh_a, hopf_check,
                            scalar_algebra, sweedler_h4, tensor_hah)

HOPF_LAWS = {"associativity", "unit-law", "coassociativity", "counit-law",
             "comultiplication-multiplicative", "counit-multiplicative",
             "comultiplication-unit", "counit-unit", "antipode-law"}


# ---------------------------------------------------------------------------
# the axiom suites pass where they must


@pytest.mark.parametrize("field", [QQ, GF(5)], ids=["QQ", "GF5"])
@pytest.mark.parametrize("name", GROUP_NAMES)
def test_group_algebras_and_duals_are_hopf(field, name):
    labels, table = named_group(name)
    h = group_algebra(table, field, labels)
    rep = hopf_check(h)
    assert rep.passed, (name, rep.lines())
    assert set(rep.laws) == HOPF_LAWS
    repd = hopf_check(dual_hopf(h))
    assert repd.passed, (name, repd.lines())


@pytest.mark.parametrize("field", [QQ, GF(5), GF(7)], ids=["QQ", "GF5", "GF7"])
def test_sweedler_is_hopf(field):
    h = sweedler_h4(field)
    assert hopf_check(h).passed
    assert hopf_check(dual_hopf(h)).passed


def test_sweedler_rejects_characteristic_two():
    with pytest.raises(ValueError):
        sweedler_h4(GF(2))


def test_sweedler_structure_constants(h4):
    one = QQ.one
    # basis 1, g, x, xg with g^2 = 1, x^2 = 0, g x = -x g
    assert h4.basis == ["1", "g", "x", "xg"]
    pv = h4.mul.pair_view()
    assert pv[(1, 1)] == {0: one}
    assert (2, 2) not in pv
    assert pv[(1, 2)] == {3: -one}
    # comultiplication of x is x (x) g + 1 (x) x
    assert h4.comul.in1_view()[2] == {(2, 1): one, (0, 2): one}
    assert h4.counit == [one, one, QQ.zero, QQ.zero]
    # antipode swaps x and xg up to sign (images sit in columns)
    assert h4.antipode[3][2] == -one and h4.antipode[2][3] == one


def test_double_dual_is_the_identity_on_structure(h4):
    dd = dual_hopf(dual_hopf(h4))
    assert dd.mul.entries == h4.mul.entries
    assert dd.comul.entries == h4.comul.entries
    assert dd.unit == h4.unit and dd.counit == h4.counit
    assert dd.antipode == h4.antipode


def test_group_algebra_structure():
    labels, table = named_group("Z4")
    h = group_algebra(table, QQ, labels)
    assert h.dim == 4
    for (i, j, k), c in h.mul.entries.items():
        assert c == QQ.one and table[i][j] == k
    # antipode is the inverse permutation
    for i in range(4):
        inv = table[i].index(0)
        assert h.antipode[inv][i] == QQ.one


# ---------------------------------------------------------------------------
# mutation tests: every corrupted structure is caught


def _hopf_with(h, **parts):
    return HopfData(h.field, list(h.basis),
                    parts.get("mul", h.mul),
                    parts.get("unit", list(h.unit)),
                    parts.get("comul", h.comul),
                    parts.get("counit", list(h.counit)),
                    parts.get("antipode", [list(r) for r in h.antipode]))


def test_mutated_multiplication_is_caught():
    labels, table = named_group("Z2")
    h = group_algebra(table, QQ, labels)
    mul = Tensor3((2, 2, 2), dict(h.mul.entries))
    mul.add(1, 1, 0, -QQ.one)
    mul.add(1, 1, 1, QQ.one)          # now g.g = g
    rep = hopf_check(_hopf_with(h, mul=mul))
    assert not rep.passed
    assert rep.failures_for("antipode-law")


def test_mutated_comultiplication_is_caught():
    labels, table = named_group("Z2")
    h = group_algebra(table, QQ, labels)
    comul = Tensor3((2, 2, 2), dict(h.comul.entries))
    comul.add(1, 1, 1, -QQ.one)
    comul.add(1, 1, 0, QQ.one)        # now comul(g) = g (x) 1
    rep = hopf_check(_hopf_with(h, comul=comul))
    assert not rep.passed
    assert rep.failures_for("counit-law")


def test_mutated_counit_is_caught():
    labels, table = named_group("Z2")
    h = group_algebra(table, QQ, labels)
    rep = hopf_check(_hopf_with(h, counit=[QQ.one, QQ.zero]))
    assert not rep.passed
    assert rep.failures_for("counit-law") or rep.failures_for("counit-multiplicative")


def test_mutated_antipode_is_caught():
    labels, table = named_group("Z4")
    h = group_algebra(table, QQ, labels)
    anti = [list(r) for r in h.antipode]
    anti[1] = [QQ.zero, QQ.one, QQ.zero, QQ.zero]   # S(g) = g instead of g^3
    rep = hopf_check(_hopf_with(h, antipode=anti))
    assert not rep.passed
    assert rep.failures_for("antipode-law")
    wit = rep.failures_for("antipode-law")[0]
    assert wit[1] == (1,)             # witnessed on the basis element g


def test_mutated_algebra_unit_is_caught():
    a = scalar_algebra(QQ)
    bad = AlgebraData(QQ, list(a.basis), a.mul, [QQ.of(2)], name="bad")
    rep = algebra_check(bad)
    assert not rep.passed and rep.failures_for("unit-law")


# ---------------------------------------------------------------------------
# derived ambient algebras


def test_hom_convolution_algebra_shape(h4):
    a = scalar_algebra(QQ)
    hom = hom_hh_a(h4, a)
    assert hom.algebra.dim == 16
    assert algebra_check(hom.algebra).passed
    n = h4.dim
    # translation operators compose along the Hopf multiplication
    from phopf.linalg import mat_mul
    pv = h4.mul.pair_view()
    for g in range(n):
        for h in range(n):
            comp = mat_mul(hom.left_ops[g], hom.left_ops[h])
            want = [[QQ.zero] * 16 for _ in range(16)]
            for p, c in pv.get((g, h), {}).items():
                for i in range(16):
                    for j in range(16):
                        want[i][j] += c * hom.left_ops[p][i][j]
            assert comp == want
    # left and right translations commute
    for g in range(n):
        for h in range(n):
            assert (mat_mul(hom.left_ops[g], hom.right_ops[h])
                    == mat_mul(hom.right_ops[h], hom.left_ops[g]))


def test_tensor_ambient_shape(h4):
    a = scalar_algebra(QQ)
    amb = tensor_hah(h4, a)
    n = h4.dim
    assert amb.algebra.dim == n * a.dim * n
    assert algebra_check(amb.algebra).passed
    assert amb.rho.dims == (16, 16, n)
    assert amb.lam.dims == (16, n, 16)


def test_unitless_algebra_check_skips_unit_law():
    mul = Tensor3((1, 1, 1))
    rep = algebra_check(AlgebraData(QQ, ["z"], mul, None, name="null"))
    assert rep.passed and "unit-law" not in rep.laws


# ---------------------------------------------------------------------------
# the report object


def test_report_bookkeeping():
    r = Report()
    r.law("alpha")
    r.law("beta")
    r.fail("beta", (0, 1), "L", "R")
    assert not r.passed
    assert r.failures_for("beta") == [("beta", (0, 1), "L", "R")]
    lines = r.lines()
    assert lines[0] == "PASS  alpha" and lines[1].startswith("FAIL  beta")
    doc = r.to_json()
    assert doc["passed"] is False and "beta" in doc["laws"]
    outer = Report()
    outer.merge(r, prefix="inner/")
    assert "inner/beta" in outer.laws and not outer.passed
