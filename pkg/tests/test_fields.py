"""Field layer: exact rational and prime-field arithmetic."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from phopf.fields import Field, GF, ModP, QQ


rationals = st.fractions(min_value=-10**6, max_value=10**6, max_denominator=10**4)
residues5 = st.integers(min_value=0, max_value=4)


# ---------------------------------------------------------------------------
# axioms, property-tested


@settings(max_examples=60, deadline=None)
@given(rationals, rationals, rationals)
def test_qq_is_a_field(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + QQ.zero == a and a * QQ.one == a
    assert a + (-a) == QQ.zero
    if a:
        assert a * (QQ.one / a) == QQ.one


@settings(max_examples=60, deadline=None)
@given(residues5, residues5, residues5)
def test_gf5_is_a_field(x, y, z):
    f = GF(5)
    a, b, c = f.of(x), f.of(y), f.of(z)
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + f.zero == a and a * f.one == a
    assert a - a == f.zero
    if a != f.zero:
        assert a * (f.one / a) == f.one
        assert a * a * a * a == f.one  # the multiplicative group has order 4


def test_modp_mixes_with_ints():
    f = GF(7)
    a = f.of(3)
    assert a + 5 == f.of(1)
    assert 5 + a == f.of(1)
    assert a - 5 == f.of(5)
    assert 5 - a == f.of(2)
    assert a * 4 == f.of(5)
    assert 1 / a == f.of(5)
    assert -a == f.of(4)
    assert bool(f.zero) is False and bool(a) is True


def test_gf_rejects_nonprime():
    for bad in (0, 1, 4, 6, 9, 12):
        with pytest.raises(ValueError):
            GF(bad)


def test_of_coerces_fractions_mod_p():
    f = GF(5)
    assert f.of(Fraction(1, 2)) == f.of(3)      # 2 * 3 = 6 = 1
    assert f.of(Fraction(-1, 3)) == f.of(3)     # 3 * 3 = 9 = 4 = -1
    with pytest.raises(ZeroDivisionError):
        f.of(Fraction(1, 5))
    with pytest.raises(ValueError):
        f.of(ModP(1, 7))
    with pytest.raises(TypeError):
        QQ.of(1.5)


# ---------------------------------------------------------------------------
# the scalar grammar


@settings(max_examples=60, deadline=None)
@given(rationals)
def test_qq_show_parse_round_trip(a):
    assert QQ.parse(QQ.show(a)) == a


@settings(max_examples=40, deadline=None)
@given(residues5)
def test_gf5_show_parse_round_trip(x):
    f = GF(5)
    a = f.of(x)
    assert f.parse(f.show(a)) == a


def test_parse_grammar():
    assert QQ.parse("-3/4") == Fraction(-3, 4)
    assert QQ.parse(" 7 ") == Fraction(7)
    with pytest.raises(ValueError):
        QQ.parse("1.5")
    with pytest.raises(ValueError):
        QQ.parse("x")
    f = GF(5)
    assert f.parse("4") == f.of(4)
    with pytest.raises(ValueError):
        f.parse("3/4")
    with pytest.raises(ValueError):
        f.parse("7")
    with pytest.raises(ValueError):
        f.parse("-1")


def test_field_json_round_trip():
    for f in (QQ, GF(5), GF(97)):
        assert Field.from_json(f.to_json()) == f
    with pytest.raises(ValueError):
        Field.from_json({"kind": "Galaxy"})


def test_field_identity_and_char():
    assert QQ.char == 0 and GF(5).char == 5
    assert QQ == Field() and GF(5) == Field(5) and QQ != GF(5)
    assert QQ.kind == "Rationals" and GF(3).kind == "PrimeField"
