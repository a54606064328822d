import json
from fractions import Fraction

import pytest

import uhsl2


def test_defining_relations():
    assert uhsl2.star("y * x") == {(1, 1, 0, 0): 1, (1, 0, 0, 1): 2}
    assert uhsl2.star("z * x") == {(1, 0, 1, 0): 1, (0, 1, 0, 1): -1}
    assert uhsl2.star("z * y") == {(0, 1, 1, 0): 1, (0, 0, 1, 1): 2}
    assert uhsl2.star("x * y") == {(1, 1, 0, 0): 1}


def test_worked_products_three_ways():
    expected = {(2, 0, 1, 0): 1, (1, 1, 0, 1): -1, (1, 0, 0, 2): -2}
    assert uhsl2.star("z * m(2,0,0,0)") == expected
    assert uhsl2.mono_star_mono((0, 0, 1, 0), (2, 0, 0, 0)) == expected
    assert uhsl2.oracle_star((0, 0, 1, 0), (2, 0, 0, 0)) == expected
    assert uhsl2.species_count("m(0,0,2,0)", "m(2,0,0,0)", (1, 0, 1, 2)) == -4
    assert uhsl2.coeff((0, 0, 2, 0), (2, 0, 0, 0), (0, 1, 0, 3)) == 3


def test_values_are_python_numbers():
    value = uhsl2.star("1/2 * x + 1/3 * x")
    assert value == {(1, 0, 0, 0): Fraction(5, 6)}
    assert isinstance(next(iter(value.values())), Fraction)
    big = uhsl2.shifted_elem(10**30, 2, 3)
    assert isinstance(big, int) and big > 10**60


def test_shifted_symbol():
    for a in range(11):
        assert uhsl2.shifted_elem(a, 3, 4) == 4 * a**3 + 18 * a**2 + 22 * a + 6
    assert uhsl2.shifted_elem(-3, 5, 2) == 0


def test_json_round_trip_and_format():
    doc = uhsl2.star_json("exp(z) * exp(x)", 3)
    parsed = json.loads(doc)
    assert parsed["cap"] == 3
    assert [t["m"] for t in parsed["terms"]] == sorted(t["m"] for t in parsed["terms"])
    assert uhsl2.roundtrip_json(doc) == doc


def test_errors():
    with pytest.raises(uhsl2.ParseError):
        uhsl2.star("y x")
    with pytest.raises(ValueError):
        uhsl2.star("exp(x)")
    with pytest.raises(ValueError):
        uhsl2.roundtrip_json('{"cap": null}')


def test_expression_canonical_text():
    text = uhsl2.normalize_expression("2*m(1,0,0,0)+-1*h")
    assert text == "2 * m(1,0,0,0) + -1 * h"
    assert uhsl2.normalize_expression(text) == text


def test_verification_entry_points():
    report = uhsl2.verify(1)
    assert report["pairs"] == 256 and report["mismatches"] == 0
    assert report["integrality_violations"] == 0
    checked, mismatches = uhsl2.species_check("exp(y)", "exp(x)", 3)
    assert checked == 35 and mismatches == []
    assert all(passed for _, passed, _ in uhsl2.identities())


def test_cli():
    code, out, _ = uhsl2.run_cli(["coeff", "--left", "0,0,2,0", "--right", "2,0,0,0", "--out", "0,1,0,3"])
    assert (code, out) == (0, "3\n")
    code, _, err = uhsl2.run_cli(["star", "--expr", "y *"])
    assert code == 2 and "position" in err
