#!/usr/bin/env python3
"""
Tests for the ambient helpers:

- per-call settings: overrides, coercion, unknown names, the report echo
- error types and the structured handle_error response
- rational weights and complex matrix entries

Run from the repo root: python -m pytest tests/test_settings_errors.py
"""

from fractions import Fraction

import pytest

from quiver_moment.utils.errors import (
    CyclicQuiverError,
    InvalidInputError,
    QuiverError,
    SingularElementError,
    SpecParseError,
    handle_error,
)
from quiver_moment.utils.rationals import format_complex, format_rational, parse_complex, parse_rational
from quiver_moment.utils.settings import (
    DEFAULT_SETTINGS,
    QuiverSettings,
    build_applied_settings,
    build_call_settings,
)


# ---------------------------------------------------------------------------
# Settings
# ---------------------------------------------------------------------------

def test_no_overrides_returns_defaults():
    assert build_call_settings() is DEFAULT_SETTINGS
    assert build_call_settings({"seed": None}) is DEFAULT_SETTINGS


def test_overrides_do_not_touch_defaults():
    settings = build_call_settings({"seed": "12", "skew_tol": "1e-6"})
    assert settings.seed == 12
    assert settings.skew_tol == 1e-6
    assert DEFAULT_SETTINGS.seed == 0
    assert DEFAULT_SETTINGS.skew_tol == 1e-9


def test_overrides_stack_on_a_base():
    base = build_call_settings({"trials": 20})
    assert build_call_settings({"seed": 4}, base) == QuiverSettings(trials=20, seed=4)


@pytest.mark.parametrize("overrides,fragment", [
    ({"colour": 1}, "Unknown option 'colour'. Valid options: skew_tol"),
    ({"trials": -1}, "non-negative integer"),
    ({"trials": 2.5}, "non-negative integer"),
    ({"samples": "many"}, "non-negative integer"),
    ({"fd_step": 0}, "positive number"),
    ({"unitary_tol": "-1e-3"}, "positive number"),
])
def test_bad_overrides(overrides, fragment):
    with pytest.raises(ValueError, match=fragment):
        build_call_settings(overrides)


def test_applied_settings_echo():
    assert build_applied_settings(DEFAULT_SETTINGS)["source"] == "defaults"
    echo = build_applied_settings(build_call_settings({"seed": 9}))
    assert echo["seed"] == 9
    assert echo["source"] == "per-call"
    assert echo["tolerances"]["witness_atol"] == 1e-7
    assert "seed" not in echo["tolerances"]


# ---------------------------------------------------------------------------
# Errors
# ---------------------------------------------------------------------------

def test_every_error_is_a_value_error():
    for error in (InvalidInputError(["x"]), CyclicQuiverError(["beta"]), SingularElementError("a", 0.0)):
        assert isinstance(error, QuiverError)
        assert isinstance(error, ValueError)


def test_error_messages():
    assert str(CyclicQuiverError(["p", "q"])) == "quiver has a cycle (p q)"
    assert str(CyclicQuiverError()) == "quiver has a cycle"
    assert str(SpecParseError("bad", 3, 7, "f.quiver")) == "f.quiver:3:7: bad"
    assert "vertex 'a'" in str(SingularElementError("a", 1e-20))


def test_handle_error_response():
    response = handle_error(InvalidInputError(["dimension vector is zero"]))
    assert response["status"] == "error"
    assert response["error"] is True
    assert response["type"] == "InvalidInputError"
    assert response["violations"] == ["dimension vector is zero"]
    assert response["suggestion"]

    response = handle_error(RuntimeError("boom"))
    assert response["message"] == "boom"
    assert "location" not in response and "violations" not in response


# ---------------------------------------------------------------------------
# Rationals and complex entries
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("text,expected", [
    ("3", Fraction(3)),
    ("-1/2", Fraction(-1, 2)),
    ("+4/6", Fraction(2, 3)),
    ("0/5", Fraction(0)),
])
def test_parse_rational(text, expected):
    assert parse_rational(text) == expected


@pytest.mark.parametrize("text", ["1.5", "1/0", "a", "1/-2", "", "1//2"])
def test_parse_rational_rejects(text):
    with pytest.raises(ValueError, match="Invalid rational"):
        parse_rational(text)


def test_format_rational():
    assert format_rational(Fraction(-6, 4)) == "-3/2"
    assert format_rational(Fraction(5)) == "5"


@pytest.mark.parametrize("text,expected", [
    ("3", 3 + 0j),
    ("-2.5", -2.5 + 0j),
    ("4i", 4j),
    ("i", 1j),
    ("-i", -1j),
    ("1+2i", 1 + 2j),
    ("1e-3-0.5i", 0.001 - 0.5j),
    (".5+i", 0.5 + 1j),
])
def test_parse_complex(text, expected):
    assert parse_complex(text) == expected


@pytest.mark.parametrize("text", ["", "1+2j", "x", "1+", "i2", "1 2"])
def test_parse_complex_rejects(text):
    with pytest.raises(ValueError, match="Invalid complex entry"):
        parse_complex(text)


def test_format_complex_is_exact():
    z = complex(0.1, -1 / 3)
    assert format_complex(z) == "0.1-0.3333333333333333i"
    assert parse_complex(format_complex(z)) == z
