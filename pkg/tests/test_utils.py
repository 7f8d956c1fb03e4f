"""Tests for utility functions in the core module"""

import hashlib
import json

import pytest

from parkext.utils.core import (
    PrettyDict,
    _print_dict,
    _show_json,
    _truncate,
    hash_dict,
    progress,
    status,
)


def test_basic_dict_hashing():
    """Test that hash_dict produces a valid SHA-256 hash for a simple dictionary"""
    test_dict = {"a": 1, "b": 2, "c": 3}
    result = hash_dict(test_dict)

    assert isinstance(result, str)

    # SHA-256 produces 64 hex characters
    assert len(result) == 64
    assert all(c in "0123456789abcdef" for c in result)

    assert result == hash_dict(test_dict)


def test_dict_key_ordering():
    """Test that hash_dict produces the same hash regardless of key order"""
    dict1 = {"a": 1, "b": 2, "c": 3}
    dict2 = {"c": 3, "a": 1, "b": 2}

    assert hash_dict(dict1) == hash_dict(dict2)


def test_nested_report_record():
    """Test that hash_dict works on the nested shape of a report record"""
    record = {
        "command": "grfrob",
        "parameters": {"n": 3, "ell": 1, "m": 1},
        "basis": None,
        "terms": [{"partition": "2,1", "coeff": 3, "degree": 1}],
        "verdicts": [{"name": "dimension", "passed": True, "value": "16"}],
        "passed": True,
    }

    result = hash_dict(record)
    assert len(result) == 64

    # inner key order does not matter either
    shuffled = dict(record)
    shuffled["parameters"] = {"m": 1, "n": 3, "ell": 1}
    assert hash_dict(shuffled) == result


def test_empty_dict():
    """Test that hash_dict works with an empty dictionary"""
    result = hash_dict({})
    assert len(result) == 64
    assert result == hash_dict({})


def test_hash_matches_manual_computation():
    """Test that hash_dict is sha256 of the key-sorted JSON dump"""
    test_dict = {"z": [1, 2], "a": {"b": None}}
    expected = hashlib.sha256(json.dumps(test_dict, sort_keys=True).encode()).hexdigest()

    assert hash_dict(test_dict) == expected


@pytest.mark.parametrize(
    "dict1,dict2",
    [
        ({"a": 1}, {"a": 2}),
        ({"a": 1}, {"b": 1}),
        ({"coeff": 1}, {"coeff": "1"}),
        ({"passed": None}, {"passed": False}),
    ],
)
def test_different_dicts_hash_differently(dict1, dict2):
    assert hash_dict(dict1) != hash_dict(dict2)


def test_pretty_dict():
    """Test attribute access and the JSON repr"""
    data = PrettyDict({"max_n": 5, "threads": 1})

    assert data.max_n == 5
    assert data["threads"] == 1
    assert json.loads(repr(data)) == {"max_n": 5, "threads": 1}


def test_status_goes_to_stderr(capsys):
    status("building span", level="success")
    captured = capsys.readouterr()

    assert captured.out == ""
    assert "building span" in captured.err


def test_status_quiet(capsys):
    status("nothing to see", quiet=True)

    assert capsys.readouterr().err == ""


def test_progress_passthrough():
    """A disabled bar hands the iterable back untouched"""
    items = [1, 2, 3]

    assert progress(items) is items
    assert list(progress(items, enabled=True, desc="items")) == items


def test_truncate():
    assert _truncate(None) is None
    assert _truncate("short") == "short"
    long = "x" * 10_000
    truncated = _truncate(long)
    assert truncated.endswith("...")
    assert len(truncated) < len(long)


def test_show_json(capsys):
    _show_json({"max_n": 5})

    assert json.loads(capsys.readouterr().out) == {"max_n": 5}


def test_print_dict_as_table(capsys):
    _print_dict({"max_n": 5, "threads": 1}, json=False, key_label="Setting")
    out = capsys.readouterr().out

    assert "Setting" in out
    assert "max_n" in out
    assert "threads" in out
