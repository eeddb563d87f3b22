"""Exception catalog loading, validation, membership helpers."""

from __future__ import annotations

import pytest

from potgraph.catalogs import (
    FAMILY_KEYS,
    default_catalog,
    load_catalog,
    two_high_parametric_match,
)
from potgraph.errors import DomainError
from potgraph.sequences import parse_sequence


def test_default_catalog_shape(catalog):
    assert len(catalog.set_s) == 40
    assert len(catalog.thm7_fixed) == 26
    assert catalog.thm7_parametric == ((6, 7), (7, 8))
    assert set(catalog.lemma_exceptions) == set(FAMILY_KEYS)
    sizes = {k: len(v) for k, v in catalog.lemma_exceptions.items()}
    assert sizes == {
        "quad5": 0,
        "triple5": 1,
        "double5": 4,
        "single5": 13,
        "two_high": 9,
        "five_threes": 2,
    }
    assert catalog.checksum.startswith("sha256:")
    assert len(catalog.checksum) == len("sha256:") + 64
    assert catalog.set_S == catalog.set_s


def test_checksum_is_stable(catalog):
    again = load_catalog()
    assert again.checksum == catalog.checksum
    assert again.set_s == catalog.set_s
    assert again.thm7_fixed == catalog.thm7_fixed


def test_set_s_membership(catalog):
    assert catalog.in_set_s(parse_sequence("2"))
    assert catalog.in_set_s(parse_sequence("3,3,1,1"))
    assert catalog.in_set_s(parse_sequence("4^2"))
    assert catalog.in_set_s(parse_sequence("4^4,2"))
    assert not catalog.in_set_s(parse_sequence("1,1"))
    assert not catalog.in_set_s(parse_sequence("4,3,3,2,1,1"))


def test_cond7_membership(catalog):
    assert catalog.in_cond7_fixed(parse_sequence("5,4,3^5"))
    assert catalog.in_cond7_fixed(parse_sequence("6^2,3^4,2"))
    # documented catalog corrections are ordinary entries
    for text in ["6,3^6,2", "6^2,3^4,2^2", "7^2,3^4,2^3", "8,6,3^5,2,1"]:
        assert catalog.in_cond7_fixed(parse_sequence(text)), text
    assert not catalog.in_cond7_fixed(parse_sequence("5,3^5"))


@pytest.mark.parametrize(
    "text,expected",
    [
        ("6,3^6", True),
        ("7,3^6,1", True),
        ("7,3^7", True),
        ("8,3^7,1", True),
        ("9,3^7,1^2", True),
        ("9,3^6,1^3", True),
        ("9,3^6,1^2", False),
        ("6,3^7", False),
        ("5,3^5", False),
        ("7,3^6", False),
    ],
)
def test_cond7_parametric_match(catalog, text, expected):
    assert catalog.cond7_parametric_match(parse_sequence(text)) is expected


@pytest.mark.parametrize(
    "text,expected",
    [
        ("7,7,3^6", True),
        ("6,6,3^6", True),
        ("6,5,3^5", True),
        ("8,7,3^7", True),
        ("5,5,3^4", False),
        ("7,7,3^5", False),
        ("8,8,3^6", False),
        ("7,6,3^6", False),
    ],
)
def test_two_high_parametric_match(text, expected):
    assert two_high_parametric_match(parse_sequence(text)) is expected


def test_family_exception_membership(catalog):
    assert catalog.in_family_exceptions("triple5", parse_sequence("5^3,3^3"))
    assert catalog.in_family_exceptions("single5", parse_sequence("5,3^7"))
    assert not catalog.in_family_exceptions("single5", parse_sequence("5,3^5"))
    assert not catalog.in_family_exceptions("quad5", parse_sequence("5^4,4^2"))


def test_load_from_directory_matches_packaged(catalog, catalog_dir):
    copy = load_catalog(str(catalog_dir))
    assert copy.checksum == catalog.checksum
    assert copy.set_s == catalog.set_s


def test_missing_file_rejected(catalog_dir):
    (catalog_dir / "family_quad5.txt").unlink()
    with pytest.raises(DomainError) as info:
        load_catalog(str(catalog_dir))
    assert "family_quad5.txt" in str(info.value)


def test_duplicate_entry_rejected(catalog_dir):
    path = catalog_dir / "set_s.txt"
    with path.open("a") as fh:
        fh.write("2\n")
    with pytest.raises(DomainError) as info:
        load_catalog(str(catalog_dir))
    assert "set_s.txt" in str(info.value)


def test_unparsable_entry_names_file_and_line(catalog_dir):
    path = catalog_dir / "set_s.txt"
    lines = path.read_text().splitlines()
    with path.open("a") as fh:
        fh.write("wibble\n")
    with pytest.raises(DomainError) as info:
        load_catalog(str(catalog_dir))
    assert f"set_s.txt:{len(lines) + 1}" in str(info.value)


@pytest.mark.parametrize(
    "entry", ["1,1", "5,1", "3"]  # graphic / out of alphabet / odd sum
)
def test_set_s_entries_validated(catalog_dir, entry):
    with (catalog_dir / "set_s.txt").open("a") as fh:
        fh.write(entry + "\n")
    with pytest.raises(DomainError):
        load_catalog(str(catalog_dir))


def test_cond7_entries_must_be_graphic(catalog_dir):
    with (catalog_dir / "cond7_fixed.txt").open("a") as fh:
        fh.write("3,3,1,1\n")
    with pytest.raises(DomainError):
        load_catalog(str(catalog_dir))


def test_env_override(monkeypatch, catalog_dir, catalog):
    with (catalog_dir / "cond7_fixed.txt").open("a") as fh:
        fh.write("5,5,4,4,3,3\n")
    monkeypatch.setenv("POTGRAPH_CATALOG", str(catalog_dir))
    doctored = default_catalog()
    assert doctored.in_cond7_fixed(parse_sequence("5^2,4^2,3^2"))
    assert doctored.checksum != catalog.checksum
    monkeypatch.delenv("POTGRAPH_CATALOG")
    assert default_catalog().checksum == catalog.checksum
