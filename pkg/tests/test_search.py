"""Exhaustive Ramanujan-circulant search."""

import json

import pytest

from cayleyx import SearchHit, degree_of_encoding, search_ramanujan_circulant
from cayleyx.search import connection_from_encoding, hits_to_csv


def test_encoding_decoding():
    assert connection_from_encoding(10, 0b1) == (1, 9)
    assert connection_from_encoding(10, 0b10000) == (5,)  # midpoint selects itself
    assert connection_from_encoding(7, 0b101) == (1, 3, 4, 6)
    assert degree_of_encoding(10, 0b10001) == 3
    assert degree_of_encoding(7, 0b101) == 4


def test_triangle_and_square():
    assert [h.C for h in search_ramanujan_circulant(3)] == [(1, 2)]
    assert any(h.C == (1, 3) for h in search_ramanujan_circulant(4))


def test_hits_are_certified_and_ordered():
    hits = list(search_ramanujan_circulant(13))
    assert hits
    encodings = [h.encoding for h in hits]
    assert encodings == sorted(encodings)
    for h in hits:
        assert h.verdict.is_ramanujan
        assert h.degree == len(h.C) == degree_of_encoding(13, h.encoding)
        assert h.second_largest_abs <= h.verdict.bound + 1e-9


def test_min_degree_filter():
    hits = list(search_ramanujan_circulant(12, min_degree=4))
    assert all(h.degree >= 4 for h in hits)


def test_disconnected_sets_never_emitted():
    for h in search_ramanujan_circulant(12):
        assert h.verdict.connected


def test_n15_hit_count():
    assert len(list(search_ramanujan_circulant(15))) >= 3


def test_budget():
    with pytest.raises(ValueError):
        next(search_ramanujan_circulant(33))
    with pytest.raises(ValueError):
        next(search_ramanujan_circulant(2))


def test_serialization():
    hit = next(iter(search_ramanujan_circulant(5)))
    payload = json.loads(hit.to_json_line())
    assert set(payload) == {"n", "s", "C", "k", "lambda2_abs", "verdict"}
    csv_text = hits_to_csv([hit])
    assert csv_text.splitlines()[0] == "n,s,k,lambda2_abs,ramanujan"
    assert isinstance(hit, SearchHit)
