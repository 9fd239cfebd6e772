import json

import pytest
from hypothesis import given, strategies as st

from tripleforge import records
from tripleforge.chatetus import LParity, Mode, Triple, triples_with_leg
from tripleforge.oracle import check_leg
from tripleforge.power_relations import relate


@given(st.integers(min_value=1, max_value=10**12))
def test_triple_round_trip(x):
    for t in triples_with_leg(x):
        line = records.dumps(t)
        assert records.loads(line) == t
        rec = json.loads(line)
        assert set(rec) == {"kind", "x", "y", "z", "d", "primitive"}
        assert all(isinstance(rec[k], str) for k in "xyzd")


@given(st.integers(1, 500).map(lambda k: 2 * k + 1), st.integers(1, 60), st.booleans())
def test_relation_round_trip(x, m, paths):
    r = relate(x, m)
    back = records.loads(records.dumps(r, paths=paths))
    assert back == r
    if paths:
        assert dict(back.paths) == dict(r.paths)
    else:
        assert "paths" not in json.loads(records.dumps(r))


@pytest.mark.parametrize("x,interp", [(6, LParity.ODD), (12, LParity.ODD), (20, LParity.ANY)])
def test_discrepancy_round_trip(x, interp):
    e = check_leg(x, Mode.PAPER_STRICT, interp)
    rec = json.loads(records.dumps(e))
    assert set(rec) == {"kind", "x", "missing", "spurious"}
    assert records.loads(records.dumps(e)) == e


def test_big_values_are_full_decimal():
    r = relate(3, 200)
    rec = json.loads(records.dumps(r))
    assert rec["y_prime"] == str((3**400 - 1) // 2)
    assert int(rec["z_prime"]) == (3**400 + 1) // 2


def test_rejects_bad_records():
    with pytest.raises(ValueError):
        records.loads('{"kind":"nope"}')
    with pytest.raises(ValueError):
        records.loads('{"kind":"triple","x":"3","y":"4","z":"5","d":"1","primitive":false}')
    with pytest.raises(ValueError):
        records.loads('{"kind":"triple","x":"3","y":"4","z":"6","d":"2"}')


def test_csv_rows():
    assert records.csv_row(Triple(3, 4, 5, 1)) == ["3", "4", "5", "1", "true"]
    assert records.csv_row(relate(3, 2)) == ["3", "2", "40", "41", "true"]
