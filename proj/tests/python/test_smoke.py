import os
from fractions import Fraction
from pathlib import Path

import pytest

import pyttk

FIX = Path(os.environ.get("TTK_FIXTURES", Path(__file__).resolve().parents[2] / "fixtures"))


def read_moves(name):
    moves = []
    for line in (FIX / name).read_text().splitlines():
        tok = line.split()
        if tok and tok[0] == "split":
            moves.append((tok[2], int(tok[1]) - 1))
    return moves


def test_track_census():
    t = pyttk.Track.load(str(FIX / "g0m7.ttk"))
    assert t.branches == 24
    assert t.surface == (0, 7)
    assert t.validate()["index_sum"] == "-5"
    roles = t.roles()
    assert roles.count("large") == 3
    cusps = sorted((c, p) for _, c, p in t.regions())
    assert cusps == [(1, 1)] * 7 + [(3, 0)] * 3


def test_round_trip():
    text = (FIX / "g2m1.ttk").read_text()
    assert pyttk.Track.parse(text).serialize() == text


def test_recurrence_witness():
    t = pyttk.Track.load(str(FIX / "g0m7.ttk"))
    ok, w = t.is_recurrent()
    assert ok
    w = [Fraction(x) for x in w]
    assert sum(w) == 1
    assert min(w) == Fraction(1, 77)
    ok, _ = pyttk.Track.load(str(FIX / "nonrec.ttk")).is_recurrent()
    assert not ok


def test_split_collapse():
    t = pyttk.Track.load(str(FIX / "g0m7.ttk"))
    for e, r in enumerate(t.roles()):
        if r == "large":
            assert t.split(e, "R").collapse(e, "R") == t


def test_errors_are_translated():
    t = pyttk.Track.load(str(FIX / "nonrec.ttk"))
    with pytest.raises(pyttk.TTKError, match="not-maximal"):
        t.is_transversely_recurrent()


def test_certify_loop():
    t = pyttk.Track.load(str(FIX / "g0m7.ttk"))
    c = pyttk.certify(t, read_moves("g0m7_loop.seq"))
    lo, hi = Fraction(c["alpha_lo"]), Fraction(c["alpha_hi"])
    assert 1 < lo <= hi
    assert hi - lo <= Fraction(1, 10**12)
    assert c["order"] == 132
    assert c["alpha"] == pytest.approx(1334783.2877190232, rel=1e-12)


def test_carrying_matrix_is_unimodular_and_tight():
    t = pyttk.Track.load(str(FIX / "g0m7.ttk"))
    rows = pyttk.carrying_matrix(t, read_moves("g0m7_loop.seq"))
    assert min(int(x) for r in rows for x in r) == 8


def test_zeta_table():
    rows = pyttk.zeta_table(str(FIX / "zeta"), 1, 2, grid=64)
    assert [r["param"] for r in rows] == ["1", "2"]
    assert float(rows[1]["supmin_hi"]) < float(rows[0]["supmin_hi"]) / 2
