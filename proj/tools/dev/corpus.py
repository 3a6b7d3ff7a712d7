"""Writes the fixtures that sit next to the zeta bundle.

Run zeta_bundle.py first; this script reads fixtures/zeta and adds
  g0m7.ttk, g0m7_loop.seq, bad_loop.seq, twist/, g2m1.ttk, nonrec.ttk.

Usage: PYTHONPATH=build/python python3 tools/dev/corpus.py fixtures
"""
import json
import os
import random
import shutil
import sys

sys.path.insert(0, os.path.dirname(__file__))
import fixture_lab as fl  # noqa: E402
import loops  # noqa: E402
import pyttk  # noqa: E402
import zeta_bundle as zb  # noqa: E402

NONREC = """ttk 1
surface 1 2
branches 6
sw 1 A (1.0) B (2.0) (3.0)
sw 2 A (4.1) B (3.1) (1.1)
sw 3 A (2.1) B (4.0) (5.0)
sw 4 A (5.1) B (6.0) (6.1)
punct 1.0 L
punct 6.0 R
"""


def read_seq(path):
    mv, iso = [], None
    for line in open(path):
        t = line.split()
        if t and t[0] == "split":
            mv.append((t[2], int(t[1]) - 1))
        elif t and t[0] == "iso":
            iso = [int(x) - 1 for x in t[1:]]
    return mv, iso


def main(out):
    zdir = os.path.join(out, "zeta")
    tau = pyttk.Track.load(os.path.join(zdir, "track.ttk"))
    meta = json.load(open(os.path.join(zdir, "search.json")))
    info = meta["info"]
    p = tau.branches
    outs = [set(info["gamma"][i]) | {info["arc"][i], info["connector"][i]} for i in range(2)]
    shutil.copy(os.path.join(zdir, "track.ttk"), os.path.join(out, "g0m7.ttk"))

    # single (unpowered) subsurface loops for phi1 and phi2
    raw = {}
    for w, fixed in (("1", outs[0]), ("2", outs[1])):
        mv, _ = read_seq(os.path.join(zdir, "phi%s.seq" % w))
        m = mv[:meta["phi"][w]["splits"]]
        raw[w] = (m, loops.fixing_iso(pyttk.end_track(tau, m), tau, fixed))
    M, H = zb.cat(*raw["1"], *raw["2"])
    L, HL = M, H
    for _ in range(3):
        L, HL = zb.cat(L, HL, M, H)
    C = zb.period(tau, L, HL)
    assert all(x > 0 for r in C for x in r)
    zb.write_seq(os.path.join(out, "g0m7_loop.seq"), "g0m7.ttk", L, HL)

    # half twist inside gamma_1: one split, never positive
    g1 = info["gamma"][0]
    bad = [("R", g1[0])]
    hb = pyttk.end_track(tau, bad).isomorphism(tau)
    zb.write_seq(os.path.join(out, "bad_loop.seq"), "g0m7.ttk", bad, hb)

    tdir = os.path.join(out, "twist")
    os.makedirs(tdir, exist_ok=True)
    shutil.copy(os.path.join(zdir, "track.ttk"), os.path.join(tdir, "track.ttk"))
    zb.write_seq(os.path.join(tdir, "phi.seq"), "track.ttk", L, HL)
    tw = tau.twist_moves(g1)
    ht = pyttk.end_track(tau, tw).isomorphism(tau)
    zb.write_seq(os.path.join(tdir, "psi.seq"), "track.ttk", tw, ht)
    with open(os.path.join(tdir, "bundle.txt"), "w") as f:
        f.write("bundle 1\ntrack track.ttk\nvalue surface 0,7\n")
        f.write("curve alpha %s\n" % " ".join(str(b + 1) for b in g1))
        f.write("loop phi phi.seq\nloop psi psi.seq\n")

    rng = random.Random(5)
    g2 = fl.random_g2m1(rng)
    with open(os.path.join(out, "g2m1.ttk"), "w") as f:
        f.write(g2.serialize())
    with open(os.path.join(out, "nonrec.ttk"), "w") as f:
        f.write(NONREC)
    print("g0m7_loop splits", len(L), "twist splits", len(tw), "g2m1 branches", g2.branches)


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "fixtures")
